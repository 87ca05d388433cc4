#include "subspace_codec/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "subspace_codec/errors.hpp"
#include "subspace_codec/rng.hpp"

namespace subcodec {
namespace {

// Dense univariate polynomials over F_q, coefficient i of x^i.
// deg(0) = -1 by convention.
using Poly = DigitVec;

int poly_deg(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly poly_trim(Poly p) {
    p.resize(static_cast<std::size_t>(poly_deg(p) + 1));
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b, Digit q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = fq_add(r[i + j], fq_mul(a[i], b[j], q), q);
    }
    return r;
}

// Remainder of a modulo nonzero b.
Poly poly_rem(Poly a, const Poly& b, Digit q) {
    const int db = poly_deg(b);
    if (db < 0) throw InternalError("poly_rem: division by zero polynomial");
    const Digit lead_inv = fq_inv(b[db], q);
    int da = poly_deg(a);
    while (da >= db) {
        const Digit f = fq_mul(a[da], lead_inv, q);
        const std::size_t shift = static_cast<std::size_t>(da - db);
        for (int i = 0; i <= db; ++i) {
            auto& c = a[shift + static_cast<std::size_t>(i)];
            c = fq_sub(c, fq_mul(f, b[static_cast<std::size_t>(i)], q), q);
        }
        da = poly_deg(a);
    }
    return poly_trim(std::move(a));
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, Digit q) {
    Poly r = poly_rem(poly_mul(a, b, q), m, q);
    r.resize(static_cast<std::size_t>(poly_deg(m)), 0);
    return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, Digit q) {
    Poly r(static_cast<std::size_t>(poly_deg(m)), 0);
    r[0] = 1;
    base = poly_rem(std::move(base), m, q);
    base.resize(r.size(), 0);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, q);
        base = poly_mulmod(base, base, m, q);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, Digit q) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (poly_deg(b) >= 0) {
        Poly r = poly_rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// f monic of degree d is irreducible over F_q iff x^{q^d} = x (mod f) and
// x^{q^{d/p}} - x is coprime to f for every prime p dividing d.
bool is_irreducible(const Poly& f, Digit q) {
    const int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;

    std::vector<Poly> xq(static_cast<std::size_t>(d) + 1);
    Poly x(static_cast<std::size_t>(d), 0);
    x[1] = 1;
    xq[0] = x;
    for (int i = 1; i <= d; ++i)
        xq[static_cast<std::size_t>(i)] = poly_powmod(xq[static_cast<std::size_t>(i - 1)], q, f, q);
    if (xq[static_cast<std::size_t>(d)] != x) return false;

    for (int p = 2; p <= d; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p)) || d % p != 0) continue;
        Poly diff = xq[static_cast<std::size_t>(d / p)];
        diff[1] = fq_sub(diff[1], 1, q);
        if (poly_deg(diff) < 0) return false;
        if (poly_deg(poly_gcd(f, diff, q)) != 0) return false;
    }
    return true;
}

std::uint32_t hex_width(Digit maxval) {
    std::uint32_t w = 1;
    while (maxval >= 16) {
        maxval /= 16;
        ++w;
    }
    return w;
}

}  // namespace

FieldCtx FieldCtx::make(std::uint32_t q, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("make_field: extension degree must be >= 1");
    if (q < 2) throw std::invalid_argument("make_field: q must be a prime power >= 2");
    if (!is_prime(q)) {
        // Distinguish genuine prime powers (valid field orders we do not
        // support as base fields) from arbitrary composites.
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        std::uint64_t r = q;
        while (r % p == 0) r /= p;
        if (r == 1)
            throw std::invalid_argument(
                "make_field: prime-power base fields with exponent > 1 are not supported");
        throw std::invalid_argument("make_field: q is not a prime power");
    }

    FieldCtx ctx;
    ctx.q_ = q;
    ctx.d_ = d;
    ctx.hexw_ = hex_width(q - 1);

    // Smallest monic irreducible of degree d: scan the lower coefficients as a
    // base-q counter, constant term least significant.
    Poly f(d + 1, 0);
    f[d] = 1;
    bool found = false;
    for (std::uint64_t v = 0;; ++v) {
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < d; ++i) {
            f[i] = static_cast<Digit>(t % q);
            t /= q;
        }
        if (t != 0) break;
        if (is_irreducible(f, q)) {
            found = true;
            break;
        }
    }
    if (!found) throw InternalError("make_field: no irreducible modulus found");
    ctx.modulus_ = f;

    // Frobenius matrices: column j of frob_[1] holds (x^j)^q = (x^q)^j mod f.
    Poly xq;
    if (d == 1) {
        xq = Poly{1};  // the map is the identity on F_q
    } else {
        Poly x(d, 0);
        x[1] = 1;
        xq = poly_powmod(x, q, f, q);
    }
    xq.resize(d, 0);

    DigitMat m1(d, DigitVec(d, 0));
    Poly col(d, 0);
    col[0] = 1;
    for (std::uint32_t j = 0; j < d; ++j) {
        for (std::uint32_t r = 0; r < d; ++r) m1[r][j] = col[r];
        col = poly_mulmod(col, xq, f, q);
        col.resize(d, 0);
    }

    ctx.frob_.resize(d);
    ctx.frob_[0] = DigitMat(d, DigitVec(d, 0));
    for (std::uint32_t i = 0; i < d; ++i) ctx.frob_[0][i][i] = 1;
    for (std::uint32_t i = 1; i < d; ++i) {
        ctx.frob_[i] = DigitMat(d, DigitVec(d, 0));
        for (std::uint32_t r = 0; r < d; ++r)
            for (std::uint32_t c = 0; c < d; ++c) {
                if (m1[r][c] == 0) continue;
                for (std::uint32_t k = 0; k < d; ++k)
                    ctx.frob_[i][r][k] =
                        fq_add(ctx.frob_[i][r][k], fq_mul(m1[r][c], ctx.frob_[i - 1][c][k], q), q);
            }
    }
    return ctx;
}

void FieldCtx::check(const FieldElem& a) const {
    if (a.coeffs.size() != d_)
        throw std::invalid_argument("field element does not belong to this context");
}

FieldElem FieldCtx::from_base(Digit a) const {
    DigitVec c(d_, 0);
    c[0] = a % q_;
    return FieldElem{std::move(c)};
}

FieldElem FieldCtx::from_digits(DigitVec coeffs) const {
    if (coeffs.size() != d_) throw std::invalid_argument("from_digits: wrong length");
    for (auto& c : coeffs) c %= q_;
    return FieldElem{std::move(coeffs)};
}

FieldElem FieldCtx::basis_elem(std::uint32_t i) const {
    if (i >= d_) throw std::invalid_argument("basis_elem: index out of range");
    DigitVec c(d_, 0);
    c[i] = 1;
    return FieldElem{std::move(c)};
}

bool FieldCtx::is_zero(const FieldElem& a) const {
    check(a);
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Digit c) { return c == 0; });
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    DigitVec c(d_);
    for (std::uint32_t i = 0; i < d_; ++i) c[i] = fq_add(a.coeffs[i], b.coeffs[i], q_);
    return FieldElem{std::move(c)};
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    DigitVec c(d_);
    for (std::uint32_t i = 0; i < d_; ++i) c[i] = fq_sub(a.coeffs[i], b.coeffs[i], q_);
    return FieldElem{std::move(c)};
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    check(a);
    DigitVec c(d_);
    for (std::uint32_t i = 0; i < d_; ++i) c[i] = fq_neg(a.coeffs[i], q_);
    return FieldElem{std::move(c)};
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    Poly r = poly_rem(poly_mul(a.coeffs, b.coeffs, q_), modulus_, q_);
    r.resize(d_, 0);
    return FieldElem{std::move(r)};
}

FieldElem FieldCtx::scalar_mul(const FieldElem& a, Digit c) const {
    check(a);
    DigitVec r(d_);
    for (std::uint32_t i = 0; i < d_; ++i) r[i] = fq_mul(a.coeffs[i], c % q_, q_);
    return FieldElem{std::move(r)};
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    check(a);
    if (is_zero(a)) throw std::invalid_argument("inv: zero has no inverse");
    // Extended Euclid over F_q[x]: maintain s with s*a = r (mod modulus).
    Poly r0 = modulus_, r1 = poly_trim(a.coeffs);
    Poly s0 = {}, s1 = {1};
    while (poly_deg(r1) > 0) {
        // r0 = u*r1 + r2, one full division step
        Poly r2 = r0;
        Poly u(static_cast<std::size_t>(poly_deg(r0) - poly_deg(r1)) + 1, 0);
        const int db = poly_deg(r1);
        const Digit lead_inv = fq_inv(r1[static_cast<std::size_t>(db)], q_);
        int da = poly_deg(r2);
        while (da >= db) {
            const Digit fct = fq_mul(r2[static_cast<std::size_t>(da)], lead_inv, q_);
            u[static_cast<std::size_t>(da - db)] = fct;
            for (int i = 0; i <= db; ++i) {
                auto& c = r2[static_cast<std::size_t>(da - db + i)];
                c = fq_sub(c, fq_mul(fct, r1[static_cast<std::size_t>(i)], q_), q_);
            }
            da = poly_deg(r2);
        }
        r2 = poly_trim(std::move(r2));
        // s2 = s0 - u*s1
        Poly us1 = poly_mul(u, s1, q_);
        Poly s2(std::max(s0.size(), us1.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i) {
            const Digit x = i < s0.size() ? s0[i] : 0;
            const Digit y = i < us1.size() ? us1[i] : 0;
            s2[i] = fq_sub(x, y, q_);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = poly_trim(std::move(s2));
    }
    if (poly_deg(r1) != 0) throw InternalError("inv: gcd with irreducible modulus is not a unit");
    const Digit scale = fq_inv(r1[0], q_);
    Poly res = poly_rem(std::move(s1), modulus_, q_);
    res.resize(d_, 0);
    for (auto& c : res) c = fq_mul(c, scale, q_);
    return FieldElem{std::move(res)};
}

FieldElem FieldCtx::frobenius(const FieldElem& a, std::uint64_t i) const {
    check(a);
    const auto& m = frob_[i % d_];
    DigitVec r(d_, 0);
    for (std::uint32_t row = 0; row < d_; ++row) {
        std::uint64_t acc = 0;
        for (std::uint32_t col = 0; col < d_; ++col)
            acc += static_cast<std::uint64_t>(m[row][col]) * a.coeffs[col];
        r[row] = static_cast<Digit>(acc % q_);
    }
    return FieldElem{std::move(r)};
}

bool FieldCtx::in_prime_field(const FieldElem& a) const {
    check(a);
    for (std::uint32_t i = 1; i < d_; ++i)
        if (a.coeffs[i] != 0) return false;
    return true;
}

DigitVec FieldCtx::as_base_vector(const FieldElem& x, std::span<const FieldElem> basis) const {
    check(x);
    if (basis.size() != d_)
        throw std::invalid_argument("as_base_vector: basis length must equal extension degree");
    DigitMat m(d_, DigitVec(d_));
    for (std::uint32_t j = 0; j < d_; ++j) {
        check(basis[j]);
        for (std::uint32_t i = 0; i < d_; ++i) m[i][j] = basis[j].coeffs[i];
    }
    if (matrix_rank(m, q_) != d_)
        throw std::invalid_argument("as_base_vector: basis is linearly dependent");
    auto sol = solve_linear(m, x.coeffs, q_);
    if (!sol) throw InternalError("as_base_vector: full-rank system inconsistent");
    return *sol;
}

std::string FieldCtx::to_hex(const FieldElem& a) const {
    check(a);
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(static_cast<std::size_t>(d_) * hexw_);
    for (std::uint32_t i = d_; i-- > 0;) {
        const Digit v = a.coeffs[i];
        for (std::uint32_t w = hexw_; w-- > 0;) s.push_back(digits[(v >> (4 * w)) & 0xf]);
    }
    return s;
}

FieldElem FieldCtx::from_hex(std::string_view s) const {
    if (s.size() != static_cast<std::size_t>(d_) * hexw_)
        throw std::invalid_argument("from_hex: wrong length");
    auto val = [](char c) -> Digit {
        if (c >= '0' && c <= '9') return static_cast<Digit>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<Digit>(10 + (c - 'a'));
        throw std::invalid_argument("from_hex: bad character");
    };
    DigitVec coeffs(d_, 0);
    std::size_t pos = 0;
    for (std::uint32_t i = d_; i-- > 0;) {
        Digit v = 0;
        for (std::uint32_t w = 0; w < hexw_; ++w) v = (v << 4) | val(s[pos++]);
        if (v >= q_) throw std::invalid_argument("from_hex: digit out of range");
        coeffs[i] = v;
    }
    return FieldElem{std::move(coeffs)};
}

bool is_normal_element(const FieldCtx& ctx, const FieldElem& gamma) {
    const std::uint32_t d = ctx.degree();
    DigitMat rows(d);
    FieldElem g = gamma;
    for (std::uint32_t i = 0; i < d; ++i) {
        rows[i] = g.coeffs;
        g = ctx.frobenius(g, 1);
    }
    return matrix_rank(rows, ctx.q()) == d;
}

FieldElem find_normal_element(const FieldCtx& ctx, std::uint64_t seed) {
    Rng rng(seed);
    const std::uint32_t d = ctx.degree();
    // Normal elements are plentiful; the budget only turns a broken
    // configuration into a hard error instead of a hang.
    const int budget = 16384;
    for (int trial = 0; trial < budget; ++trial) {
        DigitVec c(d);
        for (auto& x : c) x = rng.digit(ctx.q());
        FieldElem cand{std::move(c)};
        if (ctx.is_zero(cand)) continue;
        if (is_normal_element(ctx, cand)) return cand;
    }
    throw InternalError("find_normal_element: trial budget exhausted");
}

}  // namespace subcodec
