#include "subspace_codec/lfrs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "subspace_codec/errors.hpp"

namespace subcodec::lfrs {

void Params::validate() const {
    if (ell == 0 || s == 0 || k == 0) throw std::invalid_argument("lfrs: ell, s, k must be >= 1");
    if (alphas.size() != ell) throw std::invalid_argument("lfrs: need ell evaluation points");
    if (ell > m()) throw std::invalid_argument("lfrs: ell must not exceed m");
    if (k > ell || k > m()) throw std::invalid_argument("lfrs: k must not exceed ell or m");
    DigitMat rows;
    for (const auto& a : alphas) rows.push_back(a.coeffs);
    if (matrix_rank(rows, field.q()) != ell)
        throw std::invalid_argument("lfrs: evaluation points are linearly dependent");
    if (!is_normal_element(field, gamma))
        throw std::invalid_argument("lfrs: gamma does not generate a normal basis");
}

std::pair<long long, long long> rate(const Params& p) {
    long long num = static_cast<long long>(p.k);
    long long den = static_cast<long long>(p.ell) * static_cast<long long>(p.ell + p.m() * p.s);
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

DigitVec codeword_vector(const Params& p, const Message& msg, std::size_t i) {
    if (msg.size() != p.k) throw std::invalid_argument("encode: message must have k digits");
    if (i >= p.ell) throw std::invalid_argument("codeword_vector: index out of range");
    const FieldCtx& F = p.field;
    const LinPoly f = lp_from_message(F, msg);
    DigitVec row(p.ambient_dim(), 0);
    row[i] = 1;  // alpha-basis coordinates of the first component alpha_i
    FieldElem gj = p.gamma;  // gamma^{[j]}
    for (std::size_t j = 0; j < p.s; ++j) {
        const FieldElem y = lp_eval(F, f, F.mul(gj, p.alphas[i]));
        for (std::size_t b = 0; b < p.m(); ++b) row[p.ell + j * p.m() + b] = y.coeffs[b];
        if (j + 1 < p.s) gj = F.frobenius(gj, 1);
    }
    return row;
}

Subspace encode(const Params& p, const Message& msg) {
    DigitMat rows;
    for (std::size_t i = 0; i < p.ell; ++i) rows.push_back(codeword_vector(p, msg, i));
    return Subspace::span(p.field.q(), p.ambient_dim(), rows);
}

EvalTuple row_to_tuple(const Params& p, const DigitVec& row) {
    if (row.size() != p.ambient_dim()) throw std::invalid_argument("row_to_tuple: wrong length");
    const FieldCtx& F = p.field;
    EvalTuple tup;
    tup.reserve(p.s + 1);
    FieldElem y0 = F.zero();
    for (std::size_t i = 0; i < p.ell; ++i)
        if (row[i] != 0) y0 = F.add(y0, F.scalar_mul(p.alphas[i], row[i]));
    tup.push_back(std::move(y0));
    for (std::size_t j = 0; j < p.s; ++j) {
        DigitVec c(row.begin() + static_cast<std::ptrdiff_t>(p.ell + j * p.m()),
                   row.begin() + static_cast<std::ptrdiff_t>(p.ell + (j + 1) * p.m()));
        tup.push_back(F.from_digits(std::move(c)));
    }
    return tup;
}

bool InterpPoly::is_zero(const FieldCtx&) const {
    if (!a0.is_zero()) return false;
    for (const auto& a : ay)
        if (!a.is_zero()) return false;
    return true;
}

FieldElem InterpPoly::eval(const FieldCtx& ctx, const EvalTuple& point) const {
    if (point.size() != ay.size() + 1) throw std::invalid_argument("InterpPoly::eval: arity");
    FieldElem acc = lp_eval(ctx, a0, point[0]);
    for (std::size_t j = 0; j < ay.size(); ++j)
        acc = ctx.add(acc, lp_eval(ctx, ay[j], point[j + 1]));
    return acc;
}

namespace {

// Deterministic nonzero kernel vector of the row system over the extension
// field: echelonize, set the first free column to one, back-substitute.
std::vector<FieldElem> kernel_vector(const FieldCtx& F, std::vector<std::vector<FieldElem>> m,
                                     std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (!F.is_zero(m[i][c])) {
                sel = i;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const FieldElem inv = F.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || F.is_zero(m[i][c])) continue;
            const FieldElem f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols)
        throw InternalError("interpolate: homogeneous system has full column rank");
    std::vector<FieldElem> x(cols, F.zero());
    x[free_col] = F.one();
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = F.neg(m[i][free_col]);
    return x;
}

}  // namespace

InterpPoly interpolate_at(const FieldCtx& F, const std::vector<EvalTuple>& points, std::size_t k,
                          std::size_t svars, long degree_bound) {
    if (degree_bound < 0) throw RegimeError("interpolate: degenerate degree bound");
    const std::size_t D = static_cast<std::size_t>(degree_bound);
    const std::size_t n0 = D + k;          // coefficients of A_0
    const std::size_t ncols = n0 + svars * (D + 1);
    if (points.size() >= ncols)
        throw InternalError("interpolate: system is not underdetermined");

    std::vector<std::vector<FieldElem>> m;
    m.reserve(points.size());
    for (const auto& tup : points) {
        if (tup.size() != svars + 1) throw std::invalid_argument("interpolate: tuple arity");
        std::vector<FieldElem> row;
        row.reserve(ncols);
        FieldElem p = tup[0];
        for (std::size_t e = 0; e < n0; ++e) {
            row.push_back(p);
            if (e + 1 < n0) p = F.frobenius(p, 1);
        }
        for (std::size_t j = 1; j <= svars; ++j) {
            p = tup[j];
            for (std::size_t e = 0; e <= D; ++e) {
                row.push_back(p);
                if (e < D) p = F.frobenius(p, 1);
            }
        }
        m.push_back(std::move(row));
    }

    std::vector<FieldElem> x =
        m.empty() ? [&] {
            std::vector<FieldElem> v(ncols, F.zero());
            v[0] = F.one();
            return v;
        }()
                  : kernel_vector(F, std::move(m), ncols);

    InterpPoly q;
    q.degree_bound = degree_bound;
    q.a0 = lp_from_coeffs(F, {x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n0)});
    q.ay.reserve(svars);
    for (std::size_t j = 0; j < svars; ++j) {
        auto beg = x.begin() + static_cast<std::ptrdiff_t>(n0 + j * (D + 1));
        q.ay.push_back(lp_from_coeffs(F, {beg, beg + static_cast<std::ptrdiff_t>(D + 1)}));
    }
    if (q.is_zero(F)) throw InternalError("interpolate: kernel vector is zero");
    return q;
}

InterpPoly interpolate(const Params& p, const DigitMat& received_basis, std::size_t t,
                       std::size_t r) {
    if (r > p.ell) throw RegimeError("interpolate: more deletions than codeword dimensions");
    const std::size_t nrecv = p.ell + t - r;
    if (received_basis.size() != nrecv)
        throw std::invalid_argument("interpolate: basis size must be ell + t - r");
    if (Subspace::span(p.field.q(), p.ambient_dim(), received_basis).dim() != nrecv)
        throw std::invalid_argument("interpolate: received vectors are not a basis");
    const long num = static_cast<long>(nrecv) - static_cast<long>(p.k) + 1;
    const long den = static_cast<long>(p.s) + 1;
    const long D = num >= 0 ? num / den : -(((-num) + den - 1) / den);  // floor
    std::vector<EvalTuple> pts;
    pts.reserve(nrecv);
    for (const auto& row : received_basis) pts.push_back(row_to_tuple(p, row));
    return interpolate_at(p.field, pts, p.k, p.s, D);
}

std::optional<InterpPoly> try_normalize_shift(const FieldCtx& F, const InterpPoly& q) {
    const std::size_t svars = q.ay.size();
    auto coeff_at = [&](const LinPoly& a, std::size_t i) -> bool {
        return i < a.coeffs.size() && !F.is_zero(a.coeffs[i]);
    };
    for (std::size_t j = 0; j < svars; ++j)
        if (coeff_at(q.ay[j], 0)) return q;  // g != 0 already

    // Smallest index carrying any nonzero coefficient.
    std::size_t limit = q.a0.coeffs.size();
    for (const auto& a : q.ay) limit = std::max(limit, a.coeffs.size());
    std::size_t jstar = limit;
    for (std::size_t i = 0; i < limit && jstar == limit; ++i) {
        if (coeff_at(q.a0, i)) jstar = i;
        for (const auto& a : q.ay)
            if (coeff_at(a, i)) jstar = std::min(jstar, i);
    }
    if (jstar == limit) throw std::invalid_argument("normalize_shift: zero polynomial");

    bool any_y = false;
    for (const auto& a : q.ay) any_y = any_y || coeff_at(a, jstar);
    if (!any_y) return std::nullopt;  // pathological: only A_0 at the minimal index

    InterpPoly out;
    out.degree_bound = q.degree_bound;
    out.a0 = lp_frobenius_shift(F, q.a0, jstar);
    out.ay.reserve(svars);
    for (const auto& a : q.ay) out.ay.push_back(lp_frobenius_shift(F, a, jstar));
    return out;
}

InterpPoly normalize_shift(const FieldCtx& F, const InterpPoly& q) {
    auto out = try_normalize_shift(F, q);
    if (!out)
        throw InternalError(
            "normalize_shift: no Y coefficient at the minimal index; Q-hat cannot vanish");
    return *out;
}

RecoverResult recover_core(const FieldCtx& F, const InterpPoly& q, const FieldElem& gamma,
                           std::size_t k) {
    const std::size_t svars = q.ay.size();
    if (k > F.degree()) throw std::invalid_argument("recover: k exceeds extension degree");

    auto coeff = [&](const LinPoly& a, std::size_t i) -> FieldElem {
        return i < a.coeffs.size() ? a.coeffs[i] : F.zero();
    };

    // gamma^{[i]} for i = 0..k+svars-2 (the recursion touches i + j - 1).
    std::vector<FieldElem> gpow(k + svars, F.zero());
    gpow[0] = gamma;
    for (std::size_t i = 1; i < gpow.size(); ++i) gpow[i] = F.frobenius(gpow[i - 1], 1);

    RecoverResult res;
    std::vector<Message> prefixes{{}};
    for (std::size_t i = 0; i < k; ++i) {
        // g(gamma^{[i]}) = sum_j a_{j,0} gamma^{[i+j-1]}
        FieldElem gi = F.zero();
        for (std::size_t j = 1; j <= svars; ++j)
            gi = F.add(gi, F.mul(coeff(q.ay[j - 1], 0), gpow[i + j - 1]));
        const bool branch = F.is_zero(gi);
        if (branch) res.branch_positions.push_back(i);

        std::vector<Message> next;
        for (const auto& pre : prefixes) {
            // Contribution of the fixed prefix to the X^{[i]} coefficient.
            FieldElem rhs = coeff(q.a0, i);
            for (std::size_t j = 1; j <= svars; ++j) {
                FieldElem inner = F.zero();
                for (std::size_t e = 0; e < i; ++e) {
                    const FieldElem a = coeff(q.ay[j - 1], i - e);
                    if (!F.is_zero(a) && pre[e] != 0)
                        inner = F.add(inner, F.scalar_mul(a, pre[e]));
                }
                if (!F.is_zero(inner)) rhs = F.add(rhs, F.mul(gpow[i + j - 1], inner));
            }
            if (branch) {
                if (!F.is_zero(rhs)) continue;  // no digit can satisfy this coefficient
                for (Digit d = 0; d < F.q(); ++d) {
                    Message ext = pre;
                    ext.push_back(d);
                    next.push_back(std::move(ext));
                }
            } else {
                const FieldElem fi = F.neg(F.div(rhs, gi));
                if (!F.in_prime_field(fi)) continue;
                Message ext = pre;
                ext.push_back(fi.coeffs[0]);
                next.push_back(std::move(ext));
            }
        }
        prefixes = std::move(next);
        if (prefixes.empty()) break;
    }
    res.candidates = std::move(prefixes);
    if (res.branch_positions.size() + 1 > svars && !res.candidates.empty())
        throw InternalError("recover: branch count exceeds the folding bound");
    return res;
}

DecodeOutput recover(const Params& p, const InterpPoly& q) {
    RecoverResult rr = recover_core(p.field, q, p.gamma, p.k);
    DecodeOutput out;
    out.branch_positions = std::move(rr.branch_positions);
    out.candidates = std::move(rr.candidates);
    out.verified.assign(out.candidates.size(), false);
    out.folding_used = p.s;
    return out;
}

bool radius_ok(const Params& p, std::size_t t, std::size_t r) {
    if (r > p.ell) return false;
    const long slack = static_cast<long>(p.ell) - static_cast<long>(r) -
                       static_cast<long>(p.k) + 1;
    return static_cast<long>(t) < static_cast<long>(p.s) * slack;
}

DecodeOutput decode(const Params& p, const Subspace& received, std::size_t t, std::size_t r) {
    if (received.ambient_dim() != p.ambient_dim() || received.q() != p.field.q())
        throw std::invalid_argument("decode: received space lives in the wrong ambient");
    if (!radius_ok(p, t, r))
        throw RegimeError("decode: (t, r) outside the radius t < s(ell - r - k + 1)");
    if (received.dim() + r != p.ell + t)
        throw std::invalid_argument("decode: dim(T) must equal ell + t - r");

    InterpPoly q = interpolate(p, received.basis(), t, r);
    DecodeOutput out;
    out.folding_used = p.s;
    auto norm = try_normalize_shift(p.field, q);
    if (norm) {
        RecoverResult rr = recover_core(p.field, *norm, p.gamma, p.k);
        out.branch_positions = std::move(rr.branch_positions);
        out.candidates = std::move(rr.candidates);
    }
    out.verified.assign(out.candidates.size(), false);
    for (std::size_t i = 0; i < out.candidates.size(); ++i)
        out.verified[i] = within(encode(p, out.candidates[i]), received, t, r);
    return out;
}

InferredDecode decode_infer(const Params& p, const Subspace& received) {
    InferredDecode out;
    std::set<Message> seen;
    const long delta = static_cast<long>(received.dim()) - static_cast<long>(p.ell);
    for (std::size_t r = 0; r <= p.ell; ++r) {
        const long t = delta + static_cast<long>(r);
        if (t < 0) continue;
        if (!radius_ok(p, static_cast<std::size_t>(t), r)) continue;
        DecodeOutput d = decode(p, received, static_cast<std::size_t>(t), r);
        for (const auto& msg : d.verified_messages()) seen.insert(msg);
        out.per_radius.push_back({static_cast<std::size_t>(t), r, std::move(d)});
    }
    out.verified_union.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace subcodec::lfrs
