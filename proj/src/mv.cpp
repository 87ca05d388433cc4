#include "subspace_codec/mv.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "subspace_codec/errors.hpp"
#include "subspace_codec/rng.hpp"

namespace subcodec::mv {

namespace {

// Coordinates of y in the span of basis vectors (columns), or nullopt when y
// is outside the span. Rectangular solve over F_q.
std::optional<DigitVec> coords_in_span(const FieldCtx& F, const FieldElem& y,
                                       const std::vector<FieldElem>& basis) {
    DigitMat a(F.degree(), DigitVec(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::uint32_t i = 0; i < F.degree(); ++i) a[i][j] = basis[j].coeffs[i];
    return solve_linear(a, y.coeffs, F.q());
}

std::vector<FieldElem> alpha_power_basis(const FieldCtx& F, const FieldElem& alpha,
                                         std::size_t m) {
    std::vector<FieldElem> basis;
    basis.reserve(m);
    FieldElem a = alpha;
    for (std::size_t i = 0; i < m; ++i) {
        basis.push_back(a);
        a = F.frobenius(a, 1);
    }
    return basis;
}

}  // namespace

void Params::validate() const {
    const std::uint32_t q = field.q();
    if (m == 0 || ell == 0 || k == 0 || s == 0)
        throw std::invalid_argument("mv: m, ell, k, s must be >= 1");
    if (field.degree() != m * ell)
        throw std::invalid_argument("mv: field context must have degree m*ell");
    if ((q - 1) % ell != 0) throw std::invalid_argument("mv: ell must divide q-1");
    if (k > m * ell) throw std::invalid_argument("mv: k must not exceed m*ell");
    if (s >= m * ell) throw std::invalid_argument("mv: folding must be below m*ell");
    if (roots_of_unity.size() != ell || roots_of_unity[0] != 1)
        throw std::invalid_argument("mv: need ell roots of unity with e_1 = 1");
    for (Digit e : roots_of_unity)
        if (fq_pow(e, ell, q) != 1) throw std::invalid_argument("mv: e_i^ell must equal 1");
    if (alphas.size() != ell) throw std::invalid_argument("mv: need ell evaluation points");
    if (subfield_basis.size() != m) throw std::invalid_argument("mv: subfield basis has size m");
    for (const auto& b : subfield_basis)
        if (!field.in_subfield(b, static_cast<std::uint32_t>(m)))
            throw std::invalid_argument("mv: subfield basis element outside F_{q^m}");
    if (!is_normal_element(field, beta) || !is_normal_element(field, gamma))
        throw std::invalid_argument("mv: beta and gamma must generate normal bases");

    // Fact 1: the m*ell twists alpha_i^{[j]} form a basis of F_{q^{m ell}}.
    DigitMat rows;
    for (const auto& a : alphas) {
        FieldElem x = a;
        for (std::size_t j = 0; j < m; ++j) {
            rows.push_back(x.coeffs);
            x = field.frobenius(x, 1);
        }
    }
    if (matrix_rank(rows, q) != m * ell)
        throw std::invalid_argument("mv: twists of the alpha_i do not form a basis");
}

Params build_params(std::uint32_t q, std::size_t m, std::size_t ell, std::size_t k,
                    std::size_t s, std::uint64_t seed) {
    if (ell == 0 || (q - 1) % ell != 0)
        throw std::invalid_argument("build_params: ell must divide q-1");
    Params p;
    p.field = make_field(q, static_cast<std::uint32_t>(m * ell));
    p.m = m;
    p.ell = ell;
    p.k = k;
    p.s = s;

    p.roots_of_unity.push_back(1);
    for (Digit e = 2; e < q; ++e)
        if (fq_pow(e, ell, q) == 1) p.roots_of_unity.push_back(e);
    if (p.roots_of_unity.size() != ell)
        throw InternalError("build_params: wrong number of roots of unity");

    p.beta = find_normal_element(p.field, seed);
    p.gamma = find_normal_element(p.field, derive_seed(seed, 1));

    for (std::size_t i = 0; i < ell; ++i) {
        const Digit e = p.roots_of_unity[i];
        FieldElem a = p.field.zero();
        Digit ej = 1;  // e^j
        for (std::size_t j = 0; j < ell; ++j) {
            a = p.field.add(a, p.field.scalar_mul(p.field.frobenius(p.beta, j * m), ej));
            ej = fq_mul(ej, e, q);
        }
        p.alphas.push_back(std::move(a));
    }

    // Basis of the middle field: kernel of frobenius(., m) - id over F_q.
    {
        const std::size_t d = m * ell;
        DigitMat fm(d, DigitVec(d, 0));
        for (std::size_t j = 0; j < d; ++j) {
            FieldElem img = p.field.frobenius(p.field.basis_elem(static_cast<std::uint32_t>(j)),
                                              m);
            for (std::size_t i = 0; i < d; ++i) fm[i][j] = img.coeffs[i];
            fm[j][j] = fq_sub(fm[j][j], 1, q);
        }
        for (const auto& v : kernel_basis(fm, d, q))
            p.subfield_basis.push_back(p.field.from_digits(v));
        if (p.subfield_basis.size() != m)
            throw InternalError("build_params: middle field has wrong dimension");
    }

    p.validate();

    // Fact 2 spot-check: f(alpha_i)/alpha_i lies in the middle field.
    Rng rng(derive_seed(seed, 2));
    for (int trial = 0; trial < 8; ++trial) {
        DigitVec msg(m * ell);
        for (auto& c : msg) c = rng.digit(q);
        const LinPoly f = lp_from_message(p.field, msg);
        for (const auto& a : p.alphas) {
            const FieldElem v = p.field.div(lp_eval(p.field, f, a), a);
            if (!p.field.in_subfield(v, static_cast<std::uint32_t>(m)))
                throw InternalError("build_params: f(alpha)/alpha escaped the middle field");
        }
    }
    return p;
}

DigitVec subfield_coords(const Params& p, const FieldElem& y) {
    auto c = coords_in_span(p.field, y, p.subfield_basis);
    if (!c) throw InternalError("subfield_coords: value outside F_{q^m}");
    return *c;
}

FieldElem second_block_value(const Params& p, const DigitVec& row) {
    FieldElem y = p.field.zero();
    for (std::size_t j = 0; j < p.m; ++j)
        if (row[p.ell + j] != 0)
            y = p.field.add(y, p.field.scalar_mul(p.subfield_basis[j], row[p.ell + j]));
    return y;
}

Subspace encode(const Params& p, const Message& msg) {
    if (msg.size() != p.k) throw std::invalid_argument("encode: message must have k digits");
    const FieldCtx& F = p.field;
    const LinPoly f = lp_from_message(F, msg);
    DigitMat rows;
    for (std::size_t i = 0; i < p.ell; ++i) {
        const FieldElem fa = lp_eval(F, f, p.alphas[i]);
        const FieldElem second = i == 0 ? fa : F.div(fa, p.alphas[i]);
        if (!F.in_subfield(second, static_cast<std::uint32_t>(p.m)))
            throw InternalError("encode: second component escaped the ambient space");
        DigitVec row(p.ambient_dim(), 0);
        row[i] = 1;
        const DigitVec c = subfield_coords(p, second);
        for (std::size_t b = 0; b < p.m; ++b) row[p.ell + b] = c[b];
        rows.push_back(std::move(row));
    }
    return Subspace::span(F.q(), p.ambient_dim(), rows);
}

bool radius_ok(const Params& p, std::size_t t) {
    // t < s ell - s (k-1)/m, kept in integers as m t < s (m ell - k + 1).
    return static_cast<long>(p.m) * static_cast<long>(t) <
           static_cast<long>(p.s) *
               (static_cast<long>(p.m * p.ell) - static_cast<long>(p.k) + 1);
}

namespace {

struct FittedComponent {
    std::size_t index = 0;
    DigitVec rep;                // fit of one consistent y value (deg <= m-1 coeffs)
    std::vector<DigitVec> dirs;  // independent direction fits
};

// Per-component affine fit sets in coefficient space, mirroring kk but with
// the y_ij values scaled by alpha_i for i > 1 and fits taken against the
// partial basis {alpha_i^{[0..m-1]}}.
std::vector<FittedComponent> fit_components(const Params& p, const Subspace& received) {
    const FieldCtx& F = p.field;
    const Digit q = F.q();

    // Z = T cap ({0} x F_{q^m}) in second-block field values.
    DigitMat zrows;
    for (std::size_t j = 0; j < p.m; ++j) {
        DigitVec row(p.ambient_dim(), 0);
        row[p.ell + j] = 1;
        zrows.push_back(std::move(row));
    }
    const Subspace z = intersect(received, Subspace::span(q, p.ambient_dim(), zrows));
    std::vector<FieldElem> zvals;
    for (const auto& row : z.basis()) zvals.push_back(second_block_value(p, row));

    std::vector<FittedComponent> out;
    for (std::size_t i = 0; i < p.ell; ++i) {
        // Unique combination of T's basis with first block e_i.
        DigitMat a(p.ell, DigitVec(received.dim()));
        for (std::size_t j = 0; j < p.ell; ++j)
            for (std::size_t b = 0; b < received.dim(); ++b) a[j][b] = received.basis()[b][j];
        DigitVec e(p.ell, 0);
        e[i] = 1;
        auto sol = solve_linear(a, e, q);
        if (!sol)
            throw RegimeError(
                "decode: alpha_" + std::to_string(i + 1) +
                " has no support in the received space; a deletion occurred and this "
                "decoder handles insertions only");
        DigitVec v(p.ambient_dim(), 0);
        for (std::size_t b = 0; b < received.dim(); ++b) {
            if ((*sol)[b] == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = fq_add(v[j], fq_mul((*sol)[b], received.basis()[b][j], q), q);
        }
        const FieldElem w = second_block_value(p, v);

        // y values: the stored block holds f(alpha_1) directly for i = 1 and
        // f(alpha_i)/alpha_i for i > 1.
        const FieldElem y0 = i == 0 ? w : F.mul(p.alphas[i], w);
        const auto basis = alpha_power_basis(F, p.alphas[i], p.m);
        auto rep = coords_in_span(F, y0, basis);
        if (!rep) throw InternalError("decode: y value outside span of alpha twists");

        FittedComponent fc;
        fc.index = i;
        fc.rep = *rep;
        for (const auto& zv : zvals) {
            const FieldElem yd = i == 0 ? zv : F.mul(p.alphas[i], zv);
            auto d = coords_in_span(F, yd, basis);
            if (!d) throw InternalError("decode: insertion value outside span of alpha twists");
            fc.dirs.push_back(*d);
        }
        out.push_back(std::move(fc));
    }
    return out;
}

// Restrict an affine fit set to coefficients vanishing at k..m-1; nullopt when
// empty. No-op when k >= m.
std::optional<FittedComponent> truncate_fits(const Params& p, FittedComponent fc) {
    const Digit q = p.field.q();
    const std::size_t hi = p.m > p.k ? p.m - p.k : 0;
    if (hi == 0) {
        DigitMat m = fc.dirs;
        const auto piv = rref_in_place(m, q);
        m.resize(piv.size());
        fc.dirs = std::move(m);
        return fc;
    }
    DigitMat sys(hi, DigitVec(fc.dirs.size(), 0));
    DigitVec rhs(hi, 0);
    for (std::size_t row = 0; row < hi; ++row) {
        for (std::size_t b = 0; b < fc.dirs.size(); ++b) sys[row][b] = fc.dirs[b][p.k + row];
        rhs[row] = fq_neg(fc.rep[p.k + row], q);
    }
    auto mu = solve_linear(sys, rhs, q);
    if (!mu) return std::nullopt;
    for (std::size_t b = 0; b < fc.dirs.size(); ++b)
        if ((*mu)[b] != 0)
            for (std::size_t j = 0; j < fc.rep.size(); ++j)
                fc.rep[j] = fq_add(fc.rep[j], fq_mul((*mu)[b], fc.dirs[b][j], q), q);
    DigitMat dmat;
    for (const auto& kv : kernel_basis(sys, fc.dirs.size(), q)) {
        DigitVec d(fc.rep.size(), 0);
        for (std::size_t b = 0; b < fc.dirs.size(); ++b)
            if (kv[b] != 0)
                for (std::size_t j = 0; j < d.size(); ++j)
                    d[j] = fq_add(d[j], fq_mul(kv[b], fc.dirs[b][j], q), q);
        dmat.push_back(std::move(d));
    }
    const auto piv = rref_in_place(dmat, q);
    dmat.resize(piv.size());
    fc.dirs = std::move(dmat);
    return fc;
}

// Twisted folded tuple for component i with twist n: first component
// alpha_i^{[n]} (or zero for direction fits), Y_j component
// fit(gamma^{[m ell - n + j]} alpha_i)^{[n]}.
lfrs::EvalTuple twisted_tuple(const Params& p, bool direction, const DigitVec& fit,
                              std::size_t i, std::size_t n, std::size_t folding) {
    const FieldCtx& F = p.field;
    const std::size_t d = p.m * p.ell;
    const LinPoly f = lp_from_message(F, fit);
    lfrs::EvalTuple tup;
    tup.reserve(folding + 1);
    tup.push_back(direction ? F.zero() : F.frobenius(p.alphas[i], n));
    for (std::size_t j = 0; j < folding; ++j) {
        const std::size_t gexp = (d - n + j) % d;
        const FieldElem arg = F.mul(F.frobenius(p.gamma, gexp), p.alphas[i]);
        tup.push_back(F.frobenius(lp_eval(F, f, arg), n));
    }
    return tup;
}

}  // namespace

std::vector<lfrs::EvalTuple> manufacture_twisted(const Params& p, const Subspace& received) {
    std::vector<lfrs::EvalTuple> points;
    for (const auto& fc : fit_components(p, received)) {
        for (std::size_t n = 0; n < p.m; ++n) {
            points.push_back(twisted_tuple(p, false, fc.rep, fc.index, n, p.s));
            for (const auto& d : fc.dirs)
                points.push_back(twisted_tuple(p, true, d, fc.index, n, p.s));
        }
    }
    return points;
}

DecodeOutput decode(const Params& p, const Subspace& received, std::size_t t) {
    const FieldCtx& F = p.field;
    if (received.ambient_dim() != p.ambient_dim() || received.q() != F.q())
        throw std::invalid_argument("decode: received space lives in the wrong ambient");
    if (!radius_ok(p, t))
        throw RegimeError("decode: t outside the radius t < s ell - s (k-1)/m");
    if (received.dim() != p.ell + t)
        throw std::invalid_argument("decode: dim(T) must equal ell + t for insertion-only input");

    DecodeOutput out;
    out.folding_used = p.s;

    auto fitted = fit_components(p, received);
    std::vector<FittedComponent> trunc;
    std::size_t conditions = 0;
    for (auto& fc : fitted) {
        auto tc = truncate_fits(p, std::move(fc));
        if (!tc) return out;  // no degree-< k message fits this component
        conditions += p.m * (1 + tc->dirs.size());
        trunc.push_back(std::move(*tc));
    }

    const std::size_t d = p.m * p.ell;
    std::size_t folding = p.s;
    long D = 0;
    for (;; ++folding) {
        if (folding >= d)
            throw InternalError("decode: condition count exceeds every feasible folding width");
        D = (static_cast<long>(conditions) - static_cast<long>(p.k) + 1) /
            (static_cast<long>(folding) + 1);
        if (D < 0) D = 0;
        if (D + static_cast<long>(p.k) - 1 < static_cast<long>(d)) break;
    }
    out.folding_used = folding;

    std::vector<lfrs::EvalTuple> points;
    points.reserve(conditions);
    for (const auto& tc : trunc)
        for (std::size_t n = 0; n < p.m; ++n) {
            points.push_back(twisted_tuple(p, false, tc.rep, tc.index, n, folding));
            for (const auto& dir : tc.dirs)
                points.push_back(twisted_tuple(p, true, dir, tc.index, n, folding));
        }

    lfrs::InterpPoly q = lfrs::interpolate_at(F, points, p.k, folding, D);
    auto norm = lfrs::try_normalize_shift(F, q);
    if (norm) {
        lfrs::RecoverResult rr = lfrs::recover_core(F, *norm, p.gamma, p.k);
        out.branch_positions = std::move(rr.branch_positions);
        out.candidates = std::move(rr.candidates);
    }
    out.verified.assign(out.candidates.size(), false);
    for (std::size_t i = 0; i < out.candidates.size(); ++i)
        out.verified[i] = within(encode(p, out.candidates[i]), received, t, 0);
    return out;
}

}  // namespace subcodec::mv
