#include "subspace_codec/kk.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "subspace_codec/errors.hpp"

namespace subcodec::kk {

void Params::validate() const {
    if (ell == 0 || s == 0 || k == 0) throw std::invalid_argument("kk: ell, s, k must be >= 1");
    if (alphas.size() != ell) throw std::invalid_argument("kk: need ell evaluation points");
    if (ell > m()) throw std::invalid_argument("kk: ell must not exceed m");
    if (k > m()) throw std::invalid_argument("kk: k must not exceed m");
    if (s > m()) throw std::invalid_argument("kk: folding must not exceed m");
    DigitMat rows;
    for (const auto& a : alphas) {
        if (!is_normal_element(field, a))
            throw std::invalid_argument("kk: every alpha_i must generate a normal basis");
        rows.push_back(a.coeffs);
    }
    if (matrix_rank(rows, field.q()) != ell)
        throw std::invalid_argument("kk: evaluation points are linearly dependent");
    if (!is_normal_element(field, gamma))
        throw std::invalid_argument("kk: gamma does not generate a normal basis");
}

Subspace encode(const Params& p, const Message& msg) {
    if (msg.size() != p.k) throw std::invalid_argument("encode: message must have k digits");
    const FieldCtx& F = p.field;
    const LinPoly f = lp_from_message(F, msg);
    DigitMat rows;
    for (std::size_t i = 0; i < p.ell; ++i) {
        DigitVec row(p.ambient_dim(), 0);
        row[i] = 1;
        const FieldElem y = lp_eval(F, f, p.alphas[i]);
        for (std::size_t b = 0; b < p.m(); ++b) row[p.ell + b] = y.coeffs[b];
        rows.push_back(std::move(row));
    }
    return Subspace::span(F.q(), p.ambient_dim(), rows);
}

LinPoly unique_fit(const FieldCtx& F, const FieldElem& alpha, const FieldElem& y) {
    if (!is_normal_element(F, alpha))
        throw std::invalid_argument("unique_fit: alpha does not generate a normal basis");
    std::vector<FieldElem> basis;
    basis.reserve(F.degree());
    FieldElem a = alpha;
    for (std::uint32_t i = 0; i < F.degree(); ++i) {
        basis.push_back(a);
        a = F.frobenius(a, 1);
    }
    return lp_from_message(F, F.as_base_vector(y, basis));
}

namespace {

// Second-block field value of an ambient row whose first block is zero.
FieldElem second_block(const Params& p, const DigitVec& row) {
    DigitVec c(row.begin() + static_cast<std::ptrdiff_t>(p.ell), row.end());
    return p.field.from_digits(std::move(c));
}

// The unique vector of T with first block equal to e_i, if any. T is in RREF,
// so solve for the combination of basis rows whose first ell coordinates hit
// e_i exactly.
std::optional<FieldElem> component_representative(const Params& p, const Subspace& t,
                                                  std::size_t i) {
    const std::size_t dim = t.dim();
    DigitMat a(p.ell, DigitVec(dim));
    for (std::size_t j = 0; j < p.ell; ++j)
        for (std::size_t b = 0; b < dim; ++b) a[j][b] = t.basis()[b][j];
    DigitVec e(p.ell, 0);
    e[i] = 1;
    auto sol = solve_linear(a, e, t.q());
    if (!sol) return std::nullopt;
    DigitVec v(p.ambient_dim(), 0);
    for (std::size_t b = 0; b < dim; ++b) {
        if ((*sol)[b] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = fq_add(v[j], fq_mul((*sol)[b], t.basis()[b][j], t.q()), t.q());
    }
    return second_block(p, v);
}

// Z = T cap ({0} x F_{q^m}), as second-block field values.
std::vector<FieldElem> pure_insertion_part(const Params& p, const Subspace& t) {
    DigitMat zrows;
    for (std::size_t j = 0; j < p.m(); ++j) {
        DigitVec row(p.ambient_dim(), 0);
        row[p.ell + j] = 1;
        zrows.push_back(std::move(row));
    }
    const Subspace s0 = Subspace::span(t.q(), p.ambient_dim(), zrows);
    const Subspace z = intersect(t, s0);
    std::vector<FieldElem> out;
    for (const auto& row : z.basis()) out.push_back(second_block(p, row));
    return out;
}

}  // namespace

std::vector<Component> project_components(const Params& p, const Subspace& received) {
    if (received.ambient_dim() != p.ambient_dim() || received.q() != p.field.q())
        throw std::invalid_argument("project_components: wrong ambient space");
    const std::vector<FieldElem> z = pure_insertion_part(p, received);
    std::vector<Component> comps;
    comps.reserve(p.ell);
    for (std::size_t i = 0; i < p.ell; ++i) {
        auto rep = component_representative(p, received, i);
        if (!rep)
            throw RegimeError(
                "project_components: alpha_" + std::to_string(i + 1) +
                " has no support in the received space; a deletion occurred and this "
                "decoder handles insertions only");
        Component c;
        c.index = i;
        c.ys.push_back(*rep);
        for (const auto& zv : z) c.ys.push_back(p.field.add(*rep, zv));
        comps.push_back(std::move(c));
    }
    return comps;
}

Manufactured manufacture(const Params& p, const std::vector<Component>& components) {
    const FieldCtx& F = p.field;
    Manufactured out;
    out.folding = p.s;
    for (const auto& c : components) {
        for (const auto& y : c.ys) {
            const LinPoly f = unique_fit(F, p.alphas[c.index], y);
            lfrs::EvalTuple tup;
            tup.reserve(p.s + 1);
            tup.push_back(p.alphas[c.index]);
            FieldElem gj = p.gamma;
            for (std::size_t j = 0; j < p.s; ++j) {
                tup.push_back(lp_eval(F, f, F.mul(gj, p.alphas[c.index])));
                if (j + 1 < p.s) gj = F.frobenius(gj, 1);
            }
            out.entries.push_back({c.index, std::move(tup)});
        }
    }
    return out;
}

bool radius_ok(const Params& p, std::size_t t) {
    return static_cast<long>(t) <
           static_cast<long>(p.s) * (static_cast<long>(p.ell) - static_cast<long>(p.k) + 1);
}

namespace {

// Messages have q-degree < k, so the affine fit set of each component can be
// cut down to representatives with vanishing coefficients k..m-1 before any
// tuples are manufactured. Returns nullopt when the cut is empty (then no
// message is consistent with this component at all).
struct TruncatedComponent {
    DigitVec rep;                // fit coefficients of one consistent value
    std::vector<DigitVec> dirs;  // independent direction fits, all deg < k
};

std::optional<TruncatedComponent> truncate_component(const Params& p, const Component& c) {
    const FieldCtx& F = p.field;
    std::vector<FieldElem> basis;
    FieldElem a = p.alphas[c.index];
    for (std::uint32_t i = 0; i < F.degree(); ++i) {
        basis.push_back(a);
        a = F.frobenius(a, 1);
    }
    const DigitVec rep = F.as_base_vector(c.ys[0], basis);
    std::vector<DigitVec> dirs;
    for (std::size_t j = 1; j < c.ys.size(); ++j)
        dirs.push_back(F.as_base_vector(F.sub(c.ys[j], c.ys[0]), basis));

    const std::size_t hi = p.m() > p.k ? p.m() - p.k : 0;
    if (hi == 0) {
        // Nothing to truncate; just make the directions independent.
        TruncatedComponent out{rep, {}};
        DigitMat m = dirs;
        const auto piv = rref_in_place(m, F.q());
        m.resize(piv.size());
        out.dirs = std::move(m);
        return out;
    }

    // Solve coeffs k..m-1 of rep + sum mu_b dirs[b] = 0 over F_q.
    DigitMat sys(hi, DigitVec(dirs.size(), 0));
    DigitVec rhs(hi, 0);
    for (std::size_t row = 0; row < hi; ++row) {
        for (std::size_t b = 0; b < dirs.size(); ++b) sys[row][b] = dirs[b][p.k + row];
        rhs[row] = fq_neg(rep[p.k + row], F.q());
    }
    auto mu = solve_linear(sys, rhs, F.q());
    if (!mu) return std::nullopt;

    TruncatedComponent out;
    out.rep = rep;
    for (std::size_t b = 0; b < dirs.size(); ++b)
        if ((*mu)[b] != 0)
            for (std::size_t j = 0; j < out.rep.size(); ++j)
                out.rep[j] = fq_add(out.rep[j], fq_mul((*mu)[b], dirs[b][j], F.q()), F.q());

    DigitMat dir_kernel = kernel_basis(sys, dirs.size(), F.q());
    DigitMat dmat;
    for (const auto& kv : dir_kernel) {
        DigitVec d(out.rep.size(), 0);
        for (std::size_t b = 0; b < dirs.size(); ++b)
            if (kv[b] != 0)
                for (std::size_t j = 0; j < d.size(); ++j)
                    d[j] = fq_add(d[j], fq_mul(kv[b], dirs[b][j], F.q()), F.q());
        dmat.push_back(std::move(d));
    }
    const auto piv = rref_in_place(dmat, F.q());
    dmat.resize(piv.size());
    out.dirs = std::move(dmat);
    return out;
}

lfrs::EvalTuple folded_tuple(const Params& p, const FieldElem& first, const DigitVec& fit,
                             std::size_t i, std::size_t folding) {
    const FieldCtx& F = p.field;
    const LinPoly f = lp_from_message(F, fit);
    lfrs::EvalTuple tup;
    tup.reserve(folding + 1);
    tup.push_back(first);
    FieldElem gj = p.gamma;
    for (std::size_t j = 0; j < folding; ++j) {
        tup.push_back(lp_eval(F, f, F.mul(gj, p.alphas[i])));
        if (j + 1 < folding) gj = F.frobenius(gj, 1);
    }
    return tup;
}

}  // namespace

DecodeOutput decode(const Params& p, const Subspace& received, std::size_t t) {
    const FieldCtx& F = p.field;
    if (received.ambient_dim() != p.ambient_dim() || received.q() != F.q())
        throw std::invalid_argument("decode: received space lives in the wrong ambient");
    if (!radius_ok(p, t)) throw RegimeError("decode: t outside the radius t < s(ell - k + 1)");
    if (received.dim() != p.ell + t)
        throw std::invalid_argument("decode: dim(T) must equal ell + t for insertion-only input");

    DecodeOutput out;
    out.folding_used = p.s;

    const auto components = project_components(p, received);
    std::vector<std::optional<TruncatedComponent>> trunc;
    std::size_t conditions = 0;
    for (const auto& c : components) {
        trunc.push_back(truncate_component(p, c));
        // A component with no degree-< k fit rules out every message.
        if (!trunc.back()) return out;
        conditions += 1 + trunc.back()->dirs.size();
    }

    // Receiver-side folding: widen past s until the zero-composition argument
    // applies (D + k - 1 < ell conditions on ell independent roots).
    std::size_t folding = p.s;
    long D = 0;
    for (;; ++folding) {
        if (folding > p.m())
            throw InternalError("decode: condition count exceeds every feasible folding width");
        D = (static_cast<long>(conditions) - static_cast<long>(p.k) + 1) /
            (static_cast<long>(folding) + 1);
        if (D < 0) D = 0;
        if (D + static_cast<long>(p.k) - 1 < static_cast<long>(p.ell)) break;
    }
    out.folding_used = folding;

    std::vector<lfrs::EvalTuple> points;
    points.reserve(conditions);
    for (std::size_t i = 0; i < p.ell; ++i) {
        const auto& tc = *trunc[i];
        points.push_back(folded_tuple(p, p.alphas[i], tc.rep, i, folding));
        for (const auto& d : tc.dirs) points.push_back(folded_tuple(p, F.zero(), d, i, folding));
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

}  // namespace subcodec::kk
