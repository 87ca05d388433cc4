#pragma once

#include <cstddef>
#include <vector>

#include "subspace_codec/gf.hpp"
#include "subspace_codec/subspace.hpp"

namespace subcodec {

/// Linearized polynomial f(X) = sum_i coeffs[i] X^{[i]} over a stated field
/// context (X^{[i]} = X^{q^i}). Kept trimmed: the last stored coefficient is
/// nonzero, and the zero polynomial has no coefficients at all, so qdeg() is
/// only defined for nonzero polynomials.
struct LinPoly {
    std::vector<FieldElem> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    std::size_t qdeg() const { return coeffs.size() - 1; }
    bool operator==(const LinPoly&) const = default;
};

LinPoly lp_from_coeffs(const FieldCtx& ctx, std::vector<FieldElem> coeffs);
LinPoly lp_monomial(const FieldCtx& ctx, std::size_t i, const FieldElem& c);
LinPoly lp_identity(const FieldCtx& ctx);
/// Lift a vector of base-field digits into a message polynomial
/// sum_i msg[i] X^{[i]} with prime-subfield coefficients.
LinPoly lp_from_message(const FieldCtx& ctx, const DigitVec& msg);

LinPoly lp_add(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g);
LinPoly lp_sub(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g);

FieldElem lp_eval(const FieldCtx& ctx, const LinPoly& f, const FieldElem& x);

/// Composition h with h(x) = f(g(x)); q-degrees add for nonzero inputs.
/// Computed by coefficient convolution with Frobenius twists,
/// h_n = sum_{i+j=n} f_i g_j^{[i]}.
LinPoly lp_compose(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g);

/// The polynomial X -> f(cX); coefficient i becomes f_i c^{[i]}.
LinPoly lp_scale_arg(const FieldCtx& ctx, const LinPoly& f, const FieldElem& c);

/// Kernel of the evaluation map of a nonzero f, as a subspace of the field
/// viewed as F_q^d. Its dimension is at most qdeg(f).
Subspace lp_root_space(const FieldCtx& ctx, const LinPoly& f);

/// Divides f by X^{[j]} on the left: requires coefficients below index j to
/// vanish and returns the polynomial r with r(x)^{[j]} = f(x), i.e.
/// r_i = f_{i+j}^{[d-j]}.
LinPoly lp_frobenius_shift(const FieldCtx& ctx, const LinPoly& f, std::size_t j);

}  // namespace subcodec
