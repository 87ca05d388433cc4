#pragma once

#include <cstddef>
#include <vector>

#include "subspace_codec/lfrs.hpp"

namespace subcodec::kk {

/// Restricted KK code over F_{q^m}: messages are k digits of F_q, codewords
/// span {(alpha_i, f(alpha_i))} in F_q^{ell + m}. Every evaluation point must
/// generate a normal basis and the set must be independent. gamma and s are
/// receiver-side choices (the folding happens at the decoder, not on the
/// wire); they are carried here so one params file drives both ends.
struct Params {
    FieldCtx field;
    std::size_t ell = 0;
    std::size_t k = 1;
    std::size_t s = 1;
    std::vector<FieldElem> alphas;
    FieldElem gamma;

    std::size_t m() const { return field.degree(); }
    std::size_t ambient_dim() const { return ell + m(); }
    void validate() const;
};

Subspace encode(const Params& p, const Message& msg);

/// The unique f in F_q[X] of q-degree at most m-1 with f(alpha) = y; its
/// coefficients are the coordinates of y in the normal basis of alpha.
LinPoly unique_fit(const FieldCtx& ctx, const FieldElem& alpha, const FieldElem& y);

/// Projection W_i of the received space onto <alpha_i> + F_{q^m}, returned
/// as the basis {(alpha_i, ys[j])}: ys[0] comes from the unique vector of T
/// with first block exactly e_i after reduction, and the rest are ys[0]
/// shifted by the second-block-only part Z = T cap ({0} x F_{q^m}).
struct Component {
    std::size_t index = 0;            // which alpha_i
    std::vector<FieldElem> ys;        // dim W_i values y_ij
};

/// Fails with RegimeError when some alpha_i has no support in T, which
/// signals a deletion (this decoder is insertion-only).
std::vector<Component> project_components(const Params& p, const Subspace& received);

/// Folded tuples (alpha_i, f_ij(gamma alpha_i), ..., f_ij(gamma^{[s-1]} alpha_i))
/// manufactured from the fitted polynomials; the true folded vector of any
/// message consistent with W_i lies in the span of the index-i tuples.
struct Manufactured {
    struct Entry {
        std::size_t index = 0;
        lfrs::EvalTuple tuple;
    };
    std::vector<Entry> entries;
    std::size_t folding = 0;
};
Manufactured manufacture(const Params& p, const std::vector<Component>& components);

/// Insertion-only list decoding: t < s(ell - k + 1) and dim(T) = ell + t.
/// Internally the receiver may widen the folding beyond s (still capped at m)
/// when inserted dimensions pile up in {0} x F_{q^m} and inflate the
/// interpolation condition count; folding_used reports the width actually
/// used, and the candidate bound is q^(folding_used - 1).
DecodeOutput decode(const Params& p, const Subspace& received, std::size_t t);

bool radius_ok(const Params& p, std::size_t t);

}  // namespace subcodec::kk
