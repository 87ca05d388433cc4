#pragma once

#include <cstddef>
#include <vector>

#include "subspace_codec/lfrs.hpp"

namespace subcodec::mv {

/// Code over the tower F_q < F_{q^m} < F_{q^{m ell}} built from the ell-th
/// roots of unity e_i of F_q (so ell must divide q-1) and a normal beta:
/// alpha_i = sum_j e_i^j beta^{[jm]}. The whole tower lives in one context of
/// degree m*ell over F_q; the middle field F_{q^m} is the fixed field of
/// frobenius(., m). Codewords span {v_i} with v_1 = (alpha_1, f(alpha_1)) and
/// v_i = (alpha_i, f(alpha_i)/alpha_i) for i > 1, inside an (ell + m)-
/// dimensional ambient: ell alpha-coordinates plus m coordinates over a fixed
/// basis of F_{q^m}.
struct Params {
    FieldCtx field;  // F_{q^{m ell}}
    std::size_t m = 0;
    std::size_t ell = 0;
    std::size_t k = 1;
    std::size_t s = 1;
    std::vector<Digit> roots_of_unity;  // e_1 = 1 first, then ascending
    FieldElem beta;
    std::vector<FieldElem> alphas;
    FieldElem gamma;
    std::vector<FieldElem> subfield_basis;  // F_q-basis of F_{q^m}, size m

    std::size_t ambient_dim() const { return ell + m; }
    void validate() const;
};

/// Constructs and fully validates parameters: enumerates the ell-th roots of
/// unity, finds a normal beta (and decoder gamma) from the seed, derives the
/// alpha_i, and checks both structural facts the construction relies on
/// (the m*ell Frobenius twists of the alphas form a basis, and f(alpha_i)/
/// alpha_i always lands in the middle field).
Params build_params(std::uint32_t q, std::size_t m, std::size_t ell, std::size_t k,
                    std::size_t s, std::uint64_t seed);

Subspace encode(const Params& p, const Message& msg);

/// Twisted interpolation points: for every component value and every twist
/// n = 0..m-1, the tuple (alpha_i^{[n]}, f_ij(gamma^{[m ell - n]} alpha_i)^{[n]},
/// ..., f_ij(gamma^{[m ell - n + s - 1]} alpha_i)^{[n]}).
std::vector<lfrs::EvalTuple> manufacture_twisted(const Params& p, const Subspace& received);

/// Insertion-only list decoding with m t < s (m ell - k + 1) and
/// dim(T) = ell + t. Folding may be widened internally exactly as in kk.
DecodeOutput decode(const Params& p, const Subspace& received, std::size_t t);

bool radius_ok(const Params& p, std::size_t t);

/// Second block of an ambient row as an element of F_{q^{m ell}} (a member of
/// the middle field by construction).
FieldElem second_block_value(const Params& p, const DigitVec& row);

/// Coordinates of a middle-field element over subfield_basis.
DigitVec subfield_coords(const Params& p, const FieldElem& y);

}  // namespace subcodec::mv
