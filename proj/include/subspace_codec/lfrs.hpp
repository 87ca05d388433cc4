#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subspace_codec/channel.hpp"
#include "subspace_codec/gf.hpp"
#include "subspace_codec/linpoly.hpp"
#include "subspace_codec/subspace.hpp"

namespace subcodec {

/// Message: k base-field digits, the coefficients f_0..f_{k-1} of a
/// linearized polynomial with coefficients restricted to F_q.
using Message = DigitVec;

/// Decoder result shared by all three code families. `candidates` is the
/// pre-verification list produced by the interpolation recursion (an affine
/// set enumerated through at most folding_used - 1 branch positions);
/// `verified[i]` records whether re-encoding candidates[i] lands within the
/// claimed channel radius of the received space.
struct DecodeOutput {
    std::vector<std::size_t> branch_positions;
    std::vector<Message> candidates;
    std::vector<bool> verified;
    std::size_t folding_used = 0;

    std::vector<Message> verified_messages() const {
        std::vector<Message> out;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (verified[i]) out.push_back(candidates[i]);
        return out;
    }
};

namespace lfrs {

/// Parameters of a linearized folded Reed-Solomon code over F_{q^m}:
/// ell evaluation points alpha_i (independent over F_q), folding width s,
/// message length k, and gamma generating a normal basis. Codewords live in
/// F_q^{ell + m s}: ell coordinates for the first component in the alpha
/// basis, then s blocks of m coordinates, each a flattened field element.
struct Params {
    FieldCtx field;
    std::size_t ell = 0;
    std::size_t s = 1;
    std::size_t k = 1;
    std::vector<FieldElem> alphas;
    FieldElem gamma;

    std::size_t m() const { return field.degree(); }
    std::size_t ambient_dim() const { return ell + m() * s; }
    void validate() const;
};

/// Rate k / (ell (ell + m s)) as an exact fraction (num, den).
std::pair<long long, long long> rate(const Params& p);

/// Span of the ell vectors (alpha_i, f(gamma alpha_i), ..., f(gamma^{[s-1]} alpha_i)).
Subspace encode(const Params& p, const Message& msg);

/// One codeword row in ambient coordinates.
DigitVec codeword_vector(const Params& p, const Message& msg, std::size_t i);

/// Interpolation point (y_0, y_1, ..., y_s) as field elements.
using EvalTuple = std::vector<FieldElem>;

/// Reads an ambient row back into field-element components.
EvalTuple row_to_tuple(const Params& p, const DigitVec& row);

/// Q(X, Y_1, ..., Y_s) = A_0(X) + A_1(Y_1) + ... + A_s(Y_s), with
/// qdeg(A_0) <= D + k - 1 and qdeg(A_j) <= D.
struct InterpPoly {
    LinPoly a0;
    std::vector<LinPoly> ay;  // A_1..A_s
    long degree_bound = 0;    // D

    bool is_zero(const FieldCtx& ctx) const;
    FieldElem eval(const FieldCtx& ctx, const EvalTuple& point) const;
};

/// Nonzero Q of the form above vanishing on every tuple; D is the given
/// degree bound and the system must be underdetermined (guaranteed by the
/// callers' choice of D). The kernel vector is chosen deterministically.
InterpPoly interpolate_at(const FieldCtx& ctx, const std::vector<EvalTuple>& points,
                          std::size_t k, std::size_t svars, long degree_bound);

/// Spec-facing interpolation for a received basis of ell + t - r codeword
/// rows, with D = floor((ell + t - r - k + 1) / (s + 1)).
InterpPoly interpolate(const Params& p, const DigitMat& received_basis, std::size_t t,
                       std::size_t r);

/// Rewrites Q so that g(X) = sum_j a_{j,0} X^{[j-1]} is nonzero, by dividing
/// out the lowest common Frobenius power (coefficientwise [d - j*] twist plus
/// index shift). Throws InternalError in the pathological case where only
/// A_0 carries the minimal-index coefficient: then the X^{[j*]} coefficient
/// of Q-hat equals a_{0,j*} != 0 for every message, so no candidate exists.
InterpPoly normalize_shift(const FieldCtx& ctx, const InterpPoly& q);

/// normalize_shift for decoder pipelines: nullopt instead of the pathological
/// throw (the honest decoder output in that case is an empty list).
std::optional<InterpPoly> try_normalize_shift(const FieldCtx& ctx, const InterpPoly& q);

struct RecoverResult {
    std::vector<std::size_t> branch_positions;
    std::vector<Message> candidates;
};

/// Back-substitution through the coefficient recursion of Q-hat(X) =
/// A_0(X) + sum_j A_j(f(gamma^{[j-1]} X)): the X^{[i]} coefficient is
/// a_{0,i} + sum_j gamma^{[i+j-1]} sum_{e<=i} a_{j,i-e} f_e for messages
/// over F_q. Positions with g(gamma^{[i]}) = 0 branch over all q digits;
/// elsewhere f_i is forced and kept only if it lies in F_q. Requires a
/// normalized Q (g != 0) and k <= extension degree.
RecoverResult recover_core(const FieldCtx& ctx, const InterpPoly& q, const FieldElem& gamma,
                           std::size_t k);

/// recover on lfrs params; candidate verification is decode's job.
DecodeOutput recover(const Params& p, const InterpPoly& q);

/// Full pipeline for a received subspace of dimension ell + t - r claimed to
/// differ from a codeword by at most t insertions and r deletions; requires
/// t < s (ell - r - k + 1). The verified sublist equals the set of messages
/// whose codeword is within (t, r) of T.
DecodeOutput decode(const Params& p, const Subspace& received, std::size_t t, std::size_t r);

/// Radius predicate t < s (ell - r - k + 1).
bool radius_ok(const Params& p, std::size_t t, std::size_t r);

/// Convenience mode when (t, r) are unknown: scans the feasible line
/// t - r = dim(T) - ell inside the radius and unions the verified lists.
struct InferredDecode {
    struct Entry {
        std::size_t t = 0, r = 0;
        DecodeOutput output;
    };
    std::vector<Entry> per_radius;
    std::vector<Message> verified_union;
};
InferredDecode decode_infer(const Params& p, const Subspace& received);

}  // namespace lfrs
}  // namespace subcodec
