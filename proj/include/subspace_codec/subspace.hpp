#pragma once

#include <cstddef>
#include <vector>

#include "subspace_codec/fq_linalg.hpp"
#include "subspace_codec/rng.hpp"

namespace subcodec {

/// F_q-subspace of F_q^n held in reduced row echelon form with no zero rows.
/// Two equal subspaces compare equal structurally, so Subspace values can be
/// hashed and diffed directly.
class Subspace {
  public:
    /// The zero subspace of F_q^n.
    Subspace(Digit q, std::size_t n) : q_(q), n_(n) {}

    /// RREF canonicalization of the row space of `vectors`.
    static Subspace span(Digit q, std::size_t n, const DigitMat& vectors);

    Digit q() const { return q_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const DigitMat& basis() const { return rows_; }

    bool contains(const DigitVec& v) const;

    bool operator==(const Subspace&) const = default;

  private:
    Digit q_ = 2;
    std::size_t n_ = 0;
    DigitMat rows_;
};

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus double-matrix intersection.
Subspace intersect(const Subspace& u, const Subspace& v);
/// dim U + dim V - 2 dim(U cap V).
std::size_t distance(const Subspace& u, const Subspace& v);
bool is_subspace_of(const Subspace& u, const Subspace& v);

/// Uniformly random d-dimensional subspace of F_q^n: rejection-sample d-by-n
/// matrices until full rank, then canonicalize. Uniform because every
/// subspace has the same number of full-rank generating matrices.
Subspace random_subspace(Digit q, std::size_t n, std::size_t d, Rng& rng);

/// Uniformly random d-dimensional subspace of V.
Subspace random_subspace_of(const Subspace& v, std::size_t d, Rng& rng);

}  // namespace subcodec
