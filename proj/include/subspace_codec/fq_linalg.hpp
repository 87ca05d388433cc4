#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace subcodec {

using Digit = std::uint32_t;
using DigitVec = std::vector<Digit>;
using DigitMat = std::vector<DigitVec>;

// Scalar arithmetic in the prime field F_q. Digits are always kept in [0, q).
inline Digit fq_add(Digit a, Digit b, Digit q) { return (a + b) % q; }
inline Digit fq_sub(Digit a, Digit b, Digit q) { return (a + q - b) % q; }
inline Digit fq_neg(Digit a, Digit q) { return a == 0 ? 0 : q - a; }
inline Digit fq_mul(Digit a, Digit b, Digit q) {
    return static_cast<Digit>((static_cast<std::uint64_t>(a) * b) % q);
}
Digit fq_inv(Digit a, Digit q);
Digit fq_pow(Digit a, std::uint64_t e, Digit q);

/// Reduces m to reduced row echelon form in place (pivots 1, cleared above and
/// below, zero rows sunk to the bottom). Returns the pivot column of each
/// nonzero row, i.e. the rank is the size of the returned vector.
std::vector<std::size_t> rref_in_place(DigitMat& m, Digit q);

std::size_t matrix_rank(DigitMat m, Digit q);

/// Basis (as rows) of the right kernel {x : m x = 0}; columns of m index x.
DigitMat kernel_basis(const DigitMat& m, std::size_t cols, Digit q);

/// One solution x of a x = b, or nullopt if the system is inconsistent.
std::optional<DigitVec> solve_linear(const DigitMat& a, const DigitVec& b, Digit q);

DigitVec mat_vec(const DigitMat& m, const DigitVec& x, Digit q);

}  // namespace subcodec
