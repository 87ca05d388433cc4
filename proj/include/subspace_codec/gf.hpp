#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subspace_codec/fq_linalg.hpp"

namespace subcodec {

/// Element of an extension field F_{q^d}, stored as d polynomial-basis
/// coordinates over F_q (index i is the coefficient of x^i).
struct FieldElem {
    DigitVec coeffs;
    bool operator==(const FieldElem&) const = default;
};

/// Arithmetic context for F_{q^d} = F_q[x]/(modulus), q prime. Immutable after
/// construction and freely shareable across threads; elements are plain data
/// interpreted against a context.
///
/// The modulus is the monic irreducible of degree d over F_q whose coefficient
/// vector, read as a base-q integer with the constant term least significant,
/// is smallest. That makes serialized data portable across runs.
class FieldCtx {
  public:
    /// Empty placeholder; assign from make() before use.
    FieldCtx() = default;

    static FieldCtx make(std::uint32_t q, std::uint32_t d);

    std::uint32_t q() const { return q_; }
    std::uint32_t degree() const { return d_; }
    /// Coefficients of the modulus, constant term first, length degree()+1.
    const DigitVec& modulus() const { return modulus_; }

    bool same(const FieldCtx& other) const {
        return q_ == other.q_ && d_ == other.d_ && modulus_ == other.modulus_;
    }

    FieldElem zero() const { return FieldElem{DigitVec(d_, 0)}; }
    FieldElem one() const { return from_base(1 % q_); }
    FieldElem from_base(Digit a) const;
    FieldElem from_digits(DigitVec coeffs) const;
    /// The polynomial-basis element x^i.
    FieldElem basis_elem(std::uint32_t i) const;

    bool is_zero(const FieldElem& a) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem scalar_mul(const FieldElem& a, Digit c) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

    /// x^{q^i}. Applied as a precomputed d-by-d matrix over F_q; i is reduced
    /// mod d since the Frobenius has order d.
    FieldElem frobenius(const FieldElem& a, std::uint64_t i) const;

    /// Membership in the subfield F_{q^m}, i.e. the fixed field of
    /// frobenius(., m). Exact for m dividing the extension degree.
    bool in_subfield(const FieldElem& a, std::uint32_t m) const {
        return frobenius(a, m) == a;
    }
    bool in_prime_field(const FieldElem& a) const;

    /// Coordinates of x in the given basis of the full field. The basis must
    /// be linearly independent with length equal to the extension degree.
    DigitVec as_base_vector(const FieldElem& x, std::span<const FieldElem> basis) const;

    /// Lowercase hex of the digit vector, most-significant digit first. Each
    /// digit takes as many hex characters as q-1 needs.
    std::string to_hex(const FieldElem& a) const;
    FieldElem from_hex(std::string_view s) const;
    std::uint32_t hex_digit_width() const { return hexw_; }

  private:
    void check(const FieldElem& a) const;

    std::uint32_t q_ = 0, d_ = 0, hexw_ = 1;
    DigitVec modulus_;
    std::vector<DigitMat> frob_;  // frob_[i] is the matrix of x -> x^{q^i}
};

/// Context for F_{q^d} with the deterministic modulus choice above.
inline FieldCtx make_field(std::uint32_t q, std::uint32_t d) { return FieldCtx::make(q, d); }

/// Seeded search for a normal element: gamma whose Frobenius orbit
/// {gamma^{[0]}, ..., gamma^{[d-1]}} is linearly independent over F_q.
FieldElem find_normal_element(const FieldCtx& ctx, std::uint64_t seed);

bool is_normal_element(const FieldCtx& ctx, const FieldElem& gamma);

}  // namespace subcodec
