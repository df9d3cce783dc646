#pragma once

#include <cstdint>
#include <vector>

#include "qlattice/errors.hpp"

namespace qlattice {

/// Arithmetic tables for GF(q), q = p^e a prime power, q <= 256.
///
/// Element codes are integers in [0, q). Code 0 is the additive identity and
/// code 1 the multiplicative identity. For prime q the code of an element is
/// its residue mod p. For extension fields an element is a residue polynomial
/// d_0 + d_1 x + ... + d_{e-1} x^{e-1} over GF(p), coded as sum d_i p^i; the
/// modulus is the Conway polynomial for (p, e), so element codes -- and hence
/// serialized families -- are stable across builds.
///
/// Instances are interned: FieldSpec::get(q) returns a reference that stays
/// valid for the lifetime of the process. A FieldSpec is immutable after
/// construction, so it may be shared freely between threads.
class FieldSpec {
public:
    /// Interned accessor. Throws NotAPrimePower / TooLarge.
    static const FieldSpec& get(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }

    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }
    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, inv(b))]; }

    /// Monic modulus coefficients c_0..c_e (ascending); empty for prime fields.
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    /// Multiplicative order of a nonzero element.
    int element_order(std::uint8_t a) const;

    const std::vector<std::uint8_t>& add_table() const { return add_; }
    const std::vector<std::uint8_t>& mul_table() const { return mul_; }
    const std::vector<std::uint8_t>& inv_table() const { return inv_; }

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

private:
    explicit FieldSpec(int q);

    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    int q_, p_, e_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
    std::vector<std::uint8_t> modulus_;
};

/// Spec-level constructor name; equivalent to FieldSpec::get.
inline const FieldSpec& make_field(int q) { return FieldSpec::get(q); }

/// Factors q as p^e with p prime; returns false if q is not a prime power >= 2.
bool factor_prime_power(int q, int& p, int& e);

} // namespace qlattice
