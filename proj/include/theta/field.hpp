#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace theta {

/// Field element as a dense code 0..q-1. For q = p^e the code is the
/// coefficient vector c_0 + c_1 p + ... + c_{e-1} p^{e-1} of a polynomial in
/// x reduced modulo the field's irreducible modulus.
struct FieldElement {
    std::uint32_t code = 0;

    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(q). Immutable after construction; arithmetic is table driven (full
/// add/mul tables for q <= 64, log tables above).
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1U << 16;
    static constexpr std::uint32_t kFullTableLimit = 64;

    /// Throws NotPrimePower unless q = p^e with e >= 1, and SizeLimit when
    /// q > 2^16. For e > 1 the modulus is the least monic irreducible of
    /// degree e, comparing lower coefficients as base-p integers.
    static Field make(std::uint32_t q);

    [[nodiscard]] std::uint32_t order() const noexcept { return q_; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return e_; }
    /// Coefficients m_0..m_e (m_e = 1); just {0, 1} for prime fields.
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    [[nodiscard]] FieldElement zero() const { return {0}; }
    [[nodiscard]] FieldElement one() const { return {1}; }
    /// The class of x (code p) for extension fields; 0 for prime fields.
    [[nodiscard]] FieldElement generator_x() const { return {e_ > 1 ? p_ : 0}; }
    [[nodiscard]] FieldElement element(std::uint32_t code) const;

    [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
    [[nodiscard]] FieldElement neg(FieldElement a) const;
    [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
    /// Throws RangeError for zero.
    [[nodiscard]] FieldElement inv(FieldElement a) const;
    [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t k) const;

    /// Polynomial-level product reduced by the modulus, bypassing the tables.
    [[nodiscard]] FieldElement mul_slow(FieldElement a, FieldElement b) const;

private:
    Field() = default;
    [[nodiscard]] FieldElement add_slow(FieldElement a, FieldElement b) const;

    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint16_t> add_table_;  // q*q when q <= 64
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
    std::vector<std::uint32_t> exp_;  // exp_[k], k in [0, 2(q-1))
    std::vector<std::uint32_t> neg_;
};

/// Prime factorisation result for prime powers.
struct PrimePower {
    std::uint32_t prime = 0;
    std::uint32_t exponent = 0;
};

/// nullopt-like: exponent 0 when q is not a prime power.
PrimePower as_prime_power(std::uint32_t q);

bool is_prime(std::uint64_t n);

/// Least prime p with n < p < 2n. Requires n > 1 (throws RangeError).
std::uint64_t find_prime_in_range(std::uint64_t n);

using Vec4 = std::array<FieldElement, 4>;

/// (1, z, z^2, z^3)
Vec4 moment_curve(const Field& f, FieldElement z);

/// Rank test by Gaussian elimination over the field.
bool moment_independence(const Field& f, const std::array<FieldElement, 4>& z);

/// Rank of a 4x4 matrix (rows) over the field.
int rank4(const Field& f, std::array<Vec4, 4> rows);

}  // namespace theta
