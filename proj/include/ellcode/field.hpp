#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ellcode {

inline constexpr unsigned kMaxExtensionDegree = 16;
inline constexpr std::uint32_t kMaxCharacteristic = 65521;

/// Element of GF(p^m) in the power basis {1, x, ..., x^(m-1)} of the field
/// modulus; coeffs[i] is the coefficient of x^i. Slots at index >= m are zero.
///
/// Elements do not carry a pointer to their field. All arithmetic goes
/// through a Field, which validates operands with Field::contains().
struct FieldElement {
  std::array<std::uint16_t, kMaxExtensionDegree> coeffs{};

  bool is_zero() const noexcept {
    for (auto c : coeffs)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

using Fe = FieldElement;

bool is_prime(std::uint64_t n) noexcept;

/// GF(p^m) = GF(p)[X] / (modulus). Immutable and cheap to copy; copies share
/// the same descriptor.
class Field {
 public:
  /// GF(p).
  static Field prime(std::uint32_t p);

  /// GF(p^m). Without an explicit modulus the lexicographically smallest
  /// monic irreducible of degree m is used (lower coefficients read as a
  /// base-p integer, c0 least significant).
  static Field extension(std::uint32_t p, unsigned m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint64_t order() const noexcept;
  /// Little-endian, monic, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  FieldElement zero() const noexcept { return {}; }
  FieldElement one() const noexcept;
  FieldElement from_int(std::int64_t v) const noexcept;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Class of X modulo the modulus.
  FieldElement generator() const noexcept;

  bool contains(const FieldElement& a) const noexcept;
  void check(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const noexcept;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const noexcept;
  FieldElement neg(const FieldElement& a) const noexcept;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const noexcept;
  FieldElement sqr(const FieldElement& a) const noexcept { return mul(a, a); }
  FieldElement scale(const FieldElement& a, std::uint32_t k) const noexcept;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const noexcept;

  /// Checked variants: throw FieldMismatch when an operand is not an element.
  FieldElement checked_add(const FieldElement& a, const FieldElement& b) const;
  FieldElement checked_mul(const FieldElement& a, const FieldElement& b) const;

  /// Bijection with [0, order()): sum of coeffs[i] * p^i.
  std::uint64_t index(const FieldElement& a) const noexcept;
  FieldElement element(std::uint64_t idx) const noexcept;

  /// Coefficients over GF(p) in the power basis.
  std::vector<std::uint32_t> decompose(const FieldElement& a) const;
  FieldElement recompose(std::span<const std::uint32_t> parts) const;

  /// a^(p^d).
  FieldElement frobenius(const FieldElement& a, unsigned d = 1) const noexcept;
  /// True iff a lies in the subfield GF(p^d); d must divide degree().
  bool in_subfield(const FieldElement& a, unsigned d) const;

  std::optional<FieldElement> sqrt(const FieldElement& a) const;
  /// Characteristic 2 only: some w with w^2 + w = c, if one exists.
  std::optional<FieldElement> solve_artin_schreier(const FieldElement& c) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Irreducibility of a monic polynomial over GF(p) (little-endian coefficients).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace ellcode
