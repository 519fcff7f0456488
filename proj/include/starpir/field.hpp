#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

namespace starpir {

/// Canonical representative of a field element. For GF(p) it is the residue
/// in [0, p); for GF(2^h) bit i holds the coefficient of x^i.
using Element = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Default modulus for GF(2^h), 2 <= h <= 16, as a bit mask including the
/// leading x^h term. All entries are primitive trinomials/pentanomials, e.g.
/// h = 4 gives x^4 + x + 1 (0x13).
std::uint32_t default_binary_modulus(unsigned h);

/// True iff the GF(2) polynomial `poly` (bit mask) is irreducible.
bool is_irreducible_gf2(std::uint32_t poly);

/// Converts coefficients (constant term first) to a bit mask.
std::uint32_t modulus_from_coefficients(std::span<const int> coefficients);

/// Finite field GF(p) or GF(2^h) of order at most 2^16 with exact
/// table-driven arithmetic. Copies share the same immutable tables.
class Field {
 public:
  enum class Kind { prime, binary_extension };

  /// GF(p^h). Only p = 2 admits h > 1. `modulus` (bit mask) defaults to
  /// `default_binary_modulus(h)`.
  static Field make(std::uint32_t p, unsigned h = 1,
                    std::optional<std::uint32_t> modulus = std::nullopt);
  static Field prime(std::uint32_t p) { return make(p, 1); }
  static Field binary(unsigned h,
                      std::optional<std::uint32_t> modulus = std::nullopt) {
    return make(2, h, modulus);
  }
  /// Field of order q (prime, or a power of two with the default modulus).
  static Field of_order(std::uint32_t q);

  Kind kind() const;
  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint32_t order() const;
  /// Bit mask of the reduction polynomial; 0 for prime fields.
  std::uint32_t modulus() const;
  std::string name() const;

  bool contains(Element a) const { return a < order(); }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element div(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  /// a + b * c, the inner step of every elimination loop.
  Element fma(Element a, Element b, Element c) const { return add(a, mul(b, c)); }
  /// dst[i] += s * src[i] for every i; the spans must have equal length.
  void axpy(std::span<Element> dst, Element s, std::span<const Element> src) const;
  /// sum_i a[i] * b[i]; the spans must have equal length.
  Element dot(std::span<const Element> a, std::span<const Element> b) const;

  /// A generator of the multiplicative group.
  Element primitive_element() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

}  // namespace starpir
