#include "starpir/field.hpp"

#include <array>
#include <bit>
#include <vector>

#include "starpir/errors.hpp"

namespace starpir {

namespace {

constexpr std::array<std::uint32_t, 17> kBinaryModuli = {
    0,        0,
    0x7,      // x^2+x+1
    0xB,      // x^3+x+1
    0x13,     // x^4+x+1
    0x25,     // x^5+x^2+1
    0x43,     // x^6+x+1
    0x83,     // x^7+x+1
    0x11D,    // x^8+x^4+x^3+x^2+1
    0x211,    // x^9+x^4+1
    0x409,    // x^10+x^3+1
    0x805,    // x^11+x^2+1
    0x1053,   // x^12+x^6+x^4+x+1
    0x201B,   // x^13+x^4+x^3+x+1
    0x4443,   // x^14+x^10+x^6+x+1
    0x8003,   // x^15+x+1
    0x1100B,  // x^16+x^12+x^3+x+1
};

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int poly_degree(std::uint32_t a) { return a == 0 ? -1 : 31 - std::countl_zero(a); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t m, unsigned h) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << h)) a ^= m;
  }
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> f;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

struct Field::Tables {
  Kind kind;
  std::uint32_t p;
  unsigned h;
  std::uint32_t q;
  std::uint32_t modulus;
  Element primitive;
  std::vector<Element> exp;       // exp[i] = g^i for i < 2(q-1)
  std::vector<std::uint32_t> log; // log[g^i] = i, log[0] unused

  Element slow_mul(Element a, Element b) const {
    if (kind == Kind::prime) return static_cast<Element>(std::uint64_t{a} * b % p);
    return clmul_mod(a, b, modulus, h);
  }
  Element slow_pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1u) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

std::uint32_t default_binary_modulus(unsigned h) {
  if (h < 2 || h > 16) throw ValidationError("no default modulus for GF(2^" + std::to_string(h) + ")");
  return kBinaryModuli[h];
}

bool is_irreducible_gf2(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f)
    if (poly_mod(poly, f) == 0) return false;
  return true;
}

std::uint32_t modulus_from_coefficients(std::span<const int> coefficients) {
  if (coefficients.size() > 17) throw ValidationError("modulus degree exceeds 16");
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0 && coefficients[i] != 1)
      throw ValidationError("binary modulus coefficients must be 0 or 1");
    if (coefficients[i]) m |= 1u << i;
  }
  return m;
}

Field Field::make(std::uint32_t p, unsigned h, std::optional<std::uint32_t> modulus) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  if (h == 0) throw ValidationError("extension degree must be at least 1");
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->h = h;
  if (h == 1) {
    if (modulus) throw ValidationError("prime fields take no modulus");
    if (p > kMaxFieldOrder) throw ValidationError("field order exceeds 2^16");
    t->kind = Kind::prime;
    t->q = p;
    t->modulus = 0;
  } else {
    if (p != 2) throw ValidationError("only binary extension fields are supported");
    if (h > 16) throw ValidationError("field order exceeds 2^16");
    const std::uint32_t m = modulus.value_or(default_binary_modulus(h));
    if (poly_degree(m) != static_cast<int>(h))
      throw ValidationError("modulus degree does not match extension degree");
    if (!is_irreducible_gf2(m)) throw ValidationError("modulus is reducible over GF(2)");
    t->kind = Kind::binary_extension;
    t->q = 1u << h;
    t->modulus = m;
  }

  const std::uint32_t order = t->q - 1;
  const auto factors = prime_factors(order);
  Element g = 1;
  for (; g < t->q; ++g) {
    bool generates = true;
    for (auto f : factors)
      if (t->slow_pow(g, order / f) == 1) {
        generates = false;
        break;
      }
    if (generates) break;
  }
  t->primitive = g;
  t->exp.resize(2 * static_cast<std::size_t>(order));
  t->log.assign(t->q, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    t->exp[i] = x;
    t->exp[i + order] = x;
    t->log[x] = i;
    x = t->slow_mul(x, g);
  }
  return Field(std::move(t));
}

Field Field::of_order(std::uint32_t q) {
  if (q >= 4 && std::has_single_bit(q)) return binary(static_cast<unsigned>(std::countr_zero(q)));
  return prime(q);
}

Field::Kind Field::kind() const { return t_->kind; }
std::uint32_t Field::characteristic() const { return t_->p; }
unsigned Field::degree() const { return t_->h; }
std::uint32_t Field::order() const { return t_->q; }
std::uint32_t Field::modulus() const { return t_->modulus; }
Element Field::primitive_element() const { return t_->primitive; }

std::string Field::name() const { return "GF(" + std::to_string(t_->q) + ")"; }

Element Field::add(Element a, Element b) const {
  if (t_->kind == Kind::binary_extension) return a ^ b;
  const Element s = a + b;
  return s >= t_->p ? s - t_->p : s;
}

Element Field::neg(Element a) const {
  if (t_->kind == Kind::binary_extension || a == 0) return a;
  return t_->p - a;
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

void Field::axpy(std::span<Element> dst, Element s, std::span<const Element> src) const {
  if (s == 0) return;
  const Tables& t = *t_;
  if (t.kind == Kind::binary_extension) {
    if (s == 1) {
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
      return;
    }
    const std::uint32_t ls = t.log[s];
    for (std::size_t i = 0; i < dst.size(); ++i)
      if (src[i]) dst[i] ^= t.exp[ls + t.log[src[i]]];
    return;
  }
  if (s == 1) {
    for (std::size_t i = 0; i < dst.size(); ++i) {
      const Element v = dst[i] + src[i];
      dst[i] = v >= t.p ? v - t.p : v;
    }
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<Element>((dst[i] + std::uint64_t{s} * src[i]) % t.p);
}

Element Field::dot(std::span<const Element> a, std::span<const Element> b) const {
  const Tables& t = *t_;
  if (t.kind == Kind::binary_extension) {
    Element acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && b[i]) acc ^= t.exp[t.log[a[i]] + t.log[b[i]]];
    return acc;
  }
  // Integer accumulation, reduced before the sum can overflow.
  const std::uint64_t top = std::uint64_t{t.p - 1} * (t.p - 1);
  const std::uint64_t chunk = top == 0 ? UINT64_MAX : UINT64_MAX / top;
  std::uint64_t acc = 0, left = chunk;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::uint64_t{a[i]} * b[i];
    if (--left == 0) {
      acc %= t.p;
      left = chunk;
    }
  }
  return static_cast<Element>(acc % t.p);
}

Element Field::inv(Element a) const {
  if (a == 0) throw ValidationError("inverse of zero in " + name());
  const std::uint32_t order = t_->q - 1;
  return t_->exp[(order - t_->log[a]) % order];
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = t_->q - 1;
  return t_->exp[(std::uint64_t{t_->log[a]} * (e % order)) % order];
}

bool operator==(const Field& a, const Field& b) {
  if (a.t_ == b.t_) return true;
  return a.t_->kind == b.t_->kind && a.t_->q == b.t_->q && a.t_->modulus == b.t_->modulus;
}

}  // namespace starpir
