#include "polarity_lab/field.hpp"

#include <array>

namespace polarity_lab {

namespace {

// Fixed moduli for GF(2^h), h = 2..8:
// x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x^4+x^3+x+1, x^7+x+1, x^8+x^4+x^3+x^2+1
constexpr std::array<std::uint32_t, 7> kModulusTable = {0b111,     0b1011,      0b10011,
                                                        0b100101,  0b1011011,   0b10000011,
                                                        0b100011101};

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t poly_degree(std::uint64_t p) {
  std::uint32_t d = 0;
  while (p >> (d + 1)) ++d;
  return d;
}

// Reduce a polynomial product modulo the field modulus.
std::uint32_t gf2_reduce(std::uint64_t v, std::uint32_t modulus, std::uint32_t h) {
  for (int bit = 62; bit >= static_cast<int>(h); --bit)
    if (v >> bit) v ^= static_cast<std::uint64_t>(modulus) << (bit - h);
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::uint64_t gf2_poly_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

bool gf2_poly_irreducible(std::uint32_t poly, std::uint32_t deg) {
  if (poly_degree(poly) != deg || deg == 0) return false;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    for (std::uint32_t f = (1u << d); f < (2u << d); ++f) {
      // divide poly by f, check remainder
      std::uint64_t rem = poly;
      while (poly_degree(rem) >= d && rem) {
        rem ^= static_cast<std::uint64_t>(f) << (poly_degree(rem) - d);
        if (rem == 0) return false;
      }
      if (rem == 0) return false;
    }
  }
  return true;
}

Field Field::create(std::uint32_t p, std::uint32_t h) {
  if (!is_prime(p)) throw std::invalid_argument("field: characteristic must be prime");
  if (h < 1) throw std::invalid_argument("field: degree must be >= 1");
  if (p != 2 && h != 1)
    throw std::invalid_argument("field: extension fields supported only for p = 2");
  if (p != 2 && p > 13) throw std::invalid_argument("field: odd prime fields limited to p <= 13");
  if (p == 2 && h > 8) throw std::invalid_argument("field: GF(2^h) limited to h <= 8");

  Field f;
  f.spec_.characteristic = p;
  f.spec_.degree = h;
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) q *= p;
  f.spec_.order = q;
  if (p == 2 && h > 1) {
    f.spec_.modulus = kModulusTable[h - 2];
    if (!gf2_poly_irreducible(f.spec_.modulus, h))
      throw std::logic_error("field: modulus table entry is reducible");
  }

  f.mul_.resize(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      FieldElement r;
      if (p == 2)
        r = h == 1 ? (a & b) : gf2_reduce(gf2_poly_mul(a, b), f.spec_.modulus, h);
      else
        r = (a * b) % p;
      f.mul_[static_cast<std::size_t>(a) * q + b] = r;
    }

  f.inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (f.mul_[static_cast<std::size_t>(a) * q + b] == 1) {
        f.inv_[a] = b;
        break;
      }

  if (p == 2) {
    f.trace_.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      FieldElement s = a, t = a;
      for (std::uint32_t i = 1; i < h; ++i) {
        s = f.mul_[static_cast<std::size_t>(s) * q + s];
        t ^= s;
      }
      f.trace_[a] = t;  // lands in {0, 1}
    }
  }
  return f;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  FieldElement r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<FieldElement> Field::trace_one_set() const {
  if (!is_binary()) throw std::domain_error("field: trace_one_set requires characteristic 2");
  std::vector<FieldElement> t;
  for (FieldElement a = 0; a < spec_.order; ++a)
    if (trace_[a] == 1) t.push_back(a);
  return t;
}

}  // namespace polarity_lab
