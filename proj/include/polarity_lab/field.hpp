#ifndef POLARITY_LAB_FIELD_HPP
#define POLARITY_LAB_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace polarity_lab {

/// Elements are stored by their integer encoding in [0, q).
/// For GF(2^h), bit i of the encoding is the coefficient of x^i;
/// for prime fields it is the residue mod p.
using FieldElement = std::uint32_t;

struct FieldSpec {
  std::uint32_t characteristic = 0;  // p
  std::uint32_t degree = 0;          // h
  std::uint32_t modulus = 0;         // bit-encoded irreducible poly, p = 2, h > 1
  std::uint32_t order = 0;           // q = p^h
};

/// Exact arithmetic in GF(p) (p odd prime, p <= 13) or GF(2^h), h <= 8.
/// All tables are built once at construction; a Field is an immutable value.
class Field {
 public:
  static Field create(std::uint32_t p, std::uint32_t h);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return spec_.order; }
  std::uint32_t characteristic() const { return spec_.characteristic; }
  std::uint32_t degree() const { return spec_.degree; }
  bool is_binary() const { return spec_.characteristic == 2; }

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return is_binary() ? (a ^ b) : (a + b) % spec_.characteristic;
  }
  FieldElement neg(FieldElement a) const {
    check(a);
    return is_binary() ? a : (spec_.characteristic - a) % spec_.characteristic;
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return mul_[a * spec_.order + b];
  }
  FieldElement inv(FieldElement a) const {
    check(a);
    if (a == 0) throw std::domain_error("field: inversion of zero");
    return inv_[a];
  }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Absolute trace Tr(a) = a + a^2 + ... + a^{2^{h-1}}, values in {0, 1}.
  /// Only defined in characteristic two.
  std::uint32_t trace(FieldElement a) const {
    if (!is_binary()) throw std::domain_error("field: trace requires characteristic 2");
    check(a);
    return trace_[a];
  }

  /// T = { a : Tr(a) = 1 }, sorted by encoding; |T| = q/2.
  std::vector<FieldElement> trace_one_set() const;

 private:
  Field() = default;
  void check(FieldElement a) const {
    if (a >= spec_.order) throw std::invalid_argument("field: encoding out of range");
  }

  FieldSpec spec_;
  std::vector<FieldElement> mul_;    // q*q flat multiplication table
  std::vector<FieldElement> inv_;    // inverses, inv_[0] unused
  std::vector<std::uint32_t> trace_; // absolute trace, p = 2 only
};

/// Carry-less product of two GF(2) polynomials (no reduction).
std::uint64_t gf2_poly_mul(std::uint64_t a, std::uint64_t b);

/// Trial-division irreducibility test for a bit-encoded polynomial of
/// degree deg over GF(2).
bool gf2_poly_irreducible(std::uint32_t poly, std::uint32_t deg);

}  // namespace polarity_lab

#endif
