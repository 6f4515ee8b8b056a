#ifndef POLARITY_LAB_PROJGEOM_HPP
#define POLARITY_LAB_PROJGEOM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "polarity_lab/field.hpp"

namespace polarity_lab {

/// A point of PG(k-1, q), stored as the unique representative whose
/// leftmost nonzero coordinate is 1.
struct ProjPoint {
  std::vector<FieldElement> coords;

  bool operator==(const ProjPoint&) const = default;
  auto operator<=>(const ProjPoint&) const = default;
  std::string text() const;
};

/// A hyperplane a_1 X_1 + ... + a_k X_k = 0, coefficients normalized
/// the same way as point coordinates.
struct Hyperplane {
  std::vector<FieldElement> coeffs;

  bool operator==(const Hyperplane&) const = default;
  std::string text() const;
};

/// Scale v to the canonical representative. Throws on the zero vector.
ProjPoint normalize(const Field& f, std::vector<FieldElement> v);

/// All (q^k - 1)/(q - 1) points, sorted lexicographically by coordinate
/// encodings. The position in this list is the canonical vertex id.
std::vector<ProjPoint> enumerate_points(std::uint32_t k, const Field& f);

/// Number of points of PG(k-1, q).
std::uint64_t point_count(std::uint32_t k, std::uint64_t q);

/// Lexicographic rank of a normalized point; inverse of enumerate_points
/// indexing, computed without materializing the list.
std::uint64_t canonical_id(const Field& f, const ProjPoint& p);

/// Incidence: sum x_i y_i = 0.
bool incident(const Field& f, const ProjPoint& x, const Hyperplane& h);

/// The q+1 points of the line spanned by two distinct points, sorted by
/// canonical id.
std::vector<ProjPoint> line_through(const Field& f, const ProjPoint& p1, const ProjPoint& p2);

}  // namespace polarity_lab

#endif
