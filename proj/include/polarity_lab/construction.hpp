#ifndef POLARITY_LAB_CONSTRUCTION_HPP
#define POLARITY_LAB_CONSTRUCTION_HPP

#include <vector>

#include "polarity_lab/field.hpp"
#include "polarity_lab/graph.hpp"
#include "polarity_lab/polarity.hpp"
#include "polarity_lab/projgeom.hpp"

namespace polarity_lab {

/// Parameters of the trace-one hyperplane construction. The field must
/// have characteristic 2 and Tr(t0) = 1.
struct ConstructionParams {
  std::uint32_t k;
  const Field* field;
  FieldElement t0;
};

/// Params with the default t0: the smallest trace-one element by encoding.
ConstructionParams default_params(std::uint32_t k, const Field& f);
ConstructionParams make_params(std::uint32_t k, const Field& f, FieldElement t0);

/// The line U_{k-2}U_k (k odd) or U_{k-1}U_k (k even); empty for k = 2.
std::vector<ProjPoint> line_ell(std::uint32_t k, const Field& f);

/// H_t : t0 X_{k-1} + t X_k = 0, t of trace one.
Hyperplane hyperplane_Ht(const ConstructionParams& params, FieldElement t);

/// Union over t in T of H_t minus (H_infty and the line), sorted by
/// canonical id.
std::vector<ProjPoint> vertex_set_H(const ConstructionParams& params);

/// The induced subgraph of the pseudo-symplectic polarity graph on
/// vertex_set_H: simple, q^{k-2}/2-regular for k >= 3.
Graph build_H(const ConstructionParams& params);

/// Induced subgraph of the polarity graph on { x : beta(x, x) != 0 }.
Graph nonabsolute_subgraph(const Field& f, const BilinearForm& form, std::uint32_t k);

/// Generators of a group of isometries of the pseudo-symplectic form that
/// fixes each H_t and is transitive on H_t minus (H_infty and the line).
/// Odd k: unipotent maps parametrized over an F_2-basis per parameter slot.
/// Even k: symplectic transvections of the alternating form on the first
/// k-2 coordinates, embedded with an identity 2x2 corner.
std::vector<Matrix> isometry_generators(const ConstructionParams& params);

/// Orbit computation: true iff the orbit of one point of
/// H_{t0} minus (H_infty and the line) under the generators is the whole
/// set (size q^{k-2} for odd k, q^{k-2} - 1 for even k).
bool verify_transitivity(const ConstructionParams& params);

Matrix matrix_product(const Field& f, const Matrix& a, const Matrix& b);
Matrix matrix_transpose(const Matrix& a);
std::vector<FieldElement> matrix_apply(const Field& f, const Matrix& m,
                                       const std::vector<FieldElement>& x);

}  // namespace polarity_lab

#endif
