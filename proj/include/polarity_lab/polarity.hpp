#ifndef POLARITY_LAB_POLARITY_HPP
#define POLARITY_LAB_POLARITY_HPP

#include <string>
#include <vector>

#include "polarity_lab/field.hpp"
#include "polarity_lab/graph.hpp"
#include "polarity_lab/projgeom.hpp"

namespace polarity_lab {

enum class FormKind { PseudoSymplectic, Symplectic, OrthogonalSymmetric };

std::string form_kind_name(FormKind kind);
FormKind form_kind_from_name(const std::string& name);

using Matrix = std::vector<std::vector<FieldElement>>;

struct BilinearForm {
  FormKind kind;
  std::uint32_t k;
  Matrix gram;
};

/// Gram matrices:
///  - pseudo-symplectic: hyperbolic pairs (1,2), (3,4), ... plus the x_k y_k
///    diagonal term; for even k the last pair is (k-1, k). Characteristic 2.
///  - symplectic: standard alternating pairs x_1 y_2 - x_2 y_1 + ..., k even.
///  - orthogonal-symmetric: identity, odd characteristic.
BilinearForm make_form(FormKind kind, std::uint32_t k, const Field& f);

/// x^T gram y over the field.
FieldElement eval_form(const Field& f, const BilinearForm& form,
                       const std::vector<FieldElement>& x, const std::vector<FieldElement>& y);

/// Image of a point under the polarity: the hyperplane gram*x, normalized.
Hyperplane perp(const Field& f, const BilinearForm& form, const ProjPoint& x);

/// Image of a hyperplane under the polarity: the point gram^{-1} c,
/// normalized. Inverse of perp, so the polarity is an involution.
ProjPoint perp_point(const Field& f, const BilinearForm& form, const Hyperplane& h);

/// beta(x, x) = 0.
bool is_absolute(const Field& f, const BilinearForm& form, const ProjPoint& x);

/// Full polarity graph on the points of PG(k-1, q): distinct x, y adjacent
/// iff beta(x, y) = 0; a loop at every absolute point.
Graph polarity_graph(const Field& f, const BilinearForm& form, std::uint32_t k);

/// Induced subgraph of the polarity graph on an explicit list of points
/// (given as normalized points, kept in the given order). No loops are
/// added for absolute members; callers pass loop-free vertex sets.
Graph induced_polarity_subgraph(const Field& f, const BilinearForm& form,
                                std::vector<ProjPoint> points);

}  // namespace polarity_lab

#endif
