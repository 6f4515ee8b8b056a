#include "polarity_lab/construction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polarity_lab {

namespace {

void check_params(const ConstructionParams& p) {
  if (p.k < 2) throw std::invalid_argument("construction: k must be >= 2");
  if (!p.field->is_binary()) throw std::invalid_argument("construction: q must be even");
  if (p.field->trace(p.t0) != 1) throw std::invalid_argument("construction: Tr(t0) must be 1");
}

ProjPoint unit_point(std::uint32_t k, std::uint32_t i) {
  std::vector<FieldElement> v(k, 0);
  v[i] = 1;
  return ProjPoint{std::move(v)};
}

}  // namespace

ConstructionParams make_params(std::uint32_t k, const Field& f, FieldElement t0) {
  ConstructionParams p{k, &f, t0};
  check_params(p);
  return p;
}

ConstructionParams default_params(std::uint32_t k, const Field& f) {
  auto t = f.trace_one_set();
  if (t.empty()) throw std::logic_error("construction: empty trace-one set");
  return make_params(k, f, t.front());
}

std::vector<ProjPoint> line_ell(std::uint32_t k, const Field& f) {
  if (k < 2) throw std::invalid_argument("line_ell: k must be >= 2");
  if (k == 2) return {};
  const std::uint32_t a = (k % 2 == 1) ? k - 3 : k - 2;  // U_{k-2} or U_{k-1}, 0-indexed
  return line_through(f, unit_point(k, a), unit_point(k, k - 1));
}

Hyperplane hyperplane_Ht(const ConstructionParams& params, FieldElement t) {
  check_params(params);
  const Field& f = *params.field;
  if (f.trace(t) != 1) throw std::invalid_argument("hyperplane_Ht: Tr(t) must be 1");
  std::vector<FieldElement> c(params.k, 0);
  c[params.k - 2] = params.t0;
  c[params.k - 1] = t;
  return Hyperplane{normalize(f, std::move(c)).coords};
}

std::vector<ProjPoint> vertex_set_H(const ConstructionParams& params) {
  check_params(params);
  const Field& f = *params.field;
  const std::uint32_t k = params.k;
  const auto ell_pts = line_ell(k, f);
  const std::set<ProjPoint> ell(ell_pts.begin(), ell_pts.end());

  // A point outside H_infty (x_k != 0) lies on H_t for exactly one t,
  // namely t = t0 * x_{k-1} / x_k; keep it iff Tr(t) = 1.
  std::vector<ProjPoint> verts;
  for (auto& p : enumerate_points(k, f)) {
    const FieldElement xk = p.coords[k - 1];
    if (xk == 0) continue;
    const FieldElement t = f.mul(f.mul(params.t0, p.coords[k - 2]), f.inv(xk));
    if (f.trace(t) != 1) continue;
    if (ell.contains(p)) continue;
    verts.push_back(std::move(p));
  }
  // enumerate_points is already in canonical-id order.
  return verts;
}

Graph build_H(const ConstructionParams& params) {
  const BilinearForm form = make_form(FormKind::PseudoSymplectic, params.k, *params.field);
  return induced_polarity_subgraph(*params.field, form, vertex_set_H(params));
}

Graph nonabsolute_subgraph(const Field& f, const BilinearForm& form, std::uint32_t k) {
  std::vector<ProjPoint> pts;
  for (auto& p : enumerate_points(k, f))
    if (!is_absolute(f, form, p)) pts.push_back(std::move(p));
  return induced_polarity_subgraph(f, form, std::move(pts));
}

Matrix matrix_product(const Field& f, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<FieldElement>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = f.add(c[i][j], f.mul(a[i][l], b[l][j]));
    }
  return c;
}

Matrix matrix_transpose(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix t(n, std::vector<FieldElement>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

std::vector<FieldElement> matrix_apply(const Field& f, const Matrix& m,
                                       const std::vector<FieldElement>& x) {
  const std::size_t n = m.size();
  std::vector<FieldElement> y(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] = f.add(y[i], f.mul(m[i][j], x[j]));
  return y;
}

namespace {

Matrix identity(std::uint32_t k) {
  Matrix m(k, std::vector<FieldElement>(k, 0));
  for (std::uint32_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

// Odd k, parameters a_1..a_{k-2}: column k-1 (0-indexed k-2) carries the
// parameters, and the partner row k-2 (0-indexed k-3) carries them
// pair-swapped so that the hyperbolic cross terms cancel in
// characteristic 2. Rows k-1 and k stay identity, so every H_t is fixed.
Matrix odd_generator(std::uint32_t k, const std::vector<FieldElement>& a) {
  Matrix m = identity(k);
  const std::uint32_t c = k - 2;  // column of X_{k-1}
  const std::uint32_t r = k - 3;  // its hyperbolic partner
  for (std::uint32_t i = 0; i < r; ++i) m[i][c] = a[i];
  m[r][c] = a[k - 3];
  for (std::uint32_t j = 0; j < r; ++j) m[r][j] = a[j ^ 1];  // pair swap within (2i, 2i+1)
  return m;
}

// Even k: symplectic transvection x -> x + lambda f(x, v) v of the
// alternating form on the first k-2 coordinates, embedded with an
// identity corner on the last two coordinates.
Matrix even_generator(const Field& f, std::uint32_t k, const std::vector<FieldElement>& v,
                      FieldElement lambda) {
  const std::uint32_t m2 = k - 2;
  Matrix m = identity(k);
  for (std::uint32_t i = 0; i < m2; ++i) {
    if (v[i] == 0) continue;
    for (std::uint32_t j = 0; j < m2; ++j) {
      // f(e_j, v) with pairs (2l, 2l+1): f(e_j, v) = v_{j^1}
      const FieldElement fjv = v[j ^ 1];
      if (fjv == 0) continue;
      m[i][j] = f.add(m[i][j], f.mul(lambda, f.mul(v[i], fjv)));
    }
  }
  return m;
}

}  // namespace

std::vector<Matrix> isometry_generators(const ConstructionParams& params) {
  check_params(params);
  const Field& f = *params.field;
  const std::uint32_t k = params.k;
  if (k < 3) throw std::invalid_argument("isometry_generators: k must be >= 3");

  // F_2-basis of the field: 1, x, x^2, ...
  std::vector<FieldElement> basis;
  for (std::uint32_t i = 0; i < f.degree(); ++i) basis.push_back(1u << i);

  std::vector<Matrix> gens;
  if (k % 2 == 1) {
    for (std::uint32_t slot = 0; slot + 2 < k; ++slot)
      for (FieldElement b : basis) {
        std::vector<FieldElement> a(k - 2, 0);
        a[slot] = b;
        gens.push_back(odd_generator(k, a));
      }
  } else {
    const std::uint32_t m2 = k - 2;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < m2; ++i) total *= f.order();
    for (std::uint64_t code = 1; code < total; ++code) {
      std::vector<FieldElement> v(m2);
      std::uint64_t rest = code;
      for (std::uint32_t i = 0; i < m2; ++i) {
        v[i] = static_cast<FieldElement>(rest % f.order());
        rest /= f.order();
      }
      for (FieldElement b : basis) gens.push_back(even_generator(f, k, v, b));
    }
  }
  return gens;
}

bool verify_transitivity(const ConstructionParams& params) {
  check_params(params);
  const Field& f = *params.field;
  const std::uint32_t k = params.k;

  // Target: points of H_{t0} outside H_infty and the line.
  const Hyperplane ht = hyperplane_Ht(params, params.t0);
  const auto ell_pts = line_ell(k, f);
  const std::set<ProjPoint> ell(ell_pts.begin(), ell_pts.end());
  std::set<ProjPoint> target;
  for (auto& p : enumerate_points(k, f)) {
    if (p.coords[k - 1] == 0) continue;
    if (!incident(f, p, ht)) continue;
    if (ell.contains(p)) continue;
    target.insert(std::move(p));
  }
  if (target.empty()) return false;

  const auto gens = isometry_generators(params);
  std::set<ProjPoint> orbit{*target.begin()};
  std::vector<ProjPoint> frontier{*target.begin()};
  while (!frontier.empty()) {
    std::vector<ProjPoint> next;
    for (const auto& p : frontier)
      for (const auto& m : gens) {
        ProjPoint q = normalize(f, matrix_apply(f, m, p.coords));
        if (orbit.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return orbit == target;
}

}  // namespace polarity_lab
