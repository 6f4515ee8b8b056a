#include "polarity_lab/polarity.hpp"

#include <stdexcept>

namespace polarity_lab {

std::string form_kind_name(FormKind kind) {
  switch (kind) {
    case FormKind::PseudoSymplectic: return "pseudo-symplectic";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::OrthogonalSymmetric: return "orthogonal-symmetric";
  }
  throw std::logic_error("unknown form kind");
}

FormKind form_kind_from_name(const std::string& name) {
  if (name == "pseudo-symplectic") return FormKind::PseudoSymplectic;
  if (name == "symplectic") return FormKind::Symplectic;
  if (name == "orthogonal-symmetric") return FormKind::OrthogonalSymmetric;
  throw std::invalid_argument("unknown form kind: " + name);
}

BilinearForm make_form(FormKind kind, std::uint32_t k, const Field& f) {
  Matrix g(k, std::vector<FieldElement>(k, 0));
  switch (kind) {
    case FormKind::PseudoSymplectic: {
      if (!f.is_binary())
        throw std::invalid_argument("pseudo-symplectic form requires characteristic 2");
      if (k < 2) throw std::invalid_argument("pseudo-symplectic form requires k >= 2");
      // Odd k:  x_1 y_2 + x_2 y_1 + ... + x_{k-2} y_{k-1} + x_{k-1} y_{k-2} + x_k y_k
      // Even k: x_1 y_2 + x_2 y_1 + ... + x_{k-1} y_k + x_k y_{k-1} + x_k y_k
      // Both reduce to hyperbolic pairs plus a single diagonal entry at (k, k).
      for (std::uint32_t i = 0; i + 1 < k; i += 2) g[i][i + 1] = g[i + 1][i] = 1;
      g[k - 1][k - 1] = 1;
      break;
    }
    case FormKind::Symplectic: {
      if (k % 2 != 0) throw std::invalid_argument("symplectic form requires even k");
      const FieldElement minus_one = f.neg(1);
      for (std::uint32_t i = 0; i + 1 < k; i += 2) {
        g[i][i + 1] = 1;
        g[i + 1][i] = minus_one;
      }
      break;
    }
    case FormKind::OrthogonalSymmetric: {
      if (f.is_binary())
        throw std::invalid_argument("orthogonal-symmetric form requires odd characteristic");
      for (std::uint32_t i = 0; i < k; ++i) g[i][i] = 1;
      break;
    }
  }
  return BilinearForm{kind, k, std::move(g)};
}

FieldElement eval_form(const Field& f, const BilinearForm& form,
                       const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) {
  if (x.size() != form.k || y.size() != form.k)
    throw std::invalid_argument("eval_form: dimension mismatch");
  FieldElement s = 0;
  for (std::uint32_t i = 0; i < form.k; ++i) {
    if (x[i] == 0) continue;
    FieldElement row = 0;
    for (std::uint32_t j = 0; j < form.k; ++j)
      row = f.add(row, f.mul(form.gram[i][j], y[j]));
    s = f.add(s, f.mul(x[i], row));
  }
  return s;
}

namespace {

std::vector<FieldElement> gram_times(const Field& f, const BilinearForm& form,
                                     const std::vector<FieldElement>& x) {
  std::vector<FieldElement> r(form.k, 0);
  for (std::uint32_t i = 0; i < form.k; ++i)
    for (std::uint32_t j = 0; j < form.k; ++j)
      r[i] = f.add(r[i], f.mul(form.gram[i][j], x[j]));
  return r;
}

FieldElement dot(const Field& f, const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
  FieldElement s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Graph build_from_points(const Field& f, const BilinearForm& form, std::vector<ProjPoint> pts) {
  const std::size_t n = pts.size();
  // Precompute gram*y so each pair test is a single dot product.
  std::vector<std::vector<FieldElement>> gy(n);
  for (std::size_t v = 0; v < n; ++v) gy[v] = gram_times(f, form, pts[v].coords);

  Graph g(std::move(pts));
  for (std::size_t u = 0; u < n; ++u) {
    const auto& xu = g.label(u).coords;
    if (dot(f, xu, gy[u]) == 0) g.set_loop(u);
    for (std::size_t v = u + 1; v < n; ++v)
      if (dot(f, xu, gy[v]) == 0) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

namespace {

// Gauss-Jordan inverse over the field; the Gram matrix is non-degenerate.
Matrix matrix_inverse(const Field& f, Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<FieldElement>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("matrix_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const FieldElement s = f.inv(a[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = f.mul(a[col][j], s);
      inv[col][j] = f.mul(inv[col][j], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const FieldElement m = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = f.sub(a[r][j], f.mul(m, a[col][j]));
        inv[r][j] = f.sub(inv[r][j], f.mul(m, inv[col][j]));
      }
    }
  }
  return inv;
}

}  // namespace

ProjPoint perp_point(const Field& f, const BilinearForm& form, const Hyperplane& h) {
  const Matrix ginv = matrix_inverse(f, form.gram);
  std::vector<FieldElement> x(form.k, 0);
  for (std::uint32_t i = 0; i < form.k; ++i)
    for (std::uint32_t j = 0; j < form.k; ++j)
      x[i] = f.add(x[i], f.mul(ginv[i][j], h.coeffs[j]));
  return normalize(f, std::move(x));
}

Hyperplane perp(const Field& f, const BilinearForm& form, const ProjPoint& x) {
  auto gx = gram_times(f, form, x.coords);
  return Hyperplane{normalize(f, std::move(gx)).coords};
}

bool is_absolute(const Field& f, const BilinearForm& form, const ProjPoint& x) {
  return eval_form(f, form, x.coords, x.coords) == 0;
}

Graph polarity_graph(const Field& f, const BilinearForm& form, std::uint32_t k) {
  if (k != form.k) throw std::invalid_argument("polarity_graph: dimension mismatch");
  return build_from_points(f, form, enumerate_points(k, f));
}

Graph induced_polarity_subgraph(const Field& f, const BilinearForm& form,
                                std::vector<ProjPoint> points) {
  return build_from_points(f, form, std::move(points));
}

}  // namespace polarity_lab
