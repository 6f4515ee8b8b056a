#include "polarity_lab/projgeom.hpp"

#include <algorithm>
#include <sstream>

namespace polarity_lab {

namespace {

std::string coords_text(const std::vector<FieldElement>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string ProjPoint::text() const { return coords_text(coords); }
std::string Hyperplane::text() const { return coords_text(coeffs); }

ProjPoint normalize(const Field& f, std::vector<FieldElement> v) {
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      lead = i;
      break;
    }
  if (lead == v.size()) throw std::invalid_argument("normalize: zero vector");
  if (v[lead] != 1) {
    const FieldElement s = f.inv(v[lead]);
    for (std::size_t i = lead; i < v.size(); ++i) v[i] = f.mul(v[i], s);
  }
  return ProjPoint{std::move(v)};
}

std::uint64_t point_count(std::uint32_t k, std::uint64_t q) {
  std::uint64_t n = 0, pw = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    n += pw;
    pw *= q;
  }
  return n;
}

std::vector<ProjPoint> enumerate_points(std::uint32_t k, const Field& f) {
  if (k < 1) throw std::invalid_argument("enumerate_points: k must be >= 1");
  const std::uint32_t q = f.order();
  std::vector<ProjPoint> pts;
  pts.reserve(point_count(k, q));
  // Leading 1 at position `lead`, later first-nonzero positions come first
  // in lexicographic order.
  for (std::uint32_t lead = k; lead-- > 0;) {
    std::vector<FieldElement> v(k, 0);
    v[lead] = 1;
    const std::uint32_t free = k - lead - 1;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t m = 0; m < total; ++m) {
      std::uint64_t rest = m;
      for (std::uint32_t i = 0; i < free; ++i) {
        std::uint64_t div = 1;
        for (std::uint32_t j = i + 1; j < free; ++j) div *= q;
        v[lead + 1 + i] = static_cast<FieldElement>((rest / div) % q);
        rest %= div;
      }
      pts.push_back(ProjPoint{v});
    }
  }
  return pts;
}

std::uint64_t canonical_id(const Field& f, const ProjPoint& p) {
  const std::uint32_t q = f.order();
  const std::uint32_t k = static_cast<std::uint32_t>(p.coords.size());
  std::uint32_t lead = 0;
  while (lead < k && p.coords[lead] == 0) ++lead;
  if (lead == k || p.coords[lead] != 1)
    throw std::invalid_argument("canonical_id: point not normalized");
  // Points whose first nonzero coordinate lies strictly to the right.
  std::uint64_t tail = 0;
  for (std::uint32_t i = lead + 1; i < k; ++i) tail = tail * q + p.coords[i];
  return point_count(k - lead - 1, q) + tail;
}

bool incident(const Field& f, const ProjPoint& x, const Hyperplane& h) {
  if (x.coords.size() != h.coeffs.size())
    throw std::invalid_argument("incident: dimension mismatch");
  FieldElement s = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    s = f.add(s, f.mul(x.coords[i], h.coeffs[i]));
  return s == 0;
}

std::vector<ProjPoint> line_through(const Field& f, const ProjPoint& p1, const ProjPoint& p2) {
  if (p1 == p2) throw std::invalid_argument("line_through: points must be distinct");
  const std::uint32_t k = static_cast<std::uint32_t>(p1.coords.size());
  std::vector<ProjPoint> pts;
  pts.push_back(p1);
  for (FieldElement lam = 0; lam < f.order(); ++lam) {
    std::vector<FieldElement> v(k);
    for (std::uint32_t i = 0; i < k; ++i)
      v[i] = f.add(p2.coords[i], f.mul(lam, p1.coords[i]));
    pts.push_back(normalize(f, std::move(v)));
  }
  std::sort(pts.begin(), pts.end(), [&](const ProjPoint& a, const ProjPoint& b) {
    return canonical_id(f, a) < canonical_id(f, b);
  });
  return pts;
}

}  // namespace polarity_lab
