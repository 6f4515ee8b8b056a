#include "polarity_lab/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polarity_lab {

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.n() == 0) return p;
  p.min = p.max = g.degree(0);
  for (std::size_t v = 0; v < g.n(); ++v) {
    const std::size_t d = g.degree(v);
    p.min = std::min(p.min, d);
    p.max = std::max(p.max, d);
    if (g.has_loop(v)) ++p.loop_count;
  }
  p.regular = (p.min == p.max);
  return p;
}

bool adjacency_square_check(const Graph& g, std::uint32_t k, std::uint32_t q) {
  if (k < 2) throw std::invalid_argument("adjacency_square_check: k must be >= 2");
  if (g.n() != point_count(k, q))
    throw std::invalid_argument("adjacency_square_check: not a full polarity graph for (k, q)");
  std::uint64_t qk2 = 1;
  for (std::uint32_t i = 0; i + 2 < k; ++i) qk2 *= q;
  const std::uint64_t c = (qk2 - 1) / (q - 1);
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = i; j < g.n(); ++j) {
      const std::uint64_t expect = c + (i == j ? qk2 : 0);
      if (g.row(i).and_count(g.row(j)) != expect) return false;
    }
  return true;
}

std::vector<double> spectrum(const Graph& g, std::size_t cap) {
  if (g.n() > cap) throw std::runtime_error("spectrum: graph exceeds eigensolve size cap");
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (g.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) a(i, j) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

namespace {

// Tomita-style branch and bound: candidates are ordered by a greedy
// colouring; a branch is cut when |R| + colour bound cannot beat the
// incumbent. Ties broken by vertex id for determinism.
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g) : g_(g), n_(g.n()) {
    adj_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      BitRow r = g.row(v);
      r.reset(v);  // loops ignored
      adj_.push_back(std::move(r));
    }
  }

  CliqueResult solve() {
    std::vector<std::size_t> order = degeneracy_order();
    std::vector<std::size_t> r;
    expand(r, order);
    return best_;
  }

 private:
  std::vector<std::size_t> degeneracy_order() const {
    std::vector<std::size_t> deg(n_), order;
    std::vector<char> removed(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = adj_[v].count();
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      for (std::size_t v = 0; v < n_; ++v)
        if (!removed[v] && (best == n_ || deg[v] < deg[best])) best = v;
      removed[best] = 1;
      order.push_back(best);
      for (std::size_t u = 0; u < n_; ++u)
        if (!removed[u] && adj_[best].test(u)) --deg[u];
    }
    return order;
  }

  void expand(std::vector<std::size_t>& r, const std::vector<std::size_t>& cand) {
    if (cand.empty()) {
      if (r.size() > best_.size) best_ = {r.size(), r};
      return;
    }
    // Greedy colouring; candidates are then processed in colour order so
    // r.size() + colour is a valid bound for the remaining prefix.
    std::vector<std::size_t> colour_of(cand.size());
    std::vector<BitRow> classes;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::size_t c = 0;
      while (c < classes.size() && classes[c].and_with(adj_[cand[i]]).any()) ++c;
      if (c == classes.size()) classes.emplace_back(n_);
      classes[c].set(cand[i]);
      colour_of[i] = c + 1;
    }
    std::vector<std::size_t> idx(cand.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return colour_of[a] < colour_of[b]; });
    std::vector<std::size_t> ordered(cand.size()), colour(cand.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      ordered[i] = cand[idx[i]];
      colour[i] = colour_of[idx[i]];
    }
    for (std::size_t i = ordered.size(); i-- > 0;) {
      if (r.size() + colour[i] <= best_.size) return;
      const std::size_t v = ordered[i];
      r.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < i; ++j)
        if (adj_[v].test(ordered[j])) next.push_back(ordered[j]);
      expand(r, next);
      r.pop_back();
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<BitRow> adj_;
  CliqueResult best_;
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
  if (g.n() == 0) return {};
  CliqueResult res = CliqueSolver(g).solve();
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

MixingResult mixing_check(const Graph& g, double lambda_bound, std::size_t trials,
                          std::uint64_t seed) {
  const DegreeProfile prof = degree_profile(g);
  if (!prof.regular) throw std::invalid_argument("mixing_check: graph must be regular");
  const double n = static_cast<double>(g.n());
  const double d = static_cast<double>(prof.max);

  MixingResult res;
  res.seed = seed;
  res.trials = trials;
  if (g.n() < 2) return res;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(g.n());
  const std::size_t half = std::max<std::size_t>(1, g.n() / 2);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t s = 1 + static_cast<std::size_t>(rng() % half);
    const std::size_t t = 1 + static_cast<std::size_t>(rng() % half);
    std::iota(perm.begin(), perm.end(), 0);
    // explicit Fisher-Yates so the draw sequence is stdlib-independent
    for (std::size_t i = perm.size(); i-- > 1;)
      std::swap(perm[i], perm[rng() % (i + 1)]);

    BitRow mask_t(g.n());
    for (std::size_t i = 0; i < t; ++i) mask_t.set(perm[s + i]);
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < s; ++i) e += g.row(perm[i]).and_count(mask_t);

    const double lhs = std::abs(static_cast<double>(e) -
                                d * static_cast<double>(s) * static_cast<double>(t) / n);
    const double rhs = lambda_bound * std::sqrt(static_cast<double>(s) * static_cast<double>(t));
    if (rhs > 0) res.max_violation_ratio = std::max(res.max_violation_ratio, lhs / rhs);
  }
  res.pass = res.max_violation_ratio <= 1.0;
  return res;
}

namespace {

bool wants(const std::vector<std::string>& suites, const std::string& name) {
  for (const auto& s : suites)
    if (s == "all" || s == name) return true;
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& p : {structure_pass, a2_identity_pass, spectral_pass, kfree_pass,
                        transitivity_pass, mixing_pass})
    if (p.has_value() && !*p) return false;
  return true;
}

VerificationReport verify_all(const ConstructionParams& params, const VerifyOptions& opts) {
  const Field& f = *params.field;
  const std::uint32_t k = params.k;
  const std::uint32_t q = f.order();

  VerificationReport rep;
  rep.k = k;
  rep.q = q;
  rep.t0 = params.t0;
  rep.suites = opts.suites;
  rep.seed = opts.seed;
  rep.trials = opts.trials;
  rep.spectral_bound = std::pow(static_cast<double>(q), (static_cast<double>(k) - 2.0) / 2.0);
  rep.spectral_exponent_note =
      "second-eigenvalue bound uses exponent (k-2)/2, forced by the adjacency-square identity; "
      "the (k-1)/2 exponent is inconsistent with that identity and is not asserted";

  const Graph h = build_H(params);

  if (wants(opts.suites, "structure")) {
    const auto t0c = std::chrono::steady_clock::now();
    const DegreeProfile prof = degree_profile(h);
    rep.n = h.n();
    rep.d_min = prof.min;
    rep.d_max = prof.max;
    rep.regular = prof.regular;
    rep.loop_count = prof.loop_count;

    std::uint64_t qpow = 1;  // q^{k-1}
    for (std::uint32_t i = 0; i + 1 < k; ++i) qpow *= q;
    const std::uint64_t expect_n = (k == 2) ? q / 2 : (k % 2 == 1 ? qpow / 2 : (qpow - q) / 2);
    const std::uint64_t expect_d = (k == 2) ? 0 : qpow / q / 2;  // q^{k-2}/2
    rep.structure_pass = (h.n() == expect_n) && prof.regular && (prof.max == expect_d) &&
                         (prof.loop_count == 0);

    const BilinearForm form = make_form(FormKind::PseudoSymplectic, k, f);
    rep.a2_identity_pass = adjacency_square_check(polarity_graph(f, form, k), k, q);

    const double nfull = static_cast<double>(point_count(k, q));
    rep.alpha_density = static_cast<double>(h.n()) / nfull;
    if (k >= 3 && h.n() > 0) {
      const double nn = static_cast<double>(h.n());
      rep.density_ratio = (static_cast<double>(prof.max) / nn) *
                          std::pow(nn, 1.0 / (static_cast<double>(k) - 1.0));
    }
    rep.timings_seconds.emplace_back("structure", seconds_since(t0c));
  }

  if (wants(opts.suites, "spectrum")) {
    const auto t0c = std::chrono::steady_clock::now();
    const auto ev = spectrum(h, opts.spectrum_cap);
    if (!ev.empty()) {
      rep.spectrum_top = ev.front();
      double second = 0.0;
      if (ev.size() > 1) second = std::max(std::abs(ev[1]), std::abs(ev.back()));
      rep.spectrum_second_abs = second;
      rep.spectral_pass = second <= *rep.spectral_bound + 1e-6;
    } else {
      rep.spectral_pass = true;
    }
    rep.timings_seconds.emplace_back("spectrum", seconds_since(t0c));
  }

  if (wants(opts.suites, "clique")) {
    const auto t0c = std::chrono::steady_clock::now();
    const CliqueResult cr = max_clique(h);
    rep.clique_number = cr.size;
    rep.clique_witness = cr.witness;
    rep.kfree_pass = cr.size <= k - 1;
    rep.timings_seconds.emplace_back("clique", seconds_since(t0c));
  }

  if (wants(opts.suites, "transitivity") && k >= 3) {
    const auto t0c = std::chrono::steady_clock::now();
    rep.transitivity_pass = verify_transitivity(params);
    rep.timings_seconds.emplace_back("transitivity", seconds_since(t0c));
  }

  if (wants(opts.suites, "mixing") && k >= 3) {
    const auto t0c = std::chrono::steady_clock::now();
    const MixingResult mr = mixing_check(h, *rep.spectral_bound, opts.trials, opts.seed);
    rep.mixing_max_violation_ratio = mr.max_violation_ratio;
    rep.mixing_pass = mr.pass;
    rep.timings_seconds.emplace_back("mixing", seconds_since(t0c));
  }

  return rep;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["k"] = k;
  j["q"] = q;
  j["t0"] = t0;
  j["suites"] = suites;
  j["seed"] = seed;
  j["trials"] = trials;
  j["spectral_bound"] = spectral_bound.value_or(0.0);
  j["spectral_exponent_note"] = spectral_exponent_note;

  auto put = [&j](const char* name, const auto& opt) {
    if (opt.has_value()) j[name] = *opt;
  };
  put("n", n);
  put("d_min", d_min);
  put("d_max", d_max);
  put("regular", regular);
  put("loop_count", loop_count);
  put("structure_pass", structure_pass);
  put("a2_identity_pass", a2_identity_pass);
  put("density_ratio", density_ratio);
  put("alpha_density", alpha_density);
  put("spectrum_top", spectrum_top);
  put("spectrum_second_abs", spectrum_second_abs);
  put("spectral_pass", spectral_pass);
  put("clique_number", clique_number);
  if (clique_number.has_value()) j["clique_witness"] = clique_witness;
  put("kfree_pass", kfree_pass);
  put("transitivity_pass", transitivity_pass);
  put("mixing_max_violation_ratio", mixing_max_violation_ratio);
  put("mixing_pass", mixing_pass);

  nlohmann::json timings = nlohmann::json::object();
  for (const auto& [name, secs] : timings_seconds) timings[name] = secs;
  j["timings_seconds"] = timings;
  j["all_pass"] = all_pass();
  return j.dump(2);
}

}  // namespace polarity_lab
