#ifndef POLARITY_LAB_ANALYSIS_HPP
#define POLARITY_LAB_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarity_lab/construction.hpp"
#include "polarity_lab/graph.hpp"

namespace polarity_lab {

struct DegreeProfile {
  std::size_t min = 0;
  std::size_t max = 0;
  bool regular = true;
  std::size_t loop_count = 0;
};

/// Exact degree statistics; a loop adds 1 to its vertex's degree.
DegreeProfile degree_profile(const Graph& g);

/// Entrywise check of A^2 = q^{k-2} I + (q^{k-2}-1)/(q-1) J in exact
/// integers, with a loop contributing 1 to its diagonal entry. Requires a
/// full polarity graph: n = (q^k-1)/(q-1).
bool adjacency_square_check(const Graph& g, std::uint32_t k, std::uint32_t q);

inline constexpr std::size_t kDefaultSpectrumCap = 2500;

/// Eigenvalues of the adjacency matrix (loops as diagonal 1), descending.
std::vector<double> spectrum(const Graph& g, std::size_t cap = kDefaultSpectrumCap);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;
};

/// Exact maximum clique, loops ignored. Branch and bound with greedy
/// colouring bounds over a degeneracy ordering; deterministic.
CliqueResult max_clique(const Graph& g);

struct MixingResult {
  double max_violation_ratio = 0.0;
  bool pass = true;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

/// Seeded sampling check of the expander mixing lemma on a regular
/// loop-free graph: for random disjoint S, T the ordered-pair edge count
/// e(S,T) must satisfy |e - d|S||T|/n| <= lambda sqrt(|S||T|).
MixingResult mixing_check(const Graph& g, double lambda_bound, std::size_t trials,
                          std::uint64_t seed);

struct VerificationReport {
  // params echo
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  FieldElement t0 = 0;
  std::vector<std::string> suites;

  // structure suite
  std::optional<std::size_t> n;
  std::optional<std::size_t> d_min, d_max;
  std::optional<bool> regular;
  std::optional<std::size_t> loop_count;
  std::optional<bool> structure_pass;
  std::optional<bool> a2_identity_pass;
  std::optional<double> density_ratio;   // (d/n) * n^{1/(k-1)}
  std::optional<double> alpha_density;   // n_H / n of the full polarity graph

  // spectrum suite
  std::optional<double> spectrum_top;
  std::optional<double> spectrum_second_abs;
  std::optional<double> spectral_bound;  // q^{(k-2)/2}
  std::optional<bool> spectral_pass;
  // The asserted bound exponent is (k-2)/2, forced by the adjacency-square
  // identity; a (k-1)/2 exponent is inconsistent with it and never used.
  std::string spectral_exponent_note;

  // clique suite
  std::optional<std::size_t> clique_number;
  std::vector<std::size_t> clique_witness;
  std::optional<bool> kfree_pass;

  // transitivity suite
  std::optional<bool> transitivity_pass;

  // mixing suite
  std::optional<double> mixing_max_violation_ratio;
  std::optional<bool> mixing_pass;
  std::uint64_t seed = 0;
  std::size_t trials = 0;

  std::vector<std::pair<std::string, double>> timings_seconds;

  bool all_pass() const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::vector<std::string> suites = {"all"};
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  std::size_t spectrum_cap = kDefaultSpectrumCap;
};

/// Runs the requested suites (structure, spectrum, clique, transitivity,
/// mixing) on H(k, q) and fills the report. Every pass flag is derived
/// from the measured values recorded next to it.
VerificationReport verify_all(const ConstructionParams& params, const VerifyOptions& opts);

}  // namespace polarity_lab

#endif
