#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "polarity_lab/analysis.hpp"
#include "polarity_lab/construction.hpp"
#include "polarity_lab/io.hpp"

using namespace polarity_lab;

namespace {

struct RunConfig {
  std::uint32_t k = 3;
  std::uint32_t q = 4;
  std::optional<std::uint32_t> t0;
  std::string form = "pseudo-symplectic";
  std::string construction = "paper";
  std::vector<std::string> suites = {"all"};
  std::string output;
  std::string format = "edgelist";
  std::uint64_t seed = 42;
  std::size_t trials = 500;
};

Field make_field(std::uint32_t q) {
  if (q >= 2 && (q & (q - 1)) == 0) {
    std::uint32_t h = 0;
    while ((1u << h) < q) ++h;
    return Field::create(2, h);
  }
  return Field::create(q, 1);
}

std::size_t spectrum_cap() {
  if (const char* env = std::getenv("POLARITY_LAB_SPECTRUM_CAP")) return std::stoul(env);
  return kDefaultSpectrumCap;
}

ConstructionParams params_for(const RunConfig& cfg, const Field& f) {
  return cfg.t0 ? make_params(cfg.k, f, *cfg.t0) : default_params(cfg.k, f);
}

Graph make_graph(const RunConfig& cfg, const Field& f) {
  if (cfg.construction == "paper") return build_H(params_for(cfg, f));
  GraphMeta meta{cfg.k, cfg.q, form_kind_from_name(cfg.form), cfg.construction};
  return build_named_graph(meta, f);
}

int cmd_build(const RunConfig& cfg) {
  const Field f = make_field(cfg.q);
  const Graph g = make_graph(cfg, f);
  const GraphMeta meta{cfg.k, cfg.q,
                       cfg.construction == "paper" ? FormKind::PseudoSymplectic
                                                   : form_kind_from_name(cfg.form),
                       cfg.construction};
  std::ostringstream buf;
  if (cfg.format == "dimacs")
    write_dimacs(buf, g, meta);
  else if (cfg.format == "edgelist")
    write_edge_list(buf, g, meta);
  else
    throw CLI::ValidationError("--format must be edgelist or dimacs");

  if (cfg.output.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream out(cfg.output);
    if (!out || !(out << buf.str()) || !out.flush()) {
      std::cerr << "error: cannot write " << cfg.output << '\n';
      return 2;
    }
  }
  const DegreeProfile prof = degree_profile(g);
  std::cout << "n=" << g.n() << " d_min=" << prof.min << " d_max=" << prof.max
            << " loops=" << prof.loop_count << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const Field f = make_field(cfg.q);
  VerifyOptions opts;
  opts.suites = cfg.suites;
  opts.seed = cfg.seed;
  opts.trials = cfg.trials;
  opts.spectrum_cap = spectrum_cap();
  const VerificationReport rep = verify_all(params_for(cfg, f), opts);
  std::cout << rep.to_json() << '\n';
  return rep.all_pass() ? 0 : 3;
}

int cmd_spectrum(const RunConfig& cfg) {
  const Field f = make_field(cfg.q);
  const auto ev = spectrum(make_graph(cfg, f), spectrum_cap());
  for (std::size_t i = 0; i < ev.size(); ++i) std::cout << (i ? " " : "") << ev[i];
  std::cout << '\n';
  return 0;
}

int cmd_clique(const RunConfig& cfg) {
  const Field f = make_field(cfg.q);
  const CliqueResult cr = max_clique(make_graph(cfg, f));
  std::cout << "omega=" << cr.size << " witness=[";
  for (std::size_t i = 0; i < cr.witness.size(); ++i)
    std::cout << (i ? "," : "") << cr.witness[i];
  std::cout << "]\n";
  return 0;
}

int cmd_info(const RunConfig& cfg) {
  const Field f = make_field(cfg.q);
  if (!f.is_binary()) {
    std::cout << "field GF(" << cfg.q << "), odd characteristic; no trace-one data\n";
    return 0;
  }
  const ConstructionParams p = params_for(cfg, f);
  std::cout << "field GF(" << cfg.q << ")\nT = {";
  const auto t = f.trace_one_set();
  for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i];
  std::cout << "}\nt0 = " << p.t0 << '\n';
  std::vector<FieldElement> hinf(cfg.k, 0);
  hinf[cfg.k - 1] = 1;
  std::cout << "H_inf = " << Hyperplane{hinf}.text() << '\n';
  const auto ell = line_ell(cfg.k, f);
  if (ell.empty()) {
    std::cout << "ell = (empty)\n";
  } else {
    std::cout << "ell endpoints: " << ell.front().text() << " " << ell.back().text() << " ("
              << ell.size() << " points)\n";
  }
  const Graph h = build_H(p);
  const DegreeProfile prof = degree_profile(h);
  std::cout << "H(k,q): n=" << h.n() << " d=" << prof.max << " loops=" << prof.loop_count << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polarity-lab: polarity graphs of finite projective spaces and their "
               "clique-free pseudorandom subgraphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool with_form = true) {
    sub->add_option("-k", cfg.k, "projective dimension parameter, k >= 2")->required();
    sub->add_option("-q", cfg.q, "field order")->required();
    sub->add_option("--t0", cfg.t0, "trace-one element encoding (default: smallest)");
    if (with_form) {
      sub->add_option("--form", cfg.form,
                      "pseudo-symplectic | symplectic | orthogonal-symmetric");
      sub->add_option("--construction", cfg.construction, "paper | nonabsolute | full");
    }
  };

  auto* build = app.add_subcommand("build", "construct a graph and export it");
  add_common(build);
  build->add_option("-o", cfg.output, "output path (default: stdout)");
  build->add_option("--format", cfg.format, "edgelist | dimacs");

  auto* verify = app.add_subcommand("verify", "run verification suites on H(k,q)");
  add_common(verify, false);
  verify->add_option("--suite", cfg.suites,
                     "structure | spectrum | clique | transitivity | mixing | all");
  verify->add_option("--seed", cfg.seed, "mixing sampler seed");
  verify->add_option("--trials", cfg.trials, "mixing sample count");

  auto* spec = app.add_subcommand("spectrum", "adjacency eigenvalues, descending");
  add_common(spec);

  auto* clique = app.add_subcommand("clique", "exact maximum clique");
  add_common(clique);

  auto* info = app.add_subcommand("info", "construction data: T, t0, H_inf, ell");
  add_common(info, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (spec->parsed()) return cmd_spectrum(cfg);
    if (clique->parsed()) return cmd_clique(cfg);
    if (info->parsed()) return cmd_info(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
