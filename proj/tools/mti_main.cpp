// Command-line front end: gadget | reduce | graph | solve | verify | render | gen.
// Paths given as "-" read stdin / write stdout. Exit codes: 0 ok,
// 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mti/mti.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

std::string join_tags(const std::vector<mti::Tag>& tags) {
  std::string s;
  for (const mti::Tag& t : tags) {
    if (!s.empty()) s += " ";
    s += t.to_string();
  }
  return s;
}

int cmd_gadget(const std::string& in, const std::string& out) {
  const mti::SatInstance s = mti::parse_sat(read_input(in));
  const auto [csat, map] = mti::gadgetize(s);
  write_output(out, mti::serialize_csat(csat, &map));
  return 0;
}

int cmd_reduce(const std::string& in, const std::string& out) {
  const mti::CsatInstance c = mti::parse_csat(read_input(in));
  write_output(out, mti::serialize_tracks(mti::construct_tracks(c)));
  return 0;
}

mti::IntersectionGraph graph_of_family(const mti::TrackFamily& f, bool full) {
  if (full) return mti::build_graph(f);
  try {
    return mti::collapse_twins(f);
  } catch (const std::invalid_argument&) {
    // copies are not identical twins; solve the uncollapsed graph
    return mti::build_graph(f);
  }
}

int cmd_graph(const std::string& in, const std::string& out, bool full) {
  const mti::TrackFamily f = mti::parse_tracks(read_input(in));
  write_output(out, mti::serialize_graph(graph_of_family(f, full)));
  return 0;
}

int solve_graph(const mti::IntersectionGraph& g, const std::string& engine,
                std::uint64_t budget, const char* label) {
  mti::CliqueSolution sol;
  if (engine == "enum") {
    sol = mti::max_clique_enum(g);
  } else if (engine == "bb") {
    sol = mti::max_clique_bb(g, budget);
  } else {
    // cross-check mode is always exhaustive; a budget would blur the comparison
    const mti::CliqueSolution bb = mti::max_clique_bb(g);
    const mti::CliqueSolution en = mti::max_clique_enum(g);
    if (bb.weight != en.weight) {
      std::cout << "bb=" << bb.weight << " enum=" << en.weight << " engines=disagree\n";
      return 1;
    }
    std::cout << label << "=" << en.weight << "\n";
    std::cout << "clique=" << join_tags(en.vertices) << "\n";
    std::cout << "optimal=true\n";
    std::cout << "engines=agree\n";
    return 0;
  }
  std::cout << label << "=" << sol.weight << "\n";
  std::cout << "clique=" << join_tags(sol.vertices) << "\n";
  std::cout << "optimal=" << (sol.optimal ? "true" : "false") << "\n";
  return 0;
}

int cmd_solve(const std::string& in, const std::string& engine, std::uint64_t budget, int cap) {
  const std::string content = read_input(in);
  switch (mti::sniff_kind(content)) {
    case mti::FileKind::csat: {
      const mti::CsatInstance c = mti::parse_csat(content);
      const mti::OptResult opt = mti::brute_force_opt(c, cap);
      std::cout << "z*=" << opt.best << "\n";
      std::cout << "assignment=" << opt.witness.to_string() << "\n";
      return 0;
    }
    case mti::FileKind::sat: {
      const mti::SatInstance s = mti::parse_sat(content);
      const mti::OptResult opt = mti::brute_force_opt(s, cap);
      std::cout << "z*=" << opt.best << "\n";
      std::cout << "assignment=" << opt.witness.to_string() << "\n";
      return 0;
    }
    case mti::FileKind::tracks:
      return solve_graph(graph_of_family(mti::parse_tracks(content), false), engine, budget, "w*");
    case mti::FileKind::graph:
      return solve_graph(mti::parse_graph(content), engine, budget, "w*");
  }
  return 2;
}

struct VerifyPrinter {
  int failures = 0;

  void result(bool pass, const std::string& what, const std::string& detail = "") {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << what;
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
  }
};

// The full battery for one conjunctive instance: validation, the four
// overlap observations, the clique identity with both engines, and the
// solution-mapping bounds on an optimal clique, its canonical form, and a
// few random sub-cliques.
void csat_battery(const mti::CsatInstance& c, VerifyPrinter& p, bool fault, int beta_samples,
                  int cap, std::uint32_t seed) {
  const mti::ValidationReport v = mti::validate(c);
  p.result(v.ok(), "validate", v.ok() ? "" : v.violations.front());
  if (!v.ok()) return;

  mti::TrackFamily f = mti::construct_tracks(c);
  if (fault) f = mti::inject_fault(f, mti::FaultKind::literal_twin_overlap, 1);

  const mti::ObservationReport obs = mti::check_observations(c, f);
  for (std::size_t i = 0; i < obs.checks.size(); ++i) {
    const auto& chk = obs.checks[i];
    p.result(chk.pass, "observation-" + std::to_string(i + 1),
             chk.pass ? "" : "counterexample (" + chk.a.to_string() + ", " + chk.b.to_string() + ")");
  }

  mti::LReductionReport rep = mti::check_identity(c, cap);
  p.result(rep.identity_ok, "identity",
           "z*=" + std::to_string(rep.z_star) + " w*=" + std::to_string(rep.w_star));
  p.result(rep.engines_ok, "engines");
  p.result(rep.alpha_ok, "alpha w*<=97z*");
  p.result(rep.lower_ok, "lower z*>=ceil(m/4)");
  p.result(rep.size_ok, "size n<=2m");

  const mti::IntersectionGraph g = mti::collapse_twins(f);
  const mti::CliqueSolution best = mti::max_clique_bb(g);
  const mti::CliqueWitness optimal = mti::expand_collapsed(best.vertices);
  rep.beta.push_back(mti::check_beta(c, f, optimal, rep.z_star, rep.w_star));
  rep.beta.push_back(
      mti::check_beta(c, f, mti::canonicalize_clique(f, optimal), rep.z_star, rep.w_star));
  mti::Rng rng(seed);
  for (int i = 0; i < beta_samples; ++i) {
    mti::CliqueWitness pruned;
    for (const mti::Tag& t : optimal)
      if (rng.below(2) == 0) pruned.push_back(t);
    rep.beta.push_back(mti::check_beta(c, f, pruned, rep.z_star, rep.w_star));
  }
  bool beta_ok = true;
  for (const mti::BetaRecord& r : rep.beta) beta_ok = beta_ok && r.bound_ok && r.beta_ok;
  p.result(beta_ok, "beta", "checks=" + std::to_string(rep.beta.size()));
  std::cout << mti::to_key_values(rep) << "\n";
}

void sat_battery(const mti::SatInstance& s, VerifyPrinter& p, bool fault, int beta_samples,
                 int cap, std::uint32_t seed) {
  const mti::ValidationReport v = mti::validate(s);
  p.result(v.ok(), "validate", v.ok() ? "" : v.violations.front());
  if (!v.ok()) return;
  const mti::GadgetReport rep = mti::check_gadget(s, cap);
  p.result(rep.block_law_ok, "gadget-block-law", rep.detail);
  p.result(rep.profile_ok, "gadget-profile");
  p.result(rep.optimum_ok, "gadget-optimum",
           "z_sat=" + std::to_string(rep.z_sat) + " z_csat=" + std::to_string(rep.z_csat));
  const auto [csat, map] = mti::gadgetize(s);
  csat_battery(csat, p, fault, beta_samples, cap, seed);
}

int cmd_verify(const std::string& in, int seeds, bool fault, int beta_samples, int cap) {
  VerifyPrinter p;
  if (seeds > 0) {
    for (int seed = 1; seed <= seeds; ++seed) {
      const int sn = 4 + 2 * (seed % 3);  // 4, 6, 8
      const mti::GadgetReport grep = mti::check_gadget(mti::gen_sat(sn, static_cast<std::uint32_t>(seed)), cap);
      if (!grep.ok()) p.result(false, "gadget", "seed=" + std::to_string(seed) + " " + grep.detail);

      const int n = 3 + seed % 6;
      const int m = (n + 1) / 2 + seed % 6;
      const mti::CsatInstance c = mti::gen_csat(n, m, static_cast<std::uint32_t>(seed));
      const mti::TrackFamily f = mti::construct_tracks(c);
      if (!mti::check_observations(c, f).ok())
        p.result(false, "observations", "seed=" + std::to_string(seed));
      const mti::LReductionReport rep = mti::check_identity(c, cap);
      if (!rep.ok()) p.result(false, "identity", "seed=" + std::to_string(seed));
    }
    p.result(p.failures == 0, "seeds", "count=" + std::to_string(seeds) + " failures=" +
                                           std::to_string(p.failures));
    return p.failures == 0 ? 0 : 1;
  }

  const std::string content = read_input(in);
  const mti::FileKind kind = mti::sniff_kind(content);
  if (kind == mti::FileKind::sat)
    sat_battery(mti::parse_sat(content), p, fault, beta_samples, cap, 1);
  else if (kind == mti::FileKind::csat)
    csat_battery(mti::parse_csat(content), p, fault, beta_samples, cap, 1);
  else
    throw std::runtime_error("verify expects a sat or csat file");
  return p.failures == 0 ? 0 : 1;
}

int cmd_render(const std::string& in, const std::string& out, const std::string& format, int scale,
               bool copies) {
  const mti::TrackFamily f = mti::parse_tracks(read_input(in));
  mti::RenderSpec spec;
  spec.format = format == "svg" ? mti::RenderSpec::Format::svg : mti::RenderSpec::Format::text;
  spec.scale = scale;
  spec.collapse_copies = !copies;
  write_output(out, mti::render_tracks(f, spec));
  return 0;
}

int cmd_gen(const std::string& kind, int n, int m, std::uint32_t seed, const std::string& out) {
  if (kind == "sat") {
    write_output(out, mti::serialize_sat(mti::gen_sat(n, seed)));
    return 0;
  }
  if (m <= 0) throw std::runtime_error("gen csat requires --m");
  write_output(out, mti::serialize_csat(mti::gen_csat(n, m, seed)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-track interval clique reduction toolkit"};
  app.require_subcommand(1);

  std::string in = "-";
  std::string out = "-";
  std::string engine = "bb";
  std::string format = "text";
  std::string gen_kind;
  std::uint64_t budget = 0;
  std::uint32_t seed = 1;
  int seeds = 0;
  int n = 4;
  int m = 0;
  int scale = 40;
  int cap = 24;
  int beta_samples = 3;
  bool full = false;
  bool copies = false;
  bool fault = false;

  auto* gadget = app.add_subcommand("gadget", "rewrite a disjunctive (sat) file as a conjunctive (csat) file");
  gadget->add_option("input", in, "sat file, - for stdin");
  gadget->add_option("output", out, "csat file, - for stdout");

  auto* reduce = app.add_subcommand("reduce", "build the 3-track interval family of a csat file");
  reduce->add_option("input", in, "csat file, - for stdin");
  reduce->add_option("output", out, "tracks file, - for stdout");

  auto* graph = app.add_subcommand("graph", "build the intersection graph of a tracks file (DIMACS)");
  graph->add_option("input", in, "tracks file, - for stdin");
  graph->add_option("output", out, "graph file, - for stdout");
  graph->add_flag("--full", full, "one vertex per member instead of collapsing twin copies");

  auto* solve = app.add_subcommand("solve", "optimize: z* for formula input, w* for tracks/graph input");
  solve->add_option("input", in, "csat, sat, tracks, or graph file");
  solve->add_option("--engine", engine, "clique engine: enum, bb, or both")
      ->check(CLI::IsMember({"enum", "bb", "both"}));
  solve->add_option("--budget", budget, "search-node budget for bb (0 = exhaustive)");
  solve->add_option("--cap", cap, "brute-force variable cap for formula input");

  auto* verify = app.add_subcommand("verify", "check every reduction property of the input (or of seeded random instances)");
  verify->add_option("input", in, "sat or csat file");
  verify->add_option("--seeds", seeds, "generator mode: sweep this many seeds");
  verify->add_option("--beta-samples", beta_samples, "random pruned cliques per instance");
  verify->add_option("--cap", cap, "brute-force variable cap");
  verify->add_flag("--inject-fault", fault, "corrupt the family first; checks must then fail");

  auto* render = app.add_subcommand("render", "draw a tracks file");
  render->add_option("input", in, "tracks file, - for stdin");
  render->add_option("output", out, "output file, - for stdout");
  render->add_option("--format", format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
  render->add_option("--scale", scale, "svg pixels per unit");
  render->add_flag("--copies", copies, "draw every copy instead of one row per literal");

  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("kind", gen_kind, "sat or csat")->required()->check(CLI::IsMember({"sat", "csat"}));
  gen->add_option("output", out, "output file, - for stdout");
  gen->add_option("--n", n, "variable count");
  gen->add_option("--m", m, "clause count (csat only)");
  gen->add_option("--seed", seed, "rng seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gadget->parsed()) return cmd_gadget(in, out);
    if (reduce->parsed()) return cmd_reduce(in, out);
    if (graph->parsed()) return cmd_graph(in, out, full);
    if (solve->parsed()) return cmd_solve(in, engine, budget, cap);
    if (verify->parsed()) return cmd_verify(in, seeds, fault, beta_samples, cap);
    if (render->parsed()) return cmd_render(in, out, format, scale, copies);
    if (gen->parsed()) return cmd_gen(gen_kind, n, m, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
