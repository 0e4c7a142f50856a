// specblocks: spectra, block systems and G-triples of digraphs invariant
// under a group with a semiregular abelian subgroup, plus the generalized
// Petersen classification pipeline.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "specblocks/blocks.hpp"
#include "specblocks/gp.hpp"
#include "specblocks/json_io.hpp"

using namespace specblocks;

namespace {

struct GlobalOptions {
  double tol = 1e-8;
  std::int64_t cap = kDefaultCap;
  std::string format = "text";
  bool oracle = false;
  bool serial = false;

  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

cplx parse_lambda(const std::string& text) {
  double re = 0, im = 0;
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    re = std::stod(text);
  } else {
    re = std::stod(text.substr(0, comma));
    im = std::stod(text.substr(comma + 1));
  }
  return {re, im};
}

// cheap independent check that the pooled character eigenvalues match the
// assembled adjacency matrix, via exact integer power traces
void verify_spectrum_against_adjacency(const Symbol& s, const SpectrumResult& spec) {
  auto a01 = assemble_adjacency(s);
  int mn = static_cast<int>(a01.size());
  std::vector<std::vector<std::int64_t>> a(a01.size(),
                                           std::vector<std::int64_t>(a01.size()));
  for (int i = 0; i < mn; ++i)
    for (int j = 0; j < mn; ++j) a[i][j] = a01[i][j];
  auto power = a;
  for (int k = 1; k <= std::min(6, mn); ++k) {
    if (k > 1) {
      std::vector<std::vector<std::int64_t>> next(a.size(),
                                                  std::vector<std::int64_t>(a.size(), 0));
      for (int i = 0; i < mn; ++i)
        for (int l = 0; l < mn; ++l) {
          if (power[i][l] == 0) continue;
          for (int j = 0; j < mn; ++j) next[i][j] += power[i][l] * a[l][j];
        }
      power = std::move(next);
    }
    std::int64_t trace = 0;
    for (int i = 0; i < mn; ++i) trace += power[i][i];
    cplx pooled{0, 0};
    double mag = 1.0;
    for (const auto& entry : spec.entries)
      for (std::size_t c = 0; c < entry.k_set.size(); ++c) {
        pooled += std::pow(entry.char_lambda[c], k) * static_cast<double>(entry.multiplicity[c]);
        mag += std::pow(std::abs(entry.char_lambda[c]), k) * entry.multiplicity[c];
      }
    if (std::abs(pooled - cplx{static_cast<double>(trace), 0}) > 1e-6 * mag)
      throw oracle_disagreement("character spectrum disagrees with the adjacency matrix");
  }
}

int run_spectrum(const std::string& spec_path, const GlobalOptions& opt) {
  Problem prob = realize(load_problem_spec(spec_path));
  SpectrumResult spec = spectrum(prob.symbol, opt.tol, opt.exec());
  if (opt.oracle) verify_spectrum_against_adjacency(prob.symbol, spec);

  std::vector<std::size_t> dims;
  for (const auto& entry : spec.entries)
    dims.push_back(eigenspace_W(prob.symbol, prob.frame, entry.lambda, opt.tol).size());

  if (opt.format == "json") {
    json out = spectrum_to_json(spec, prob.frame.abstract());
    for (std::size_t i = 0; i < dims.size(); ++i)
      out["eigenvalues"][i]["dim_w"] = dims[i];
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("%-16s %-40s %s\n", "lambda", "K_{S,lambda}", "dim W");
  for (std::size_t i = 0; i < spec.entries.size(); ++i) {
    const auto& entry = spec.entries[i];
    std::string k;
    for (std::size_t c = 0; c < entry.k_set.size(); ++c)
      k += (c ? " " : "") + format_char(entry.k_set[c]);
    std::printf("%-16s %-40s %zu\n", format_complex_value(entry.lambda).c_str(), k.c_str(),
                dims[i]);
  }
  for (const auto& w : spec.warnings) std::printf("warning: %s\n", w.c_str());
  return 0;
}

const char* extreme_tag(const ExtremeReport& report) {
  switch (report.kind) {
    case ExtremeCase::blocks_meet_orbits_at_most_once:
      return "extremal(i)";
    case ExtremeCase::blocks_are_orbit_unions:
      return "extremal(ii)";
    default:
      return report.lambda_is_valency ? "principal" : "-";
  }
}

int run_blocks(const std::string& spec_path, const std::string& lambda_text,
               const GlobalOptions& opt) {
  Problem prob = realize(load_problem_spec(spec_path));
  if (!prob.group) throw validation_error("blocks needs a group: set \"g\" in the spec");
  const PermGroup& g = *prob.group;
  if (!g.is_transitive()) throw validation_error("the group is not transitive");

  SpectrumResult spec = spectrum(prob.symbol, opt.tol, opt.exec());
  std::vector<cplx> lambdas;
  if (!lambda_text.empty()) {
    lambdas.push_back(find_eigenvalue(spec, parse_lambda(lambda_text), opt.tol).lambda);
  } else {
    for (const auto& entry : spec.entries) lambdas.push_back(entry.lambda);
  }

  std::vector<Partition> oracle_systems;
  if (opt.oracle) oracle_systems = all_block_systems_oracle(g);

  json out = json::array();
  for (cplx lambda : lambdas) {
    ExtremeReport report = classify_extreme(prob.symbol, g, prob.frame, lambda, opt.tol, opt.cap);
    const SpectralBlockSystem& sys = report.system;
    if (opt.oracle) {
      if (std::find(oracle_systems.begin(), oracle_systems.end(), sys.blocks) ==
          oracle_systems.end())
        throw oracle_disagreement("spectral block system not found by the brute-force oracle");
      if (!is_invariant_partition(g, sys.blocks))
        throw oracle_disagreement("spectral block system is not G-invariant");
    }
    if (opt.format == "json") {
      json row{{"lambda", format_complex_value(sys.lambda)},
               {"blocks", partition_to_json(sys.blocks)},
               {"triple", gtriple_to_json(sys.triple)},
               {"kernel_order", sys.kernel.elements().size()},
               {"case", extreme_tag(report)},
               {"detail", report.detail}};
      json k = json::array();
      for (const auto& chi : sys.k_set) k.push_back(chi);
      row["k_set"] = k;
      out.push_back(std::move(row));
      continue;
    }
    std::printf("lambda = %s   [%s]\n", format_complex_value(sys.lambda).c_str(),
                extreme_tag(report));
    std::string k;
    for (std::size_t c = 0; c < sys.k_set.size(); ++c)
      k += (c ? " " : "") + format_char(sys.k_set[c]);
    std::printf("  K_{S,lambda} = {%s}\n", k.c_str());
    std::printf("  kernel order = %zu, K = kernel meet H = %s\n",
                sys.kernel.elements().size(),
                format_element_set(sys.triple.k_elements).c_str());
    std::printf("  blocks:");
    for (const auto& cell : sys.blocks.cells()) {
      std::printf(" {");
      for (std::size_t i = 0; i < cell.size(); ++i) std::printf("%s%d", i ? "," : "", cell[i]);
      std::printf("}");
    }
    std::printf("\n  base = (");
    for (std::size_t i = 0; i < sys.triple.base.size(); ++i)
      std::printf("%s%d", i ? "," : "", sys.triple.base[i]);
    std::printf("), Delta =");
    for (const auto& cell : sys.triple.delta.cells()) {
      std::printf(" {");
      for (std::size_t i = 0; i < cell.size(); ++i) std::printf("%s%d", i ? "," : "", cell[i]);
      std::printf("}");
    }
    std::printf("\n  %s\n", report.detail.c_str());
  }
  if (opt.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int run_gp_classify(int max_n, const GlobalOptions& opt) {
  GPClassifyResult result = gp_classify(max_n, opt.exec());
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& row : result.rows)
      rows.push_back({{"n", row.n},
                      {"s", row.s},
                      {"filter", row.filter_passes},
                      {"edge_transitive", row.theory_edge_transitive},
                      {"oracle", row.oracle_edge_transitive}});
    json pairs = json::array();
    for (auto [n, s] : result.edge_transitive) pairs.push_back({n, s});
    std::cout << json{{"edge_transitive", pairs}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  std::printf("%-6s %-6s %-8s %-16s %s\n", "n", "s", "filter", "edge-transitive", "oracle");
  for (const auto& row : result.rows) {
    const char* oracle = row.oracle_edge_transitive < 0
                             ? "-"
                             : (row.oracle_edge_transitive ? "agree:yes" : "agree:no");
    std::printf("%-6d %-6d %-8s %-16s %s\n", row.n, row.s,
                row.filter_passes ? "pass" : "reject",
                row.theory_edge_transitive ? "yes" : "no", oracle);
  }
  std::printf("edge-transitive pairs:");
  for (auto [n, s] : result.edge_transitive) std::printf(" (%d,%d)", n, s);
  std::printf("\n");
  return 0;
}

int run_gp_filter(int n, int s, const GlobalOptions& opt) {
  GPFilterReport report = gp_character_filter(n, s);
  if (opt.format == "json") {
    std::cout << json{{"n", report.n},
                      {"s", report.s},
                      {"passes", report.passes},
                      {"cube_quotient", report.cube_quotient},
                      {"petersen_quotient", report.petersen_quotient},
                      {"detail", report.detail}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::printf("GP(%d,%d): filter %s\n  %s\n", report.n, report.s,
              report.passes ? "passes" : "rejects", report.detail.c_str());
  return 0;
}

int run_gp_lift(const std::string& base_name, int m, const GlobalOptions& opt) {
  CoverBase base;
  if (base_name == "cube") {
    base = CoverBase::cube;
  } else if (base_name == "petersen") {
    base = CoverBase::petersen;
  } else {
    throw validation_error("--base must be cube or petersen");
  }
  auto solutions = gp_cover_lift(base, m);
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& sol : solutions)
      rows.push_back({{"lambda", sol.lambda}, {"a", sol.a}, {"n", sol.n}, {"s", sol.s}});
    std::cout << json{{"base", base_name}, {"m", m}, {"solutions", rows}}.dump(2) << "\n";
    return 0;
  }
  if (solutions.empty()) {
    std::printf("no lift: the distinguished automorphism does not lift over Z_%d\n", m);
    return 0;
  }
  for (const auto& sol : solutions)
    std::printf("lambda = %lld, a = %lld  ->  GP(%d,%d)\n",
                static_cast<long long>(sol.lambda), static_cast<long long>(sol.a), sol.n,
                sol.s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral decomposition and block systems of G-invariant digraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  app.add_option("--tol", opt.tol, "numeric tolerance")->capture_default_str();
  app.add_option("--cap", opt.cap, "group enumeration cap")->capture_default_str();
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--oracle", opt.oracle, "force brute-force cross-checks");
  app.add_flag("--serial", opt.serial, "disable the OpenMP kernels");

  std::string spec_path, lambda_text;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and character sets");
  spectrum_cmd->fallthrough();
  spectrum_cmd->add_option("--spec", spec_path, "problem spec JSON file")->required();

  auto* blocks_cmd = app.add_subcommand("blocks", "spectral block systems with G-triples");
  blocks_cmd->fallthrough();
  blocks_cmd->add_option("--spec", spec_path, "problem spec JSON file")->required();
  blocks_cmd->add_option("--lambda", lambda_text, "restrict to one eigenvalue, RE[,IM]");

  auto* gp_cmd = app.add_subcommand("gp", "generalized Petersen graph pipeline");
  gp_cmd->require_subcommand(1);
  gp_cmd->fallthrough();
  int max_n = 30, filter_n = 0, filter_s = 0, lift_m = 1;
  std::string lift_base;
  auto* classify_cmd = gp_cmd->add_subcommand("classify", "edge-transitive classification");
  classify_cmd->fallthrough();
  classify_cmd->add_option("--max-n", max_n, "largest n to classify")->capture_default_str();
  auto* filter_cmd = gp_cmd->add_subcommand("filter", "character filter for GP(n,s)");
  filter_cmd->fallthrough();
  filter_cmd->add_option("n", filter_n, "outer cycle length")->required();
  filter_cmd->add_option("s", filter_s, "inner step")->required();
  auto* lift_cmd = gp_cmd->add_subcommand("lift", "voltage lift over a cyclic fiber");
  lift_cmd->fallthrough();
  lift_cmd->add_option("--base", lift_base, "cube or petersen")->required();
  lift_cmd->add_option("--m", lift_m, "fiber order")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(spec_path, opt);
    if (blocks_cmd->parsed()) return run_blocks(spec_path, lambda_text, opt);
    if (classify_cmd->parsed()) return run_gp_classify(max_n, opt);
    if (filter_cmd->parsed()) return run_gp_filter(filter_n, filter_s, opt);
    if (lift_cmd->parsed()) return run_gp_lift(lift_base, lift_m, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::cap_exceeded:
        std::cerr << "the group is larger than the enumeration cap; raise --cap\n";
        return 3;
      case errc::oracle_disagreement:
        return 4;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
