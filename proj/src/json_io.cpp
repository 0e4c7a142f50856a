#include "specblocks/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace specblocks {

json digraph_to_json(const Digraph& d) {
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"n", d.vertex_count()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("arcs"))
    throw validation_error("digraph JSON needs \"n\" and \"arcs\"");
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2)
      throw validation_error("each arc must be a pair [u, v]");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return {j.at("n").get<int>(), std::move(arcs)};
}

json abelian_to_json(const AbelianGroup& h) { return {{"factors", h.factors()}}; }

AbelianGroup abelian_from_json(const json& j) {
  if (!j.contains("factors")) throw validation_error("abelian group JSON needs \"factors\"");
  return AbelianGroup(j.at("factors").get<std::vector<int>>());
}

json subset_to_json(const std::vector<Element>& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back(e);
  return out;
}

std::vector<Element> subset_from_json(const json& j, const AbelianGroup& h) {
  std::vector<Element> out;
  for (const auto& tuple : j) {
    Element e = tuple.get<std::vector<int>>();
    h.validate_tuple(e);
    out.push_back(std::move(e));
  }
  return out;
}

json symbol_to_json(const Symbol& s) {
  json entries = json::array();
  for (int i = 0; i < s.m(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < s.m(); ++j2) row.push_back(subset_to_json(s.entry(i, j2)));
    entries.push_back(row);
  }
  return {{"m", s.m()}, {"factors", s.group().factors()}, {"entries", entries}};
}

Symbol symbol_from_json(const json& j) {
  if (!j.contains("entries")) throw validation_error("symbol JSON needs \"entries\"");
  AbelianGroup h = abelian_from_json(j);
  const json& entries = j.at("entries");
  int m = j.contains("m") ? j.at("m").get<int>() : static_cast<int>(entries.size());
  if (static_cast<int>(entries.size()) != m)
    throw validation_error("symbol entries must form an m x m array");
  Symbol s(h, m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(entries[i].size()) != m)
      throw validation_error("symbol entries must form an m x m array");
    for (int j2 = 0; j2 < m; ++j2) s.set_entry(i, j2, subset_from_json(entries[i][j2], h));
  }
  return s;
}

json partition_to_json(const Partition& p) {
  json cells = json::array();
  for (const auto& c : p.cells()) cells.push_back(c);
  return {{"cells", cells}};
}

Partition partition_from_json(const json& j, int degree) {
  if (!j.contains("cells")) throw validation_error("partition JSON needs \"cells\"");
  std::vector<std::vector<int>> cells;
  for (const auto& c : j.at("cells")) cells.push_back(c.get<std::vector<int>>());
  return {degree, std::move(cells)};
}

json gtriple_to_json(const GTriple& t) {
  json delta = json::array();
  for (const auto& c : t.delta.cells()) delta.push_back(c);
  return {{"base", t.base}, {"delta", delta}, {"k", subset_to_json(t.k_elements)}};
}

std::string format_char(const Char& chi) {
  std::ostringstream os;
  os << "chi_";
  if (chi.size() == 1) {
    os << chi[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < chi.size(); ++i) os << (i ? "," : "") << chi[i];
    os << ")";
  }
  return os.str();
}

std::string format_element_set(const std::vector<Element>& set) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    os << (i ? "," : "");
    if (set[i].size() == 1) {
      os << set[i][0];
    } else {
      os << "(";
      for (std::size_t k = 0; k < set[i].size(); ++k) os << (k ? "," : "") << set[i][k];
      os << ")";
    }
  }
  os << "}";
  return os.str();
}

std::string format_complex_value(cplx z, double display_tol) {
  double re = z.real(), im = z.imag();
  if (std::abs(re - std::round(re)) < display_tol) re = std::round(re) + 0.0;
  if (std::abs(im - std::round(im)) < display_tol) im = std::round(im) + 0.0;
  if (re == 0.0) re = 0.0;  // normalize -0
  if (im == 0.0) im = 0.0;
  std::ostringstream os;
  if (im == 0.0) {
    os << re;
  } else {
    os << re << (im > 0 ? "+" : "-") << std::abs(im) << "i";
  }
  return os.str();
}

json spectrum_to_json(const SpectrumResult& spec, const AbelianGroup&) {
  json entries = json::array();
  for (const auto& e : spec.entries) {
    json k = json::array();
    for (const auto& chi : e.k_set) k.push_back(chi);
    entries.push_back({{"lambda_re", e.lambda.real()},
                       {"lambda_im", e.lambda.imag()},
                       {"k_set", k},
                       {"multiplicity", e.multiplicity}});
  }
  return {{"eigenvalues", entries}, {"warnings", spec.warnings}};
}

ProblemSpec problem_spec_from_json(const json& j) {
  ProblemSpec spec;
  int sources = 0;
  if (!j.contains("digraph")) throw validation_error("problem spec needs a \"digraph\" source");
  const json& d = j.at("digraph");
  if (d.contains("arcs")) {
    spec.digraph = digraph_from_json(d);
    ++sources;
  }
  if (d.contains("orbital_seeds")) {
    std::vector<Arc> seeds;
    for (const auto& a : d.at("orbital_seeds")) seeds.emplace_back(a[0].get<int>(), a[1].get<int>());
    spec.orbital_seeds = std::move(seeds);
    ++sources;
  }
  if (d.contains("symbol")) {
    json sym = d.at("symbol");
    // the factor list may live on the symbol itself or on the "h" field
    if (!sym.contains("factors") && j.contains("h") && j.at("h").contains("factors"))
      sym["factors"] = j.at("h").at("factors");
    spec.symbol = symbol_from_json(sym);
    ++sources;
  }
  if (d.contains("gp")) {
    const auto& gp = d.at("gp");
    spec.gp = {gp[0].get<int>(), gp[1].get<int>()};
    ++sources;
  }
  if (sources != 1)
    throw validation_error("problem spec needs exactly one digraph source");

  if (j.contains("h")) {
    const json& h = j.at("h");
    if (h.contains("generators")) {
      std::vector<Perm> gens;
      for (const auto& g : h.at("generators")) gens.emplace_back(g.get<std::vector<int>>());
      spec.h_generators = std::move(gens);
    } else if (!h.contains("factors")) {
      throw validation_error("\"h\" needs \"generators\" or \"factors\"");
    }
    // factors are carried by the symbol itself when the source is a symbol
  }
  if (j.contains("g")) {
    const json& g = j.at("g");
    if (g.is_string() && g.get<std::string>() == "aut") {
      spec.g_is_aut = true;
    } else if (g.contains("generators")) {
      std::vector<std::vector<int>> gens;
      for (const auto& p : g.at("generators")) gens.push_back(p.get<std::vector<int>>());
      spec.g_generators = std::move(gens);
    } else {
      throw validation_error("\"g\" must be \"aut\" or carry \"generators\"");
    }
  } else {
    spec.g_is_aut = true;
  }
  if (j.contains("base")) spec.base_choice = j.at("base").get<std::vector<int>>();
  return spec;
}

ProblemSpec load_problem_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open spec file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("spec file parse error: ") + e.what());
  }
  try {
    return problem_spec_from_json(j);
  } catch (const json::exception& e) {
    throw validation_error(std::string("spec file field error: ") + e.what());
  }
}

Problem realize(const ProblemSpec& spec, std::int64_t node_budget, std::int64_t cap) {
  // digraph + frame + symbol
  if (spec.gp) {
    GPGraph gp = gp_graph(spec.gp->first, spec.gp->second);
    std::optional<PermGroup> group;
    if (spec.g_is_aut) {
      group = automorphism_group_oracle(gp.graph, node_budget);
    } else if (spec.g_generators) {
      std::vector<Perm> gens;
      for (const auto& images : *spec.g_generators) gens.emplace_back(images);
      group = PermGroup(gp.graph.vertex_count(), std::move(gens));
    }
    Symbol sym = gp.symbol.to_symbol(gp.frame.abstract());
    return {std::move(gp.graph), std::move(gp.frame), std::move(sym), std::move(group)};
  }

  if (spec.symbol) {
    if (spec.h_generators)
      throw validation_error("a symbol source fixes H abstractly; omit \"h\" generators");
    SymbolRealization real = digraph_from_symbol(*spec.symbol);
    std::optional<PermGroup> group;
    if (spec.g_is_aut) {
      group = automorphism_group_oracle(real.digraph, node_budget);
    } else if (spec.g_generators) {
      std::vector<Perm> gens;
      for (const auto& images : *spec.g_generators) gens.emplace_back(images);
      group = PermGroup(real.digraph.vertex_count(), std::move(gens));
    }
    return {std::move(real.digraph), std::move(real.frame), *spec.symbol, std::move(group)};
  }

  // concrete digraph or orbital closure: H generators are required
  if (!spec.h_generators)
    throw validation_error("a concrete digraph source needs \"h\" generators");
  std::optional<Digraph> d;
  std::optional<PermGroup> group;
  if (spec.digraph) {
    d = *spec.digraph;
    if (spec.g_is_aut) {
      group = automorphism_group_oracle(*d, node_budget);
    } else if (spec.g_generators) {
      std::vector<Perm> gens;
      for (const auto& images : *spec.g_generators) gens.emplace_back(images);
      group = PermGroup(d->vertex_count(), std::move(gens));
    }
  } else {
    if (!spec.g_generators)
      throw validation_error("orbital seeds need explicit \"g\" generators");
    std::vector<Perm> gens;
    for (const auto& images : *spec.g_generators) gens.emplace_back(images);
    if (gens.empty()) throw validation_error("orbital seeds need at least one generator");
    int degree = gens.front().degree();
    PermGroup g(degree, std::move(gens));
    d = orbital_closure(g, *spec.orbital_seeds);
    group = std::move(g);
  }
  for (const auto& h : *spec.h_generators)
    if (h.degree() != d->vertex_count())
      throw validation_error("H generators do not match the digraph degree");
  PermGroup h(d->vertex_count(), *spec.h_generators);
  SemiregularFrame frame = SemiregularFrame::build(h, spec.base_choice, cap);
  Symbol sym = extract_symbol(*d, frame);
  return {std::move(*d), std::move(frame), std::move(sym), std::move(group)};
}

}  // namespace specblocks
