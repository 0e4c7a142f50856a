#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "specblocks/blocks.hpp"
#include "specblocks/gp.hpp"

namespace specblocks {

using json = nlohmann::json;

// {"n": int, "arcs": [[u,v],...]}
json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const json& j);

// {"factors": [d1,...]}
json abelian_to_json(const AbelianGroup& h);
AbelianGroup abelian_from_json(const json& j);

// subsets of H as lists of exponent tuples
json subset_to_json(const std::vector<Element>& s);
std::vector<Element> subset_from_json(const json& j, const AbelianGroup& h);

// {"m": int, "factors": [...], "entries": [[ [tuples...] ...] ...]}
json symbol_to_json(const Symbol& s);
Symbol symbol_from_json(const json& j);

// {"cells": [[points...],...]}
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j, int degree);

// {"base": [...], "delta": [[...]], "k": [tuples]}
json gtriple_to_json(const GTriple& t);

json spectrum_to_json(const SpectrumResult& spec, const AbelianGroup& h);

// CLI problem description: a group source, an H description, and exactly
// one digraph source.
struct ProblemSpec {
  // digraph source (exactly one)
  std::optional<Digraph> digraph;
  std::optional<std::vector<Arc>> orbital_seeds;
  std::optional<Symbol> symbol;
  std::optional<std::pair<int, int>> gp;

  // H: concrete generators or abstract factors (symbol source only)
  std::optional<std::vector<Perm>> h_generators;

  // G: explicit generators, or the digraph's full automorphism group
  std::optional<std::vector<std::vector<int>>> g_generators;
  bool g_is_aut = false;

  std::optional<std::vector<int>> base_choice;
};

ProblemSpec problem_spec_from_json(const json& j);
ProblemSpec load_problem_spec(const std::string& path);

// Materialized problem: digraph, frame, symbol, and optionally G.
struct Problem {
  Digraph digraph;
  SemiregularFrame frame;
  Symbol symbol;
  std::optional<PermGroup> group;
};

Problem realize(const ProblemSpec& spec, std::int64_t node_budget = kDefaultNodeBudget,
                std::int64_t cap = kDefaultCap);

std::string format_char(const Char& chi);
std::string format_element_set(const std::vector<Element>& set);
std::string format_complex_value(cplx z, double display_tol = 1e-9);

}  // namespace specblocks
