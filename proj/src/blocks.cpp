#include "specblocks/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace specblocks {

Partition build_partition(const GTriple& t, const SemiregularFrame& f) {
  const AbelianGroup& h = f.abstract();
  if (!is_subgroup(h, t.k_elements))
    throw validation_error("K is not a subgroup of H");
  if (static_cast<int>(t.base.size()) != f.orbit_count())
    throw validation_error("base vector must have one point per orbit");
  for (int i = 0; i < f.orbit_count(); ++i) {
    const auto& orb = f.orbits()[i];
    if (!std::binary_search(orb.begin(), orb.end(), t.base[i]))
      throw validation_error("base vector entry lies outside its orbit");
  }
  if (t.delta.degree() != f.orbit_count())
    throw validation_error("Delta must partition the orbit index set");

  std::set<Element> k_set(t.k_elements.begin(), t.k_elements.end());
  // coset representatives of K in H, by lexicographic first member
  std::vector<Element> reps;
  std::set<Element> assigned;
  for (std::int64_t e = 0; e < h.order(); ++e) {
    Element cand = h.element_at(e);
    if (assigned.count(cand)) continue;
    reps.push_back(cand);
    for (const auto& k : k_set) assigned.insert(h.add(cand, k));
  }

  std::vector<std::vector<int>> cells;
  for (const auto& t_cell : t.delta.cells()) {
    for (const auto& rep : reps) {
      std::vector<int> cell;
      for (int i : t_cell)
        for (const auto& k : k_set)
          cell.push_back(f.perm_of(h.add(rep, k)).apply(t.base[i]));
      cells.push_back(std::move(cell));
    }
  }
  return {f.degree(), std::move(cells)};
}

GTriple rebase(const GTriple& t, const SemiregularFrame& f, int x) {
  auto [j, ex] = f.locate(x);
  // find h with (base_j)^h = x; base entries may differ from the frame's
  auto [j0, e0] = f.locate(t.base[j]);
  if (j0 != j) throw validation_error("base vector entry lies outside its orbit");
  const AbelianGroup& h = f.abstract();
  Element shift = h.sub(h.element_at(ex), h.element_at(e0));
  GTriple out = t;
  int cell_index = t.delta.cell_index_of(j);
  for (int i : t.delta.cell(cell_index)) {
    out.base[i] = f.perm_of(shift).apply(t.base[i]);
  }
  return out;
}

GTriple recover_g_triple(const Partition& b, const PermGroup& g,
                         const SemiregularFrame& f, int anchor) {
  if (!g.is_transitive()) throw validation_error("group is not transitive");
  if (!is_invariant_partition(g, b))
    throw validation_error("partition is not invariant under the group");

  int m = f.orbit_count();
  const AbelianGroup& h = f.abstract();

  // Delta: i ~ j iff some block meets both X_i and X_j
  std::vector<int> delta_ids(m);
  {
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& block : b.cells()) {
      int first = f.locate(block.front()).first;
      for (int p : block) {
        int a = find(first), c = find(f.locate(p).first);
        if (a != c) parent[std::max(a, c)] = std::min(a, c);
      }
    }
    for (int i = 0; i < m; ++i) delta_ids[i] = find(i);
  }
  Partition delta = Partition::from_cell_ids(delta_ids);
  if (!delta.is_uniform())
    throw validation_error("recovered Delta is not uniform; partition is not of G-triple form");

  // K = H meet kernel of the action on b: elements of H fixing every block
  std::vector<Element> k_elements;
  for (std::int64_t e = 0; e < h.order(); ++e) {
    const Perm& p = f.perm_at(e);
    bool fixes = true;
    for (int point = 0; point < f.degree() && fixes; ++point)
      fixes = b.cell_index_of(p.apply(point)) == b.cell_index_of(point);
    if (fixes) k_elements.push_back(h.element_at(e));
  }

  // base vector: per Delta-class, the block containing the class's minimal
  // point; entry i = minimal block point inside X_i
  std::vector<int> base(m, -1);
  for (const auto& t_cell : delta.cells()) {
    int min_point = f.degree();
    for (int i : t_cell) min_point = std::min(min_point, f.orbits()[i].front());
    const auto& block = b.cell(b.cell_index_of(min_point));
    for (int i : t_cell) {
      for (int p : block) {
        if (f.locate(p).first == i) {
          base[i] = p;
          break;
        }
      }
      if (base[i] == -1)
        throw validation_error("block misses an orbit of its Delta-class");
    }
  }

  GTriple triple{std::move(base), std::move(delta), std::move(k_elements)};
  triple = rebase(triple, f, anchor);
  if (!(build_partition(triple, f) == b))
    throw validation_error(
        "partition is not of G-triple form relative to H (preconditions violated)");
  return triple;
}

CVec apply_perm(const SemiregularFrame& f, const Perm& g, const CVec& w) {
  CVec out(w.size());
  for (std::int64_t pos = 0; pos < static_cast<std::int64_t>(w.size()); ++pos) {
    int point = f.point_at_position(pos);
    out[static_cast<std::size_t>(pos)] =
        w[static_cast<std::size_t>(f.position(g.apply(point)))];
  }
  return out;
}

namespace {

bool fixes_basis(const SemiregularFrame& f, const Perm& g, const std::vector<CVec>& basis,
                 double tol) {
  for (const auto& w : basis) {
    CVec moved = apply_perm(f, g, w);
    double norm = inf_norm(w);
    double residual = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
      residual = std::max(residual, std::abs(moved[i] - w[i]));
    if (residual > tol * std::max(norm, 1e-300)) return false;
  }
  return true;
}

}  // namespace

std::vector<Element> kernel_intersect_h(const Symbol& s, const SemiregularFrame& f,
                                        cplx lambda, double tol) {
  std::vector<CVec> basis = eigenspace_W(s, f, lambda, tol);
  std::vector<Element> out;
  for (std::int64_t e = 0; e < f.group_order(); ++e)
    if (fixes_basis(f, f.perm_at(e), basis, tol))
      out.push_back(f.abstract().element_at(e));
  return out;
}

SpectralBlockSystem spectral_block_system(const PermGroup& g, const Symbol& s,
                                          const SemiregularFrame& f, cplx lambda,
                                          double tol, std::int64_t cap, Exec exec) {
  std::vector<CVec> basis = eigenspace_W(s, f, lambda, tol);
  SpectrumResult spec = spectrum(s, tol);
  const SpectrumEntry& entry = find_eigenvalue(spec, lambda, tol);

  const auto& elems = g.elements(cap);
  std::vector<char> in_kernel(elems.size(), 0);
  parallel_for(static_cast<std::int64_t>(elems.size()), exec, [&](std::int64_t i) {
    in_kernel[static_cast<std::size_t>(i)] =
        fixes_basis(f, elems[static_cast<std::size_t>(i)], basis, tol) ? 1 : 0;
  });
  std::vector<Perm> kernel_elems;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (in_kernel[i]) kernel_elems.push_back(elems[i]);

  // the kernel is a subgroup; verify the filtered set is closed so a
  // tolerance leak cannot pass unnoticed
  std::vector<Perm> gens = greedy_generators(g.degree(), kernel_elems);
  PermGroup kernel = PermGroup::with_elements(g.degree(), gens, kernel_elems);
  {
    PermGroup regenerated(g.degree(), gens);
    if (regenerated.order(cap) != static_cast<std::int64_t>(kernel_elems.size()))
      throw solver_failure("kernel residual filter returned a non-closed set");
  }

  // B_{S,lambda}: orbit partition of the kernel
  std::vector<int> ids(g.degree());
  {
    std::vector<int> parent(g.degree());
    for (int p = 0; p < g.degree(); ++p) parent[p] = p;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& k : gens)
      for (int p = 0; p < g.degree(); ++p) {
        int a = find(p), c = find(k.apply(p));
        if (a != c) parent[std::max(a, c)] = std::min(a, c);
      }
    for (int p = 0; p < g.degree(); ++p) ids[p] = find(p);
  }
  Partition blocks = Partition::from_cell_ids(ids);
  GTriple triple = recover_g_triple(blocks, g, f, 0);
  return {std::move(blocks), std::move(triple), std::move(kernel), entry.k_set,
          entry.lambda};
}

Partition delta_lambda_chi(const Symbol& s, const Char& chi, cplx lambda, double tol) {
  return delta_lambda_chi_from_basis(s, chi, eigenspace_V(s, chi, lambda, tol), tol);
}

Partition delta_lambda_chi_from_basis(const Symbol& s, const Char& chi,
                                      const std::vector<CVec>& basis, double tol) {
  int m = s.m();
  const AbelianGroup& h = s.group();
  // component vectors across the basis
  std::vector<CVec> comp(static_cast<std::size_t>(m), CVec(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (int i = 0; i < m; ++i) comp[static_cast<std::size_t>(i)][b] = basis[b][i];

  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool related = false;
      for (std::int64_t e = 0; e < h.order() && !related; ++e) {
        cplx scalar = char_eval(h, chi, h.element_at(e)).value();
        bool all_match = true;
        for (std::size_t b = 0; b < basis.size() && all_match; ++b)
          all_match = std::abs(comp[i][b] - scalar * comp[j][b]) <= tol;
        related = all_match;
      }
      if (related) {
        int a = find(i), c = find(j);
        if (a != c) parent[std::max(a, c)] = std::min(a, c);
      }
    }
  std::vector<int> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = find(i);
  return Partition::from_cell_ids(ids);
}

bool check_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.degree() != coarse.degree())
    throw validation_error("refinement check needs a common ground set");
  return fine.refines(coarse);
}

ExtremeReport classify_extreme(const Symbol& s, const PermGroup& g,
                               const SemiregularFrame& f, cplx lambda, double tol,
                               std::int64_t cap) {
  ExtremeReport report(spectral_block_system(g, s, f, lambda, tol, cap));
  const AbelianGroup& h = f.abstract();
  std::vector<Char> generated = subgroup_generated_by_chars(h, report.system.k_set);
  report.k_generates_dual = static_cast<std::int64_t>(generated.size()) == h.order();
  report.kernel_nontrivial = report.system.kernel.elements().size() > 1;
  report.k_is_principal_only =
      report.system.k_set.size() == 1 && report.system.k_set.front() == h.zero();
  double valency = static_cast<double>(s.row_valency(0));
  report.lambda_is_valency = std::abs(report.system.lambda - valency) <= tol * std::max(1.0, valency);
  report.delta_universal = report.system.triple.delta.is_universal();
  report.delta_trivial = report.system.triple.delta.is_singletons();

  if (report.k_generates_dual && report.kernel_nontrivial) {
    report.kind = ExtremeCase::blocks_meet_orbits_at_most_once;
    report.structure_verified = true;
    for (const auto& block : report.system.blocks.cells()) {
      std::map<int, int> hits;
      for (int p : block) ++hits[f.locate(p).first];
      for (const auto& [orbit, count] : hits)
        if (count > 1) report.structure_verified = false;
      if (report.delta_universal && hits.size() != static_cast<std::size_t>(f.orbit_count()))
        report.structure_verified = false;
    }
    report.detail = report.delta_universal
                        ? "each block meets each H-orbit exactly once"
                        : "each block meets each H-orbit at most once";
  } else if (!report.lambda_is_valency && report.k_is_principal_only) {
    report.kind = ExtremeCase::blocks_are_orbit_unions;
    report.structure_verified = true;
    for (const auto& block : report.system.blocks.cells()) {
      std::set<int> touched;
      for (int p : block) touched.insert(f.locate(p).first);
      std::size_t expected = 0;
      for (int i : touched) expected += f.orbits()[i].size();
      if (block.size() != expected) report.structure_verified = false;
    }
    report.detail = report.delta_trivial
                        ? "blocks are orbits of H (orbits form a block system)"
                        : "blocks are unions of H-orbits";
  } else {
    report.detail = report.lambda_is_valency ? "principal eigenvalue" : "no extremal case";
  }
  return report;
}

PrimitiveReport verify_primitive_dual_generation(const PermGroup& g, const Symbol& s,
                                        const SemiregularFrame& f, double tol,
                                        std::int64_t cap) {
  (void)cap;
  if (!is_primitive(g)) throw validation_error("group is not primitive");
  const AbelianGroup& h = f.abstract();
  SpectrumResult spec = spectrum(s, tol);
  double valency = static_cast<double>(s.row_valency(0));
  PrimitiveReport report;
  for (const auto& entry : spec.entries) {
    if (std::abs(entry.lambda - valency) <= tol * std::max(1.0, valency)) continue;
    PrimitiveRow row{entry.lambda, entry.k_set, false};
    row.generates_dual =
        static_cast<std::int64_t>(subgroup_generated_by_chars(h, entry.k_set).size()) ==
        h.order();
    if (!row.generates_dual) report.all_generate = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace specblocks
