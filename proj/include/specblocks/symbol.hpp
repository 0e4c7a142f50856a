#pragma once

#include <optional>
#include <vector>

#include "specblocks/abelian.hpp"
#include "specblocks/digraph.hpp"
#include "specblocks/perm.hpp"

namespace specblocks {

// A semiregular abelian permutation group together with every ordering
// choice fixed once: orbits by minimal point, H in the lexicographic order
// of its abstract exponent tuples, base vector one point per orbit, and the
// induced lexicographic vertex order x_1^{h_1},...,x_m^{h_n}. Fixing all of
// this up front makes matrices, eigenvectors and partitions reproducible
// bit-for-bit across runs.
class SemiregularFrame {
 public:
  // From a concrete permutation group; checks abelian and semiregular.
  // The default base vector is the minimal point of each orbit.
  static SemiregularFrame build(const PermGroup& h,
                                std::optional<std::vector<int>> base_choice = {},
                                std::int64_t cap = kDefaultCap);
  // The regular translation action of an abstract group on m * |H| fresh
  // points; orbit i occupies {i*|H| .. (i+1)*|H|-1} and tuples keep their
  // given factor shape.
  static SemiregularFrame canonical(const AbelianGroup& abstract, int m);

  int orbit_count() const { return static_cast<int>(orbits_.size()); }
  std::int64_t group_order() const { return abstract_.order(); }
  int degree() const { return h_.degree(); }
  const PermGroup& h() const { return h_; }
  const AbelianGroup& abstract() const { return abstract_; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  const std::vector<int>& base() const { return base_; }
  const Perm& perm_at(std::int64_t element_index) const { return element_perms_[element_index]; }
  Perm perm_of(const Element& e) const { return element_perms_[abstract_.index_of(e)]; }

  // point x_i^{h_e}
  int vertex(int orbit_index, std::int64_t element_index) const;
  // inverse of vertex(): (orbit index, element index)
  std::pair<int, std::int64_t> locate(int point) const;
  // row/column index of a point in the frame's vertex order
  std::int64_t position(int point) const;
  int point_at_position(std::int64_t pos) const;

 private:
  SemiregularFrame(PermGroup h, AbelianGroup abstract, std::vector<Perm> element_perms,
                   std::vector<std::vector<int>> orbits, std::vector<int> base);

  PermGroup h_;
  AbelianGroup abstract_;
  std::vector<Perm> element_perms_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> base_;
  std::vector<std::pair<int, std::int64_t>> locate_;
};

// The m x m array of subsets S_ij of H encoding an H-invariant digraph:
// S_ij = set of h with an arc from x_i to x_j^h. Entries are kept sorted.
class Symbol {
 public:
  Symbol(AbelianGroup group, int m);
  Symbol(AbelianGroup group, std::vector<std::vector<std::vector<Element>>> entries);

  int m() const { return m_; }
  const AbelianGroup& group() const { return group_; }
  const std::vector<Element>& entry(int i, int j) const { return entries_[i][j]; }
  void set_entry(int i, int j, std::vector<Element> subset);
  bool entry_contains(int i, int j, const Element& e) const;

  // out-valency contributed by block row i
  std::int64_t row_valency(int i) const;

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.group_ == b.group_ && a.entries_ == b.entries_;
  }

 private:
  AbelianGroup group_;
  int m_;
  std::vector<std::vector<std::vector<Element>>> entries_;
};

// Reads the symbol of d relative to the frame; verifies that the frame's H
// actually preserves the arcs.
Symbol extract_symbol(const Digraph& d, const SemiregularFrame& f);

// The mn x mn block matrix of Cayley adjacencies, row-major over {0,1},
// in the frame's vertex order.
std::vector<std::vector<int>> assemble_adjacency(const Symbol& s);

struct SymbolRealization {
  Digraph digraph;
  SemiregularFrame frame;
};

// The digraph on m * |H| vertices whose symbol under the canonical frame is
// exactly s (round-trip exact).
SymbolRealization digraph_from_symbol(const Symbol& s);

}  // namespace specblocks
