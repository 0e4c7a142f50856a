#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "specblocks/error.hpp"

namespace specblocks {

inline constexpr std::int64_t kDefaultCap = 2'000'000;

// A permutation of {0..n-1}, stored as its image vector. Points are
// 0-indexed everywhere in this library.
class Perm {
 public:
  explicit Perm(int degree);                 // identity
  explicit Perm(std::vector<int> images);    // validates bijection
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int p) const { return img_[p]; }
  int operator[](int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }

  // Right-action composition: x^(a.then(b)) == (x^a)^b.
  Perm then(const Perm& other) const;
  Perm inverse() const;
  Perm power(std::int64_t e) const;
  bool is_identity() const;
  int order() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// A partition of {0..n-1} in canonical form: cells sorted ascending,
// ordered by minimum element. Equality is cell-set equality.
class Partition {
 public:
  Partition(int degree, std::vector<std::vector<int>> cells);
  static Partition singletons(int degree);
  static Partition universal(int degree);
  static Partition from_cell_ids(const std::vector<int>& cell_id_of_point);

  int degree() const { return static_cast<int>(cell_of_.size()); }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& cell(int i) const { return cells_[i]; }
  int cell_index_of(int point) const { return cell_of_[point]; }
  bool is_uniform() const;
  bool is_singletons() const { return cell_count() == degree(); }
  bool is_universal() const { return cell_count() == 1; }

  // Finest partition coarser than both (transitive closure of the union
  // of the two equivalence relations).
  Partition join(const Partition& other) const;
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.cells_ == b.cells_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_;
};

// A finitely generated permutation group. Values are immutable after
// construction; the element list is computed on first use and cached.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);
  static PermGroup trivial(int degree);
  // Pre-seeds the element cache (used when the full element list is already
  // known, e.g. from the automorphism oracle or kernel filtering).
  static PermGroup with_elements(int degree, std::vector<Perm> generators,
                                 std::vector<Perm> elements);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  // Full element list of <generators> in breadth-first word order with
  // lexicographic tie-break on generator indices. Throws cap_exceeded when
  // the group is larger than cap.
  const std::vector<Perm>& elements(std::int64_t cap = kDefaultCap) const;
  std::int64_t order(std::int64_t cap = kDefaultCap) const;
  bool contains(const Perm& p, std::int64_t cap = kDefaultCap) const;

  bool is_transitive() const;
  bool is_abelian() const;  // pairwise generator commutation
  std::vector<std::vector<int>> orbits() const;  // ordered by minimal point

 private:
  int degree_;
  std::vector<Perm> gens_;
  mutable std::optional<std::vector<Perm>> elements_;
};

// <gens>-orbit of seed, sorted ascending.
std::vector<int> orbit(const std::vector<Perm>& gens, int seed);

struct SemiregularReport {
  bool semiregular = false;
  std::vector<std::vector<int>> orbits;  // ordered by minimal point
};

// True iff every orbit has size |H| (equivalently, only the identity fixes
// a point).
SemiregularReport is_semiregular(const PermGroup& h, std::int64_t cap = kDefaultCap);

// True iff each generator permutes the cells of b.
bool is_invariant_partition(const PermGroup& g, const Partition& b);

// Subgroup of all elements mapping each cell of b to itself setwise.
// Throws validation_error if b is not G-invariant.
PermGroup kernel_of_partition_action(const PermGroup& g, const Partition& b,
                                     std::int64_t cap = kDefaultCap);

// Finest G-invariant partition in which a and b share a cell (Atkinson's
// minimal block algorithm). Requires g transitive.
Partition minimal_block(const PermGroup& g, int a, int b);

// All G-invariant partitions: joins of minimal blocks over all point pairs
// plus the trivial ones, deduplicated and sorted. Requires g transitive.
std::vector<Partition> all_block_systems_oracle(const PermGroup& g);

bool is_primitive(const PermGroup& g);

// Small generating set extracted greedily from an element list.
std::vector<Perm> greedy_generators(int degree, const std::vector<Perm>& elements);

}  // namespace specblocks
