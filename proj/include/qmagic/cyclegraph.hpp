#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmagic/qmatrix.hpp"

namespace qmagic {

/// Directed graph on vertices 0..num_vertices-1 with sorted adjacency lists
/// and at most one arc per ordered pair.  Immutable after construction.
struct DiGraph {
  long num_vertices = 0;
  std::vector<std::vector<long>> out_adj;
  std::vector<std::vector<long>> in_adj;

  long num_arcs() const;
};

/// Vertex <-> digit-tuple codec for C_l^n, big endian: digit 0 is the most
/// significant, index = sum digits[j] * l^(n-1-j).  This matches the
/// Kronecker recursion, whose y-term steps the leading digit.
long encode_vertex(int l, const std::vector<int>& digits);
std::vector<int> decode_vertex(int l, int n, long index);

/// The n-th Cartesian power of the directed l-cycle: one arc per single-digit
/// increment mod l.  Every vertex has out-degree and in-degree n.
DiGraph build_cycle_power(int l, int n, long dim_limit = kDefaultDimLimit);

/// 0/1 adjacency matrix of g (entry (i,j) = 1 iff arc i -> j).
PatternMatrix adjacency_pattern(const DiGraph& g);

/// Subset of [0, universe) as a packed bitset.
class VertexSubset {
 public:
  explicit VertexSubset(long universe);
  static VertexSubset from_indices(long universe, const std::vector<long>& idx);

  long universe() const { return universe_; }
  long size() const;
  bool contains(long v) const;
  void insert(long v);
  void erase(long v);
  std::vector<long> to_indices() const;
  const std::vector<std::uint64_t>& words() const { return w_; }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) = default;

 private:
  long universe_;
  std::vector<std::uint64_t> w_;
  void check(long v) const;
};

/// Per-vertex out/in adjacency as bit rows; the induced-degree kernels run on
/// this instead of the adjacency lists.
class AdjacencyMasks {
 public:
  explicit AdjacencyMasks(const DiGraph& g);

  long universe() const { return universe_; }
  int words_per_row() const { return words_; }
  const std::uint64_t* out_row(long v) const { return &out_[static_cast<size_t>(v) * words_]; }
  const std::uint64_t* in_row(long v) const { return &in_[static_cast<size_t>(v) * words_]; }

  /// max over v in the subset of max(out-degree within, in-degree within).
  int max_induced_degree(const std::uint64_t* subset_words, const std::vector<long>& members) const;

 private:
  long universe_;
  int words_;
  std::vector<std::uint64_t> out_, in_;
};

struct DegreeStats {
  struct Entry {
    long vertex;
    int out_deg;  // out-neighbors inside the subset
    int in_deg;   // in-neighbors inside the subset
  };
  std::vector<Entry> per_vertex;  // one entry per subset member, ascending
  int max_degree = 0;             // max over members of max(out, in)
};

/// Exact induced-subgraph degree counts, restricted to s.
DegreeStats induced_degree_stats(const DiGraph& g, const VertexSubset& s);

/// True iff no arc of g has both endpoints in s.
bool verify_independent(const DiGraph& g, const VertexSubset& s);

/// The union of digit-sum classes S_{2k+1} over integers k with k < (l-1)/2,
/// where S_j holds the vertices of C_l^m whose digit sum is j mod l.
VertexSubset referee_independent_set(int l, int m, long dim_limit = kDefaultDimLimit);

/// Outcome of comparing M(C_l^n) with the absolute-value pattern of B_n.
struct PatternReport {
  int l = 0;
  int n = 0;
  long dim = 0;
  bool pass = false;
  long bad_row = -1;
  long bad_col = -1;
};

/// Build the graph from digit tuples and the matrix from the Kronecker
/// recursion, then test exact 0/1 equality of the two patterns.
PatternReport verify_pattern_equivalence(int l, int n, long dim_limit = kDefaultDimLimit);

/// Graphviz rendering; vertices in highlight (when given) are drawn filled.
std::string to_dot(const DiGraph& g, const VertexSubset* highlight = nullptr);

}  // namespace qmagic
