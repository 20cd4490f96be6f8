#include "qmagic/cyclegraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace qmagic {

namespace {

long checked_power(int l, int n, long limit, const char* who) {
  long d = 1;
  for (int i = 0; i < n; ++i) {
    if (d > limit / l)
      throw ResourceLimitError(std::string(who) + ": dimension l^n = " + std::to_string(l) + "^" +
                               std::to_string(n) + " exceeds limit " + std::to_string(limit));
    d *= l;
  }
  return d;
}

}  // namespace

long DiGraph::num_arcs() const {
  long a = 0;
  for (const auto& row : out_adj) a += static_cast<long>(row.size());
  return a;
}

long encode_vertex(int l, const std::vector<int>& digits) {
  long v = 0;
  for (int d : digits) {
    if (d < 0 || d >= l) throw std::invalid_argument("encode_vertex: digit out of range");
    v = v * l + d;
  }
  return v;
}

std::vector<int> decode_vertex(int l, int n, long index) {
  std::vector<int> digits(static_cast<size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    digits[static_cast<size_t>(j)] = static_cast<int>(index % l);
    index /= l;
  }
  if (index != 0) throw std::invalid_argument("decode_vertex: index out of range");
  return digits;
}

DiGraph build_cycle_power(int l, int n, long dim_limit) {
  if (l < 2) throw std::invalid_argument("build_cycle_power: l must be >= 2");
  if (n < 1) throw std::invalid_argument("build_cycle_power: n must be >= 1");
  const long size = checked_power(l, n, dim_limit, "build_cycle_power");
  DiGraph g;
  g.num_vertices = size;
  g.out_adj.resize(static_cast<size_t>(size));
  g.in_adj.resize(static_cast<size_t>(size));
  // Position j has place value l^(n-1-j); stepping digit j adds that value,
  // wrapping within the digit.
  std::vector<long> place(static_cast<size_t>(n));
  long p = 1;
  for (int j = n - 1; j >= 0; --j) {
    place[static_cast<size_t>(j)] = p;
    p *= l;
  }
  for (long v = 0; v < size; ++v) {
    std::vector<int> digits = decode_vertex(l, n, v);
    for (int j = 0; j < n; ++j) {
      long pj = place[static_cast<size_t>(j)];
      long w = (digits[static_cast<size_t>(j)] == l - 1) ? v - (l - 1) * pj : v + pj;
      g.out_adj[static_cast<size_t>(v)].push_back(w);
      g.in_adj[static_cast<size_t>(w)].push_back(v);
    }
  }
  for (auto& row : g.out_adj) std::sort(row.begin(), row.end());
  for (auto& row : g.in_adj) std::sort(row.begin(), row.end());
  return g;
}

PatternMatrix adjacency_pattern(const DiGraph& g) {
  PatternMatrix p(g.num_vertices);
  for (long v = 0; v < g.num_vertices; ++v)
    for (long w : g.out_adj[static_cast<size_t>(v)]) p.set(v, w);
  return p;
}

VertexSubset::VertexSubset(long universe)
    : universe_(universe), w_(static_cast<size_t>((universe + 63) / 64)) {
  if (universe < 1) throw std::invalid_argument("VertexSubset: empty universe");
}

VertexSubset VertexSubset::from_indices(long universe, const std::vector<long>& idx) {
  VertexSubset s(universe);
  for (long v : idx) s.insert(v);
  return s;
}

void VertexSubset::check(long v) const {
  if (v < 0 || v >= universe_) throw std::invalid_argument("VertexSubset: vertex out of range");
}

long VertexSubset::size() const {
  long n = 0;
  for (std::uint64_t w : w_) n += std::popcount(w);
  return n;
}

bool VertexSubset::contains(long v) const {
  check(v);
  return (w_[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u;
}

void VertexSubset::insert(long v) {
  check(v);
  w_[static_cast<size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
}

void VertexSubset::erase(long v) {
  check(v);
  w_[static_cast<size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<long> VertexSubset::to_indices() const {
  std::vector<long> out;
  for (long v = 0; v < universe_; ++v)
    if ((w_[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u) out.push_back(v);
  return out;
}

AdjacencyMasks::AdjacencyMasks(const DiGraph& g)
    : universe_(g.num_vertices), words_(static_cast<int>((g.num_vertices + 63) / 64)) {
  out_.assign(static_cast<size_t>(universe_) * words_, 0);
  in_.assign(static_cast<size_t>(universe_) * words_, 0);
  for (long v = 0; v < universe_; ++v) {
    for (long w : g.out_adj[static_cast<size_t>(v)])
      out_[static_cast<size_t>(v) * words_ + (w >> 6)] |= std::uint64_t{1} << (w & 63);
    for (long w : g.in_adj[static_cast<size_t>(v)])
      in_[static_cast<size_t>(v) * words_ + (w >> 6)] |= std::uint64_t{1} << (w & 63);
  }
}

int AdjacencyMasks::max_induced_degree(const std::uint64_t* subset_words,
                                       const std::vector<long>& members) const {
  int best = 0;
  for (long v : members) {
    const std::uint64_t* o = out_row(v);
    const std::uint64_t* i = in_row(v);
    int dout = 0, din = 0;
    for (int w = 0; w < words_; ++w) {
      dout += std::popcount(o[w] & subset_words[w]);
      din += std::popcount(i[w] & subset_words[w]);
    }
    best = std::max(best, std::max(dout, din));
  }
  return best;
}

DegreeStats induced_degree_stats(const DiGraph& g, const VertexSubset& s) {
  if (s.universe() != g.num_vertices)
    throw std::invalid_argument("induced_degree_stats: subset universe mismatch");
  DegreeStats stats;
  const auto count_in = [&s](const std::vector<long>& nbrs) {
    int n = 0;
    for (long w : nbrs)
      if (s.contains(w)) ++n;
    return n;
  };
  for (long v : s.to_indices()) {
    int dout = count_in(g.out_adj[static_cast<size_t>(v)]);
    int din = count_in(g.in_adj[static_cast<size_t>(v)]);
    stats.per_vertex.push_back({v, dout, din});
    stats.max_degree = std::max(stats.max_degree, std::max(dout, din));
  }
  return stats;
}

bool verify_independent(const DiGraph& g, const VertexSubset& s) {
  return induced_degree_stats(g, s).max_degree == 0;
}

VertexSubset referee_independent_set(int l, int m, long dim_limit) {
  if (l < 2) throw std::invalid_argument("referee_independent_set: l must be >= 2");
  if (m < 1) throw std::invalid_argument("referee_independent_set: m must be >= 1");
  const long size = checked_power(l, m, dim_limit, "referee_independent_set");
  // Classes 2k+1 for integer k >= 0 with k < (l-1)/2, taken literally.
  std::vector<bool> wanted(static_cast<size_t>(l), false);
  for (int k = 0; 2 * k < l - 1; ++k) wanted[static_cast<size_t>(2 * k + 1)] = true;
  VertexSubset s(size);
  for (long v = 0; v < size; ++v) {
    int sum = 0;
    for (int d : decode_vertex(l, m, v)) sum += d;
    if (wanted[static_cast<size_t>(sum % l)]) s.insert(v);
  }
  return s;
}

PatternReport verify_pattern_equivalence(int l, int n, long dim_limit) {
  PatternReport rep;
  rep.l = l;
  rep.n = n;
  DiGraph g = build_cycle_power(l, n, dim_limit);
  rep.dim = g.num_vertices;
  PatternMatrix from_graph = adjacency_pattern(g);
  PatternMatrix from_matrix = abs_pattern(build_B(l, n, dim_limit));
  rep.pass = true;
  for (long r = 0; r < rep.dim && rep.pass; ++r)
    for (long c = 0; c < rep.dim; ++c)
      if (from_graph.at(r, c) != from_matrix.at(r, c)) {
        rep.pass = false;
        rep.bad_row = r;
        rep.bad_col = c;
        break;
      }
  return rep;
}

std::string to_dot(const DiGraph& g, const VertexSubset* highlight) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (long v = 0; v < g.num_vertices; ++v) {
    os << "  " << v;
    if (highlight != nullptr && highlight->contains(v)) os << " [style=filled, fillcolor=lightblue]";
    os << ";\n";
  }
  for (long v = 0; v < g.num_vertices; ++v)
    for (long w : g.out_adj[static_cast<size_t>(v)]) os << "  " << v << " -> " << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qmagic
