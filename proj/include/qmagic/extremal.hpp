#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmagic/cyclegraph.hpp"

namespace qmagic {

/// Default cap on the number of subsets an exhaustive run may enumerate.
inline constexpr std::uint64_t kDefaultEnumLimit = 10'000'000;

BigInt binomial(long n, long k);

/// Colexicographic enumeration of k-subsets of [0, universe) as ascending
/// position vectors.  colex_next advances in place and returns false after
/// the last combination.
std::vector<long> colex_first(int k);
bool colex_next(std::vector<long>& c, long universe);

/// (l-1) * l^(n-1) + 1, the smallest subset size with a forced degree.
long threshold_size(int l, int n);

/// The degree bound n^(1/l), as a real together with its integer ceiling
/// (the effective bound, since degrees are integers).  The ceiling is
/// computed in exact integer arithmetic.
struct DegreeBound {
  double real_bound = 0.0;
  int ceil_bound = 0;
};

DegreeBound degree_bound(int l, int n);

struct TheoremReport {
  int l = 0;
  int n = 0;
  long threshold_size = 0;
  double bound_real = 0.0;
  int bound_ceil = 0;
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t subsets_checked = 0;
  int min_max_degree = 0;  // minimum over checked subsets of the induced max degree
  bool theorem_holds = false;
  std::optional<std::vector<long>> counterexample;
  std::uint64_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;     // sampled mode only
  double elapsed_ms = 0.0;
};

/// Check every subset of threshold size, in colexicographic order.  Results
/// are identical for any worker count (threads = 0 picks one per core).
/// Throws ResourceLimitError, carrying the exact subset count, when
/// binomial(l^n, threshold) exceeds enum_limit.
TheoremReport verify_theorem_exhaustive(int l, int n, int threads = 1,
                                        std::uint64_t enum_limit = kDefaultEnumLimit,
                                        long dim_limit = kDefaultDimLimit);

/// Check seeded uniform random subsets of threshold size (each drawn without
/// replacement within the subset).  Each sample derives its own generator
/// from (seed, sample index), so reports are byte-identical for any worker
/// count.  samples must be >= 1.
TheoremReport verify_theorem_sampled(int l, int n, std::uint64_t samples, std::uint64_t seed,
                                     int threads = 1, long dim_limit = kDefaultDimLimit);

enum class SearchInit { Random, Referee };

struct SearchResult {
  int l = 0;
  int n = 0;
  long target_size = 0;
  std::vector<long> best_subset;  // ascending
  int best_max_degree = 0;        // re-verified against best_subset
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  SearchInit init = SearchInit::Random;
};

/// Plateau-accepting local search for a low induced max degree at the given
/// subset size: single-vertex swaps, accepted when the objective does not
/// increase.  Deterministic for a fixed seed.
SearchResult search_min_max_degree(int l, int n, long size, std::uint64_t iters,
                                   std::uint64_t seed, SearchInit init = SearchInit::Random,
                                   long dim_limit = kDefaultDimLimit);

}  // namespace qmagic
