#include "qmagic/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace qmagic {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform draw from [0, n) by rejection; avoids the library distribution so
// streams are pinned to the engine output alone.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

long checked_power(int l, int n, long limit) {
  long d = 1;
  for (int i = 0; i < n; ++i) {
    if (d > limit / l)
      throw ResourceLimitError("dimension l^n = " + std::to_string(l) + "^" + std::to_string(n) +
                               " exceeds limit " + std::to_string(limit));
    d *= l;
  }
  return d;
}

int resolve_threads(int threads) {
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
  if (threads == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  return threads;
}

struct WorkerResult {
  int min_max_degree = INT_MAX;
  std::uint64_t counterexample_rank = UINT64_MAX;
  std::vector<long> counterexample;
};

void fill_words(std::vector<std::uint64_t>& words, const std::vector<long>& members) {
  std::fill(words.begin(), words.end(), 0);
  for (long v : members) words[static_cast<size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
}

// Distinct k-subset of [0, universe) by Floyd's algorithm; ascending output.
std::vector<long> sample_subset(std::mt19937_64& rng, long universe, long k,
                                std::vector<std::uint64_t>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  std::vector<long> members;
  members.reserve(static_cast<size_t>(k));
  for (long j = universe - k; j < universe; ++j) {
    long t = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(j) + 1));
    long pick = (scratch[static_cast<size_t>(t >> 6)] >> (t & 63)) & 1u ? j : t;
    scratch[static_cast<size_t>(pick >> 6)] |= std::uint64_t{1} << (pick & 63);
    members.push_back(pick);
  }
  std::sort(members.begin(), members.end());
  return members;
}

TheoremReport make_base_report(int l, int n, const char* mode) {
  TheoremReport rep;
  rep.l = l;
  rep.n = n;
  rep.threshold_size = threshold_size(l, n);
  DegreeBound b = degree_bound(l, n);
  rep.bound_real = b.real_bound;
  rep.bound_ceil = b.ceil_bound;
  rep.mode = mode;
  return rep;
}

void merge_workers(TheoremReport& rep, const std::vector<WorkerResult>& results) {
  std::uint64_t best_rank = UINT64_MAX;
  rep.min_max_degree = INT_MAX;
  for (const WorkerResult& r : results) {
    rep.min_max_degree = std::min(rep.min_max_degree, r.min_max_degree);
    if (r.counterexample_rank < best_rank) {
      best_rank = r.counterexample_rank;
      rep.counterexample = r.counterexample;
    }
  }
  rep.theorem_holds = !rep.counterexample.has_value();
}

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::vector<long> colex_first(int k) {
  std::vector<long> c(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
  return c;
}

bool colex_next(std::vector<long>& c, long universe) {
  const size_t k = c.size();
  for (size_t i = 0; i < k; ++i) {
    long cap = (i + 1 < k) ? c[i + 1] : universe;
    if (c[i] + 1 < cap) {
      ++c[i];
      for (size_t j = 0; j < i; ++j) c[j] = static_cast<long>(j);
      return true;
    }
  }
  return false;
}

long threshold_size(int l, int n) {
  long p = 1;
  for (int i = 0; i < n - 1; ++i) p *= l;
  return (l - 1) * p + 1;
}

DegreeBound degree_bound(int l, int n) {
  if (l < 2) throw std::invalid_argument("degree_bound: l must be >= 2");
  if (n < 1) throw std::invalid_argument("degree_bound: n must be >= 1");
  DegreeBound b;
  b.real_bound = std::pow(static_cast<double>(n), 1.0 / l);
  int m = 1;
  for (;;) {
    BigInt p = 1;
    for (int i = 0; i < l; ++i) p *= m;
    if (p >= n) break;
    ++m;
  }
  b.ceil_bound = m;
  return b;
}

TheoremReport verify_theorem_exhaustive(int l, int n, int threads, std::uint64_t enum_limit,
                                        long dim_limit) {
  const auto t0 = std::chrono::steady_clock::now();
  // Guard before threshold_size: its l^(n-1) product is only safe in-limit.
  const long size = checked_power(l, n, dim_limit);
  TheoremReport rep = make_base_report(l, n, "exhaustive");
  const long k = rep.threshold_size;
  BigInt total_exact = binomial(size, k);
  if (total_exact > enum_limit)
    throw ResourceLimitError("subset count binomial(" + std::to_string(size) + ", " +
                             std::to_string(k) + ") = " + total_exact.str() +
                             " exceeds enumeration limit " + std::to_string(enum_limit));
  const std::uint64_t total = total_exact.convert_to<std::uint64_t>();
  rep.subsets_checked = total;

  DiGraph g = build_cycle_power(l, n, dim_limit);
  AdjacencyMasks masks(g);
  const int workers = resolve_threads(threads);
  const int bound_ceil = rep.bound_ceil;
  std::vector<WorkerResult> results(static_cast<size_t>(workers));

  // Every worker walks the full colex sequence (cheap) and checks its own
  // rank stripe; merging by stripe keeps results thread-count independent.
  auto run = [&](int w) {
    WorkerResult& out = results[static_cast<size_t>(w)];
    std::vector<std::uint64_t> words(static_cast<size_t>((size + 63) / 64));
    std::vector<long> c = colex_first(static_cast<int>(k));
    std::uint64_t rank = 0;
    do {
      if (rank % static_cast<std::uint64_t>(workers) == static_cast<std::uint64_t>(w)) {
        fill_words(words, c);
        int deg = masks.max_induced_degree(words.data(), c);
        out.min_max_degree = std::min(out.min_max_degree, deg);
        if (deg < bound_ceil && rank < out.counterexample_rank) {
          out.counterexample_rank = rank;
          out.counterexample = c;
        }
      }
      ++rank;
    } while (colex_next(c, size));
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  merge_workers(rep, results);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

TheoremReport verify_theorem_sampled(int l, int n, std::uint64_t samples, std::uint64_t seed,
                                     int threads, long dim_limit) {
  const auto t0 = std::chrono::steady_clock::now();
  if (samples == 0) throw std::invalid_argument("verify_theorem_sampled: samples must be >= 1");
  const long size = checked_power(l, n, dim_limit);
  TheoremReport rep = make_base_report(l, n, "sampled");
  const long k = rep.threshold_size;
  rep.samples = samples;
  rep.seed = seed;
  rep.subsets_checked = samples;

  DiGraph g = build_cycle_power(l, n, dim_limit);
  AdjacencyMasks masks(g);
  const int workers = resolve_threads(threads);
  const int bound_ceil = rep.bound_ceil;
  std::vector<WorkerResult> results(static_cast<size_t>(workers));

  auto run = [&](int w) {
    WorkerResult& out = results[static_cast<size_t>(w)];
    std::vector<std::uint64_t> words(static_cast<size_t>((size + 63) / 64));
    std::vector<std::uint64_t> scratch(words.size());
    for (std::uint64_t i = static_cast<std::uint64_t>(w); i < samples;
         i += static_cast<std::uint64_t>(workers)) {
      // Per-sample generator: invariant under the worker partition.
      std::mt19937_64 rng(splitmix64(splitmix64(seed) ^ (i + 1)));
      std::vector<long> members = sample_subset(rng, size, k, scratch);
      fill_words(words, members);
      int deg = masks.max_induced_degree(words.data(), members);
      out.min_max_degree = std::min(out.min_max_degree, deg);
      if (deg < bound_ceil && i < out.counterexample_rank) {
        out.counterexample_rank = i;
        out.counterexample = members;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  merge_workers(rep, results);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SearchResult search_min_max_degree(int l, int n, long size, std::uint64_t iters,
                                   std::uint64_t seed, SearchInit init, long dim_limit) {
  const long universe = checked_power(l, n, dim_limit);
  if (size < 1 || size > universe)
    throw std::invalid_argument("search_min_max_degree: size must be in [1, l^n]");

  DiGraph g = build_cycle_power(l, n, dim_limit);
  AdjacencyMasks masks(g);
  std::mt19937_64 rng(splitmix64(seed));

  std::vector<std::uint64_t> words(static_cast<size_t>((universe + 63) / 64));
  std::vector<long> members;
  if (init == SearchInit::Random) {
    std::vector<std::uint64_t> scratch(words.size());
    members = sample_subset(rng, universe, size, scratch);
  } else {
    members = referee_independent_set(l, n, dim_limit).to_indices();
    // Pad with random outside vertices or drop random members to hit size.
    fill_words(words, members);
    while (static_cast<long>(members.size()) > size) {
      size_t at = static_cast<size_t>(bounded(rng, members.size()));
      members.erase(members.begin() + static_cast<long>(at));
    }
    while (static_cast<long>(members.size()) < size) {
      long v = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(universe)));
      if ((words[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u) continue;
      words[static_cast<size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
      members.push_back(v);
    }
    std::sort(members.begin(), members.end());
  }
  fill_words(words, members);

  std::vector<long> outside;
  outside.reserve(static_cast<size_t>(universe - size));
  for (long v = 0; v < universe; ++v)
    if (!((words[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u)) outside.push_back(v);

  int cur = masks.max_induced_degree(words.data(), members);
  std::vector<long> best_members = members;
  int best = cur;

  const auto set_bit = [&words](long v) {
    words[static_cast<size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  };
  const auto clear_bit = [&words](long v) {
    words[static_cast<size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  };

  if (!outside.empty() && size < universe) {
    for (std::uint64_t it = 0; it < iters; ++it) {
      size_t mi = static_cast<size_t>(bounded(rng, members.size()));
      size_t oi = static_cast<size_t>(bounded(rng, outside.size()));
      long leave = members[mi], enter = outside[oi];
      clear_bit(leave);
      set_bit(enter);
      members[mi] = enter;
      int obj = masks.max_induced_degree(words.data(), members);
      if (obj <= cur) {
        cur = obj;
        outside[oi] = leave;
        if (cur < best) {
          best = cur;
          best_members = members;
        }
      } else {
        clear_bit(enter);
        set_bit(leave);
        members[mi] = leave;
      }
    }
  }

  SearchResult res;
  res.l = l;
  res.n = n;
  res.target_size = size;
  std::sort(best_members.begin(), best_members.end());
  res.best_subset = std::move(best_members);
  res.iterations = iters;
  res.seed = seed;
  res.init = init;
  // Certificate: the reported objective is recomputed from the subset itself.
  fill_words(words, res.best_subset);
  res.best_max_degree = masks.max_induced_degree(words.data(), res.best_subset);
  return res;
}

}  // namespace qmagic
