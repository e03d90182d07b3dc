#pragma once

// Brute-force validators: finite-field point counts, T-fixed membership,
// Schubert conditions on explicit flags, and the exhaustive sweep.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rankvar/bridge.hpp"
#include "rankvar/enumerate.hpp"
#include "rankvar/error.hpp"
#include "rankvar/field.hpp"
#include "rankvar/io.hpp"
#include "rankvar/permutations.hpp"
#include "rankvar/ranksets.hpp"
#include "rankvar/singular.hpp"

namespace rankvar {

struct OracleLimits {
  int max_n = 6;
  int max_q = 11;

  /// RANKVAR_MAX_N raises max_n; correctness is unaffected, runtime is not.
  static OracleLimits from_env() {
    OracleLimits lim;
    if (const char* s = std::getenv("RANKVAR_MAX_N")) {
      int v = std::atoi(s);
      if (v > 0) lim.max_n = std::min(v, containment_max_n);
    }
    return lim;
  }
};

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Histogram of the matroids of all k-planes in F_q^n. A matroid is stored as
/// a bitmask over the k-subsets of columns (bit = nonzero maximal minor).
class PointCounter {
 public:
  PointCounter(int k, int n, int q) : k_(k), n_(n), q_(q) {
    if (k < 1 || k > n || n > 16 || k > 8) throw capability_error("PointCounter: unsupported (k, n)");
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (std::popcount(s) == k) subsets_.push_back(s);
    if (subsets_.size() > 64) throw capability_error("PointCounter: too many column subsets");
    for (std::size_t i = 0; i < subsets_.size(); ++i) index_[subsets_[i]] = static_cast<int>(i);
    if (2 * k > n && n - k >= 1) {
      PointCounter dual(n - k, n, q);
      const std::uint32_t full = (1u << n) - 1;
      for (const auto& [mask, count] : dual.histogram_) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < dual.subsets_.size(); ++i)
          if (mask >> i & 1) m |= std::uint64_t{1} << index_.at(full & ~dual.subsets_[i]);
        histogram_[m] += count;
      }
    } else {
      enumerate();
    }
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  const std::unordered_map<std::uint64_t, long long>& histogram() const noexcept { return histogram_; }

  /// Number of k-planes meeting every coordinate subspace W_S in at least
  /// generic_rank(M, S) dimensions.
  long long count(const RankSet& M) const {
    if (M.n() != n_ || M.k() != k_) throw rankvar::domain_error("PointCounter: shape mismatch");
    std::vector<std::pair<std::uint32_t, int>> need;
    for (std::uint32_t S = 0; S < (1u << n_); ++S) {
      int g = generic_rank(M, S);
      if (g > 0) need.emplace_back(S, g);
    }
    const std::uint32_t full = (1u << n_) - 1;
    long long total = 0;
    for (const auto& [mask, cnt] : histogram_) {
      bool ok = true;
      for (const auto& [S, g] : need)
        if (k_ - rank_of_columns(mask, full & ~S) < g) {
          ok = false;
          break;
        }
      if (ok) total += cnt;
    }
    return total;
  }

  /// Matroid rank of a column set.
  int rank_of_columns(std::uint64_t matroid, std::uint32_t cols) const {
    int best = 0;
    for (std::size_t i = 0; i < subsets_.size(); ++i)
      if (matroid >> i & 1) best = std::max(best, std::popcount(subsets_[i] & cols));
    return best;
  }

 private:
  void enumerate() {
    const int k = k_, n = n_;
    inverse_.assign(static_cast<std::size_t>(q_), 0);
    for (int x = 1; x < q_; ++x) inverse_[static_cast<std::size_t>(x)] = static_cast<int>(Fp(x, q_).inverse().value());
    std::vector<int> pivots;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto visit_pivots = [&](auto&& self, int next) -> void {
      if (static_cast<int>(pivots.size()) == k) {
        std::vector<std::pair<int, int>> free;
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
        for (int i = 0; i < k; ++i) {
          for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
          for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(i, c);
        }
        while (true) {
          ++histogram_[matroid_of(a)];
          std::size_t t = 0;
          for (; t < free.size(); ++t) {
            int& x = a[static_cast<std::size_t>(free[t].first)][static_cast<std::size_t>(free[t].second)];
            if (++x < q_) break;
            x = 0;
          }
          if (t == free.size()) break;
        }
        return;
      }
      for (int c = next; c < n; ++c) {
        pivots.push_back(c);
        self(self, c + 1);
        pivots.pop_back();
      }
    };
    visit_pivots(visit_pivots, 0);
  }

  std::uint64_t matroid_of(const std::vector<std::vector<int>>& a) const {
    std::uint64_t m = 0;
    int sub[8][8];
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      int c = 0;
      for (int col = 0; col < n_; ++col)
        if (subsets_[s] >> col & 1) {
          for (int r = 0; r < k_; ++r) sub[r][c] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
          ++c;
        }
      if (nonsingular(sub)) m |= std::uint64_t{1} << s;
    }
    return m;
  }

  bool nonsingular(int (&s)[8][8]) const {
    for (int c = 0; c < k_; ++c) {
      int piv = c;
      while (piv < k_ && s[piv][c] == 0) ++piv;
      if (piv == k_) return false;
      if (piv != c)
        for (int j = 0; j < k_; ++j) std::swap(s[piv][j], s[c][j]);
      const long long inv = inverse_[static_cast<std::size_t>(s[c][c])];
      for (int r = c + 1; r < k_; ++r) {
        if (s[r][c] == 0) continue;
        const long long f = s[r][c] * inv % q_;
        for (int j = c; j < k_; ++j) s[r][j] = static_cast<int>(((s[r][j] - f * s[c][j]) % q_ + q_) % q_);
      }
    }
    return true;
  }

  int k_, n_, q_;
  std::vector<std::uint32_t> subsets_;
  std::unordered_map<std::uint32_t, int> index_;
  std::unordered_map<std::uint64_t, long long> histogram_;
  std::vector<int> inverse_;
};

/// Process-wide cache of point counters keyed by (k, n, q).
inline const PointCounter& point_counter(int k, int n, int q) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<PointCounter>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, n, q}];
  if (!slot) slot = std::make_unique<PointCounter>(k, n, q);
  return *slot;
}

inline long long count_points(const RankSet& M, int q, OracleLimits lim = OracleLimits::from_env()) {
  if (!is_prime(q)) throw rankvar::domain_error("count_points: q must be prime");
  if (M.n() > lim.max_n) throw capability_error("count_points: n=" + std::to_string(M.n()) + " exceeds the limit " +
                                                std::to_string(lim.max_n));
  if (q > lim.max_q) throw capability_error("count_points: q=" + std::to_string(q) + " exceeds the limit " +
                                            std::to_string(lim.max_q));
  return point_counter(M.k(), M.n(), q).count(M);
}

/// Exact Lagrange interpolation through (x_i, y_i); coefficients ascending.
inline std::vector<rational> interpolate(const std::vector<rational>& xs, const std::vector<rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<rational> out(m, rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<rational> basis{rational(1)};
    rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<rational> next(basis.size() + 1, rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t t = 0; t < basis.size(); ++t) out[t] += ys[i] * basis[t] / denom;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

struct PointCountProfile {
  RankSet M;
  std::vector<std::pair<int, long long>> counts;
  std::vector<rational> polynomial;
  int degree = -1;
};

/// Interpolates the point counts and reads off the degree. Exact with at
/// least k(n-k)+1 samples; with fewer, accepted only when the interpolant
/// degree leaves one sample to spare as a consistency check.
inline PointCountProfile fit_profile(const RankSet& M, const std::vector<int>& primes,
                                     OracleLimits lim = OracleLimits::from_env()) {
  PointCountProfile prof{M, {}, {}, -1};
  std::vector<rational> xs, ys;
  for (int q : primes) {
    long long c = count_points(M, q, lim);
    prof.counts.emplace_back(q, c);
    xs.emplace_back(q);
    ys.emplace_back(c);
  }
  prof.polynomial = interpolate(xs, ys);
  prof.degree = static_cast<int>(prof.polynomial.size()) - 1;
  const int bound = M.k() * (M.n() - M.k());
  const int points = static_cast<int>(primes.size());
  if (points < bound + 1 && prof.degree > points - 2)
    throw insufficient_samples("fit_dimension: " + std::to_string(points) + " samples cannot pin a degree up to " +
                               std::to_string(bound));
  return prof;
}

inline int fit_dimension(const RankSet& M, const std::vector<int>& primes = {2, 3, 5, 7, 11},
                         OracleLimits lim = OracleLimits::from_env()) {
  return fit_profile(M, primes, lim).degree;
}

/// Perfect matching between `subset` and the intervals of M.
inline bool tfixed_member(const RankSet& M, const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) != M.k()) throw rankvar::domain_error("tfixed_member: subset must have k indices");
  for (int i : subset)
    if (i < 1 || i > M.n()) throw rankvar::domain_error("tfixed_member: index outside [1,n]");
  IndexMask S = mask_of(std::span<const int>(subset));
  if (std::popcount(S) != M.k()) throw rankvar::domain_error("tfixed_member: repeated index");
  return detail::interval_matching(M.intervals(), S, M.n()) == M.k();
}

/// dim(V_j ∩ F_{u_i}) >= s_j^i for every level j and entry i.
template <class F>
bool schubert_member(const PartialPermutation& u, const LiftedFlag<F>& flag) {
  if (u.shape() != flag.shape) throw rankvar::domain_error("schubert_member: shape mismatch");
  const int n = u.shape().n();
  for (int j = 1; j <= u.shape().levels(); ++j) {
    const auto& V = flag.levels[static_cast<std::size_t>(j - 1)];
    if (rank(V) != u.shape().k(j)) return false;
    for (int i = 1; i <= u.size(); ++i) {
      std::vector<bool> keep(static_cast<std::size_t>(n) + 1, false);
      for (int x = 1; x <= u[i]; ++x) keep[static_cast<std::size_t>(x)] = true;
      if (intersection_with_coordinates(V, keep) < u.multi_index(i)[static_cast<std::size_t>(j - 1)]) return false;
    }
  }
  for (int j = 1; j < u.shape().levels(); ++j) {
    Mat<F> both = flag.levels[static_cast<std::size_t>(j)];
    const auto& lower = flag.levels[static_cast<std::size_t>(j - 1)];
    both.insert(both.end(), lower.begin(), lower.end());
    if (rank(both) != u.shape().k(j + 1)) return false;  // nesting
  }
  return true;
}

/// Same conditions against G_i = span(e_{n-i+1}, ..., e_n), by reversing coordinates.
template <class F>
bool opposite_schubert_member(const PartialPermutation& v, const LiftedFlag<F>& flag) {
  LiftedFlag<F> rev = flag;
  for (auto& level : rev.levels)
    for (auto& row : level) std::reverse(row.begin(), row.end());
  return schubert_member(v, rev);
}

template <class F>
bool richardson_member(const RichardsonDatum& R, const LiftedFlag<F>& flag) {
  return schubert_member(R.u(), flag) && opposite_schubert_member(R.v(), flag);
}

/// Coordinate flag V_j = span(e_i : i in block <= j of w).
inline LiftedFlag<rational> coordinate_flag(const PartialPermutation& w) {
  const int n = w.shape().n();
  LiftedFlag<rational> flag{w.shape(), std::vector<Mat<rational>>(static_cast<std::size_t>(w.shape().levels()))};
  for (int j = 1; j <= w.shape().levels(); ++j)
    for (int i = 1; i <= w.shape().k(j); ++i) {
      Vec<rational> e(static_cast<std::size_t>(n), rational(0));
      e[static_cast<std::size_t>(w[i] - 1)] = 1;
      flag.levels[static_cast<std::size_t>(j - 1)].push_back(std::move(e));
    }
  return flag;
}

// ------------------------------------------------------------ the sweep

struct CheckResult {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::string first_counterexample;  // empty when nothing failed

  bool passed() const noexcept { return failed == 0; }
};

struct SuiteReport {
  int k_max = 0;
  int n_max = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
};

struct SuiteOptions {
  int k_max = 4;
  int n_max = 8;
  int jobs = 1;
  bool dimension_fits = true;  // point counts only for n <= fit_max_n
  int fit_max_n = 5;
};

namespace detail {

/// Applies `check` to every element, in parallel, keeping the first
/// counterexample in input order.
template <class T, class Check>
CheckResult parallel_check(const std::string& name, const std::vector<T>& items, int jobs, Check check) {
  CheckResult res{name, static_cast<long long>(items.size()), 0, {}};
  std::vector<std::optional<std::string>> failure(items.size());
  const std::size_t threads = static_cast<std::size_t>(std::max(1, jobs));
  auto worker = [&](std::size_t t) {
    for (std::size_t i = t; i < items.size(); i += threads) failure[i] = check(items[i]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failure)
    if (f) {
      if (res.failed == 0) res.first_counterexample = *f;
      ++res.failed;
    }
  return res;
}

}  // namespace detail

inline SuiteReport exhaustive_suite(const SuiteOptions& opt) {
  std::vector<RankSet> all;
  for (int n = 1; n <= opt.n_max; ++n)
    for (int k = 1; k <= std::min(opt.k_max, n); ++k) {
      auto v = all_rank_sets(k, n);
      all.insert(all.end(), v.begin(), v.end());
    }
  SuiteReport rep{opt.k_max, opt.n_max, {}};
  using R = std::optional<std::string>;
  rep.checks.push_back(detail::parallel_check("roundtrip", all, opt.jobs, [](const RankSet& M) -> R {
    if (roundtrip_rank_set(M) == M) return std::nullopt;
    return render_text(M);
  }));
  rep.checks.push_back(detail::parallel_check("birational_dimension", all, opt.jobs, [](const RankSet& M) -> R {
    if (richardson_dimension(rich(M)) == dimension(M)) return std::nullopt;
    return render_text(M);
  }));
  rep.checks.push_back(detail::parallel_check("smoothness_equivalence", all, opt.jobs, [](const RankSet& M) -> R {
    if (is_smooth_rank(M) == rank_singular_locus(M).smooth()) return std::nullopt;
    return render_text(M);
  }));
  rep.checks.push_back(detail::parallel_check("normalize_order_independence", all, opt.jobs, [](const RankSet& M) -> R {
    for (auto& c : detail::exceptional_candidates(M)) {
      auto a = normalize(M.n(), c, normalize_order::smallest_first);
      auto b = normalize(M.n(), c, normalize_order::largest_first);
      if (a.has_value() != b.has_value()) return render_text(M);
      if (a && dimension(*a) != dimension(*b)) return render_text(M);
      if (a && M.n() <= 5 && count_points(*a, 2) != count_points(*b, 2)) return render_text(M);
    }
    return std::nullopt;
  }));
  if (opt.dimension_fits) {
    std::vector<RankSet> small;
    for (const auto& M : all)
      if (M.n() <= opt.fit_max_n) small.push_back(M);
    for (int n = 1; n <= opt.fit_max_n; ++n)
      for (int k = 1; k <= std::min(opt.k_max, n); ++k)
        for (int q : {2, 3, 5, 7, 11, 13, 17}) point_counter(k, n, q);  // warm the cache serially
    rep.checks.push_back(detail::parallel_check("dimension_fit", small, opt.jobs, [](const RankSet& M) -> R {
      OracleLimits lim{6, 17};
      int d;
      try {
        d = fit_dimension(M, {2, 3, 5, 7, 11}, lim);
      } catch (const insufficient_samples&) {
        d = fit_dimension(M, {2, 3, 5, 7, 11, 13, 17}, lim);
      }
      if (d == dimension(M)) return std::nullopt;
      return render_text(M) + " fitted " + std::to_string(d);
    }));
  }
  return rep;
}

}  // namespace rankvar
