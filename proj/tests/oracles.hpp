#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls the library routine it is meant to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rankvar/rankvar.hpp"

namespace oracle {

using rankvar::Interval;
using rankvar::RankSet;

/// Every k-set of intervals in [1,n], filtered for distinct endpoints.
inline std::vector<RankSet> naive_rank_sets(int k, int n) {
  std::vector<Interval> all;
  for (int l = 1; l <= n; ++l)
    for (int r = l; r <= n; ++r) all.push_back({l, r});
  std::vector<RankSet> out;
  std::vector<Interval> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      std::set<int> ls, rs;
      for (const auto& w : cur) ls.insert(w.l), rs.insert(w.r);
      if (static_cast<int>(ls.size()) == k && static_cast<int>(rs.size()) == k) out.emplace_back(n, cur);
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      cur.push_back(all[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Dimension straight from the definition: sizes minus containment pairs.
inline int naive_dimension(const RankSet& M) {
  int d = 0;
  for (const auto& a : M.intervals()) {
    d += a.r - a.l + 1;
    for (const auto& b : M.intervals())
      if (a.l <= b.l && b.r <= a.r) --d;
  }
  return d;
}

/// Validity of an entry sequence for a shape, from first principles.
inline bool naive_valid(const std::vector<int>& ks, int n, const std::vector<int>& e) {
  if (static_cast<int>(e.size()) != ks.back()) return false;
  std::set<int> seen(e.begin(), e.end());
  if (seen.size() != e.size()) return false;
  for (int x : e)
    if (x < 1 || x > n) return false;
  for (std::size_t j = 1; j < e.size(); ++j) {
    bool descent_allowed = std::find(ks.begin(), ks.end(), static_cast<int>(j)) != ks.end();
    if (!descent_allowed && e[j - 1] > e[j]) return false;
  }
  return true;
}

/// Bruhat order on S_n from its definition: the transitive closure of
/// w < t w whenever inversions increase. Elements are one-line words.
class SymmetricBruhat {
 public:
  explicit SymmetricBruhat(int n) : n_(n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      index_[w] = static_cast<int>(perms_.size());
      perms_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    const std::size_t N = perms_.size();
    above_.assign(N, std::vector<bool>(N, false));
    // Process by decreasing length so that all upper sets are ready.
    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return inv(perms_[a]) > inv(perms_[b]); });
    for (std::size_t idx : order) {
      above_[idx][idx] = true;
      const auto& p = perms_[idx];
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          auto q = p;
          for (int& x : q) x = x == a ? b : (x == b ? a : x);
          if (inv(q) <= inv(p)) continue;
          const std::size_t j = static_cast<std::size_t>(index_.at(q));
          for (std::size_t t = 0; t < N; ++t)
            if (above_[j][t]) above_[idx][t] = true;
        }
    }
  }

  static int inv(const std::vector<int>& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
  }

  bool leq(const std::vector<int>& a, const std::vector<int>& b) const {
    return above_[static_cast<std::size_t>(index_.at(a))][static_cast<std::size_t>(index_.at(b))];
  }

 private:
  int n_;
  std::vector<std::vector<int>> perms_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<bool>> above_;
};

/// Minimal coset representative as a full word: blocks ascending, then the complement.
inline std::vector<int> min_rep(const rankvar::PartialPermutation& p) { return p.full_word(); }

/// dim(Λ ∩ W_S) at a random point of X(M) over F_p, for every S.
inline std::vector<int> random_point_profile(const RankSet& M, std::mt19937& rng, long long p = 10007) {
  using rankvar::Fp;
  const int n = M.n();
  rankvar::Mat<Fp> B;
  std::uniform_int_distribution<long long> coef(1, p - 1);
  for (const auto& w : M.intervals()) {
    rankvar::Vec<Fp> v(static_cast<std::size_t>(n), Fp(0, p));
    for (int x = w.l; x <= w.r; ++x) v[static_cast<std::size_t>(x - 1)] = Fp(coef(rng), p);
    B.push_back(std::move(v));
  }
  std::vector<int> prof(std::size_t{1} << n);
  for (std::size_t S = 0; S < prof.size(); ++S) {
    std::vector<bool> keep(static_cast<std::size_t>(n) + 1, false);
    for (int x = 1; x <= n; ++x) keep[static_cast<std::size_t>(x)] = S >> (x - 1) & 1;
    prof[S] = rankvar::intersection_with_coordinates(B, keep);
  }
  return prof;
}

/// Containment X(M1) ⊆ X(M2) judged from a random point of X(M1) against
/// the counting conditions of M2.
inline bool random_point_contained(const RankSet& M1, const RankSet& M2, std::mt19937& rng) {
  auto prof = random_point_profile(M1, rng);
  for (std::size_t S = 0; S < prof.size(); ++S) {
    int need = 0;
    for (const auto& w : M2.intervals()) {
      bool inside = true;
      for (int x = w.l; x <= w.r; ++x) inside = inside && (S >> (x - 1) & 1);
      need += inside;
    }
    if (prof[S] < need) return false;
  }
  return true;
}

/// All rank sets with ambient dimension at most n_max.
inline std::vector<RankSet> rank_sets_upto(int n_max) {
  std::vector<RankSet> out;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k) {
      auto v = rankvar::all_rank_sets(k, n);
      out.insert(out.end(), v.begin(), v.end());
    }
  return out;
}

/// Every flag shape with ambient dimension n (k_m <= n).
inline std::vector<rankvar::FlagShape> shapes_of(int n) {
  std::vector<rankvar::FlagShape> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> ks;
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1) ks.push_back(i);
    out.emplace_back(n, ks);
  }
  return out;
}

}  // namespace oracle
