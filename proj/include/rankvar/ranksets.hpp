#pragma once

// Rank sets: k coordinate intervals [l, r] in [1, n] with pairwise distinct
// left endpoints and pairwise distinct right endpoints.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "rankvar/error.hpp"

namespace rankvar {

struct Interval {
  int l = 1;
  int r = 1;

  int size() const noexcept { return r - l + 1; }
  bool contains(int i) const noexcept { return l <= i && i <= r; }
  bool subset_of(const Interval& o) const noexcept { return o.l <= l && r <= o.r; }
  bool intersects(const Interval& o) const noexcept { return std::max(l, o.l) <= std::min(r, o.r); }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Bitmask over coordinates 1..n; bit i-1 stands for e_i.
using IndexMask = std::uint64_t;

inline IndexMask mask_of(const Interval& w) {
  IndexMask upto_r = w.r >= 64 ? ~IndexMask{0} : ((IndexMask{1} << w.r) - 1);
  IndexMask below_l = (IndexMask{1} << (w.l - 1)) - 1;
  return upto_r & ~below_l;
}

inline IndexMask mask_of(std::span<const int> indices) {
  IndexMask m = 0;
  for (int i : indices) m |= IndexMask{1} << (i - 1);
  return m;
}

class RankSet {
 public:
  static constexpr int max_n = 63;

  RankSet(int n, std::vector<Interval> intervals) : n_(n), intervals_(std::move(intervals)) {
    if (n_ < 1 || n_ > max_n)
      throw validation_error(violation::endpoint_out_of_range, "ambient dimension must lie in [1,63]");
    if (intervals_.empty()) throw validation_error(violation::empty_rank_set, "a rank set needs at least one interval");
    for (const auto& w : intervals_) {
      if (w.l > w.r)
        throw validation_error(violation::reversed_interval,
                               "interval " + std::to_string(w.l) + "-" + std::to_string(w.r) + " has l > r");
      if (w.l < 1 || w.r > n_)
        throw validation_error(violation::endpoint_out_of_range, "interval " + std::to_string(w.l) + "-" +
                                                                     std::to_string(w.r) + " leaves [1," +
                                                                     std::to_string(n_) + "]");
    }
    std::sort(intervals_.begin(), intervals_.end());
    for (std::size_t i = 0; i + 1 < intervals_.size(); ++i)
      if (intervals_[i].l == intervals_[i + 1].l)
        throw validation_error(violation::duplicate_left_endpoint,
                               "left endpoint " + std::to_string(intervals_[i].l) + " repeated");
    std::vector<int> rights;
    for (const auto& w : intervals_) rights.push_back(w.r);
    std::sort(rights.begin(), rights.end());
    for (std::size_t i = 0; i + 1 < rights.size(); ++i)
      if (rights[i] == rights[i + 1])
        throw validation_error(violation::duplicate_right_endpoint,
                               "right endpoint " + std::to_string(rights[i]) + " repeated");
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(intervals_.size()); }
  /// Sorted by left endpoint.
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  const Interval& operator[](std::size_t i) const { return intervals_.at(i); }

  friend auto operator<=>(const RankSet&, const RankSet&) = default;

 private:
  int n_;
  std::vector<Interval> intervals_;
};

inline RankSet make_rank_set(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Interval> v;
  v.reserve(pairs.size());
  for (auto [l, r] : pairs) v.push_back({l, r});
  return RankSet(n, std::move(v));
}

/// Rank set together with the containment-depth coloring used by Algorithm rich.
struct ColoredRankSet {
  RankSet base;
  std::vector<int> colors;  // aligned with base.intervals()
  int m = 1;

  /// Number of intervals whose color is at most j.
  int k_at(int j) const {
    return static_cast<int>(std::count_if(colors.begin(), colors.end(), [j](int c) { return c <= j; }));
  }
};

inline ColoredRankSet assign_colors(const RankSet& M) {
  const auto& W = M.intervals();
  const std::size_t k = W.size();
  // depth[i]: longest chain W_{j1} ⊋ ... ⊋ W_i ending at W_i. Larger intervals first.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return W[a].size() > W[b].size(); });
  std::vector<int> depth(k, 1);
  for (std::size_t oi = 0; oi < k; ++oi) {
    std::size_t i = order[oi];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      std::size_t j = order[oj];
      if (W[i].subset_of(W[j]) && W[i] != W[j]) depth[i] = std::max(depth[i], depth[j] + 1);
    }
  }
  int m = *std::max_element(depth.begin(), depth.end());
  ColoredRankSet out{M, std::vector<int>(k), m};
  for (std::size_t i = 0; i < k; ++i) out.colors[i] = m - depth[i] + 1;
  return out;
}

/// Sum of dim W_i minus, for each W_i, the number of W_j contained in it
/// (W_i itself included).
inline int dimension(const RankSet& M) {
  int total = 0;
  for (const auto& wi : M.intervals()) {
    total += wi.size();
    for (const auto& wj : M.intervals())
      if (wj.subset_of(wi)) --total;
  }
  return total;
}

/// #{W_i : W_i ⊆ span{e_s : s in S}}.
inline int generic_rank(const RankSet& M, IndexMask S) {
  int c = 0;
  for (const auto& w : M.intervals())
    if ((mask_of(w) & ~S) == 0) ++c;
  return c;
}

inline int generic_rank(const RankSet& M, std::span<const int> S) { return generic_rank(M, mask_of(S)); }

namespace detail {

/// Maximum matching between intervals and coordinates of `allowed` they contain.
inline int interval_matching(const std::vector<Interval>& W, IndexMask allowed, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  int matched = 0;
  for (std::size_t i = 0; i < W.size(); ++i) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    auto augment = [&](auto&& self, std::size_t w) -> bool {
      for (int x = W[w].l; x <= W[w].r; ++x) {
        if (!(allowed >> (x - 1) & 1) || seen[static_cast<std::size_t>(x)]) continue;
        seen[static_cast<std::size_t>(x)] = true;
        int o = owner[static_cast<std::size_t>(x)];
        if (o < 0 || self(self, static_cast<std::size_t>(o))) {
          owner[static_cast<std::size_t>(x)] = static_cast<int>(w);
          return true;
        }
      }
      return false;
    };
    if (augment(augment, i)) ++matched;
  }
  return matched;
}

inline IndexMask full_mask(int n) { return n >= 64 ? ~IndexMask{0} : ((IndexMask{1} << n) - 1); }

}  // namespace detail

/// dim(Λ ∩ span{e_s : s in S}) at a general point Λ of X(M): k minus the
/// generic rank of the basis vectors projected away from S, which for
/// generic supports equals a bipartite matching number.
inline int generic_intersection_dim(const RankSet& M, IndexMask S) {
  return M.k() - detail::interval_matching(M.intervals(), detail::full_mask(M.n()) & ~S, M.n());
}

/// Largest ambient dimension accepted by the subset-exhaustive containment test.
inline constexpr int containment_max_n = 14;

/// Certifies X(M1) ⊆ X(M2): the general point of X(M1) meets every
/// coordinate subspace in at least the dimension X(M2) demands.
inline bool rank_variety_contains(const RankSet& M1, const RankSet& M2) {
  if (M1.n() != M2.n() || M1.k() != M2.k()) throw rankvar::domain_error("rank_variety_contains: shape mismatch");
  if (M1.n() > containment_max_n)
    throw capability_error("rank_variety_contains enumerates 2^n subsets; n=" + std::to_string(M1.n()) +
                           " exceeds 14");
  if (M1 == M2) return true;
  const IndexMask limit = IndexMask{1} << M1.n();
  for (IndexMask S = 0; S < limit; ++S) {
    int need = generic_rank(M2, S);
    if (need == 0) continue;
    if (generic_intersection_dim(M1, S) < need) return false;
  }
  return true;
}

/// Tie-breaking policy for normalization; both must produce isomorphic strata.
enum class normalize_order { smallest_first, largest_first };

/// Repairs a collection of intervals into a rank set by shrinking containers
/// that share an endpoint with a contained interval: right-endpoint repairs are
/// exhausted before any left-endpoint repair. nullopt stands for EMPTY.
inline std::optional<RankSet> normalize(int n, std::vector<Interval> W,
                                        normalize_order order = normalize_order::smallest_first) {
  if (W.empty()) return std::nullopt;
  for (const auto& w : W)
    if (w.l < 1 || w.r > n || w.l > w.r) throw rankvar::domain_error("normalize: interval outside [1,n]");
  const bool smallest = order == normalize_order::smallest_first;
  using key_t = std::tuple<int, int, int>;
  auto better = [&](const key_t& key, const std::optional<key_t>& best) {
    return !best || (smallest ? key < *best : key > *best);
  };

  while (true) {
    // Right-endpoint violations: W_a ⊆ W_b, r equal, a != b; W_b shrinks.
    // Smallest shared endpoint first, then the tightest container.
    int pick = -1;
    std::optional<key_t> best;
    for (std::size_t a = 0; a < W.size(); ++a)
      for (std::size_t b = 0; b < W.size(); ++b) {
        if (a == b || W[a].r != W[b].r || !W[a].subset_of(W[b])) continue;
        if (W[a] == W[b] && a > b) continue;
        key_t key{W[a].r, W[a].l - W[b].l, -W[a].l};
        if (better(key, best)) {
          best = key;
          pick = static_cast<int>(b);
        }
      }
    if (pick >= 0) {
      Interval& w = W[static_cast<std::size_t>(pick)];
      --w.r;
      if (w.r < w.l) return std::nullopt;
      continue;
    }
    for (std::size_t a = 0; a < W.size(); ++a)
      for (std::size_t b = 0; b < W.size(); ++b) {
        if (a == b || W[a].l != W[b].l || !W[a].subset_of(W[b])) continue;
        if (W[a] == W[b] && a > b) continue;
        key_t key{W[b].r, W[b].r - W[a].r, W[a].l};
        if (better(key, best)) {
          best = key;
          pick = static_cast<int>(b);
        }
      }
    if (pick >= 0) {
      Interval& w = W[static_cast<std::size_t>(pick)];
      ++w.l;
      if (w.r < w.l) return std::nullopt;
      continue;
    }
    return RankSet(n, std::move(W));
  }
}

/// Mirror image under e_i -> e_{n+1-i}.
inline RankSet reverse_basis(const RankSet& M) {
  std::vector<Interval> v;
  for (const auto& w : M.intervals()) v.push_back({M.n() + 1 - w.r, M.n() + 1 - w.l});
  return RankSet(M.n(), std::move(v));
}

/// The rank set {[i, n-k+i]} of the whole Grassmannian G(k,n).
inline RankSet full_staircase(int k, int n) {
  std::vector<Interval> v;
  for (int i = 1; i <= k; ++i) v.push_back({i, n - k + i});
  return RankSet(n, std::move(v));
}

}  // namespace rankvar
