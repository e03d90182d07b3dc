#pragma once

// Singular loci and smoothness for Schubert, Richardson and rank varieties.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rankvar/bridge.hpp"
#include "rankvar/error.hpp"
#include "rankvar/permutations.hpp"
#include "rankvar/ranksets.hpp"

namespace rankvar {

enum class Provenance { EXCEPTIONAL_FIBER, SINGULAR_PREIMAGE, SCHUBERT_HOOK_U, SCHUBERT_HOOK_V };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::EXCEPTIONAL_FIBER: return "EXCEPTIONAL_FIBER";
    case Provenance::SINGULAR_PREIMAGE: return "SINGULAR_PREIMAGE";
    case Provenance::SCHUBERT_HOOK_U: return "SCHUBERT_HOOK_U";
    case Provenance::SCHUBERT_HOOK_V: return "SCHUBERT_HOOK_V";
  }
  return "UNKNOWN";
}

using Variety = std::variant<RankSet, RichardsonDatum>;

struct SingularComponent {
  Variety data;
  Provenance tag;
  int dim = 0;
};

struct SingularLocusReport {
  Variety ambient;
  int ambient_dim = 0;
  std::vector<SingularComponent> components;

  bool smooth() const noexcept { return components.empty(); }
};

// ---------------------------------------------------------------- Schubert

/// dim T_{e_w} X_u: transpositions t of values lying in different blocks
/// of w (the complement counts as a block) with t*w <= u.
inline int tangent_dim_tfixed(const PartialPermutation& u, const PartialPermutation& w) {
  if (!bruhat_leq(w, u)) throw rankvar::domain_error("tangent_dim_tfixed: w is not below u");
  const int n = u.shape().n();
  int count = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (w.block_of(a) == w.block_of(b)) continue;
      if (bruhat_leq(apply_transposition(w, a, b), u)) ++count;
    }
  return count;
}

inline bool is_smooth_tfixed(const PartialPermutation& u, const PartialPermutation& w) {
  return tangent_dim_tfixed(u, w) == u.length();
}

namespace detail {

/// Keeps the Bruhat-maximal elements, sorted.
inline std::vector<PartialPermutation> bruhat_maximal(std::vector<PartialPermutation> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PartialPermutation> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < xs.size() && !dominated; ++j)
      if (i != j && bruhat_leq(xs[i], xs[j])) dominated = true;
    if (!dominated) out.push_back(xs[i]);
  }
  return out;
}

}  // namespace detail

/// Hook rule: one candidate per i < k with u_{i+1} > u_i + 1 and u_i > i,
/// namely the largest w with w_{i+1} <= u_i.
inline std::vector<PartialPermutation> schubert_singular_grassmannian(const PartialPermutation& u) {
  if (!u.shape().is_grassmannian())
    throw rankvar::domain_error("schubert_singular_grassmannian needs a Grassmannian shape");
  const int k = u.size();
  std::vector<PartialPermutation> out;
  for (int i = 1; i < k; ++i) {
    if (!(u[i + 1] > u[i] + 1 && u[i] > i)) continue;
    std::vector<int> w(u.entries());
    w[static_cast<std::size_t>(i)] = u[i];
    for (int j = i; j >= 1; --j) w[static_cast<std::size_t>(j - 1)] = std::min(u[j], w[static_cast<std::size_t>(j)] - 1);
    out.emplace_back(u.shape(), std::move(w));
  }
  return detail::bruhat_maximal(std::move(out));
}

/// Maximal w <= u with e_w singular in X_u, for any flag shape. The singular
/// set is a lower order ideal, so a downward search through smooth points
/// reaches every maximal singular w through a cover.
inline std::vector<PartialPermutation> schubert_singular_components(const PartialPermutation& u) {
  std::set<PartialPermutation> seen{u};
  std::vector<PartialPermutation> frontier{u}, singular;
  std::map<PartialPermutation, bool> smooth_cache;
  auto smooth = [&](const PartialPermutation& w) {
    auto it = smooth_cache.find(w);
    if (it != smooth_cache.end()) return it->second;
    bool s = is_smooth_tfixed(u, w);
    smooth_cache.emplace(w, s);
    return s;
  };
  while (!frontier.empty()) {
    std::vector<PartialPermutation> next;
    for (const auto& w : frontier) {
      if (!smooth(w)) {
        singular.push_back(w);
        continue;
      }
      for (auto& c : lower_covers(w))
        if (seen.insert(c).second) next.push_back(std::move(c));
    }
    frontier = std::move(next);
  }
  std::vector<PartialPermutation> out;
  for (const auto& w : singular) {
    bool maximal = true;
    for (const auto& c : upper_covers(w))
      if (bruhat_leq(c, u) && !smooth(c)) maximal = false;
    if (maximal) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------- Richardson

/// Grassmannian test u_i + v_{k+1-i} >= n+1.
inline bool richardson_nonempty(const PartialPermutation& u, const PartialPermutation& v) {
  if (u.shape() != v.shape()) throw rankvar::domain_error("richardson_nonempty: shape mismatch");
  if (!u.shape().is_grassmannian()) return richardson_nonempty(RichardsonDatum(u, v));
  const int k = u.size(), n = u.shape().n();
  for (int i = 1; i <= k; ++i)
    if (u[i] + v[k + 1 - i] < n + 1) return false;
  return true;
}

inline bool richardson_contains(const RichardsonDatum& outer, const RichardsonDatum& inner) {
  return bruhat_leq(inner.u(), outer.u()) && bruhat_leq(inner.v(), outer.v());
}

/// Singular components of R(u,v) = X_u ∩ X^v: Richardson varieties cut out by
/// singular Schubert components on either side, non-empty and maximal.
inline SingularLocusReport richardson_singular_locus(const RichardsonDatum& R) {
  if (!richardson_nonempty(R)) throw rankvar::domain_error("richardson_singular_locus: empty Richardson variety");
  const bool grass = R.shape().is_grassmannian();
  auto sing = [&](const PartialPermutation& p) {
    return grass ? schubert_singular_grassmannian(p) : schubert_singular_components(p);
  };
  std::vector<std::pair<RichardsonDatum, Provenance>> cand;
  for (const auto& w : sing(R.u())) {
    RichardsonDatum c(w, R.v());
    if (richardson_nonempty(c)) cand.emplace_back(std::move(c), Provenance::SCHUBERT_HOOK_U);
  }
  for (const auto& w : sing(R.v())) {
    RichardsonDatum c(R.u(), w);
    if (richardson_nonempty(c)) cand.emplace_back(std::move(c), Provenance::SCHUBERT_HOOK_V);
  }
  std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  cand.erase(std::unique(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
             cand.end());

  SingularLocusReport rep{R, richardson_dimension(R), {}};
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cand.size() && !dominated; ++j)
      if (i != j && richardson_contains(cand[j].first, cand[i].first)) dominated = true;
    if (!dominated)
      rep.components.push_back({cand[i].first, cand[i].second, richardson_dimension(cand[i].first)});
  }
  return rep;
}

inline bool richardson_smooth_grassmannian(const PartialPermutation& u, const PartialPermutation& v) {
  if (!u.shape().is_grassmannian()) throw rankvar::domain_error("richardson_smooth_grassmannian needs a Grassmannian shape");
  return richardson_singular_locus(RichardsonDatum(u, v)).smooth();
}

/// Permutations realizing G(k_1,n_1) x ... x G(k_r,n_r) inside G(sum k_i, n)
/// as a Richardson variety; factors sit on consecutive index blocks from e_1.
inline RichardsonDatum segre_richardson(const std::vector<std::pair<int, int>>& factors, int n) {
  std::vector<int> u, v;
  int offset = 0, k = 0;
  for (auto [ki, ni] : factors) {
    if (ki < 1 || ki > ni) throw rankvar::domain_error("segre_richardson: need 1 <= k_i <= n_i");
    for (int j = 1; j <= ki; ++j) {
      u.push_back(offset + ni - ki + j);
      v.push_back(n - offset - j + 1);
    }
    offset += ni;
    k += ki;
  }
  if (offset > n) throw rankvar::domain_error("segre_richardson: factors exceed n");
  std::sort(v.begin(), v.end());
  FlagShape shape = FlagShape::grassmannian(k, n);
  return RichardsonDatum(PartialPermutation(shape, u), PartialPermutation(shape, v));
}

// ---------------------------------------------------------- rank varieties

namespace detail {

/// Un-normalized interval lists, one per intersecting pair (W_i, W_j) of
/// colors (c, c+1).
inline std::vector<std::vector<Interval>> exceptional_candidates(const RankSet& M) {
  ColoredRankSet C = assign_colors(M);
  const auto& W = M.intervals();
  std::vector<std::vector<Interval>> out;
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) {
      if (C.colors[j] != C.colors[i] + 1 || !W[i].intersects(W[j])) continue;
      Interval wp{std::max(W[i].l, W[j].l), std::min(W[i].r, W[j].r)};
      std::vector<Interval> outer, rest;
      for (std::size_t a = 0; a < W.size(); ++a) {
        if (C.colors[a] == C.colors[j] && wp.subset_of(W[a]))
          outer.push_back(W[a]);
        else
          rest.push_back(W[a]);
      }
      rest.push_back(wp);  // outer is already sorted by left endpoint
      for (std::size_t a = 0; a + 1 < outer.size(); ++a) rest.push_back({outer[a].l, outer[a + 1].r});
      out.push_back(std::move(rest));
    }
  return out;
}

inline std::vector<RankSet> exceptional_once(const RankSet& M) {
  std::vector<RankSet> out;
  for (auto& c : exceptional_candidates(M))
    if (auto N = normalize(M.n(), std::move(c))) out.push_back(std::move(*N));
  return out;
}

/// Containment-maximal rank sets, larger dimensions first, ties by order.
inline std::vector<RankSet> containment_maximal(std::vector<RankSet> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::stable_sort(xs.begin(), xs.end(), [](const RankSet& a, const RankSet& b) { return dimension(a) > dimension(b); });
  std::vector<RankSet> kept;
  for (const auto& x : xs) {
    bool dominated = false;
    for (const auto& y : kept)
      if (rank_variety_contains(x, y)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace detail

/// Strata of X(M) over which the projection from rich(M) has positive-
/// dimensional fibers, closed under re-application `depth` times (default k).
inline std::vector<RankSet> exceptional_strata(const RankSet& M, std::optional<int> depth = std::nullopt) {
  const int rounds = depth.value_or(M.k());
  std::set<RankSet> all;
  std::vector<RankSet> frontier = detail::exceptional_once(M);
  for (int round = 1; round <= rounds && !frontier.empty(); ++round) {
    std::vector<RankSet> next;
    for (auto& S : frontier)
      if (all.insert(S).second && round < rounds)
        for (auto& T : detail::exceptional_once(S)) next.push_back(std::move(T));
    frontier = std::move(next);
  }
  return detail::containment_maximal(std::vector<RankSet>(all.begin(), all.end()));
}

inline SingularLocusReport rank_singular_locus(const RankSet& M) {
  std::map<RankSet, Provenance> cand;
  for (auto& S : exceptional_strata(M)) cand.emplace(std::move(S), Provenance::EXCEPTIONAL_FIBER);
  for (const auto& c : richardson_singular_locus(rich(M)).components)
    cand.emplace(rank_of(std::get<RichardsonDatum>(c.data)), Provenance::SINGULAR_PREIMAGE);
  std::vector<RankSet> keys;
  for (const auto& [S, tag] : cand) keys.push_back(S);
  SingularLocusReport rep{M, dimension(M), {}};
  for (auto& S : detail::containment_maximal(std::move(keys))) {
    const Provenance tag = cand.at(S);
    const int d = dimension(S);
    rep.components.push_back({std::move(S), tag, d});
  }
  std::stable_sort(rep.components.begin(), rep.components.end(),
                   [](const auto& a, const auto& b) { return a.tag < b.tag; });
  return rep;
}

struct SegreBlock {
  Interval range;  // hull of the block's intervals in original coordinates
  int j = 0;
  int m = 0;
};

struct SegreDecomposition {
  std::vector<Interval> quotient_singletons;
  std::vector<SegreBlock> blocks;
};

/// Singletons split off as fixed directions; the remaining intervals, with
/// singleton coordinates deleted, must fall into overlap components each of
/// which is a full staircase on its hull.
inline std::optional<SegreDecomposition> segre_decomposition(const RankSet& M) {
  const int n = M.n();
  SegreDecomposition dec;
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  std::vector<Interval> rest;
  for (const auto& w : M.intervals()) {
    if (w.l == w.r) {
      dec.quotient_singletons.push_back(w);
      removed[static_cast<std::size_t>(w.l)] = true;
    } else {
      rest.push_back(w);
    }
  }
  std::vector<int> newindex(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1, c = 0; i <= n; ++i)
    if (!removed[static_cast<std::size_t>(i)]) newindex[static_cast<std::size_t>(i)] = ++c;
  // Endpoints are distinct, so no remaining interval ends on a singleton.
  std::vector<Interval> comp;
  for (const auto& w : rest)
    comp.push_back({newindex[static_cast<std::size_t>(w.l)], newindex[static_cast<std::size_t>(w.r)]});
  // rest is sorted by l, and compression preserves the order.
  std::size_t start = 0;
  while (start < rest.size()) {
    std::size_t end = start + 1;
    int reach = comp[start].r;
    while (end < rest.size() && comp[end].l <= reach) reach = std::max(reach, comp[end].r), ++end;
    const int a = comp[start].l, b = reach;
    const int j = static_cast<int>(end - start), m = b - a + 1;
    for (std::size_t t = start; t < end; ++t) {
      const int i = static_cast<int>(t - start) + 1;
      if (comp[t].l != a + i - 1 || comp[t].r != a + m - j + i - 1) return std::nullopt;
    }
    int lo = rest[start].l, hi = rest[start].r;
    for (std::size_t t = start; t < end; ++t) lo = std::min(lo, rest[t].l), hi = std::max(hi, rest[t].r);
    dec.blocks.push_back({{lo, hi}, j, m});
    start = end;
  }
  return dec;
}

inline bool is_smooth_rank(const RankSet& M) { return segre_decomposition(M).has_value(); }

/// Coordinate k-planes in X(M): index sets admitting a perfect matching to
/// the intervals. Lexicographic order.
inline std::vector<std::vector<int>> tfixed_points(const RankSet& M) {
  const int n = M.n(), k = M.k();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      if (detail::interval_matching(M.intervals(), mask_of(std::span<const int>(cur)), n) == k) out.push_back(cur);
      return;
    }
    for (int x = next; x <= n - (k - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Smooth T-fixed points for an all-color-1 rank set: i_j ∈ W_j, and i_j
/// avoids a neighbour whenever the neighbouring endpoint jumps by more than 1.
inline std::vector<std::vector<int>> smooth_tfixed_points(const RankSet& M) {
  ColoredRankSet C = assign_colors(M);
  if (C.m != 1) throw rankvar::domain_error("smooth_tfixed_points: every interval must have color 1");
  const auto& W = M.intervals();
  const std::size_t k = W.size();
  std::vector<std::vector<int>> out;
  for (auto& S : tfixed_points(M)) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      const int i = S[j];
      if (!W[j].contains(i)) ok = false;
      else if (j + 1 < k && W[j + 1].l > W[j].l + 1 && W[j + 1].contains(i)) ok = false;
      else if (j > 0 && W[j - 1].r < W[j].r - 1 && W[j - 1].contains(i)) ok = false;
    }
    if (ok) out.push_back(std::move(S));
  }
  return out;
}

}  // namespace rankvar
