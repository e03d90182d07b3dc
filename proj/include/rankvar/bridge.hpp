#pragma once

// Conversions between rank sets and Richardson data:
//   rich    : rank set -> minimal Richardson variety R(u,v)(M)
//   rank_of : Richardson variety -> rank set of its Grassmannian projection

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankvar/error.hpp"
#include "rankvar/field.hpp"
#include "rankvar/permutations.hpp"
#include "rankvar/ranksets.hpp"

namespace rankvar {

/// R(u,v) = X_u(F) ∩ X_v(G) with F_i = <e_1..e_i>, G_i = <e_{n-i+1}..e_n>.
class RichardsonDatum {
 public:
  RichardsonDatum(PartialPermutation u, PartialPermutation v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.shape() != v_.shape()) throw rankvar::domain_error("Richardson datum: u and v have different shapes");
  }

  const FlagShape& shape() const noexcept { return u_.shape(); }
  const PartialPermutation& u() const noexcept { return u_; }
  const PartialPermutation& v() const noexcept { return v_; }

  friend bool operator==(const RichardsonDatum&, const RichardsonDatum&) = default;
  friend auto operator<=>(const RichardsonDatum& a, const RichardsonDatum& b) {
    if (auto c = a.u_ <=> b.u_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  PartialPermutation u_;
  PartialPermutation v_;
};

/// Non-empty iff w_0 v <= u; w_0 acts on cosets as the basis reversal.
inline bool richardson_nonempty(const RichardsonDatum& R) { return bruhat_leq(reverse_basis(R.v()), R.u()); }

/// l(u) - l(w_0 v) = l(u) + l(v) - dim Fl.
inline int richardson_dimension(const RichardsonDatum& R) {
  return R.u().length() + R.v().length() - R.shape().dimension();
}

inline RichardsonDatum rich(const RankSet& M) {
  ColoredRankSet c = assign_colors(M);
  std::vector<std::vector<int>> ublocks(static_cast<std::size_t>(c.m)), vblocks(static_cast<std::size_t>(c.m));
  for (std::size_t i = 0; i < M.intervals().size(); ++i) {
    const Interval& w = M.intervals()[i];
    ublocks[static_cast<std::size_t>(c.colors[i] - 1)].push_back(w.r);
    vblocks[static_cast<std::size_t>(c.colors[i] - 1)].push_back(M.n() - w.l + 1);
  }
  std::vector<int> ks;
  for (int j = 1; j <= c.m; ++j) ks.push_back(c.k_at(j));
  FlagShape shape(M.n(), std::move(ks));
  return RichardsonDatum(from_blocks(shape, std::move(ublocks)), from_blocks(shape, std::move(vblocks)));
}

/// Algorithm rank. Each step pairs the smallest remaining u-entry alpha with
/// beta = min over qualifying colors d >= color(alpha) of beta^d, the largest
/// remaining v-entry of color <= d, where d qualifies when
/// t_d(beta^d) >= k_d - s_d(alpha) + 1. The step emits F_alpha ∩ G_beta.
inline RankSet rank_of(const RichardsonDatum& R) {
  const PartialPermutation& u = R.u();
  const PartialPermutation& v = R.v();
  const FlagShape& shape = R.shape();
  const int n = shape.n();
  const int m = shape.levels();

  std::set<int> U(u.entries().begin(), u.entries().end());
  std::set<int> V(v.entries().begin(), v.entries().end());
  std::vector<Interval> out;
  while (!U.empty()) {
    const int alpha = *U.begin();
    const int ia = u.position_of(alpha);
    const int c = u.color(ia);
    const MultiIndex& s = u.multi_index(ia);
    std::optional<int> beta;
    for (int d = c; d <= m; ++d) {
      std::optional<int> beta_d;
      for (int x : V)
        if (v.color(v.position_of(x)) <= d) beta_d = x;  // V iterates ascending
      if (!beta_d) continue;
      const int t = v.multi_index(v.position_of(*beta_d))[static_cast<std::size_t>(d - 1)];
      if (t >= shape.k(d) - s[static_cast<std::size_t>(d - 1)] + 1) {
        if (beta && *beta == *beta_d) continue;
        if (!beta || *beta_d < *beta) beta = beta_d;
      }
    }
    if (!beta)
      throw rankvar::domain_error("rank_of: no qualifying beta for alpha=" + std::to_string(alpha) +
                                  "; the Richardson variety is empty");
    if (n - *beta + 1 > alpha)
      throw rankvar::domain_error("rank_of: F_" + std::to_string(alpha) + " ∩ G_" + std::to_string(*beta) +
                                  " is zero; the Richardson variety is empty");
    out.push_back({n - *beta + 1, alpha});
    U.erase(alpha);
    V.erase(*beta);
  }
  try {
    return RankSet(n, std::move(out));
  } catch (const validation_error& e) {
    throw rankvar::domain_error(std::string("rank_of produced an invalid rank set: ") + e.what());
  }
}

inline RankSet roundtrip_rank_set(const RankSet& M) { return rank_of(rich(M)); }

/// Flag V_1 ⊂ ... ⊂ V_m built from one vector per interval of M.
template <class F>
struct LiftedFlag {
  FlagShape shape;
  std::vector<Mat<F>> levels;  // levels[s-1] holds k_s spanning vectors of V_s
};

/// Lifts span(b_1, ..., b_k), b_i ∈ W_i, to a point of rich(M). Level s
/// collects, for every interval of rank_of(τ_s u, τ_s v), the sum of the
/// level-(s+1) vectors lying inside it.
template <class F>
LiftedFlag<F> lift_point(const RankSet& M, const Mat<F>& basis) {
  const int n = M.n();
  if (static_cast<int>(basis.size()) != M.k()) throw rankvar::domain_error("lift_point: need one vector per interval");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (static_cast<int>(basis[i].size()) != n) throw rankvar::domain_error("lift_point: vector length must be n");
    auto [lo, hi] = support_range(basis[i]);
    const Interval& w = M.intervals()[i];
    if (lo == 0 || lo < w.l || hi > w.r)
      throw rankvar::domain_error("lift_point: basis vector " + std::to_string(i + 1) + " is not supported on its interval");
  }
  if (rank(basis) != M.k()) throw rankvar::domain_error("lift_point: basis choice is linearly dependent");

  RichardsonDatum R = rich(M);
  const int m = R.shape().levels();
  LiftedFlag<F> flag{R.shape(), std::vector<Mat<F>>(static_cast<std::size_t>(m))};
  flag.levels[static_cast<std::size_t>(m - 1)] = basis;
  for (int s = m - 1; s >= 1; --s) {
    RankSet Ws = rank_of(RichardsonDatum(truncate(R.u(), s), truncate(R.v(), s)));
    const Mat<F>& above = flag.levels[static_cast<std::size_t>(s)];
    Mat<F> level;
    for (const Interval& w : Ws.intervals()) {
      std::optional<Vec<F>> acc;
      for (const auto& b : above) {
        auto [lo, hi] = support_range(b);
        if (lo == 0 || lo < w.l || hi > w.r) continue;
        if (!acc) {
          acc = b;
        } else {
          for (std::size_t x = 0; x < b.size(); ++x) (*acc)[x] = (*acc)[x] + b[x];
        }
      }
      if (!acc) throw rankvar::domain_error("lift_point: degenerate basis choice (empty sum at level " + std::to_string(s) + ")");
      level.push_back(std::move(*acc));
    }
    if (rank(level) != R.shape().k(s))
      throw rankvar::domain_error("lift_point: degenerate basis choice (level " + std::to_string(s) + " collapses)");
    flag.levels[static_cast<std::size_t>(s - 1)] = std::move(level);
  }
  return flag;
}

}  // namespace rankvar
