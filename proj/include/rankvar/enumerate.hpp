#pragma once

// Rank sets of G(k,n) by dimension, the generating polynomial g[k,n] and
// its q-Stirling closed form.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankvar/error.hpp"
#include "rankvar/qpoly.hpp"
#include "rankvar/ranksets.hpp"

namespace rankvar {

/// Visits every rank set of G(k,n) once with its dimension. Coordinates are
/// scanned left to right; each one may open an interval, close an open one,
/// both, or neither. The dimension grows by |W| - 1 - #{closed W' with
/// l(W') >= l(W)} when W closes. Visiting order is not canonical.
inline void for_each_rank_set(int k, int n, const std::function<void(const std::vector<Interval>&, int)>& visit) {
  if (n < 1 || n > RankSet::max_n) throw rankvar::domain_error("for_each_rank_set: n out of range");
  if (k < 1 || k > n) throw rankvar::domain_error("for_each_rank_set: need 1 <= k <= n");
  std::vector<int> open;  // left endpoints awaiting a right endpoint
  std::vector<Interval> closed;
  auto close = [&](std::size_t idx, int x, int& dim) {
    const int l = open[idx];
    int inside = 0;
    for (const auto& w : closed)
      if (w.l >= l) ++inside;
    dim += (x - l + 1) - 1 - inside;
    closed.push_back({l, x});
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(idx));
  };
  auto rec = [&](auto&& self, int x, int dim) -> void {
    const int total = static_cast<int>(open.size() + closed.size());
    if (x > n) {
      if (open.empty() && total == k) visit(closed, dim);
      return;
    }
    const int remaining = n - x + 1;
    // Each remaining coordinate closes at most one interval.
    if (static_cast<int>(open.size()) > remaining) return;
    if (total > k) return;

    auto snapshot_open = open;
    auto snapshot_closed = closed.size();
    auto restore = [&]() {
      open = snapshot_open;
      closed.resize(snapshot_closed);
    };

    // neither
    self(self, x + 1, dim);
    // close one (x is only a right endpoint)
    for (std::size_t i = 0; i < snapshot_open.size(); ++i) {
      int d = dim;
      close(i, x, d);
      self(self, x + 1, d);
      restore();
    }
    if (total < k) {
      // open only
      open.push_back(x);
      self(self, x + 1, dim);
      restore();
      // open and close something (the new interval itself or an older one)
      open.push_back(x);
      for (std::size_t i = 0; i < open.size(); ++i) {
        int d = dim;
        close(i, x, d);
        self(self, x + 1, d);
        restore();
        open.push_back(x);
      }
      restore();
    }
  };
  rec(rec, 1, 0);
}

/// All rank sets of G(k,n), sorted by their (l, r) pairs.
inline std::vector<RankSet> all_rank_sets(int k, int n) {
  std::vector<RankSet> out;
  for_each_rank_set(k, n, [&](const std::vector<Interval>& w, int) { out.emplace_back(n, w); });
  std::sort(out.begin(), out.end());
  return out;
}

inline QPolynomial g_poly_direct(int k, int n) {
  std::vector<long long> counts;
  for_each_rank_set(k, n, [&](const std::vector<Interval>&, int d) {
    if (static_cast<int>(counts.size()) <= d) counts.resize(static_cast<std::size_t>(d) + 1, 0);
    ++counts[static_cast<std::size_t>(d)];
  });
  std::vector<bigint> c(counts.begin(), counts.end());
  return QPolynomial(std::move(c));
}

/// [j] as 1 + q + ... + q^j (`inclusive`) or 1 + q + ... + q^(j-1) (`exclusive`).
enum class bracket_convention { exclusive, inclusive };
/// g[0,n] = 1 for all n (`unit`) or only for n = 0 (`literal`).
enum class base_convention { unit, literal };

struct RecurrenceConvention {
  bracket_convention bracket = bracket_convention::exclusive;
  base_convention base = base_convention::unit;
};

inline std::string to_string(bracket_convention b) {
  return b == bracket_convention::exclusive ? "[j]=1+q+...+q^(j-1)" : "[j]=1+q+...+q^j";
}
inline std::string to_string(base_convention b) {
  return b == base_convention::unit ? "g[0,n]=1" : "g[0,0]=1,g[0,n>0]=0";
}

inline QPolynomial q_bracket(int j, bracket_convention b) {
  return QPolynomial::geometric(b == bracket_convention::exclusive ? j : j + 1);
}

/// g[k,n] = g[k,n-1] + [n-k+1] g[k-1,n-1], with g[k,n] = 0 for k > n.
inline QPolynomial g_poly_recurrence(int k, int n, RecurrenceConvention conv = {}) {
  if (k < 0 || n < 0) throw rankvar::domain_error("g_poly_recurrence: negative index");
  std::vector<std::vector<QPolynomial>> g(static_cast<std::size_t>(n) + 1,
                                          std::vector<QPolynomial>(static_cast<std::size_t>(k) + 1));
  for (int nn = 0; nn <= n; ++nn) {
    g[static_cast<std::size_t>(nn)][0] =
        (conv.base == base_convention::unit || nn == 0) ? QPolynomial::constant(1) : QPolynomial{};
    for (int kk = 1; kk <= k; ++kk) {
      if (kk > nn) continue;
      g[static_cast<std::size_t>(nn)][static_cast<std::size_t>(kk)] =
          g[static_cast<std::size_t>(nn - 1)][static_cast<std::size_t>(kk)] +
          q_bracket(nn - kk + 1, conv.bracket) * g[static_cast<std::size_t>(nn - 1)][static_cast<std::size_t>(kk - 1)];
    }
  }
  return g[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// S[n,k] = q^(k-1) S[n-1,k-1] + [k] S[n-1,k]; S[0,0] = 1.
inline QPolynomial q_stirling(int n, int k, bracket_convention b = bracket_convention::exclusive) {
  if (n < 0 || k < 0) throw rankvar::domain_error("q_stirling: negative index");
  if (k > n) return {};
  std::vector<std::vector<QPolynomial>> S(static_cast<std::size_t>(n) + 1,
                                          std::vector<QPolynomial>(static_cast<std::size_t>(k) + 1));
  S[0][0] = QPolynomial::constant(1);
  for (int nn = 1; nn <= n; ++nn)
    for (int kk = 1; kk <= std::min(k, nn); ++kk)
      S[static_cast<std::size_t>(nn)][static_cast<std::size_t>(kk)] =
          S[static_cast<std::size_t>(nn - 1)][static_cast<std::size_t>(kk - 1)].shifted(kk - 1) +
          q_bracket(kk, b) * S[static_cast<std::size_t>(nn - 1)][static_cast<std::size_t>(kk)];
  return S[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline int binom2(int a) { return a * (a - 1) / 2; }

/// g[k,n] q^C(n-k+1,2) == S[n+1, n-k+1].
inline bool verify_stirling_identity(int k, int n, bracket_convention b = bracket_convention::exclusive) {
  return g_poly_direct(k, n).shifted(binom2(n - k + 1)) == q_stirling(n + 1, n - k + 1, b);
}

struct ConventionCheck {
  RecurrenceConvention convention;
  int agreements = 0;
  int checked = 0;
  std::string first_mismatch;  // "k=1 n=1: direct 1, recurrence 1 + q"
  int stirling_agreements = 0;
  int stirling_checked = 0;

  bool all_agree() const { return agreements == checked && stirling_agreements == stirling_checked; }
};

struct AdjudicationReport {
  int max_n = 6;
  std::vector<ConventionCheck> candidates;
  std::optional<RecurrenceConvention> adopted;
};

/// Tries every bracket/base combination against the direct count on
/// 1 <= k <= n <= max_n, and the Stirling identity under each bracket.
inline AdjudicationReport adjudicate_conventions(int max_n = 6) {
  AdjudicationReport rep;
  rep.max_n = max_n;
  std::map<std::pair<int, int>, QPolynomial> direct;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) direct.emplace(std::pair{k, n}, g_poly_direct(k, n));
  for (auto b : {bracket_convention::exclusive, bracket_convention::inclusive})
    for (auto base : {base_convention::unit, base_convention::literal}) {
      ConventionCheck c{{b, base}};
      for (const auto& [kn, d] : direct) {
        const auto [k, n] = kn;
        QPolynomial r = g_poly_recurrence(k, n, c.convention);
        ++c.checked;
        if (r == d) ++c.agreements;
        else if (c.first_mismatch.empty())
          c.first_mismatch = "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": direct " + d.to_string() +
                             ", recurrence " + r.to_string();
        ++c.stirling_checked;
        if (d.shifted(binom2(n - k + 1)) == q_stirling(n + 1, n - k + 1, b)) ++c.stirling_agreements;
      }
      if (c.all_agree() && !rep.adopted) rep.adopted = c.convention;
      rep.candidates.push_back(std::move(c));
    }
  return rep;
}

}  // namespace rankvar
