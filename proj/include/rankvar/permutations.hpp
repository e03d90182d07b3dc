#pragma once

// Partial permutations indexing Schubert cells of Fl(k_1,...,k_m; n).
// Entries and positions are 1-based throughout.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "rankvar/error.hpp"

namespace rankvar {

/// Dimension vector 0 < k_1 < ... < k_m <= n of a partial flag variety.
class FlagShape {
 public:
  FlagShape(int n, std::vector<int> ks) : n_(n), ks_(std::move(ks)) {
    if (n_ <= 0) throw validation_error(violation::bad_shape, "ambient dimension must be positive");
    if (ks_.empty()) throw validation_error(violation::bad_shape, "at least one level is required");
    int prev = 0;
    for (int k : ks_) {
      if (k <= prev) throw validation_error(violation::bad_shape, "levels must be strictly increasing and positive");
      prev = k;
    }
    if (prev > n_) throw validation_error(violation::bad_shape, "top level exceeds the ambient dimension");
  }

  static FlagShape grassmannian(int k, int n) { return FlagShape(n, {k}); }

  int n() const noexcept { return n_; }
  int levels() const noexcept { return static_cast<int>(ks_.size()); }
  const std::vector<int>& ks() const noexcept { return ks_; }
  /// k_j with the conventions k_0 = 0 and k_{m+1} = n.
  int k(int j) const {
    if (j == 0) return 0;
    if (j == levels() + 1) return n_;
    if (j < 0 || j > levels() + 1) throw rankvar::domain_error("level out of range");
    return ks_[static_cast<std::size_t>(j - 1)];
  }
  int top() const noexcept { return ks_.back(); }
  bool is_grassmannian() const noexcept { return ks_.size() == 1; }

  /// Dimension of the flag variety: sum over block pairs of size products.
  int dimension() const {
    int total = 0;
    for (int a = 1; a <= levels() + 1; ++a)
      for (int b = a + 1; b <= levels() + 1; ++b)
        total += (k(a) - k(a - 1)) * (k(b) - k(b - 1));
    return total;
  }

  friend auto operator<=>(const FlagShape&, const FlagShape&) = default;

 private:
  int n_;
  std::vector<int> ks_;
};

inline std::string to_string(const FlagShape& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ks().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.ks()[i]);
  }
  return out + ";" + std::to_string(s.n());
}

/// (s_1, ..., s_m): s_j counts entries <= u_i whose color is at most j.
using MultiIndex = std::vector<int>;

/// A minimal coset representative: k_m distinct values in [1,n], ascending
/// inside each color block. Colors and multi-indices are fixed at
/// construction.
class PartialPermutation {
 public:
  PartialPermutation(FlagShape shape, std::vector<int> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {
    validate();
    compute_labels();
  }

  const FlagShape& shape() const noexcept { return shape_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_.at(static_cast<std::size_t>(check_index(i) - 1)); }

  int color(int i) const { return colors_[static_cast<std::size_t>(check_index(i) - 1)]; }
  const MultiIndex& multi_index(int i) const { return multi_[static_cast<std::size_t>(check_index(i) - 1)]; }
  const std::vector<int>& colors() const noexcept { return colors_; }

  /// Position of a value among the entries, or 0 when absent.
  int position_of(int value) const {
    auto it = std::find(entries_.begin(), entries_.end(), value);
    return it == entries_.end() ? 0 : static_cast<int>(it - entries_.begin()) + 1;
  }

  /// Block of a value in the full one-line word: its color, or m+1 for the
  /// complement block.
  int block_of(int value) const {
    int p = position_of(value);
    return p == 0 ? shape_.levels() + 1 : colors_[static_cast<std::size_t>(p - 1)];
  }

  /// One-line notation of the minimal-length representative in S_n.
  std::vector<int> full_word() const {
    std::vector<int> word = entries_;
    std::vector<bool> used(static_cast<std::size_t>(shape_.n()) + 1, false);
    for (int e : entries_) used[static_cast<std::size_t>(e)] = true;
    for (int x = 1; x <= shape_.n(); ++x)
      if (!used[static_cast<std::size_t>(x)]) word.push_back(x);
    return word;
  }

  /// Coset length; all inversions of the minimal representative sit across blocks.
  int length() const {
    std::vector<int> w = full_word();
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++inv;
    return inv;
  }

  friend bool operator==(const PartialPermutation& a, const PartialPermutation& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }
  friend auto operator<=>(const PartialPermutation& a, const PartialPermutation& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int check_index(int i) const {
    if (i < 1 || i > size()) throw rankvar::domain_error("entry index " + std::to_string(i) + " out of range");
    return i;
  }

  void validate() const {
    const int n = shape_.n();
    if (static_cast<int>(entries_.size()) != shape_.top())
      throw validation_error(violation::wrong_length,
                             "expected " + std::to_string(shape_.top()) + " entries, got " +
                                 std::to_string(entries_.size()));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int e : entries_) {
      if (e < 1 || e > n)
        throw validation_error(violation::entry_out_of_range, "entry " + std::to_string(e) + " outside [1," +
                                                                  std::to_string(n) + "]");
      if (seen[static_cast<std::size_t>(e)])
        throw validation_error(violation::duplicate_entry, "entry " + std::to_string(e) + " repeated");
      seen[static_cast<std::size_t>(e)] = true;
    }
    const auto& ks = shape_.ks();
    for (int j = 1; j < size(); ++j) {
      bool descent_allowed = std::find(ks.begin(), ks.end(), j) != ks.end();
      if (!descent_allowed && entries_[static_cast<std::size_t>(j - 1)] > entries_[static_cast<std::size_t>(j)])
        throw validation_error(violation::missing_ascent,
                               "descent at position " + std::to_string(j) + " is not a block boundary");
    }
  }

  void compute_labels() {
    const int m = shape_.levels();
    colors_.resize(entries_.size());
    int level = 1;
    for (int i = 1; i <= size(); ++i) {
      while (i > shape_.k(level)) ++level;
      colors_[static_cast<std::size_t>(i - 1)] = level;
    }
    multi_.assign(entries_.size(), MultiIndex(static_cast<std::size_t>(m), 0));
    for (std::size_t i = 0; i < entries_.size(); ++i)
      for (std::size_t l = 0; l < entries_.size(); ++l)
        if (entries_[l] <= entries_[i])
          for (int j = colors_[l]; j <= m; ++j) ++multi_[i][static_cast<std::size_t>(j - 1)];
  }

  FlagShape shape_;
  std::vector<int> entries_;
  std::vector<int> colors_;
  std::vector<MultiIndex> multi_;
};

inline PartialPermutation make_partial_permutation(const FlagShape& shape, std::vector<int> entries) {
  return PartialPermutation(shape, std::move(entries));
}

inline int color(const PartialPermutation& p, int i) { return p.color(i); }
inline MultiIndex multi_index(const PartialPermutation& p, int i) { return p.multi_index(i); }

/// Builds a permutation from per-block value sets, sorting each block.
inline PartialPermutation from_blocks(const FlagShape& shape, std::vector<std::vector<int>> blocks) {
  std::vector<int> entries;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    entries.insert(entries.end(), b.begin(), b.end());
  }
  return PartialPermutation(shape, std::move(entries));
}

inline std::vector<std::vector<int>> blocks_of(const PartialPermutation& p) {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(p.shape().levels()));
  for (int i = 1; i <= p.size(); ++i) blocks[static_cast<std::size_t>(p.color(i) - 1)].push_back(p[i]);
  return blocks;
}

/// The minimal element (1, 2, ..., k_m).
inline PartialPermutation identity_coset(const FlagShape& shape) {
  std::vector<int> e(static_cast<std::size_t>(shape.top()));
  std::iota(e.begin(), e.end(), 1);
  return PartialPermutation(shape, std::move(e));
}

/// The maximal element: block 1 holds the k_1 largest values, and so on.
inline PartialPermutation longest_coset(const FlagShape& shape) {
  std::vector<std::vector<int>> blocks;
  int hi = shape.n();
  for (int j = 1; j <= shape.levels(); ++j) {
    std::vector<int> b;
    for (int c = 0; c < shape.k(j) - shape.k(j - 1); ++c) b.push_back(hi--);
    blocks.push_back(std::move(b));
  }
  return from_blocks(shape, std::move(blocks));
}

/// Quotient Bruhat order by sorted-prefix dominance on every level.
inline bool bruhat_leq(const PartialPermutation& a, const PartialPermutation& b) {
  if (a.shape() != b.shape()) throw rankvar::domain_error("bruhat_leq: shape mismatch");
  const auto& ks = a.shape().ks();
  for (int kj : ks) {
    std::vector<int> pa(a.entries().begin(), a.entries().begin() + kj);
    std::vector<int> pb(b.entries().begin(), b.entries().begin() + kj);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    for (int i = 0; i < kj; ++i)
      if (pa[static_cast<std::size_t>(i)] > pb[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

/// First k_s entries, on the shape (k_1, ..., k_s; n).
inline PartialPermutation truncate(const PartialPermutation& p, int s) {
  const FlagShape& sh = p.shape();
  if (s < 1 || s > sh.levels()) throw rankvar::domain_error("truncation level out of range");
  std::vector<int> ks(sh.ks().begin(), sh.ks().begin() + s);
  std::vector<int> e(p.entries().begin(), p.entries().begin() + sh.k(s));
  return PartialPermutation(FlagShape(sh.n(), std::move(ks)), std::move(e));
}

/// Conjugation by the basis reversal e_i -> e_{n+1-i} (left multiplication
/// by w_0 on cosets), re-sorted inside blocks.
inline PartialPermutation reverse_basis(const PartialPermutation& p) {
  auto blocks = blocks_of(p);
  for (auto& b : blocks)
    for (int& x : b) x = p.shape().n() + 1 - x;
  return from_blocks(p.shape(), std::move(blocks));
}

/// Left multiplication by the transposition (a b): swaps the two values in
/// the full word. Returns p itself when both values share a block.
inline PartialPermutation apply_transposition(const PartialPermutation& p, int a, int b) {
  auto blocks = blocks_of(p);
  for (auto& blk : blocks)
    for (int& x : blk) {
      if (x == a) x = b;
      else if (x == b) x = a;
    }
  return from_blocks(p.shape(), std::move(blocks));
}

/// Every coset of the shape, in lexicographic order of entries.
inline std::vector<PartialPermutation> all_cosets(const FlagShape& shape) {
  std::vector<PartialPermutation> out;
  const int n = shape.n();
  std::vector<int> entries;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == shape.top()) {
      out.emplace_back(shape, entries);
      return;
    }
    bool block_start = false;
    for (int j = 0; j <= shape.levels(); ++j)
      if (shape.k(j) == pos) block_start = true;
    int lo = block_start ? 1 : entries.back() + 1;
    for (int x = lo; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      entries.push_back(x);
      self(self, pos + 1);
      entries.pop_back();
      used[static_cast<std::size_t>(x)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

/// Cosets covered by p: t*p with length exactly one less.
inline std::vector<PartialPermutation> lower_covers(const PartialPermutation& p) {
  std::vector<PartialPermutation> out;
  const int n = p.shape().n();
  const int len = p.length();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (p.block_of(a) == p.block_of(b)) continue;
      PartialPermutation q = apply_transposition(p, a, b);
      if (q.length() == len - 1) out.push_back(std::move(q));
    }
  return out;
}

/// Cosets covering p.
inline std::vector<PartialPermutation> upper_covers(const PartialPermutation& p) {
  std::vector<PartialPermutation> out;
  const int n = p.shape().n();
  const int len = p.length();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (p.block_of(a) == p.block_of(b)) continue;
      PartialPermutation q = apply_transposition(p, a, b);
      if (q.length() == len + 1) out.push_back(std::move(q));
    }
  return out;
}

}  // namespace rankvar
