#pragma once

// Exact scalar fields and the little linear algebra the lifting and
// membership checks need.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankvar/error.hpp"

namespace rankvar {

using rational = boost::multiprecision::cpp_rational;

/// Element of Z/pZ for a prime p chosen at run time.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::int64_t p) : p_(p), v_(((value % p) + p) % p) {}

  std::int64_t value() const noexcept { return v_; }
  std::int64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.v_, a.p_); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v_ - b.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) { return Fp(a.v_ * b.v_, a.p_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  Fp inverse() const {
    if (v_ == 0) throw rankvar::domain_error("division by zero in F_p");
    // Fermat: v^(p-2)
    std::int64_t result = 1, base = v_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Fp(result, p_);
  }

 private:
  std::int64_t p_ = 2;
  std::int64_t v_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const rational& x) { return x == 0; }

template <class F>
using Vec = std::vector<F>;

template <class F>
using Mat = std::vector<Vec<F>>;

/// Rank by Gaussian elimination on a copy.
template <class F>
int rank(Mat<F> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(a[i][c])) continue;
      F f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Keep only the listed columns (0-based).
template <class F>
Mat<F> select_columns(const Mat<F>& a, const std::vector<int>& cols) {
  Mat<F> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    Vec<F> r;
    r.reserve(cols.size());
    for (int c : cols) r.push_back(row[static_cast<std::size_t>(c)]);
    out.push_back(std::move(r));
  }
  return out;
}

/// dim(span(rows) ∩ span{e_i : i in keep}), coordinates 1-based; computed as
/// rank minus the rank of the projection onto the remaining coordinates.
template <class F>
int intersection_with_coordinates(const Mat<F>& rows, const std::vector<bool>& keep) {
  std::vector<int> others;
  for (std::size_t i = 1; i < keep.size(); ++i)
    if (!keep[i]) others.push_back(static_cast<int>(i) - 1);
  int total = rank(rows);
  if (others.empty() || rows.empty()) return total;
  return total - rank(select_columns(rows, others));
}

/// Support of a coordinate vector as a 1-based [lo, hi] range; {0, -1} when zero.
template <class F>
std::pair<int, int> support_range(const Vec<F>& v) {
  int lo = 0, hi = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) {
      if (lo == 0) lo = static_cast<int>(i) + 1;
      hi = static_cast<int>(i) + 1;
    }
  return {lo, hi};
}

}  // namespace rankvar
