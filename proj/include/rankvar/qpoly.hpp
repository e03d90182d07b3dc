#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rankvar/error.hpp"

namespace rankvar {

using bigint = boost::multiprecision::cpp_int;

/// Integer polynomial in the formal variable q, stored densely from degree 0.
/// Canonical form carries no trailing zero coefficients; the zero polynomial
/// has an empty coefficient vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit QPolynomial(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial constant(bigint c) { return QPolynomial(std::vector<bigint>{std::move(c)}); }

  static QPolynomial monomial(int degree, bigint c = 1) {
    std::vector<bigint> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return QPolynomial(std::move(v));
  }

  /// 1 + q + ... + q^(terms-1); zero when terms <= 0.
  static QPolynomial geometric(int terms) {
    if (terms <= 0) return {};
    return QPolynomial(std::vector<bigint>(static_cast<std::size_t>(terms), bigint(1)));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<bigint>& coefficients() const noexcept { return coeffs_; }

  bigint coefficient(int d) const {
    if (d < 0 || d > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(d)];
  }

  bigint eval(const bigint& q) const {
    bigint acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  /// Largest a with q^a dividing this polynomial; -1 for zero.
  int q_adic_valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  QPolynomial shifted(int a) const {
    if (is_zero() || a == 0) return *this;
    if (a > 0) {
      std::vector<bigint> v(static_cast<std::size_t>(a));
      v.insert(v.end(), coeffs_.begin(), coeffs_.end());
      return QPolynomial(std::move(v));
    }
    if (q_adic_valuation() < -a)
      throw rankvar::domain_error("polynomial is not divisible by q^" + std::to_string(-a));
    return QPolynomial(std::vector<bigint>(coeffs_.begin() + (-a), coeffs_.end()));
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<bigint> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(v));
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Ascending-degree rendering, e.g. "6 + 8*q + 7*q^2 + 3*q^3 + q^4".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      bigint c = coeffs_[i];
      if (c == 0) continue;
      bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << c;
        continue;
      }
      if (c != 1) os << c << '*';
      os << 'q';
      if (i > 1) os << '^' << i;
    }
    return os.str();
  }

  /// Inverse of to_string(); also accepts unordered terms and stray spaces.
  static QPolynomial parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw rankvar::domain_error("empty polynomial");
    QPolynomial out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        throw rankvar::domain_error("malformed polynomial near '" + s.substr(pos) + "'");
      }
      std::size_t end = s.find_first_of("+-", pos);
      std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (term.empty()) throw rankvar::domain_error("malformed polynomial term");
      pos = end == std::string::npos ? s.size() : end;

      bigint coeff = 1;
      int exponent = 0;
      std::size_t qpos = term.find('q');
      std::string num = qpos == std::string::npos ? term : term.substr(0, qpos);
      if (!num.empty() && num.back() == '*') num.pop_back();
      if (!num.empty()) {
        for (char ch : num)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw rankvar::domain_error("malformed coefficient '" + num + "'");
        coeff = bigint(num);
      } else if (qpos == std::string::npos) {
        throw rankvar::domain_error("malformed polynomial term");
      }
      if (qpos != std::string::npos) {
        exponent = 1;
        std::string rest = term.substr(qpos + 1);
        if (!rest.empty()) {
          if (rest[0] != '^' || rest.size() < 2) throw rankvar::domain_error("malformed exponent");
          for (std::size_t i = 1; i < rest.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(rest[i])))
              throw rankvar::domain_error("malformed exponent");
          exponent = std::stoi(rest.substr(1));
        }
      }
      out += monomial(exponent, coeff * sign);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<bigint> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

}  // namespace rankvar
