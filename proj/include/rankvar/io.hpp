#pragma once

// Text, JSON and tuple-notation forms for shapes, permutations, rank sets,
// Richardson data, polynomials and singular-locus reports.

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rankvar/bridge.hpp"
#include "rankvar/error.hpp"
#include "rankvar/permutations.hpp"
#include "rankvar/qpoly.hpp"
#include "rankvar/ranksets.hpp"
#include "rankvar/singular.hpp"

namespace rankvar {

using json = nlohmann::json;

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline int parse_int(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw rankvar::domain_error("expected an integer");
  std::size_t i = 0;
  if (t[0] == '-' || t[0] == '+') i = 1;
  if (i == t.size()) throw rankvar::domain_error("expected an integer, got '" + t + "'");
  for (std::size_t j = i; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) throw rankvar::domain_error("expected an integer, got '" + t + "'");
  if (t.size() > 9) throw rankvar::domain_error("integer too large: '" + t + "'");
  return std::stoi(t);
}

inline std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(parse_int(tok));
  return out;
}

}  // namespace detail

// ------------------------------------------------------------ FlagShape

/// "2,4;7"
inline FlagShape parse_shape(std::string_view text) {
  std::string t = detail::trim(text);
  auto semi = t.find(';');
  if (semi == std::string::npos) throw rankvar::domain_error("shape must look like \"k1,...,km;n\"");
  std::vector<int> ks;
  std::string head = t.substr(0, semi);
  std::replace(head.begin(), head.end(), ',', ' ');
  ks = detail::parse_ints(head);
  if (ks.empty()) throw rankvar::domain_error("shape needs at least one k");
  return FlagShape(detail::parse_int(t.substr(semi + 1)), std::move(ks));
}

// ------------------------------------------------- PartialPermutation

/// "4 6 | 2 7"
inline std::string render_text(const PartialPermutation& p) {
  std::string out;
  int level = 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > p.shape().k(level)) {
      out += " |";
      ++level;
    }
    if (!out.empty()) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Blocks are separated by "|"; a text without bars is cut at the shape's
/// descent positions.
inline PartialPermutation parse_permutation(const FlagShape& shape, std::string_view text) {
  std::string t(text);
  std::vector<int> entries;
  std::vector<std::size_t> block_sizes;
  std::size_t start = 0;
  while (true) {
    auto bar = t.find('|', start);
    auto part = detail::parse_ints(t.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
    block_sizes.push_back(part.size());
    entries.insert(entries.end(), part.begin(), part.end());
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  if (block_sizes.size() > 1) {
    if (static_cast<int>(block_sizes.size()) != shape.levels())
      throw validation_error(violation::wrong_length, "expected " + std::to_string(shape.levels()) + " blocks");
    for (int j = 1; j <= shape.levels(); ++j)
      if (static_cast<int>(block_sizes[static_cast<std::size_t>(j - 1)]) != shape.k(j) - shape.k(j - 1))
        throw validation_error(violation::wrong_length, "block " + std::to_string(j) + " has the wrong size");
  }
  return PartialPermutation(shape, std::move(entries));
}

inline json to_json(const FlagShape& s) { return json{{"n", s.n()}, {"ks", s.ks()}}; }

inline json to_json(const PartialPermutation& p) {
  return json{{"n", p.shape().n()}, {"ks", p.shape().ks()}, {"entries", p.entries()}};
}

inline FlagShape shape_from_json(const json& j) {
  return FlagShape(j.at("n").get<int>(), j.at("ks").get<std::vector<int>>());
}

inline PartialPermutation permutation_from_json(const json& j) {
  return PartialPermutation(shape_from_json(j), j.at("entries").get<std::vector<int>>());
}

// ------------------------------------------------------------ RankSet

/// "n=8 k=5 : 1-7 2-6 3-4 4-5 6-8"
inline std::string render_text(const RankSet& M) {
  std::string out = "n=" + std::to_string(M.n()) + " k=" + std::to_string(M.k()) + " :";
  for (const auto& w : M.intervals()) out += " " + std::to_string(w.l) + "-" + std::to_string(w.r);
  return out;
}

inline std::string render_text(const std::optional<RankSet>& M) { return M ? render_text(*M) : "EMPTY"; }

/// Groups in decreasing left endpoint, e.g. "(2 3 4,1 2 3)".
inline std::string render_paper(const RankSet& M) {
  std::string out = "(";
  const auto& W = M.intervals();
  for (std::size_t i = W.size(); i-- > 0;) {
    for (int x = W[i].l; x <= W[i].r; ++x) {
      out += std::to_string(x);
      if (x < W[i].r) out += ' ';
    }
    if (i > 0) out += ',';
  }
  return out + ")";
}

inline json to_json(const RankSet& M) {
  json iv = json::array();
  for (const auto& w : M.intervals()) iv.push_back({w.l, w.r});
  return json{{"n", M.n()}, {"intervals", iv}};
}

inline RankSet rank_set_from_json(const json& j) {
  std::vector<Interval> v;
  for (const auto& p : j.at("intervals")) {
    if (!p.is_array() || p.size() != 2) throw rankvar::domain_error("each interval must be a pair [l, r]");
    v.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return RankSet(j.at("n").get<int>(), std::move(v));
}

/// Tuple notation needs n from the caller. Groups are comma separated; an
/// index run may be written with spaces ("2 3 4") or, for n < 10, packed ("234").
inline RankSet parse_paper_notation(std::string_view text, int n) {
  std::string t = detail::trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw rankvar::domain_error("tuple notation must be parenthesized, e.g. (2 3 4,1 2 3)");
  t = t.substr(1, t.size() - 2);
  std::vector<Interval> v;
  std::size_t start = 0;
  while (true) {
    auto comma = t.find(',', start);
    std::string group = detail::trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    std::vector<int> idx;
    if (group.find(' ') == std::string::npos && group.size() > 1 && n < 10) {
      for (char ch : group) idx.push_back(detail::parse_int(std::string(1, ch)));
    } else {
      idx = detail::parse_ints(group);
    }
    if (idx.empty()) throw rankvar::domain_error("empty group in tuple notation");
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i] != idx[i - 1] + 1) throw rankvar::domain_error("group '" + group + "' is not a consecutive run");
    v.push_back({idx.front(), idx.back()});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RankSet(n, std::move(v));
}

/// Accepts the text form, JSON, or (with n) tuple notation.
inline RankSet parse_rank_set(std::string_view text, std::optional<int> n = std::nullopt) {
  std::string t = detail::trim(text);
  if (t.empty()) throw rankvar::domain_error("empty rank set");
  if (t.front() == '{') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::exception& e) {
      throw rankvar::domain_error(std::string("malformed JSON: ") + e.what());
    }
    return rank_set_from_json(j);
  }
  if (t.front() == '(') {
    if (!n) throw rankvar::domain_error("tuple notation needs the ambient dimension (--n)");
    return parse_paper_notation(t, *n);
  }
  auto colon = t.find(':');
  if (colon == std::string::npos) throw rankvar::domain_error("rank set text must look like \"n=8 k=5 : 1-7 2-6\"");
  std::istringstream head(t.substr(0, colon));
  std::string tok;
  std::optional<int> nn, kk;
  while (head >> tok) {
    if (tok.rfind("n=", 0) == 0) nn = detail::parse_int(tok.substr(2));
    else if (tok.rfind("k=", 0) == 0) kk = detail::parse_int(tok.substr(2));
    else throw rankvar::domain_error("unexpected token '" + tok + "' in rank set header");
  }
  if (!nn) nn = n;
  if (!nn) throw rankvar::domain_error("rank set text needs n=");
  std::vector<Interval> v;
  std::istringstream body(t.substr(colon + 1));
  while (body >> tok) {
    auto dash = tok.find('-', 1);
    if (dash == std::string::npos) {
      int x = detail::parse_int(tok);
      v.push_back({x, x});
    } else {
      v.push_back({detail::parse_int(tok.substr(0, dash)), detail::parse_int(tok.substr(dash + 1))});
    }
  }
  if (v.empty()) throw validation_error(violation::empty_rank_set, "a rank set needs at least one interval");
  RankSet M(*nn, std::move(v));
  if (kk && *kk != M.k())
    throw validation_error(violation::wrong_length, "header says k=" + std::to_string(*kk) + " but " +
                                                        std::to_string(M.k()) + " intervals were given");
  return M;
}

inline std::optional<RankSet> parse_rank_set_or_empty(std::string_view text, std::optional<int> n = std::nullopt) {
  if (detail::trim(text) == "EMPTY") return std::nullopt;
  return parse_rank_set(text, n);
}

// ----------------------------------------------------- RichardsonDatum

/// "shape=2,4;7 u=4 6 | 2 7 v=2 7 | 3 5"
inline std::string render_text(const RichardsonDatum& R) {
  return "shape=" + to_string(R.shape()) + " u=" + render_text(R.u()) + " v=" + render_text(R.v());
}

inline RichardsonDatum parse_richardson(std::string_view text) {
  std::string t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    json j = json::parse(t);
    FlagShape s = shape_from_json(j);
    return RichardsonDatum(PartialPermutation(s, j.at("u").get<std::vector<int>>()),
                           PartialPermutation(s, j.at("v").get<std::vector<int>>()));
  }
  auto ps = t.find("shape="), pu = t.find("u="), pv = t.find("v=");
  if (ps == std::string::npos || pu == std::string::npos || pv == std::string::npos || !(ps < pu && pu < pv))
    throw rankvar::domain_error("Richardson text must look like \"shape=2,4;7 u=4 6 | 2 7 v=2 7 | 3 5\"");
  FlagShape s = parse_shape(t.substr(ps + 6, pu - ps - 6));
  return RichardsonDatum(parse_permutation(s, t.substr(pu + 2, pv - pu - 2)), parse_permutation(s, t.substr(pv + 2)));
}

inline json to_json(const RichardsonDatum& R) {
  return json{{"n", R.shape().n()}, {"ks", R.shape().ks()}, {"u", R.u().entries()}, {"v", R.v().entries()}};
}

// -------------------------------------------------------------- reports

inline json to_json(const Variety& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

inline std::string render_text(const Variety& v) {
  return std::visit([](const auto& x) { return render_text(x); }, v);
}

inline json to_json(const SingularLocusReport& rep) {
  json comps = json::array();
  for (const auto& c : rep.components)
    comps.push_back({{"kind", std::holds_alternative<RankSet>(c.data) ? "rank_set" : "richardson"},
                     {"data", to_json(c.data)},
                     {"tag", to_string(c.tag)},
                     {"dim", c.dim}});
  return json{{"ambient", to_json(rep.ambient)}, {"ambient_dim", rep.ambient_dim}, {"components", comps}};
}

inline std::string render_text(const SingularLocusReport& rep, bool paper = false) {
  auto show = [&](const Variety& v) {
    if (paper && std::holds_alternative<RankSet>(v)) return render_paper(std::get<RankSet>(v));
    return render_text(v);
  };
  std::ostringstream os;
  os << show(rep.ambient) << " (dim " << rep.ambient_dim << ")\n";
  if (rep.components.empty()) {
    os << "smooth\n";
    return os.str();
  }
  os << "singular along " << rep.components.size() << " component" << (rep.components.size() == 1 ? "" : "s") << ":\n";
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    const auto& c = rep.components[i];
    os << "  M_" << i + 1 << " = " << show(c.data) << "  [" << to_string(c.tag) << ", dim " << c.dim << "]\n";
  }
  return os.str();
}

inline json to_json(const QPolynomial& p) {
  json c = json::array();
  for (const auto& x : p.coefficients()) c.push_back(x.str());
  return json{{"polynomial", p.to_string()}, {"coefficients", c}};
}

}  // namespace rankvar
