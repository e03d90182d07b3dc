#pragma once

// Subcommand front end. Exit status: 0 success, 1 domain error, 2 usage error.

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rankvar/rankvar.hpp"

namespace rankvar::cli {

namespace detail {

struct Input {
  std::string set;
  std::string file;
  std::optional<int> n;

  void add_to(CLI::App* app) {
    app->add_option("set", set, "rank set: \"n=7 k=4 : 1-2 3-4 5-7 6-6\", JSON, tuple notation, or - for stdin");
    app->add_option("--file", file, "read the rank set from a file");
    app->add_option("--n", n, "ambient dimension (needed for tuple notation)");
  }

  std::string text(std::istream& in) const {
    if (!file.empty()) {
      std::ifstream f(file);
      if (!f) throw rankvar::domain_error("cannot read " + file);
      return std::string(std::istreambuf_iterator<char>(f), {});
    }
    if (set.empty() || set == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    return set;
  }

  RankSet rank_set(std::istream& in) const { return parse_rank_set(text(in), n); }
};

struct RichInput {
  std::string shape, u, v;

  void add_to(CLI::App* app) {
    app->add_option("--shape", shape, "flag shape, e.g. \"2,4;7\"");
    app->add_option("--u", u, "permutation u, e.g. \"4 6 | 2 7\"");
    app->add_option("--v", v, "permutation v");
  }

  bool given() const { return !shape.empty() || !u.empty() || !v.empty(); }

  RichardsonDatum datum() const {
    if (shape.empty() || u.empty() || v.empty()) throw CLI::ValidationError("--shape, --u and --v go together");
    FlagShape s = parse_shape(shape);
    return RichardsonDatum(parse_permutation(s, u), parse_permutation(s, v));
  }
};

inline std::string show(const RankSet& M, bool paper) { return paper ? render_paper(M) : render_text(M); }

inline json segre_json(const SegreDecomposition& d) {
  json singles = json::array(), blocks = json::array();
  for (const auto& w : d.quotient_singletons) singles.push_back({w.l, w.r});
  for (const auto& b : d.blocks) blocks.push_back({{"range", {b.range.l, b.range.r}}, {"k", b.j}, {"n", b.m}});
  return json{{"singletons", singles}, {"blocks", blocks}};
}

inline std::string segre_text(const SegreDecomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    if (i) out += " x ";
    out += "G(" + std::to_string(d.blocks[i].j) + "," + std::to_string(d.blocks[i].m) + ")";
  }
  if (d.blocks.empty()) out = "point";
  out += " with singletons {";
  for (std::size_t i = 0; i < d.quotient_singletons.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(d.quotient_singletons[i].l) + "," + std::to_string(d.quotient_singletons[i].r) + "]";
  }
  return out + "}";
}

inline json suite_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"checked", c.checked},
                      {"failed", c.failed},
                      {"passed", c.passed()},
                      {"first_counterexample", c.first_counterexample.empty() ? json(nullptr) : json(c.first_counterexample)}});
  return json{{"kmax", r.k_max}, {"nmax", r.n_max}, {"passed", r.passed()}, {"checks", checks}};
}

inline json adjudication_json(const AdjudicationReport& rep) {
  json cands = json::array();
  for (const auto& c : rep.candidates)
    cands.push_back({{"bracket", to_string(c.convention.bracket)},
                     {"base", to_string(c.convention.base)},
                     {"recurrence_agreements", c.agreements},
                     {"checked", c.checked},
                     {"stirling_agreements", c.stirling_agreements},
                     {"first_mismatch", c.first_mismatch.empty() ? json(nullptr) : json(c.first_mismatch)}});
  json adopted = nullptr;
  if (rep.adopted) adopted = {{"bracket", to_string(rep.adopted->bracket)}, {"base", to_string(rep.adopted->base)}};
  return json{{"max_n", rep.max_n}, {"candidates", cands}, {"adopted", adopted}};
}

}  // namespace detail

/// Runs one command line. `in` feeds inputs given as "-".
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Rank sets, Richardson varieties and their singular loci"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, paper = false;
  int jobs = 1;
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--paper-notation", paper, "render rank sets as (2 3 4,1 2 3)");
  app.add_option("--jobs", jobs, "worker threads for enumerate and oracle --suite")->check(CLI::Range(1, 256));

  detail::Input input;
  detail::RichInput richin;
  int k = 0, n = 0, max_n = 10, kmax = 3, nmax = 7;
  bool by_dim = false, recurrence = false, suite = false, smooth_only = false;
  std::vector<int> primes{2, 3, 5, 7, 11};

  auto* validate = app.add_subcommand("validate", "check a rank set and print its canonical form");
  auto* dim = app.add_subcommand("dim", "dimension of X(M)");
  auto* colors = app.add_subcommand("colors", "containment colors of the intervals");
  auto* rich_cmd = app.add_subcommand("rich", "minimal Richardson datum of a rank set");
  auto* rank_cmd = app.add_subcommand("rank", "rank set of a Richardson variety");
  auto* roundtrip = app.add_subcommand("roundtrip", "rank(rich(M))");
  auto* singular = app.add_subcommand("singular", "singular locus of X(M) or of R(u,v)");
  auto* smooth = app.add_subcommand("smooth", "smoothness verdict and Segre decomposition");
  auto* tfixed = app.add_subcommand("tfixed", "torus-fixed points of X(M)");
  auto* enumerate = app.add_subcommand("enumerate", "all rank sets of G(k,n)");
  auto* gpoly = app.add_subcommand("gpoly", "generating polynomial g[k,n]");
  auto* stirling = app.add_subcommand("stirling-check", "q-Stirling identity matrix and convention report");
  auto* oracle = app.add_subcommand("oracle", "finite-field dimension fit or the exhaustive suite");

  for (auto* c : {validate, dim, colors, rich_cmd, roundtrip, tfixed}) input.add_to(c);
  for (auto* c : {singular, smooth}) {
    input.add_to(c);
    richin.add_to(c);
  }
  richin.add_to(rank_cmd);
  tfixed->add_flag("--smooth", smooth_only, "only T-fixed points in the smooth locus (all-color-1 rank sets)");
  for (auto* c : {enumerate, gpoly}) {
    c->add_option("--k", k, "subspace dimension")->required();
    c->add_option("--n", n, "ambient dimension")->required();
  }
  enumerate->add_flag("--by-dim", by_dim, "group by dimension");
  gpoly->add_flag("--recurrence", recurrence, "use the recurrence instead of the direct sum");
  stirling->add_option("--max-n", max_n, "largest n")->check(CLI::Range(1, 12));
  oracle->add_flag("--suite", suite, "run the exhaustive suite");
  oracle->add_option("--kmax", kmax)->check(CLI::Range(1, 8));
  oracle->add_option("--nmax", nmax)->check(CLI::Range(1, 9));
  oracle->add_option("--primes", primes, "sample primes for the dimension fit");
  input.add_to(oracle);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) {
      RankSet M = input.rank_set(in);
      if (as_json) out << json{{"valid", true}, {"rank_set", to_json(M)}}.dump() << "\n";
      else out << "valid: " << detail::show(M, paper) << "\n";
    } else if (dim->parsed()) {
      RankSet M = input.rank_set(in);
      if (as_json) out << json{{"rank_set", to_json(M)}, {"dim", dimension(M)}}.dump() << "\n";
      else out << dimension(M) << "\n";
    } else if (colors->parsed()) {
      RankSet M = input.rank_set(in);
      ColoredRankSet C = assign_colors(M);
      if (as_json) {
        json iv = json::array();
        for (std::size_t i = 0; i < M.intervals().size(); ++i)
          iv.push_back({{"interval", {M.intervals()[i].l, M.intervals()[i].r}}, {"color", C.colors[i]}});
        out << json{{"m", C.m}, {"intervals", iv}}.dump() << "\n";
      } else {
        out << "m=" << C.m << " :";
        for (std::size_t i = 0; i < M.intervals().size(); ++i)
          out << " " << M.intervals()[i].l << "-" << M.intervals()[i].r << "^" << C.colors[i];
        out << "\n";
      }
    } else if (rich_cmd->parsed()) {
      RichardsonDatum R = rich(input.rank_set(in));
      out << (as_json ? to_json(R).dump() : render_text(R)) << "\n";
    } else if (rank_cmd->parsed()) {
      RankSet M = rank_of(richin.datum());
      out << (as_json ? to_json(M).dump() : detail::show(M, paper)) << "\n";
    } else if (roundtrip->parsed()) {
      RankSet M = input.rank_set(in);
      RankSet back = roundtrip_rank_set(M);
      if (as_json) out << json{{"input", to_json(M)}, {"output", to_json(back)}, {"identity", back == M}}.dump() << "\n";
      else out << detail::show(back, paper) << (back == M ? "" : "  (differs from input)") << "\n";
      if (!(back == M)) return 1;
    } else if (singular->parsed()) {
      SingularLocusReport rep = richin.given() ? richardson_singular_locus(richin.datum()) : rank_singular_locus(input.rank_set(in));
      out << (as_json ? to_json(rep).dump() + "\n" : render_text(rep, paper));
    } else if (smooth->parsed()) {
      if (richin.given()) {
        RichardsonDatum R = richin.datum();
        bool s = richardson_singular_locus(R).smooth();
        if (as_json) out << json{{"richardson", to_json(R)}, {"smooth", s}}.dump() << "\n";
        else out << (s ? "smooth" : "singular") << "\n";
      } else {
        RankSet M = input.rank_set(in);
        auto d = segre_decomposition(M);
        if (as_json) out << json{{"rank_set", to_json(M)}, {"smooth", d.has_value()}, {"segre", d ? detail::segre_json(*d) : json(nullptr)}}.dump() << "\n";
        else out << (d ? "smooth: " + detail::segre_text(*d) : std::string("singular")) << "\n";
      }
    } else if (tfixed->parsed()) {
      RankSet M = input.rank_set(in);
      auto pts = smooth_only ? smooth_tfixed_points(M) : tfixed_points(M);
      if (as_json) {
        out << json{{"rank_set", to_json(M)}, {"smooth_only", smooth_only}, {"points", pts}}.dump() << "\n";
      } else {
        for (const auto& p : pts) {
          for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
          out << "\n";
        }
        out << pts.size() << " point" << (pts.size() == 1 ? "" : "s") << "\n";
      }
    } else if (enumerate->parsed()) {
      std::vector<RankSet> sets = all_rank_sets(k, n);
      std::vector<int> dims(sets.size());
      const std::size_t T = static_cast<std::size_t>(jobs);
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < T; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < sets.size(); i += T) dims[i] = dimension(sets[i]);
        });
      for (auto& th : pool) th.join();
      if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < sets.size(); ++i) arr.push_back({{"rank_set", to_json(sets[i])}, {"dim", dims[i]}});
        out << json{{"k", k}, {"n", n}, {"count", sets.size()}, {"rank_sets", arr}}.dump() << "\n";
      } else if (by_dim) {
        int top = *std::max_element(dims.begin(), dims.end());
        for (int d = 0; d <= top; ++d) {
          out << d << ":";
          bool first = true;
          for (std::size_t i = 0; i < sets.size(); ++i)
            if (dims[i] == d) {
              out << (first ? " " : ", ") << detail::show(sets[i], paper);
              first = false;
            }
          out << "\n";
        }
      } else {
        for (std::size_t i = 0; i < sets.size(); ++i) out << dims[i] << "\t" << detail::show(sets[i], paper) << "\n";
      }
    } else if (gpoly->parsed()) {
      QPolynomial g = recurrence ? g_poly_recurrence(k, n) : g_poly_direct(k, n);
      out << (as_json ? to_json(g).dump() : g.to_string()) << "\n";
    } else if (stirling->parsed()) {
      AdjudicationReport adj = adjudicate_conventions(std::min(max_n, 6));
      json matrix = json::array();
      bool all = true;
      std::ostringstream table;
      table << "  n\\k";
      for (int kk = 1; kk <= max_n; ++kk) table << " " << kk % 10;
      table << "\n";
      for (int nn = 1; nn <= max_n; ++nn) {
        table << std::string(5 - std::to_string(nn).size(), ' ') << nn;
        json row = json::array();
        for (int kk = 1; kk <= max_n; ++kk) {
          if (kk > nn) {
            table << "  ";
            continue;
          }
          bool ok = verify_stirling_identity(kk, nn);
          all = all && ok;
          row.push_back(ok);
          table << " " << (ok ? 'P' : 'F');
        }
        matrix.push_back(row);
        table << "\n";
      }
      if (as_json) {
        out << json{{"max_n", max_n}, {"passed", all}, {"matrix", matrix}, {"adjudication", detail::adjudication_json(adj)}}.dump()
            << "\n";
      } else {
        out << table.str();
        out << "conventions checked on 1 <= k <= n <= " << adj.max_n << ":\n";
        for (const auto& c : adj.candidates)
          out << "  " << to_string(c.convention.bracket) << ", " << to_string(c.convention.base) << ": recurrence "
              << c.agreements << "/" << c.checked << ", identity " << c.stirling_agreements << "/" << c.stirling_checked
              << (c.first_mismatch.empty() ? "" : "  first mismatch " + c.first_mismatch) << "\n";
        out << (all ? "PASS" : "FAIL") << "\n";
      }
      if (!all) return 1;
    } else if (oracle->parsed()) {
      if (suite) {
        SuiteOptions opt;
        opt.k_max = kmax;
        opt.n_max = nmax;
        opt.jobs = jobs;
        SuiteReport rep = exhaustive_suite(opt);
        if (as_json) {
          out << detail::suite_json(rep).dump() << "\n";
        } else {
          out << "check                         checked  failed\n";
          for (const auto& c : rep.checks) {
            std::string name = c.name;
            name.resize(28, ' ');
            out << name << std::string(9 - std::to_string(c.checked).size(), ' ') << c.checked
                << std::string(8 - std::to_string(c.failed).size(), ' ') << c.failed;
            if (!c.passed()) out << "  first: " << c.first_counterexample;
            out << "\n";
          }
          out << (rep.passed() ? "PASS" : "FAIL") << "\n";
        }
        if (!rep.passed()) return 1;
      } else {
        RankSet M = input.rank_set(in);
        PointCountProfile prof = fit_profile(M, primes);
        if (as_json) {
          json counts = json::array();
          for (auto [q, c] : prof.counts) counts.push_back({q, c});
          out << json{{"rank_set", to_json(M)}, {"counts", counts}, {"degree", prof.degree}, {"dim", dimension(M)}}.dump()
              << "\n";
        } else {
          for (auto [q, c] : prof.counts) out << "q=" << q << ": " << c << "\n";
          out << "fitted degree " << prof.degree << ", dim " << dimension(M) << "\n";
        }
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err, std::cin);
}

}  // namespace rankvar::cli
