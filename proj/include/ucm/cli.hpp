#pragma once

// Command-line front end: census, degrees, chartable, fs, selfdual, verify.

#include "ucm/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace ucm::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

struct Options {
  std::int64_t q = 0;
  int n = 0;
  std::string format = "json";
  unsigned jobs = 1;
  std::string constant = "any";
  std::string family = "all";
  int max_n = 2;
  std::string out;
  bool approx = false;
  std::int64_t max_cost = 2000000;
};

namespace detail {

inline void check_q(std::int64_t q) {
  prime_power(q);
  if (q > FiniteField::max_order) throw DomainError("q above the supported bound " + std::to_string(FiniteField::max_order));
}

inline bool family_match(const std::string& family, const MultiPartition& lambda) {
  if (family == "semisimple") return is_semisimple(lambda);
  if (family == "regular") return is_regular(lambda);
  if (family == "unipotent") return is_unipotent(lambda);
  return true;
}

inline std::string tsv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + cells[i];
  return out + "\n";
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

inline void census(const Options& o, std::ostream& out) {
  const TorusContext ctx(o.q, o.n);
  const Census c = census_semisimple(ctx, o.n, o.jobs);
  if (o.format == "tsv") {
    out << tsv_row({"q", "n", "symplectic", "orthogonal", "real_total", "route_agreement"});
    out << tsv_row({std::to_string(c.q), std::to_string(c.n), c.symplectic.str(), c.orthogonal.str(),
                    c.real_total.str(), flag(c.route_agreement)});
    return;
  }
  out << to_json(c).dump() << "\n";
}

inline void degrees(const Options& o, std::ostream& out) {
  const TorusContext ctx(o.q, o.n);
  Json rows = Json::array();
  if (o.format == "tsv") out << tsv_row({"label", "degree", "real", "semisimple", "regular", "unipotent"});
  for (const auto& lambda : enumerate_multipartitions(ctx, o.n, Side::character)) {
    if (!family_match(o.family, lambda)) continue;
    const Integer d = degree(ctx, lambda);
    if (o.format == "tsv") {
      out << tsv_row({to_string(lambda), d.str(), flag(is_real(ctx, lambda)), flag(is_semisimple(lambda)),
                      flag(is_regular(lambda)), flag(is_unipotent(lambda))});
      continue;
    }
    rows.push_back(Json{{"label", to_json(lambda)},
                        {"degree", to_json(d)},
                        {"real", is_real(ctx, lambda)},
                        {"semisimple", is_semisimple(lambda)},
                        {"regular", is_regular(lambda)},
                        {"unipotent", is_unipotent(lambda)}});
  }
  if (o.format == "json") out << Json{{"q", o.q}, {"n", o.n}, {"characters", rows}}.dump() << "\n";
}

inline void chartable(const Options& o, std::ostream& out) {
  const TorusContext ctx(o.q, o.n);
  const CharTable t = char_table(ctx, o.n, {o.jobs, Integer(o.max_cost)});
  if (o.format == "tsv") {
    std::vector<std::string> header{"character"};
    for (const auto& c : t.columns) header.push_back(to_string(c.label));
    out << "# field " << field_name(t.field_modulus) << "\n" << tsv_row(header);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      std::vector<std::string> cells{to_string(t.rows[r])};
      for (const auto& v : t.values[r]) cells.push_back(to_string(v));
      out << tsv_row(cells);
      if (o.approx) {
        std::vector<std::string> approx{"approx:" + to_string(t.rows[r])};
        for (const auto& v : t.values[r]) approx.push_back(approx_string(v));
        out << tsv_row(approx);
      }
    }
    return;
  }
  Json columns = Json::array();
  for (const auto& c : t.columns) columns.push_back(to_json(c));
  Json rows = Json::object();
  Json approx = Json::object();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Json row = Json::object();
    Json approx_row = Json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      row[to_string(t.columns[c].label)] = to_string(t.values[r][c]);
      if (o.approx) approx_row[to_string(t.columns[c].label)] = approx_string(t.values[r][c]);
    }
    rows[to_string(t.rows[r])] = row;
    if (o.approx) approx[to_string(t.rows[r])] = approx_row;
  }
  Json doc{{"q", o.q}, {"n", o.n}, {"field", field_name(t.field_modulus)}, {"columns", columns}, {"rows", rows}};
  if (o.approx) doc["approx"] = approx;
  out << doc.dump() << "\n";
}

inline void fs(const Options& o, std::ostream& out) {
  const TorusContext ctx(o.q, o.n);
  std::map<MultiPartition, int> brute;
  const bool have_brute = ctx.q_odd() && o.n <= o.max_n;
  if (have_brute) brute = fs_bruteforce(ctx, o.n, {o.max_n, {o.jobs, Integer(o.max_cost)}});
  Json rows = Json::array();
  if (o.format == "tsv") out << tsv_row({"label", "real", "bruteforce", "semisimple_regular", "unipotent"});
  for (const auto& lambda : enumerate_multipartitions(ctx, o.n, Side::character)) {
    if (!family_match(o.family, lambda)) continue;
    const bool real = is_real(ctx, lambda);
    Json row{{"label", to_json(lambda)}, {"real", real}};
    row["bruteforce"] = have_brute ? Json(brute.at(lambda)) : Json(nullptr);
    row["semisimple_regular"] =
        real && (is_semisimple(lambda) || is_regular(lambda)) ? Json(fs_semisimple_regular(ctx, lambda)) : Json(nullptr);
    row["unipotent"] = is_unipotent(lambda) ? Json(fs_unipotent(lambda.at(trivial_orbit(Side::character)))) : Json(nullptr);
    if (o.format == "tsv") {
      auto cell = [](const Json& j) { return j.is_null() ? std::string("-") : j.dump(); };
      out << tsv_row({to_string(lambda), flag(real), cell(row["bruteforce"]), cell(row["semisimple_regular"]),
                      cell(row["unipotent"])});
    } else {
      rows.push_back(row);
    }
  }
  if (o.format == "json") out << Json{{"q", o.q}, {"n", o.n}, {"characters", rows}}.dump() << "\n";
}

inline void selfdual(const Options& o, std::ostream& out) {
  const FieldPtr field = make_field(o.q);
  ConstantFilter filter = ConstantFilter::any;
  if (o.constant == "-1") filter = ConstantFilter::minus_one;
  if (o.constant == "1") filter = ConstantFilter::plus_one;
  const auto polys = enumerate_self_dual(field, o.n, filter);
  if (o.format == "tsv") {
    out << tsv_row({"polynomial", "constant", "s", "t", "pairs", "selfduals"});
    for (const auto& h : polys) {
      const auto f = self_dual_factorization(h);
      out << tsv_row({to_string(h), h.coeff(0) == 1 ? "1" : "-1", std::to_string(f.s), std::to_string(f.t),
                      std::to_string(f.pairs.size()), std::to_string(f.selfduals.size())});
    }
    return;
  }
  Json list = Json::array();
  for (const auto& h : polys) {
    list.push_back(Json{{"polynomial", to_string(h)}, {"coefficients", h.coeffs()}, {"factorization", to_json(self_dual_factorization(h))}});
  }
  out << Json{{"q", o.q}, {"n", o.n}, {"field", field->name()}, {"constant", o.constant},
              {"count", polys.size()}, {"polynomials", list}}
             .dump()
      << "\n";
}

/// Invariant suite; returns true when every check passes.
inline bool verify(const Options& o, std::ostream& out) {
  Json checks = Json::array();
  bool all = true;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool passed = false;
    std::string error;
    try {
      passed = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && passed;
    Json entry{{"check", name}, {"passed", passed}};
    if (!error.empty()) entry["error"] = error;
    checks.push_back(entry);
    if (o.format == "tsv") out << tsv_row({name, passed ? "pass" : "FAIL", error});
  };
  const FieldPtr field = o.q % 2 == 1 ? make_field(o.q) : nullptr;
  for (int n = 1; n <= o.max_n; ++n) {
    const TorusContext ctx(o.q, n);
    const std::string at = "[n=" + std::to_string(n) + "]";
    check("class sizes sum to |G| " + at, [&] {
      Integer total = 0;
      for (const auto& c : enumerate_classes(ctx, n)) total += c.class_size;
      return total == group_order(ctx, n);
    });
    check("sum of squared degrees is |G| " + at, [&] {
      Integer total = 0;
      for (const auto& l : enumerate_multipartitions(ctx, n, Side::character)) total += degree(ctx, l) * degree(ctx, l);
      return total == group_order(ctx, n);
    });
    check("as many characters as classes " + at, [&] {
      return enumerate_multipartitions(ctx, n, Side::character).size() ==
             enumerate_multipartitions(ctx, n, Side::element).size();
    });
    if (n <= 2) {
      const CharTable t = char_table(ctx, n, {o.jobs, Integer(o.max_cost)});
      check("column orthogonality " + at, [&] {
        for (std::size_t a = 0; a < t.columns.size(); ++a) {
          for (std::size_t b = 0; b < t.columns.size(); ++b) {
            Cyclotomic s(t.field_modulus);
            for (std::size_t r = 0; r < t.rows.size(); ++r) s += t.values[r][a] * t.values[r][b].conj();
            const Rational want = a == b ? Rational(t.columns[a].centralizer_order) : Rational(0);
            if (!(s == Cyclotomic::from_rational(t.field_modulus, want))) return false;
          }
        }
        return true;
      });
      check("identity column equals degrees " + at, [&] {
        const auto id = t.column_index(central_class(ctx, 0, n));
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
          if (!(t.values[r][id] == Cyclotomic::from_rational(t.field_modulus, Rational(degree(ctx, t.rows[r]))))) return false;
        }
        return true;
      });
      check("central values " + at, [&] {
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
          for (std::int64_t a = 0; a < ctx.modulus(1); ++a) {
            if (!(t.at(t.rows[r], central_class(ctx, a, n)) == central_value(ctx, t.rows[r], a).embed(t.field_modulus))) {
              return false;
            }
          }
        }
        return true;
      });
      if (ctx.q_odd()) {
        check("indicator routes agree " + at, [&] {
          const auto brute = fs_bruteforce(ctx, t);
          for (std::size_t r = 0; r < t.rows.size(); ++r) {
            const auto& l = t.rows[r];
            const bool real = is_real(ctx, l);
            if ((brute[r] == 0) == real) return false;
            if (real && (is_semisimple(l) || is_regular(l)) && brute[r] != fs_semisimple_regular(ctx, l)) return false;
            if (is_unipotent(l) && brute[r] != fs_unipotent(l.at(trivial_orbit(Side::character)))) return false;
          }
          return true;
        });
      }
    }
    if (field) {
      check("census matches self-dual count " + at, [&] {
        const Census c = census_semisimple(ctx, n, o.jobs);
        if (!c.route_agreement) return false;
        if (n % 2 == 1) return true;
        return c.symplectic == count_by_constant(field, n, -1) && c.orthogonal == count_by_constant(field, n, 1);
      });
      check("real semisimple characters biject onto self-dual polynomials " + at, [&] {
        std::vector<FqPoly> images;
        for (const auto& l : real_semisimple_labels(ctx, n)) images.push_back(char_to_polynomial(ctx, field, l));
        std::sort(images.begin(), images.end());
        return images == enumerate_self_dual(field, n);
      });
    }
  }
  if (o.format == "json") out << Json{{"q", o.q}, {"max_n", o.max_n}, {"checks", checks}, {"passed", all}}.dump() << "\n";
  return all;
}

}  // namespace detail

/// Parses argv and runs one subcommand. Returns the process exit status.
inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character theory of finite unitary groups U(n, F_{q^2})", "ucm"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("--q", o.q, "field size q (prime power)")->required();
    auto* n = sub->add_option("--n", o.n, "degree n")->check(CLI::Range(1, 64));
    if (needs_n) n->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--out", o.out, "write output to this file");
  };
  auto* census = app.add_subcommand("census", "count symplectic and orthogonal semisimple characters");
  common(census, true);
  auto* degrees = app.add_subcommand("degrees", "list characters with degrees and type flags");
  common(degrees, true);
  degrees->add_option("--family", o.family)->check(CLI::IsMember({"semisimple", "regular", "unipotent", "all"}));
  auto* chartable = app.add_subcommand("chartable", "full exact character table");
  common(chartable, true);
  chartable->add_flag("--approx", o.approx, "add decimal approximations (not authoritative)");
  chartable->add_option("--max-cost", o.max_cost, "refuse tables with a larger cost estimate");
  auto* fs = app.add_subcommand("fs", "Frobenius-Schur indicators");
  common(fs, true);
  fs->add_option("--family", o.family)->check(CLI::IsMember({"semisimple", "regular", "unipotent", "all"}));
  fs->add_option("--max-n", o.max_n, "largest degree for the brute-force route");
  fs->add_option("--max-cost", o.max_cost, "refuse tables with a larger cost estimate");
  auto* selfdual = app.add_subcommand("selfdual", "self-dual polynomials of degree n over F_q");
  common(selfdual, true);
  selfdual->add_option("--constant", o.constant)->check(CLI::IsMember({"-1", "1", "any"}));
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  common(verify, false);
  verify->add_option("--max-n", o.max_n, "largest degree to check")->check(CLI::Range(1, 4));
  verify->add_option("--max-cost", o.max_cost, "refuse tables with a larger cost estimate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return usage;
  }

  std::ostringstream buffer;
  try {
    detail::check_q(o.q);
    bool passed = true;
    if (census->parsed()) detail::census(o, buffer);
    if (degrees->parsed()) detail::degrees(o, buffer);
    if (chartable->parsed()) detail::chartable(o, buffer);
    if (fs->parsed()) detail::fs(o, buffer);
    if (selfdual->parsed()) detail::selfdual(o, buffer);
    if (verify->parsed()) passed = detail::verify(o, buffer);
    if (o.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw DomainError("cannot open output file " + o.out);
      file << buffer.str();
    }
    return passed ? ok : failure;
  } catch (const ResourceError& e) {
    err << "refused: " << e.what() << "\n";
    return usage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return failure;
  }
}

}  // namespace ucm::cli
