#pragma once

// Command line surface.  Every verb validates options, runs the library call,
// and emits one JSON report to stdout or --out.  Exit codes: 0 verified/OK,
// 1 verified negative (a valid "no"), 2 input or restriction errors.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "filiform/catalog.hpp"
#include "filiform/json_io.hpp"
#include "filiform/m01.hpp"
#include "filiform/m03.hpp"
#include "filiform/parallel.hpp"
#include "filiform/tgs.hpp"

namespace filiform::cli {

namespace detail {

using jsonio::Json;

inline int emit(const Json& j, const std::string& out, int code) {
  if (out.empty())
    std::cout << jsonio::dump(j);
  else
    jsonio::write_json_file(out, j);
  return code;
}

inline std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    v.push_back(parse_rational(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return v;
}

inline catalog::FamilySpec make_spec(const std::string& family, int dim,
                                     const std::string& alpha) {
  auto f = catalog::family_from_string(family, dim);
  if (!f) throw ParseError("unknown family '" + family + "'");
  catalog::FamilySpec spec;
  spec.family = *f;
  spec.dim = dim;
  if (!alpha.empty()) spec.alpha = parse_rational(alpha);
  return spec;
}

struct BuildOpts {
  std::string family, alpha, out;
  int dim = 0;
  bool unchecked = false;
};

inline int run_build(const BuildOpts& o) {
  auto spec = make_spec(o.family, o.dim, o.alpha);
  std::vector<std::string> warnings;
  LieAlgebra<Rational> g = o.unchecked
                               ? catalog::build_unchecked(spec, &warnings)
                               : catalog::build(spec, &warnings);
  Json j = jsonio::algebra_json(g);
  j["family"] = catalog::family_name(spec.family);
  if (spec.alpha) j["alpha"] = to_string(*spec.alpha);
  j["warnings"] = warnings;
  return emit(j, o.out, 0);
}

struct FileOpts {
  std::string algebra, ip, subalgebra, out;
  bool all = false;
  bool include_degree_one = false;
  int cap = 20;
  unsigned threads = 0;
};

inline int run_jacobi(const FileOpts& o) {
  auto any = jsonio::algebra_from_json(jsonio::read_json_file(o.algebra));
  return std::visit(
      [&](const auto& g) {
        auto rep = g.jacobi_check(o.all);
        Json j;
        j["schema_version"] = jsonio::kSchemaVersion;
        j["ok"] = rep.ok;
        Json viols = Json::array();
        if (!rep.ok) {
          if (o.all) {
            for (const auto& v : rep.all) {
              Json t;
              t["i"] = v.i;
              t["j"] = v.j;
              t["k"] = v.k;
              viols.push_back(std::move(t));
            }
          } else {
            Json t;
            t["i"] = rep.i;
            t["j"] = rep.j;
            t["k"] = rep.k;
            t["residual"] = jsonio::vec_json(rep.residual);
            viols.push_back(std::move(t));
          }
        }
        j["violations"] = std::move(viols);
        return emit(j, o.out, rep.ok ? 0 : 1);
      },
      any);
}

inline int run_classify(const FileOpts& o) {
  auto any = jsonio::algebra_from_json(jsonio::read_json_file(o.algebra));
  const auto* g = std::get_if<LieAlgebra<Rational>>(&any);
  if (!g) throw Error("classification requires rational scalars");
  auto rep = catalog::classify_families(*g);
  Json j;
  j["schema_version"] = jsonio::kSchemaVersion;
  j["o1"] = rep.o1;
  j["o2"] = rep.o2;
  return emit(j, o.out, 0);
}

template <class S>
int tgs_check_typed(const LieAlgebra<S>& g, const FileOpts& o) {
  auto ip = jsonio::ip_from_json<S>(jsonio::read_json_file(o.ip));
  auto h = jsonio::subspace_from_json<S>(jsonio::read_json_file(o.subalgebra),
                                         g.dim());
  auto rep = is_totally_geodesic(g, ip, h);
  Json j;
  j["schema_version"] = jsonio::kSchemaVersion;
  j["is_subalgebra"] = rep.is_subalgebra;
  j["verdict"] = rep.verdict;
  if (rep.witness) {
    Json w;
    w["x"] = jsonio::vec_json(rep.witness->x);
    w["y"] = jsonio::vec_json(rep.witness->y);
    w["z"] = jsonio::vec_json(rep.witness->z);
    w["residual"] = jsonio::scalar_json(rep.witness->residual);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return emit(j, o.out, rep.verdict ? 0 : 1);
}

inline int run_tgs_check(const FileOpts& o) {
  auto any = jsonio::algebra_from_json(jsonio::read_json_file(o.algebra));
  return std::visit([&](const auto& g) { return tgs_check_typed(g, o); }, any);
}

template <class S>
int adapted_basis_typed(const LieAlgebra<S>& g, const FileOpts& o) {
  auto ip = jsonio::ip_from_json<S>(jsonio::read_json_file(o.ip));
  auto basis = adapted_basis(g, ip);
  Json j;
  j["schema_version"] = jsonio::kSchemaVersion;
  Json rows = Json::array();
  for (const auto& v : basis) rows.push_back(jsonio::vec_json(v));
  j["basis"] = std::move(rows);
  return emit(j, o.out, 0);
}

inline int run_adapted_basis(const FileOpts& o) {
  auto any = jsonio::algebra_from_json(jsonio::read_json_file(o.algebra));
  return std::visit([&](const auto& g) { return adapted_basis_typed(g, o); },
                    any);
}

template <class S>
int search_graded_typed(const LieAlgebra<S>& g, const FileOpts& o) {
  auto ip = jsonio::ip_from_json<S>(jsonio::read_json_file(o.ip));
  auto basis = adapted_basis(g, ip);
  GradedSearchOptions opt;
  opt.cap = o.cap;
  opt.include_degree_one = o.include_degree_one;
  opt.threads = o.threads ? o.threads : default_thread_count();
  auto res = graded_tgs_search(g, ip, basis, opt);
  Json j;
  j["schema_version"] = jsonio::kSchemaVersion;
  j["max_dimension"] = res.max_dimension;
  j["passing"] = res.passing;
  j["note"] =
      "search ranges over spans of adapted-basis subsets only; maxima are "
      "relative to that class, not to all subspaces";
  return emit(j, o.out, 0);
}

inline int run_search_graded(const FileOpts& o) {
  auto any = jsonio::algebra_from_json(jsonio::read_json_file(o.algebra));
  return std::visit([&](const auto& g) { return search_graded_typed(g, o); },
                    any);
}

struct M01Opts {
  int k = 0;
  std::string magnitudes, out;
};

inline int run_construct_m01(const M01Opts& o) {
  std::vector<Rational> mags;
  if (!o.magnitudes.empty()) mags = parse_rational_list(o.magnitudes);
  auto c = m01::run_pipeline(o.k, mags);
  Json rep;
  rep["schema_version"] = jsonio::kSchemaVersion;
  rep["k"] = c.k;
  rep["dim"] = 2 * c.k + 1;
  rep["subalgebra_dim"] = c.h.dim();
  rep["certified"] = c.certified;
  Json checks = Json::array();
  for (const auto& line : c.report) {
    Json t;
    t["name"] = line.name;
    t["ok"] = line.ok;
    checks.push_back(std::move(t));
  }
  rep["checks"] = std::move(checks);
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    auto dir = std::filesystem::path(o.out);
    jsonio::write_json_file((dir / "algebra.json").string(),
                            jsonio::algebra_json(c.algebra));
    jsonio::write_json_file((dir / "subalgebra.json").string(),
                            jsonio::subspace_json(c.h));
    Json w;
    w["schema_version"] = jsonio::kSchemaVersion;
    Json rows = Json::array();
    for (const auto& v : c.witness) rows.push_back(jsonio::vec_json(v));
    w["witness"] = std::move(rows);
    jsonio::write_json_file((dir / "witness.json").string(), w);
    jsonio::write_json_file((dir / "report.json").string(), rep);
  }
  std::cout << jsonio::dump(rep);
  return 0;
}

struct KernelOpts {
  int k = 0;
  std::string a = "0", b = "0", c = "0", out;
};

inline int run_kernel_k(const KernelOpts& o) {
  Rational a = parse_rational(o.a), b = parse_rational(o.b),
           c = parse_rational(o.c);
  auto kt = m03::build_ktriple(o.k);
  auto combo = m03::combination(kt, a, b, c);
  auto x = m03::kernel_poly_formula(o.k, a, b, c);
  auto ns = nullspace(combo);
  Json j;
  j["schema_version"] = jsonio::kSchemaVersion;
  j["k"] = o.k;
  j["a"] = to_string(a);
  j["b"] = to_string(b);
  j["c"] = to_string(c);
  j["formula"] = jsonio::vec_json(x);
  Json basis = Json::array();
  for (const auto& v : ns) basis.push_back(jsonio::vec_json(v));
  j["nullspace"] = std::move(basis);
  Rational factor(0);
  if (ns.size() == 1)
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(ns[0][i])) {
        factor = x[i] / ns[0][i];
        break;
      }
  j["proportionality"] = to_string(factor);
  return emit(j, o.out, 0);
}

struct PairOpts {
  std::string family, alpha, to_family, to_alpha, witness, out;
  int dim = 0, to_dim = 0;
};

inline int run_quotient_check(const PairOpts& o) {
  auto big = make_spec(o.family, o.dim, o.alpha);
  auto small = make_spec(o.to_family, o.dim - 1, o.to_alpha);
  auto rep = catalog::quotient_matches_family(big, small);
  Json j;
  j["schema_version"] = jsonio::kSchemaVersion;
  j["ok"] = rep.ok;
  if (rep.ok) {
    j["mismatch"] = nullptr;
  } else {
    Json t;
    t["i"] = rep.i;
    t["j"] = rep.j;
    j["mismatch"] = std::move(t);
  }
  return emit(j, o.out, rep.ok ? 0 : 1);
}

inline int run_iso_check(const PairOpts& o) {
  int to_dim = o.to_dim ? o.to_dim : o.dim;
  auto src = catalog::build(make_spec(o.family, o.dim, o.alpha));
  auto dst = catalog::build(make_spec(o.to_family, to_dim, o.to_alpha));
  Json j;
  j["schema_version"] = jsonio::kSchemaVersion;
  if (!o.witness.empty()) {
    auto m = jsonio::matrix_from_json<Rational>(
        jsonio::read_json_file(o.witness).at("matrix"));
    auto rep = catalog::iso_witness_check(src, dst, m);
    j["ok"] = rep.ok;
    j["witness"] = jsonio::matrix_json(m);
    j["note"] = rep.ok ? "" : rep.note;
    return emit(j, o.out, rep.ok ? 0 : 1);
  }
  auto found = catalog::find_diagonal_witness(src, dst);
  j["ok"] = found.has_value();
  if (found) {
    j["witness"] = jsonio::matrix_json(*found);
    j["note"] = "";
  } else {
    j["witness"] = nullptr;
    j["note"] = "no diagonal witness found in the searched class";
  }
  return emit(j, o.out, found ? 0 : 1);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
  using namespace detail;
  CLI::App app{"exact arithmetic toolkit for graded filiform Lie algebras"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "progress notes on stderr");

  BuildOpts bo;
  auto* build = app.add_subcommand("build", "construct a catalog family");
  build->add_option("--family", bo.family, "m0|m2|V|m01|m02|m03|g")
      ->required();
  build->add_option("--dim", bo.dim, "algebra dimension")->required();
  build->add_option("--alpha", bo.alpha, "family parameter, p/q");
  build->add_flag("--unchecked", bo.unchecked,
                  "skip duplicate-family restrictions");
  build->add_option("--out", bo.out, "output file");

  FileOpts jo;
  auto* jacobi = app.add_subcommand("jacobi", "verify the Jacobi identity");
  jacobi->add_option("algebra", jo.algebra, "algebra JSON")->required();
  jacobi->add_flag("--all", jo.all, "report every violating triple");
  jacobi->add_option("--out", jo.out, "output file");
  jacobi->add_option("--threads", jo.threads, "worker threads");

  FileOpts co;
  auto* classify = app.add_subcommand("classify", "O1/O2 membership");
  classify->add_option("algebra", co.algebra, "algebra JSON")->required();
  classify->add_option("--out", co.out, "output file");

  FileOpts to;
  auto* tgs = app.add_subcommand("tgs-check", "totally geodesic verdict");
  tgs->add_option("algebra", to.algebra, "algebra JSON")->required();
  tgs->add_option("ip", to.ip, "inner product JSON")->required();
  tgs->add_option("subalgebra", to.subalgebra, "subalgebra JSON")->required();
  tgs->add_option("--out", to.out, "output file");
  tgs->add_option("--threads", to.threads, "worker threads");

  FileOpts ao;
  auto* adapted = app.add_subcommand("adapted-basis",
                                     "degree-adapted orthogonal basis");
  adapted->add_option("algebra", ao.algebra, "algebra JSON")->required();
  adapted->add_option("ip", ao.ip, "inner product JSON")->required();
  adapted->add_option("--out", ao.out, "output file");

  FileOpts so;
  auto* search = app.add_subcommand(
      "search-graded", "search adapted-basis spans for totally geodesic ones");
  search->add_option("algebra", so.algebra, "algebra JSON")->required();
  search->add_option("ip", so.ip, "inner product JSON")->required();
  search->add_option("--cap", so.cap, "dimension cap");
  search->add_flag("--include-degree-one", so.include_degree_one,
                   "let subsets contain degree 1");
  search->add_option("--out", so.out, "output file");
  search->add_option("--threads", so.threads, "worker threads");

  M01Opts mo;
  auto* m01v = app.add_subcommand(
      "construct-m01", "codimension-four construction for m0,1(2k+1)");
  m01v->add_option("--k", mo.k, "half-dimension parameter, k >= 3")
      ->required();
  m01v->add_option("--magnitudes", mo.magnitudes,
                   "comma separated |d_i| values");
  m01v->add_option("--out", mo.out, "output directory");

  KernelOpts ko;
  auto* kern = app.add_subcommand("kernel-k",
                                  "kernel line of a K1,K2,K3 combination");
  kern->add_option("--k", ko.k, "k >= 3")->required();
  kern->add_option("--a", ko.a, "coefficient of K1, p/q");
  kern->add_option("--b", ko.b, "coefficient of K2, p/q");
  kern->add_option("--c", ko.c, "coefficient of K3, p/q");
  kern->add_option("--out", ko.out, "output file");

  PairOpts qo;
  auto* quot = app.add_subcommand(
      "quotient-check", "top-degree quotient against a smaller family");
  quot->add_option("--family", qo.family, "source family")->required();
  quot->add_option("--dim", qo.dim, "source dimension")->required();
  quot->add_option("--alpha", qo.alpha, "source parameter");
  quot->add_option("--to-family", qo.to_family, "target family")->required();
  quot->add_option("--to-alpha", qo.to_alpha, "target parameter");
  quot->add_option("--out", qo.out, "output file");

  PairOpts io;
  auto* iso = app.add_subcommand("iso-check",
                                 "isomorphism witness between families");
  iso->add_option("--family", io.family, "source family")->required();
  iso->add_option("--dim", io.dim, "source dimension")->required();
  iso->add_option("--alpha", io.alpha, "source parameter");
  iso->add_option("--to-family", io.to_family, "target family")->required();
  iso->add_option("--to-dim", io.to_dim, "target dimension, defaults to dim");
  iso->add_option("--to-alpha", io.to_alpha, "target parameter");
  iso->add_option("--witness", io.witness,
                  "matrix JSON to check instead of searching");
  iso->add_option("--out", io.out, "output file");

  std::vector<std::string> argv{"filiform"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> ptrs;
  for (auto& s : argv) ptrs.push_back(s.data());

  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    if (verbose) std::cerr << "parsed: " << app.get_subcommands()[0]->get_name()
                           << "\n";
    if (app.got_subcommand(build)) return run_build(bo);
    if (app.got_subcommand(jacobi)) return run_jacobi(jo);
    if (app.got_subcommand(classify)) return run_classify(co);
    if (app.got_subcommand(tgs)) return run_tgs_check(to);
    if (app.got_subcommand(adapted)) return run_adapted_basis(ao);
    if (app.got_subcommand(search)) return run_search_graded(so);
    if (app.got_subcommand(m01v)) return run_construct_m01(mo);
    if (app.got_subcommand(kern)) return run_kernel_k(ko);
    if (app.got_subcommand(quot)) return run_quotient_check(qo);
    if (app.got_subcommand(iso)) return run_iso_check(io);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace filiform::cli
