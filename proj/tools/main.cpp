// multindex: command-line front end for the multi-index algebra kernel.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "multindex/io.hpp"
#include "multindex/laws.hpp"
#include "multindex/morphisms.hpp"

namespace {

using namespace multindex;
using cli::Json;
using cli::to_json;

enum Exit { kOk = 0, kComputation = 1, kParse = 2, kSelfcheck = 3 };

struct Options {
  bool json = false;
  bool factored = false;
  std::uint64_t seed = 0;
  std::size_t size = 3;
  std::size_t max_vertices = 4;
  std::string coeffs = "1,1";
  std::string route = "fixed-point";
  std::uint32_t nmax = 5;
  std::int64_t kmax = 5;
  std::vector<std::string> exprs;
};

void print_lines(const std::vector<std::string>& rows) {
  if (rows.empty()) std::cout << "0\n";
  for (const auto& r : rows) std::cout << r << '\n';
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
}

void emit_poly(const Options& o, const Poly& p) {
  if (o.json) {
    Json j = {{"expanded", to_json(p)}};
    if (o.factored) j["factored"] = to_factored_string(p);
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << to_string(p) << '\n';
  if (o.factored) std::cout << to_factored_string(p) << '\n';
}

template <class T>
void emit_tensor(const Options& o, const T& t) {
  if (o.json)
    std::cout << to_json(t).dump(2) << '\n';
  else
    print_lines(to_rows(t));
}

const std::string& single(const Options& o) {
  if (o.exprs.size() != 1) throw CLI::ValidationError("expected exactly one expression");
  return o.exprs.front();
}

PhiRoute parse_route(const std::string& s) {
  if (s == "via-ck") return PhiRoute::via_ck;
  if (s == "fixed-point") return PhiRoute::fixed_point;
  if (s == "direct") return PhiRoute::direct;
  throw CLI::ValidationError("--route must be via-ck, fixed-point or direct");
}

int run_compose(const Options& o, bool is_brace) {
  if (o.exprs.empty()) throw CLI::ValidationError("expected an operation and its arguments");
  const NCPoly outer = parse_ncpoly(o.exprs[0]);
  std::vector<NCPoly> args;
  for (std::size_t i = 1; i < o.exprs.size(); ++i) args.push_back(parse_ncpoly(o.exprs[i]));
  const NCPoly r = is_brace ? brace(outer, args) : compose(outer, args);
  emit(o, to_json(r), to_string(r));
  return kOk;
}

int run_dims(const Options& o) {
  const std::int64_t kmin = -static_cast<std::int64_t>(o.nmax) + 1;
  if (o.json) {
    Json rows = Json::array();
    for (std::uint32_t n = 1; n <= o.nmax; ++n) {
      Json row = Json::array();
      for (std::int64_t k = kmin; k <= o.kmax; ++k) row.push_back(dim_nmi(n, k).get_str());
      rows.push_back(row);
    }
    std::cout << Json{{"k_min", kmin}, {"k_max", o.kmax}, {"rows", rows}}.dump(2) << '\n';
    return kOk;
  }
  std::cout << "n\\k";
  for (std::int64_t k = kmin; k <= o.kmax; ++k) std::cout << '\t' << k;
  std::cout << '\n';
  for (std::uint32_t n = 1; n <= o.nmax; ++n) {
    std::cout << n;
    for (std::int64_t k = kmin; k <= o.kmax; ++k) std::cout << '\t' << dim_nmi(n, k).get_str();
    std::cout << '\n';
  }
  return kOk;
}

int run_stats(const Options& o) {
  const std::string& e = single(o);
  std::vector<RootedTree> trees;
  std::optional<Alpha> monomial;
  if (e.find('x') != std::string::npos) {
    monomial = parse_alpha(e);
    trees = trees_with_monomial(*monomial);
  } else {
    const Forest f = parse_forest(e);
    trees.assign(f.trees().begin(), f.trees().end());
  }
  Json rows = Json::array();
  if (!o.json) std::cout << "tree\tvertices\tsymmetry\tembeddings\tmonomial\n";
  for (const auto& t : trees) {
    const TreeStats s = tree_stats(t);
    if (o.json)
      rows.push_back({{"tree", to_string(t)},
                      {"vertices", t.vertices()},
                      {"symmetry", s.symmetry.get_str()},
                      {"embeddings", s.embeddings.get_str()},
                      {"monomial", to_string(s.monomial)}});
    else
      std::cout << to_string(t) << '\t' << t.vertices() << '\t' << s.symmetry.get_str() << '\t'
                << s.embeddings.get_str() << '\t' << to_string(s.monomial) << '\n';
  }
  if (o.json) {
    Json j = {{"trees", rows}};
    if (monomial) j["c_alpha"] = c_alpha(*monomial).get_str();
    std::cout << j.dump(2) << '\n';
  } else if (monomial) {
    std::cout << "c_alpha\t" << c_alpha(*monomial).get_str() << '\n';
  }
  return kOk;
}

int run_selfcheck(const Options& o) {
  LawOptions lo;
  lo.seed = o.seed;
  lo.size = o.size;
  bool all = true;
  Json rows = Json::array();
  for (const auto& name : law_names()) {
    const LawResult r = run_law(name, lo);
    all = all && r.passed;
    if (o.json) {
      rows.push_back(to_json(r));
      continue;
    }
    std::cout << (r.passed ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.cases;
    if (!r.passed) std::cout << '\t' << r.failure;
    std::cout << std::endl;
  }
  if (o.json) std::cout << Json{{"seed", o.seed}, {"size", o.size}, {"passed", all}, {"laws", rows}}.dump(2) << '\n';
  return all ? kOk : kSelfcheck;
}

int dispatch(const std::string& verb, const Options& o) {
  if (verb == "compose") return run_compose(o, false);
  if (verb == "brace") return run_compose(o, true);
  if (verb == "dims") return run_dims(o);
  if (verb == "stats") return run_stats(o);
  if (verb == "selfcheck") return run_selfcheck(o);
  if (verb == "ds") {
    if (o.max_vertices == 0) throw CLI::ValidationError("--max-vertices must be at least 1");
    const DSSolution s = ds_solve(parse_ds_coeffs(o.coeffs), o.max_vertices);
    if (o.json)
      std::cout << to_json(s).dump(2) << '\n';
    else
      print_lines(to_rows(s));
    return kOk;
  }
  if (verb == "delta-nmi") return emit_tensor(o, delta_nmi(parse_selem(single(o)))), kOk;
  if (verb == "Delta-nmi") return emit_tensor(o, Delta_nmi(parse_selem(single(o)))), kOk;
  if (verb == "delta-ck") return emit_tensor(o, delta_ck_contract(parse_hck(single(o)))), kOk;
  if (verb == "Delta-ck") return emit_tensor(o, delta_ck_cut(parse_hck(single(o)))), kOk;
  if (verb == "psi") {
    const HCKElem r = psi(parse_selem(single(o)));
    emit(o, to_json(r), to_string(r));
    return kOk;
  }
  if (verb == "phi-mi") return emit_poly(o, phi_mi(parse_selem(single(o)), parse_route(o.route))), kOk;
  if (verb == "phi-ck") return emit_poly(o, phi_ck(parse_hck(single(o)))), kOk;
  if (verb == "mu") {
    const Rational r = mu_character()(parse_selem(single(o)));
    emit(o, to_json(r), r.get_str());
    return kOk;
  }
  if (verb == "antipode") {
    const SElem r = antipode_closed(parse_selem(single(o)));
    emit(o, to_json(r), to_string(r));
    return kOk;
  }
  throw CLI::ValidationError("unknown command " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multi-index and rooted-tree algebra"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
    const char* expr_help;
  };
  const Verb verbs[] = {
      {"compose", "Operadic composition w o (P1, ..., Pn)", "operation then arguments, e.g. [1,0] X0 X1*X0"},
      {"brace", "Brace {w; P1, ..., Pk}", "word then arguments"},
      {"delta-nmi", "Coproduct dual to composition on forest-monomials", "forest expression, e.g. 'x1*x0 | x0'"},
      {"Delta-nmi", "Coproduct dual to the black pre-Lie product", "forest expression"},
      {"delta-ck", "Contraction-extraction coproduct on trees", "tree expression, e.g. 'B[B[],B[]]'"},
      {"Delta-ck", "Admissible-cut coproduct on trees", "tree expression"},
      {"psi", "Forest map from monomials to trees", "forest expression"},
      {"phi-mi", "Polynomial invariant of multi-indices", "forest expression"},
      {"phi-ck", "Polynomial invariant of rooted trees", "tree expression"},
      {"mu", "Convolution inverse character", "forest expression"},
      {"antipode", "Antipode (mu (x) Id) o delta", "forest expression"},
      {"dims", "Dimensions by length and degree", nullptr},
      {"ds", "Dyson-Schwinger tree series", nullptr},
      {"stats", "Symmetry, embeddings and fertility monomial of trees", "trees, or a monomial"},
      {"selfcheck", "Run all property suites", nullptr},
  };
  std::string chosen;
  std::vector<CLI::App*> with_exprs;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_flag("--json", o.json, "Structured output");
    sub->add_flag("--factored", o.factored, "Also print polynomials with small integer roots factored out");
    sub->callback([&chosen, name = std::string(v.name)] { chosen = name; });
    // Expressions are taken verbatim from the leftover arguments; a declared
    // vector option would split "[1,0]" into two values.
    if (v.expr_help) {
      sub->allow_extras();
      sub->usage(std::string("multindex ") + v.name + " [OPTIONS] EXPR...  (" + v.expr_help + ")");
      with_exprs.push_back(sub);
    }
    const std::string name = v.name;
    if (name == "phi-mi")
      sub->add_option("--route", o.route, "via-ck, fixed-point or direct")
          ->check(CLI::IsMember({"via-ck", "fixed-point", "direct"}));
    if (name == "dims") {
      sub->add_option("--nmax", o.nmax, "Largest length")->check(CLI::Range(1u, 64u));
      sub->add_option("--kmax", o.kmax, "Largest degree")->check(CLI::Range(0, 256));
    }
    if (name == "ds") {
      sub->add_option("--coeffs", o.coeffs, "a_0,a_1,... of f");
      sub->add_option("--max-vertices", o.max_vertices, "Largest tree size");
    }
    if (name == "selfcheck") {
      sub->add_option("--seed", o.seed, "Random seed");
      sub->add_option("--size", o.size, "Size bound")->check(CLI::Range(std::size_t{1}, std::size_t{5}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  for (CLI::App* sub : with_exprs) {
    if (!sub->parsed()) continue;
    o.exprs = sub->remaining();
    for (const auto& e : o.exprs)
      if (e.starts_with("--")) {
        std::cerr << "error: unknown option " << e << '\n';
        return kParse;
      }
    if (o.exprs.empty()) {
      std::cerr << "error: " << sub->get_name() << " needs an expression\n";
      return kParse;
    }
  }
  try {
    return dispatch(chosen, o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputation;
  }
}
