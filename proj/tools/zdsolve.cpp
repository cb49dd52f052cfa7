// Batch front end: solve ideal files, dump bases, count real roots,
// replay the named reproduction cases.
//
// Exit codes: 0 ok, 1 pinned-value (golden) failure, 2 parse error,
// 3 budget exceeded, 4 unknown case, 5 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <mutex>
#include <thread>

#include "zdsolve/budget.hpp"
#include "zdsolve/cases.hpp"
#include "zdsolve/geometry.hpp"
#include "zdsolve/parse.hpp"
#include "zdsolve/zerodim.hpp"

using namespace zdsolve;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGolden = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUnknownCase = 4;
constexpr int kExitInternal = 5;

struct SolveArgs {
  std::string path;
  std::string order;
  std::string saturate_var;
  std::string eliminant_form;
  std::string intervals_width;
  bool as_json = false;
};

std::string interval_pair_str(const std::pair<Rat, Rat>& iv) {
  return "(" + iv.first.str() + ", " + iv.second.str() + "]";
}

template <CoefficientField K>
int solve_with_field(const IdealFileText& file, const SolveArgs& args,
                     K field) {
  MonomialOrder::Kind kind = file.order;
  if (args.order == "lex") kind = MonomialOrder::Kind::Lex;
  if (args.order == "grevlex") kind = MonomialOrder::Kind::GRevLex;
  std::size_t n = file.vars.size();
  MonomialOrder order = kind == MonomialOrder::Kind::Lex
                            ? MonomialOrder::lex(n)
                            : MonomialOrder::grevlex(n);
  auto ring = make_ring(field, file.vars, order);
  Ideal<K> ideal(ring, parse_ideal_polys(file, ring));

  json out;
  out["field"] = field.desc().str();
  out["order"] = order.str();

  if (!args.saturate_var.empty()) {
    auto idx = ring->var_index(args.saturate_var);
    if (!idx)
      throw ParseError("unknown variable '" + args.saturate_var + "'", 0, 0);
    ideal = saturate(ideal, MultiPoly<K>::variable(ring, *idx));
    json sat = json::array();
    for (const auto& g : ideal.gens) sat.push_back(g.str());
    out["saturated"] = sat;
  }

  auto gb = buchberger(ideal);
  int d = dim(gb);
  out["dim"] = d;
  bool have_degree = false;
  if (d == 0) {
    have_degree = true;
  } else if (!ideal.gens.empty()) {
    have_degree = true;
    for (const auto& g : ideal.gens)
      if (!g.is_homogeneous()) have_degree = false;
  }
  if (have_degree)
    out["degree"] = degree(gb);
  else
    out["degree"] = nullptr;

  if (d == 0) {
    QuotientAlgebra<K> A(ideal);
    if constexpr (K::is_rationals) {
      out["real_roots_trace"] = num_real_trace(A);
      std::optional<std::pair<MultiPoly<K>, UniPoly<K>>> sep;
      if (!args.eliminant_form.empty()) {
        auto h = parse_poly(args.eliminant_form, ring);
        auto g = eliminant(h, A);
        sep = std::make_pair(h, g);
        if (g.degree() != static_cast<int>(A.dimension()))
          out["eliminant_note"] = "degree below dim: form not separating";
      } else {
        sep = separating_eliminant(A);
      }
      if (sep) {
        out["eliminant"] = sep->second.str();
        out["eliminant_of"] = sep->first.str();
        out["real_roots"] = count_real_roots(sep->second, RootRange::All);
        if (!args.intervals_width.empty()) {
          Rat w = Rat::from_string(args.intervals_width);
          json ivs = json::array();
          for (const auto& iv : isolate_real_roots(sep->second, w))
            ivs.push_back({iv.first.str(), iv.second.str()});
          out["intervals"] = ivs;
        }
      } else {
        out["eliminant"] = nullptr;
        out["real_roots"] = nullptr;
      }
    } else {
      // prime field: report rational points when the basis is triangular
      for (std::size_t pv = ring->nvars(); pv-- > 0;) {
        auto tf = triangular_form(A, pv);
        if (!tf) continue;
        if (field.desc().p > 1'000'000) break;
        json pts = json::array();
        for (const auto& pt : solve_mod_p(*tf)) {
          json p;
          for (std::size_t v = 0; v < ring->nvars(); ++v)
            p[ring->var_name(v)] = pt[v];
          pts.push_back(p);
        }
        out["points"] = pts;
        out["pivot"] = ring->var_name(pv);
        break;
      }
    }
  }

  if (args.as_json) {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "field:  " << out["field"].get<std::string>() << "\n";
  std::cout << "order:  " << out["order"].get<std::string>() << "\n";
  if (out.contains("saturated")) {
    std::cout << "saturated ideal:\n";
    for (const auto& g : out["saturated"])
      std::cout << "  " << g.get<std::string>() << "\n";
  }
  std::cout << "dim:    " << d << "\n";
  if (out["degree"].is_null())
    std::cout << "degree: (positive-dimensional inhomogeneous: not defined)\n";
  else
    std::cout << "degree: " << out["degree"].get<long>() << "\n";
  if (out.contains("real_roots_trace"))
    std::cout << "real roots (trace form): "
              << out["real_roots_trace"].get<long>() << "\n";
  if (out.contains("real_roots") && !out["real_roots"].is_null())
    std::cout << "real roots (Sturm on eliminant of "
              << out["eliminant_of"].get<std::string>()
              << "): " << out["real_roots"].get<long>() << "\n";
  if (out.contains("intervals")) {
    std::cout << "isolating intervals:\n";
    for (const auto& iv : out["intervals"])
      std::cout << "  (" << iv[0].get<std::string>() << ", "
                << iv[1].get<std::string>() << "]\n";
  }
  if (out.contains("points")) {
    std::cout << "rational points (pivot " << out["pivot"].get<std::string>()
              << "):\n";
    for (const auto& p : out["points"]) {
      std::cout << " ";
      for (auto it = p.begin(); it != p.end(); ++it)
        std::cout << " " << it.key() << "=" << it.value().get<std::uint64_t>();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_solve(const SolveArgs& args) {
  IdealFileText file = read_ideal_file(args.path);
  if (file.field.kind == FieldDesc::Kind::Rationals)
    return solve_with_field(file, args, Rationals{});
  return solve_with_field(file, args, PrimeField(file.field.p));
}

int cmd_gb(const std::string& path, bool dump) {
  IdealFileText file = read_ideal_file(path);
  auto run = [&](auto field) {
    using K = decltype(field);
    std::size_t n = file.vars.size();
    MonomialOrder order = file.order == MonomialOrder::Kind::Lex
                              ? MonomialOrder::lex(n)
                              : MonomialOrder::grevlex(n);
    auto ring = make_ring(field, file.vars, order);
    Ideal<K> ideal(ring, parse_ideal_polys(file, ring));
    auto gb = buchberger(ideal);
    if (dump) {
      std::cout << "ring " << field.desc().str() << " vars";
      for (const auto& v : file.vars) std::cout << " " << v;
      std::cout << " order "
                << (order.kind == MonomialOrder::Kind::Lex ? "lex" : "grevlex")
                << "\n";
      for (const auto& g : gb.elements()) std::cout << g.str() << "\n";
    } else {
      std::cout << "basis elements: " << gb.size() << "\n";
      std::cout << "dim: " << dim(gb) << "\n";
    }
    return kExitOk;
  };
  if (file.field.kind == FieldDesc::Kind::Rationals) return run(Rationals{});
  return run(PrimeField(file.field.p));
}

int cmd_realroots(const std::string& path, bool as_json) {
  IdealFileText file = read_ideal_file(path);
  if (file.field.kind != FieldDesc::Kind::Rationals)
    throw std::invalid_argument("realroots: the field must be QQ");
  if (file.vars.size() != 1)
    throw std::invalid_argument("realroots: expected one variable");
  if (file.poly_lines.empty())
    throw std::invalid_argument("realroots: no polynomial in file");
  auto ring = make_ring(Rationals{}, file.vars, MonomialOrder::lex(1));
  auto poly = parse_poly(file.poly_lines[0].first, ring,
                         file.poly_lines[0].second);
  std::vector<Rat> cs(poly.degree_in(0) + 1, Rat(0));
  for (const auto& t : poly.terms()) cs[t.mono[0]] = t.coeff;
  UniPolyQ f(Rationals{}, cs);
  if (f.is_zero()) throw std::invalid_argument("realroots: zero polynomial");
  json out;
  out["degree"] = f.degree();
  out["all"] = count_real_roots(f, RootRange::All);
  out["positive"] = count_real_roots(f, RootRange::Positive);
  out["negative"] = count_real_roots(f, RootRange::Negative);
  out["squarefree"] = is_squarefree(f);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "degree " << out["degree"] << ", real roots "
              << out["all"] << " (" << out["positive"] << " positive, "
              << out["negative"] << " negative), squarefree "
              << (out["squarefree"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

void print_case_human(const CaseReport& rep) {
  std::cout << rep.name << ": dim " << rep.dim << ", degree " << rep.degree;
  if (rep.real) std::cout << ", real " << *rep.real;
  std::cout << " [" << rep.field << ", seed " << rep.seed << ", " << rep.ms
            << " ms]\n";
  if (rep.extras.contains("ideal_file"))
    std::cout << rep.extras["ideal_file"].get<std::string>();
  if (rep.extras.contains("ideal_files"))
    for (const auto& [k, v] : rep.extras["ideal_files"].items())
      std::cout << "# " << k << "\n" << v.get<std::string>();
}

int cmd_case(const std::string& name, const CaseOptions& opts, bool as_json,
             int jobs, std::int64_t budget_ms) {
  std::vector<std::string> names;
  if (name == "all") {
    names = case_names();
  } else {
    if (!is_case_registered(name)) {
      std::cerr << "unknown case '" << name << "'; known:";
      for (const auto& n : case_names()) std::cerr << " " << n;
      std::cerr << "\n";
      return kExitUnknownCase;
    }
    names.push_back(name);
  }

  std::vector<CaseReport> reports(names.size());
  std::vector<std::string> errors(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    budget::Scope scope(budget_ms);
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= names.size()) break;
      try {
        reports[i] = run_case(names[i], opts);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(names.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int rc = kExitOk;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << names[i] << " FAILED: " << errors[i] << "\n";
      rc = kExitGolden;
      continue;
    }
    if (as_json)
      std::cout << reports[i].to_json().dump() << "\n";
    else
      print_case_human(reports[i]);
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zero-dimensional polynomial system solver"};
  app.require_subcommand(1);
  std::int64_t budget_ms = 600'000;  // 10-minute soft budget
  app.add_option("--budget-ms", budget_ms, "soft wall-clock budget per command");

  SolveArgs sargs;
  auto* solve = app.add_subcommand("solve", "solve an ideal file");
  solve->add_option("file", sargs.path, "ideal file path or '-'")->required();
  solve->add_option("--order", sargs.order, "term order override")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  solve->add_option("--saturate", sargs.saturate_var,
                    "saturate by a variable first");
  solve->add_option("--eliminant", sargs.eliminant_form,
                    "report the eliminant of this linear form");
  solve->add_option("--intervals", sargs.intervals_width,
                    "isolate real roots to this rational width");
  solve->add_flag("--json", sargs.as_json, "machine-readable output");

  std::string case_name;
  CaseOptions copts;
  std::string case_field;
  int dataset = -1;
  bool case_json = false;
  int jobs = 1;
  auto* casec = app.add_subcommand("case", "run a named reproduction case");
  casec->add_option("name", case_name, "case name or 'all'")->required();
  casec->add_option("--seed", copts.seed, "PRNG seed");
  casec->add_option("--field", case_field, "field override (qq or fp:P)");
  casec->add_option("--dataset", dataset, "per-case dataset index");
  casec->add_option("--jobs", jobs, "parallel workers for 'all'");
  bool dump_ideal = false;
  casec->add_flag("--dump-ideal", dump_ideal,
                  "include the constructed ideal file in the report");
  casec->add_flag("--json", case_json, "machine-readable output");

  std::string gb_path;
  bool dump_gb = false;
  auto* gbc = app.add_subcommand("gb", "Groebner basis of an ideal file");
  gbc->add_option("file", gb_path, "ideal file path or '-'")->required();
  gbc->add_flag("--dump-gb", dump_gb, "print the full reduced basis");

  std::string rr_path;
  bool rr_json = false;
  auto* rrc = app.add_subcommand("realroots",
                                 "real-root counts of a univariate file");
  rrc->add_option("file", rr_path, "ideal file with one variable")->required();
  rrc->add_flag("--json", rr_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    budget::Scope scope(budget_ms);
    if (solve->parsed()) return cmd_solve(sargs);
    if (casec->parsed()) {
      if (!case_field.empty()) copts.field = FieldDesc::parse(case_field);
      if (dataset >= 0) copts.dataset = dataset;
      copts.dump_ideal = dump_ideal;
      return cmd_case(case_name, copts, case_json, jobs, budget_ms);
    }
    if (gbc->parsed()) return cmd_gb(gb_path, dump_gb);
    if (rrc->parsed()) return cmd_realroots(rr_path, rr_json);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const GoldenFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitGolden;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
