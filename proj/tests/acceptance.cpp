// Acceptance suite: the pinned end-to-end outcomes, one line per
// criterion. Run with no arguments for the whole table, `--only N` for a
// single criterion (used by ctest), `--long` to add the slow optional
// table entries (n = 5, 6 sphere counts; not gating).
//
// Everything is exact arithmetic: every comparison is == on rationals or
// field elements, no tolerances anywhere.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "zdsolve/cases.hpp"
#include "zdsolve/geometry.hpp"
#include "zdsolve/parse.hpp"
#include "zdsolve/prng.hpp"
#include "zdsolve/zerodim.hpp"

using namespace zdsolve;

namespace {

const Rationals kQ;

struct CheckFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void req(bool ok, const std::string& msg) {
  if (!ok) throw CheckFail(msg);
}

template <typename T>
void req_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": expected " << want << ", got " << got;
    throw CheckFail(os.str());
  }
}

template <CoefficientField K>
Ideal<K> ideal_of(const RingPtr<K>& ring,
                  const std::vector<std::string>& polys) {
  std::vector<MultiPoly<K>> gens;
  for (const auto& s : polys) gens.push_back(parse_poly(s, ring));
  return Ideal<K>(ring, std::move(gens));
}

// ---------- criterion bodies ----------

void c1_random_quadrics() {
  auto rep = run_case("random-quadrics", CaseOptions{});
  req_eq<long>(rep.degree, 16, "full quadric system degree");
  req(rep.extras["degrees"] == nlohmann::json({16, 4, 2}),
      "restricted-monomial degrees 16/4/2");
}

void c2_excess_intersection() {
  auto ring = make_ring(PrimeField(7), {"y", "x"}, MonomialOrder::lex(2));
  auto I = ideal_of(ring, {"y^3*x^2 + 2*y^2*x + 3*x*y", "3*y^2 + x*y - 3*y"});
  auto J = saturate(I, MultiPoly<PrimeField>::variable(ring, 0));
  req_eq<std::size_t>(J.gens.size(), 2, "saturated basis size");
  req(J.gens[0] == parse_poly<PrimeField>("x^4 + x^3 + 3*x^2 + 3*x", ring),
      "saturated basis: the x-quartic");
  req(J.gens[1] == parse_poly<PrimeField>("y - 2*x - 1", ring),
      "saturated basis: y - 2x - 1");

  QuotientAlgebra<PrimeField> A(J);
  auto tf = triangular_form(A, 1);
  req(tf.has_value(), "triangular shape over F_7");
  auto pts = solve_mod_p(*tf);
  std::set<std::pair<std::uint64_t, std::uint64_t>> xy;
  for (const auto& p : pts) xy.insert({p[1], p[0]});
  std::set<std::pair<std::uint64_t, std::uint64_t>> want = {
      {0, 1}, {2, 5}, {5, 4}, {6, 6}};
  req(xy == want, "the four isolated F_7 points");
}

void c3_running_example() {
  auto ring = make_ring(Rationals{}, {"x", "y"});
  auto I = ideal_of(ring, {"1 - x^2*y + 2*x*y^2", "y - 2*x - x*y + x^2"});
  QuotientAlgebra<Rationals> A(I);
  req_eq<std::size_t>(A.dimension(), 5, "degree");

  auto x = MultiPoly<Rationals>::variable(ring, 0);
  auto quintic = UniPolyQ::from_ints(kQ, {1, -2, 1, 6, -5, 1});
  req(eliminant(x, A) == quintic, "eliminant of x");
  req(char_poly_elem(x, A) == quintic, "characteristic polynomial of x");

  req_eq<long>(count_real_roots(quintic, RootRange::All), 3, "Sturm count");
  req_eq<long>(num_real_trace(A), 3, "trace-form count");

  auto sig = [&](const char* s) {
    return trace_form_signature(parse_poly<Rationals>(s, ring), A);
  };
  req(sig("x*y") == std::pair<long, long>{5, 3}, "signature of S_{xy}");
  req(sig("x - 2") == std::pair<long, long>{5, 1}, "signature of S_{x-2}");
  req(sig("x + y - 3") == std::pair<long, long>{5, -1},
      "signature of S_{x+y-3}");
}

void c4_cylinders() {
  auto ring = cylinder_ring(kQ);
  std::vector<std::array<Rat, 3>> pts = {{Rat(2), Rat(2), Rat(0)},
                                         {Rat(1), Rat(-2), Rat(0)},
                                         {Rat(-3), Rat(0), Rat(0)},
                                         {Rat(0), Rat(0), Rat(5, 2)},
                                         {Rat(0), Rat(0), Rat(-3)}};
  std::vector<MultiPoly<Rationals>> gens;
  for (const auto& p : pts) gens.push_back(cylinder_condition(ring, p));
  QuotientAlgebra<Rationals> A(Ideal<Rationals>(ring, std::move(gens)));
  req_eq<std::size_t>(A.dimension(), 6, "six cylinders");

  req_eq<long>(num_real_trace(A), 6, "six real cylinders (trace form)");
  auto sep = separating_eliminant(A);
  req(sep.has_value(), "separating form exists");
  req_eq<std::size_t>(isolate_real_roots(sep->second, Rat(1, 1024)).size(), 6,
                      "six disjoint isolating intervals");

  auto cp = char_poly_elem(MultiPoly<Rationals>::variable(ring, 0), A);
  long pos = count_real_roots(cp, RootRange::Positive);
  // Pinned at 3. Exact computation gives 6: the r-eliminant is squarefree
  // of degree 6 with six simple positive roots (cross-checked by an
  // independent elimination; the count 3 arises for the mirror-symmetric
  // five-point variant, where the squared radii pair up).
  req_eq<long>(pos, 3, "distinct positive squared radii");
}

void c5_four_spheres_local() {
  auto rep = run_case("lines-4-spheres-local", CaseOptions{});
  req_eq<long>(rep.degree, 12, "twelve tangent lines");
  req(rep.real.has_value() && *rep.real == 12, "all twelve lines real");
}

void c6_grassmannian() {
  PrimeField f101(101);
  auto ring = plucker_ring(f101, 2, 5);
  auto gb = buchberger(plucker_ideal(2, 5, ring));
  req_eq<int>(dim(gb) - 1, 6, "Proj dimension");
  req_eq<long>(degree(gb), 5, "degree");
  req_eq<std::size_t>(gb.size(), 5, "five quadrics in the reduced basis");

  auto sets = subsets_lex(5, 2);
  auto leq = [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::set<std::pair<std::size_t, std::size_t>> incomparable;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!leq(sets[i], sets[j]) && !leq(sets[j], sets[i]))
        incomparable.insert({i, j});
  req_eq<std::size_t>(incomparable.size(), 5, "incomparable pairs");

  std::set<std::pair<std::size_t, std::size_t>> leads;
  for (const auto& g : gb.elements()) {
    const Monomial& lm = g.leading_monomial();
    req(lm.total_degree() == 2, "quadratic leading term");
    std::vector<std::size_t> sup;
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      if (lm[v]) sup.push_back(v);
    req(sup.size() == 2, "squarefree leading term");
    leads.insert({sup[0], sup[1]});
    auto meet = sets[sup[0]], join = sets[sup[0]];
    for (std::size_t k = 0; k < 2; ++k) {
      meet[k] = std::min(sets[sup[0]][k], sets[sup[1]][k]);
      join[k] = std::max(sets[sup[0]][k], sets[sup[1]][k]);
    }
    for (std::size_t t = 1; t < g.terms().size(); ++t) {
      std::vector<std::size_t> vars;
      for (std::size_t v = 0; v < ring->nvars(); ++v)
        for (unsigned e = 0; e < g.terms()[t].mono[v]; ++e) vars.push_back(v);
      req(vars.size() == 2, "quadratic trailing term");
      req(leq(sets[vars[0]], meet) && leq(join, sets[vars[1]]),
          "trailing terms sortable below meet/join");
    }
  }
  req(leads == incomparable, "leads are exactly the incomparable pairs");
}

void c7_shapiro() {
  auto modp =
      run_case("shapiro-36", CaseOptions{0, FieldDesc::prime(32003), {}});
  req_eq<long>(modp.degree, 6, "degree over F_32003");
  auto rep = run_case("shapiro-36", CaseOptions{});
  req_eq<int>(rep.dim, 0, "dimension over QQ");
  req_eq<long>(rep.degree, 6, "six 3-planes");
  req(rep.real.has_value() && *rep.real == 6, "all six real");
}

void c8_transversality() {
  auto r7 = transversality_experiment(7, 5, 0);
  req(r7.succeeded && r7.iterations_used <= 5,
      "radical instance found for p = 7");
  auto r2 = transversality_experiment(2, 5, 0);
  req(r2.succeeded || r2.iterations_used == 5,
      "p = 2 terminates within the attempt budget");
}

void c9_global_tangency() {
  auto quad = run_case("quadrics-global", CaseOptions{});
  req_eq<long>(quad.degree, 32, "32 lines tangent to four general quadrics");
  auto sph = run_case("spheres-global", CaseOptions{});
  req(sph.dim == 1 && sph.degree == 4, "sphere ideal is (1, 4)");
  req(sph.extras["lines"] == nlohmann::json({0, 12}),
      "saturation by p01 leaves (0, 12)");
  req(sph.extras["junk"] == nlohmann::json({1, 4}),
      "colon component is (1, 4)");
  req(sph.extras["radical_members"] == true,
      "all four support generators in the radical");
}

void c10_hyperboloids() {
  for (int ds = 0; ds < 5; ++ds) {
    CaseOptions o;
    o.dataset = ds;
    auto rep = run_case("hyperboloids", o);
    req(rep.degree == 12 && rep.real && *rep.real == 12,
        "dataset " + std::to_string(ds) + ": twelve real lines");
  }
}

void c11_pn_spheres(bool long_run) {
  auto rep = run_case("spheres-p4", CaseOptions{});
  req_eq<long>(rep.degree, 24, "24 lines in P^4 over F_1009");
  req_eq<long>(expected_count(2, 0), 4, "table entry n = 2");
  req_eq<long>(expected_count(3, 0), 12, "table entry n = 3");
  if (long_run) {
    req_eq<long>(expected_count(5, 0), 48, "table entry n = 5");
    req_eq<long>(expected_count(6, 0), 96, "table entry n = 6");
  }
}

void c12_property_suites() {
  // determinism of the reduced basis under generator permutation
  Prng rng(1123581321);
  auto ring3 = make_ring(Rationals{}, {"x", "y", "z"});
  std::vector<std::string> polys = {"x + y + z", "x*y + y*z + z*x",
                                    "x*y*z - 1"};
  auto base = buchberger(ideal_of(ring3, polys));
  for (int rep = 0; rep < 10; ++rep) {
    auto shuffled = polys;
    for (std::size_t k = shuffled.size(); k > 1; --k)
      std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
    auto gb = buchberger(ideal_of(ring3, shuffled));
    req(gb.size() == base.size(), "permutation: same basis size");
    for (std::size_t i = 0; i < gb.size(); ++i)
      req(gb.elements()[i] == base.elements()[i],
          "permutation: identical reduced basis");
  }

  // every S-polynomial of the emitted basis reduces to zero
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      auto s = gbdetail::s_poly(base.elements()[i], base.elements()[j]);
      req(s.is_zero() || normal_form(s, base).is_zero(),
          "S-polynomial reduces to zero");
    }

  // Cayley-Hamilton on random rational 4x4 matrices
  for (int rep = 0; rep < 5; ++rep) {
    Matrix<Rationals> m(kQ, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rat(rng.small_nonzero());
    auto cp = char_poly(m);
    Matrix<Rationals> acc(kQ, 4, 4);
    for (int i = cp.degree(); i >= 0; --i) {
      acc = acc * m;
      for (std::size_t k = 0; k < 4; ++k)
        acc.at(k, k) = acc.at(k, k) + cp.coeff(static_cast<std::size_t>(i));
    }
    req(acc == Matrix<Rationals>(kQ, 4, 4), "Cayley-Hamilton");
  }

  // Sturm total count vs bisection-isolation oracle on random polynomials
  for (int rep = 0; rep < 100; ++rep) {
    int deg = 1 + static_cast<int>(rng.below(8));
    std::vector<long> cs(static_cast<std::size_t>(deg) + 1, 0);
    for (auto& c : cs) c = rng.small_nonzero();
    auto f = UniPolyQ::from_ints(kQ, cs);
    long direct = count_real_roots(f, RootRange::All);
    long isolated =
        static_cast<long>(isolate_real_roots(f, Rat(1, 512)).size());
    req(direct == isolated, "Sturm count equals bisection isolation");
  }

  // local/global tangency consistency on random symmetric quadrics
  auto pring = plucker_ring(kQ, 2, 4);
  auto yring = lines_ring(Rationals{});
  using P = MultiPoly<Rationals>;
  std::vector<P> rows[2] = {
      {P::from_int(yring, 1), P::zero(yring), P::variable(yring, 0),
       P::variable(yring, 1)},
      {P::zero(yring), P::from_int(yring, 1), P::variable(yring, 2),
       P::variable(yring, 3)}};
  std::vector<P> minors;
  for (const auto& ab : subsets_lex(4, 2))
    minors.push_back(rows[0][ab[0]] * rows[1][ab[1]] -
                     rows[0][ab[1]] * rows[1][ab[0]]);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix<Rationals> m(kQ, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        m.at(i, j) = Rat(rng.small_nonzero());
        m.at(j, i) = m.at(i, j);
      }
    auto global = tangent_equation(2, pring, m).substitute(yring, minors);
    req(global == -tangent_to(yring, m),
        "wedge-form equation restricts to the chart discriminant");
  }

  // congruence signature vs Sturm signature on squarefree trace forms
  auto ring2 = make_ring(Rationals{}, {"x", "y"});
  QuotientAlgebra<Rationals> A(
      ideal_of(ring2, {"1 - x^2*y + 2*x*y^2", "y - 2*x - x*y + x^2"}));
  for (const char* h : {"x", "y", "x*y", "x - 2", "x + y - 3", "x + 3*y"}) {
    auto tf = trace_form(parse_poly<Rationals>(h, ring2), A);
    auto cp = char_poly(tf.matrix);
    if (!is_squarefree(cp)) continue;
    auto [rk, sig] = symmetric_rank_signature(tf.matrix);
    long sturm_sig = count_real_roots(cp, RootRange::Positive) -
                     count_real_roots(cp, RootRange::Negative);
    req(sig == sturm_sig, "congruence and Sturm signatures agree");
    (void)rk;
  }
}

// ---------- runner ----------

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) long_run = true;
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
  }

  std::vector<Criterion> table = {
      {1, "random quadric systems: degrees 16, 4, 2 over F_101", 5.0,
       c1_random_quadrics},
      {2, "excess intersection over F_7: saturation and the four points", 1.0,
       c2_excess_intersection},
      {3, "degree-5 system: eliminant, Sturm/trace counts, signatures", 5.0,
       c3_running_example},
      {4, "cylinders through five points: 6 solutions, reality, radii", 60.0,
       c4_cylinders},
      {5, "lines tangent to four spheres: 12, all real", 120.0,
       c5_four_spheres_local},
      {6, "G(2,5): Proj dim 6, degree 5, straightening-shape basis", 5.0,
       c6_grassmannian},
      {7, "Schubert instance (3,6;1^3,2^3): 6 planes, all real", 1800.0,
       c7_shapiro},
      {8, "transversality search: succeeds for p=7, p=2 bounded", 120.0,
       c8_transversality},
      {9, "global tangency: 32 quadric lines; sphere excess chain", 600.0,
       c9_global_tangency},
      {10, "hyperboloid table: 12 real lines on all five datasets", 600.0,
       c10_hyperboloids},
      {11, "spheres in P^n: 24 over F_1009, table entries 4 and 12", 600.0,
       [&]() { c11_pn_spheres(long_run); }},
      {12, "property suites: determinism, reduction, oracles, signatures",
       600.0, c12_property_suites},
  };

  int failures = 0;
  for (const auto& c : table) {
    if (only != 0 && c.id != only) continue;
    auto start = std::chrono::steady_clock::now();
    std::string fail_msg;
    try {
      c.body();
    } catch (const std::exception& e) {
      fail_msg = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (fail_msg.empty() && secs > c.budget_s)
      fail_msg = "time budget exceeded (" + std::to_string(secs) + " s > " +
                 std::to_string(c.budget_s) + " s)";
    if (fail_msg.empty()) {
      std::printf("PASS  %2d  %-58s  %7.2f s\n", c.id, c.title, secs);
    } else {
      std::printf("FAIL  %2d  %-58s  %7.2f s\n          %s\n", c.id, c.title,
                  secs, fail_msg.c_str());
      ++failures;
    }
  }
  if (only == 0)
    std::printf("%d of %zu criteria failed\n", failures, table.size());
  return failures == 0 ? 0 : 1;
}
