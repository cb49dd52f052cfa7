#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zdsolve/groebner.hpp"
#include "zdsolve/parse.hpp"
#include "zdsolve/prng.hpp"

using namespace zdsolve;

namespace {

template <CoefficientField K>
Ideal<K> ideal_of(const RingPtr<K>& ring,
                  const std::vector<std::string>& polys) {
  std::vector<MultiPoly<K>> gens;
  for (const auto& s : polys) gens.push_back(parse_poly(s, ring));
  return Ideal<K>(ring, std::move(gens));
}

// Oracle: a basis is a GB iff every S-polynomial reduces to zero by it.
template <CoefficientField K>
bool spair_oracle(const GroebnerBasis<K>& gb) {
  const auto& els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      auto s = gbdetail::s_poly(els[i], els[j]);
      if (!s.is_zero() && !normal_form(s, gb).is_zero()) return false;
    }
  return true;
}

template <CoefficientField K>
bool contains_ideal(const Ideal<K>& big, const Ideal<K>& small) {
  GroebnerBasis<K> gb = buchberger(big);
  for (const auto& g : small.gens)
    if (!member(g, gb)) return false;
  return true;
}

template <CoefficientField K>
bool same_ideal(const Ideal<K>& a, const Ideal<K>& b) {
  return contains_ideal(a, b) && contains_ideal(b, a);
}

}  // namespace

TEST_CASE("buchberger: inter-reduced pair, unit ideal, zero ideal") {
  auto r = make_ring(Rationals{}, {"y", "x"}, MonomialOrder::lex(2));
  auto I = ideal_of(r, {"x^2 - 1", "y - x"});
  auto gb = buchberger(I);
  REQUIRE(gb.size() == 2);
  CHECK(gb.elements()[0] == parse_poly<Rationals>("x^2 - 1", gb.ring()));
  CHECK(gb.elements()[1] == parse_poly<Rationals>("y - x", gb.ring()));
  CHECK(spair_oracle(gb));

  auto unit = buchberger(ideal_of(r, {"x + 1", "x"}));
  CHECK(unit.is_unit_ideal());

  auto zero = buchberger(Ideal<Rationals>(r, {}));
  CHECK(zero.is_zero_ideal());
}

TEST_CASE("normal_form: membership, substitution value, linearity") {
  auto r = make_ring(Rationals{}, {"y", "x"}, MonomialOrder::lex(2));
  auto gb = buchberger(ideal_of(r, {"x^2 - 1", "y - x"}));

  auto f = parse_poly<Rationals>("y^2 - 1", r);  // = (y-x)(y+x) + (x^2-1)
  CHECK(normal_form(f, gb).is_zero());

  auto y2 = parse_poly<Rationals>("y^2", r);
  CHECK(normal_form(y2, gb) == MultiPoly<Rationals>::from_int(r, 1));

  auto g = parse_poly<Rationals>("x^3*y - 2", r);
  CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
}

TEST_CASE("dim and degree: monomial ideal, unit, zero") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto I = ideal_of(r, {"x^2", "x*y", "y^2"});
  auto gb = buchberger(I);
  CHECK(dim(gb) == 0);
  // standard monomials 1, x, y -- counted by hand
  CHECK(degree(gb) == 3);
  CHECK(standard_monomials(gb).size() == 3);

  CHECK(dim(buchberger(ideal_of(r, {"1"}))) == -1);
  CHECK(dim(buchberger(Ideal<Rationals>(r, {}))) == 2);
  CHECK(dim(buchberger(ideal_of(r, {"x*y"}))) == 1);
}

TEST_CASE("degree of a homogeneous positive-dimensional ideal") {
  auto r = make_ring(Rationals{}, {"x", "y", "z"});
  // a conic in P^2: dim Proj 1, degree 2
  auto gb = buchberger(ideal_of(r, {"x^2 + y^2 + z^2"}));
  CHECK(dim(gb) == 2);
  CHECK(degree(gb) == 2);

  // twisted-cubic-style monomial check: (xz - y^2) has degree 2
  auto inhom = buchberger(ideal_of(r, {"x^2 + y + 1"}));
  CHECK_THROWS_AS(degree(inhom), std::invalid_argument);
}

TEST_CASE("degree of the twisted cubic via the Hilbert numerator") {
  auto r = make_ring(Rationals{}, {"x", "y", "z", "w"});
  auto gb = buchberger(
      ideal_of(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}));
  CHECK(dim(gb) == 2);    // Proj dimension 1
  CHECK(degree(gb) == 3);
}

TEST_CASE("eliminate: substitution instance, empty drop") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto I = ideal_of(r, {"y - x^2", "x - 1"});
  auto e = eliminate(I, {0});
  CHECK(same_ideal(e, ideal_of(r, {"y - 1"})));
  for (const auto& g : e.gens) CHECK(g.degree_in(0) == 0);

  auto full = eliminate(I, {});
  auto gb = buchberger(I);
  REQUIRE(full.gens.size() == gb.size());
  for (std::size_t i = 0; i < full.gens.size(); ++i)
    CHECK(full.gens[i] == gb.elements()[i].in_ring(r));
}

TEST_CASE("saturation: the F7 excess-intersection instance") {
  auto r = make_ring(PrimeField(7), {"y", "x"}, MonomialOrder::lex(2));
  auto I = ideal_of(r, {"y^3*x^2 + 2*y^2*x + 3*x*y", "3*y^2 + x*y - 3*y"});
  auto y = MultiPoly<PrimeField>::variable(r, 0);

  auto J = saturate(I, y);
  REQUIRE(J.gens.size() == 2);
  CHECK(J.gens[0] == parse_poly<PrimeField>("x^4 + x^3 + 3*x^2 + 3*x", r));
  CHECK(J.gens[1] == parse_poly<PrimeField>("y - 2*x - 1", r));

  // J contains I, and saturating again changes nothing
  CHECK(contains_ideal(J, I));
  auto JJ = saturate(J, y);
  CHECK(same_ideal(J, JJ));
  REQUIRE(JJ.gens.size() == J.gens.size());
  for (std::size_t i = 0; i < J.gens.size(); ++i)
    CHECK(J.gens[i] == JJ.gens[i]);

  // the eliminant of x: J intersected with k[x]
  auto ex = eliminate(J, {0});
  CHECK(same_ideal(ex, ideal_of(r, {"x^4 + x^3 + 3*x^2 + 3*x"})));
}

TEST_CASE("saturation: point-set instance and saturation by a unit") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto I = ideal_of(r, {"x*y", "y^2 - y"});
  auto y = MultiPoly<Rationals>::variable(r, 1);
  auto S = saturate(I, y);
  // V(I) = {y=0 line component removed} leaves the point (0, 1)
  CHECK(same_ideal(S, ideal_of(r, {"x", "y - 1"})));

  auto S1 = saturate(I, MultiPoly<Rationals>::from_int(r, 1));
  CHECK(same_ideal(S1, I));
  CHECK_THROWS_AS(saturate(I, MultiPoly<Rationals>::zero(r)),
                  std::invalid_argument);
}

TEST_CASE("ideal quotient: hand instances and the containment law") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto I = ideal_of(r, {"x*y", "y^2"});
  auto J = ideal_of(r, {"y"});
  auto Q = quotient(I, J);
  CHECK(same_ideal(Q, ideal_of(r, {"x", "y"})));

  // I : (1) = I
  auto unitq = quotient(I, ideal_of(r, {"1"}));
  CHECK(same_ideal(unitq, I));
  CHECK_THROWS_AS(quotient(I, Ideal<Rationals>(r, {})),
                  std::invalid_argument);

  // J * (I : J) is contained in I
  GroebnerBasis<Rationals> gbI = buchberger(I);
  for (const auto& a : J.gens)
    for (const auto& b : Q.gens) CHECK(member(a * b, gbI));
}

TEST_CASE("intersection: principal ideals and idempotence") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  CHECK(same_ideal(intersect(ideal_of(r, {"x"}), ideal_of(r, {"y"})),
                   ideal_of(r, {"x*y"})));
  CHECK(same_ideal(intersect(ideal_of(r, {"x"}), ideal_of(r, {"x + 1"})),
                   ideal_of(r, {"x^2 + x"})));
  auto I = ideal_of(r, {"x*y - 1", "y^2 - x"});
  CHECK(same_ideal(intersect(I, I), I));

  auto other = make_ring(Rationals{}, {"a", "b"});
  CHECK_THROWS_AS(intersect(I, ideal_of(other, {"a"})), std::invalid_argument);
}

TEST_CASE("saturation in a ring that already uses the auxiliary name") {
  // the fresh variable picks t0 when t is taken
  auto r = make_ring(Rationals{}, {"t", "u"});
  auto I = ideal_of(r, {"t*u", "u^2 - u"});
  auto S = saturate(I, MultiPoly<Rationals>::variable(r, 1));
  CHECK(same_ideal(S, ideal_of(r, {"t", "u - 1"})));
}

TEST_CASE("radical membership by the extra-variable trick") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto I = ideal_of(r, {"x^2"});
  auto x = MultiPoly<Rationals>::variable(r, 0);
  auto one = MultiPoly<Rationals>::from_int(r, 1);
  CHECK(radical_member(x, I));
  CHECK_FALSE(radical_member(x + one, I));
  CHECK(radical_member(MultiPoly<Rationals>::zero(r), I));
}

TEST_CASE("reducedness: no element reduces against the others") {
  auto r = make_ring(Rationals{}, {"x", "y", "z"});
  auto gb = buchberger(ideal_of(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}));
  CHECK(spair_oracle(gb));
  for (std::size_t i = 0; i < gb.size(); ++i) {
    std::vector<MultiPoly<Rationals>> others;
    for (std::size_t j = 0; j < gb.size(); ++j)
      if (j != i) others.push_back(gb.elements()[j].in_ring(gb.ring()));
    GroebnerBasis<Rationals> rest(gb.ring(), std::move(others));
    CHECK_FALSE(normal_form(gb.elements()[i], rest).is_zero());
    // fully reduced: the element is its own normal form w.r.t. the others
    CHECK(normal_form(gb.elements()[i], rest) == gb.elements()[i]);
  }
}

TEST_CASE("GB uniqueness under generator permutation") {
  Prng rng(424242);
  auto rq = make_ring(Rationals{}, {"x", "y", "z"});
  auto r7 = make_ring(PrimeField(7), {"y", "x"}, MonomialOrder::lex(2));

  std::vector<std::vector<std::string>> q_ideals = {
      {"x^2 - 1", "y - x", "z - x*y"},
      {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"},
      {"x^2 + y^2 - 1", "x*y - z^2", "z*x - y"},
      {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"},
  };
  int checked = 0;
  for (const auto& polys : q_ideals) {
    auto base = buchberger(ideal_of(rq, polys));
    for (int rep = 0; rep < 10; ++rep) {
      auto shuffled = polys;
      for (std::size_t k = shuffled.size(); k > 1; --k)
        std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
      auto gb = buchberger(ideal_of(rq, shuffled));
      REQUIRE(gb.size() == base.size());
      for (std::size_t i = 0; i < gb.size(); ++i)
        CHECK(gb.elements()[i] == base.elements()[i]);
      ++checked;
    }
  }
  std::vector<std::string> f7_polys = {"y^3*x^2 + 2*y^2*x + 3*x*y",
                                       "3*y^2 + x*y - 3*y"};
  auto base7 = buchberger(ideal_of(r7, f7_polys));
  for (int rep = 0; rep < 10; ++rep) {
    auto shuffled = f7_polys;
    for (std::size_t k = shuffled.size(); k > 1; --k)
      std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
    auto gb = buchberger(ideal_of(r7, shuffled));
    REQUIRE(gb.size() == base7.size());
    for (std::size_t i = 0; i < gb.size(); ++i)
      CHECK(gb.elements()[i] == base7.elements()[i]);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("buchberger criterion holds on random small ideals") {
  Prng rng(31337);
  auto r = make_ring(PrimeField(101), {"x", "y", "z"});
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<MultiPoly<PrimeField>> gens;
    for (int g = 0; g < 3; ++g) {
      auto p = MultiPoly<PrimeField>::zero(r);
      for (int t = 0; t < 4; ++t) {
        Monomial m(3);
        for (int v = 0; v < 3; ++v)
          m[v] = static_cast<unsigned>(rng.below(3));
        p += MultiPoly<PrimeField>::term(r, m, rng.scalar(r->field()));
      }
      if (!p.is_zero()) gens.push_back(p);
    }
    auto gb = buchberger(Ideal<PrimeField>(r, std::move(gens)));
    CHECK(spair_oracle(gb));
  }
}
