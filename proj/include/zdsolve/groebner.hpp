#pragma once

#include <set>

#include "zdsolve/budget.hpp"
#include "zdsolve/multipoly.hpp"
#include "zdsolve/unipoly.hpp"

namespace zdsolve {

template <CoefficientField K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<MultiPoly<K>> gens;  // zero generators stripped

  Ideal(RingPtr<K> r, std::vector<MultiPoly<K>> g) : ring(std::move(r)) {
    gens.reserve(g.size());
    for (auto& p : g) {
      if (p.is_zero()) continue;
      p.require_same_ring(MultiPoly<K>::zero(ring), "Ideal");
      gens.push_back(std::move(p));
    }
  }
};

/// Scale to the canonical stored form: monic over a finite field, primitive
/// integer coefficients with positive leading coefficient over QQ.
template <CoefficientField K>
MultiPoly<K> normalize_scale(const MultiPoly<K>& p) {
  if (p.is_zero()) return p;
  if constexpr (K::is_rationals) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.terms()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.den().get_mpz_t());
      den_lcm = l;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.num().get_mpz_t());
      num_gcd = g;
    }
    Rat scale{den_lcm, num_gcd};
    if (p.leading_coeff().sign() < 0) scale = -scale;
    return p.scaled(scale);
  } else {
    return p.monic();
  }
}

/// Reduced Groebner basis under a fixed order. Elements are monic, fully
/// inter-reduced, and sorted by ascending leading monomial; the reduced
/// basis is the unique one for (ideal, order).
template <CoefficientField K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<K> order_ring, std::vector<MultiPoly<K>> elems)
      : ring_(std::move(order_ring)), elems_(std::move(elems)) {
    lms_.reserve(elems_.size());
    for (const auto& g : elems_) lms_.push_back(g.leading_monomial());
  }

  const RingPtr<K>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<MultiPoly<K>>& elements() const { return elems_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  std::size_t size() const { return elems_.size(); }

  bool is_unit_ideal() const {
    return elems_.size() == 1 && elems_[0].is_constant() &&
           !elems_[0].is_zero();
  }
  bool is_zero_ideal() const { return elems_.empty(); }

 private:
  RingPtr<K> ring_;
  std::vector<MultiPoly<K>> elems_;
  std::vector<Monomial> lms_;
};

namespace gbdetail {

/// One full pass of the division algorithm: returns the remainder, no term
/// of which is divisible by any reducer's leading monomial. Reducers are
/// scanned in list order; they need not be monic.
template <CoefficientField K>
MultiPoly<K> reduce_full(const MultiPoly<K>& f,
                         const std::vector<MultiPoly<K>>& reducers,
                         const std::vector<Monomial>& lms) {
  const K& fld = f.ring()->field();
  MultiPoly<K> rem = MultiPoly<K>::zero(f.ring());
  MultiPoly<K> work = f;
  std::size_t guard = 0;
  while (!work.is_zero()) {
    if (((++guard) & 0x3ff) == 0) budget::check();
    const Monomial& lm = work.leading_monomial();
    bool reduced = false;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!lms[i].divides(lm)) continue;
      Monomial shift = lms[i].quotient_into(lm);
      auto c = fld.div(work.leading_coeff(), reducers[i].leading_coeff());
      work = work.axpy(c, shift, reducers[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = rem + MultiPoly<K>::term(f.ring(), lm, work.leading_coeff());
      work = work.axpy(work.leading_coeff(), Monomial(lm.nvars()),
                       MultiPoly<K>::term(f.ring(), lm, fld.one()));
    }
  }
  return rem;
}

/// S-polynomial in cross-multiplied (division-free) form.
template <CoefficientField K>
MultiPoly<K> s_poly(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  const Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Monomial mf = f.leading_monomial().quotient_into(L);
  Monomial mg = g.leading_monomial().quotient_into(L);
  MultiPoly<K> a =
      MultiPoly<K>::term(f.ring(), mf, g.leading_coeff()) * f;
  MultiPoly<K> b =
      MultiPoly<K>::term(g.ring(), mg, f.leading_coeff()) * g;
  return a - b;
}

struct PairKey {
  unsigned deg;
  std::vector<unsigned> lcm;
  std::size_t i, j;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace gbdetail

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties by lexicographic lcm) and both classical pair
/// criteria. Deterministic for fixed input.
template <CoefficientField K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const MonomialOrder& ord) {
  using P = MultiPoly<K>;
  RingPtr<K> ring = ideal.ring->order() == ord ? ideal.ring
                                               : with_order(ideal.ring, ord);
  std::vector<P> basis;
  std::vector<Monomial> lms;
  auto unit_basis = [&]() {
    return GroebnerBasis<K>(ring, {P::from_int(ring, 1)});
  };

  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    P h = normalize_scale(g.in_ring(ring));
    if (h.is_constant()) return unit_basis();
    basis.push_back(std::move(h));
  }
  if (basis.empty()) return GroebnerBasis<K>(ring, {});

  // Inter-reduce the input: repeatedly pull one generator out, reduce it
  // fully against the rest, and reinsert unless it dropped to zero.
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t i = 0;
    while (i < basis.size()) {
      P self = std::move(basis[i]);
      basis.erase(basis.begin() + static_cast<long>(i));
      std::vector<Monomial> cur_lms;
      cur_lms.reserve(basis.size());
      for (const auto& b : basis) cur_lms.push_back(b.leading_monomial());
      P red = gbdetail::reduce_full(self, basis, cur_lms);
      if (red.is_zero()) {
        changed = true;
        continue;  // element at position i is already the next one
      }
      red = normalize_scale(red);
      if (red.is_constant()) return unit_basis();
      if (!(red == self)) changed = true;
      basis.insert(basis.begin() + static_cast<long>(i), std::move(red));
      ++i;
    }
  }
  lms.clear();
  for (const auto& b : basis) lms.push_back(b.leading_monomial());

  std::set<gbdetail::PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial L = Monomial::lcm(lms[i], lms[j]);
    queue.insert({L.total_degree(), L.exponents(), i, j});
    pending.insert({i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!queue.empty()) {
    budget::check();
    auto key = *queue.begin();
    queue.erase(queue.begin());
    std::size_t i = key.i, j = key.j;
    pending.erase({i, j});

    // Criterion 1 (product): coprime leading monomials reduce to zero.
    if (lms[i].coprime_with(lms[j])) continue;
    // Criterion 2 (chain): a third element divides the lcm and both linking
    // pairs are already settled.
    const Monomial L = Monomial::lcm(lms[i], lms[j]);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!lms[k].divides(L)) continue;
      auto pik = std::minmax(i, k);
      auto pjk = std::minmax(j, k);
      if (!pending.count({pik.first, pik.second}) &&
          !pending.count({pjk.first, pjk.second}))
        skip = true;
    }
    if (skip) continue;

    P s = gbdetail::s_poly(basis[i], basis[j]);
    if (s.is_zero()) continue;
    P red = gbdetail::reduce_full(s, basis, lms);
    if (red.is_zero()) continue;
    red = normalize_scale(red);
    if (red.is_constant()) return unit_basis();
    basis.push_back(std::move(red));
    lms.push_back(basis.back().leading_monomial());
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      push_pair(k, basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (lms[j].divides(lms[i]) && !(lms[i] == lms[j] && j > i)) keep[i] = 0;
    }

  std::vector<P> mins;
  std::vector<Monomial> min_lms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) {
      mins.push_back(basis[i]);
      min_lms.push_back(lms[i]);
    }

  // Tail-reduce each survivor against the others, then make monic.
  std::vector<P> reduced;
  reduced.reserve(mins.size());
  for (std::size_t i = 0; i < mins.size(); ++i) {
    std::vector<P> others;
    std::vector<Monomial> other_lms;
    for (std::size_t j = 0; j < mins.size(); ++j)
      if (j != i) {
        others.push_back(mins[j]);
        other_lms.push_back(min_lms[j]);
      }
    P red = gbdetail::reduce_full(mins[i], others, other_lms);
    reduced.push_back(red.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const P& a, const P& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) <
           0;
  });
  return GroebnerBasis<K>(ring, std::move(reduced));
}

template <CoefficientField K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal) {
  return buchberger(ideal, ideal.ring->order());
}

/// Remainder of f on division by G; no term of the result is divisible by
/// a leading monomial of G. normal_form(f, G) == 0 iff f lies in ideal(G).
template <CoefficientField K>
MultiPoly<K> normal_form(const MultiPoly<K>& f, const GroebnerBasis<K>& gb) {
  MultiPoly<K> g = f.in_ring(gb.ring());
  MultiPoly<K> r =
      gbdetail::reduce_full(g, gb.elements(), gb.leading_monomials());
  return r.in_ring(f.ring());
}

template <CoefficientField K>
bool member(const MultiPoly<K>& f, const GroebnerBasis<K>& gb) {
  return normal_form(f, gb).is_zero();
}

/// Exact quotient f / g; throws if g does not divide f.
template <CoefficientField K>
MultiPoly<K> divide_exact(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
  const K& fld = f.ring()->field();
  MultiPoly<K> q = MultiPoly<K>::zero(f.ring());
  MultiPoly<K> w = f;
  while (!w.is_zero()) {
    if (!g.leading_monomial().divides(w.leading_monomial()))
      throw std::domain_error("divide_exact: not divisible");
    Monomial shift = g.leading_monomial().quotient_into(w.leading_monomial());
    auto c = fld.div(w.leading_coeff(), g.leading_coeff());
    q = q + MultiPoly<K>::term(f.ring(), shift, c);
    w = w.axpy(c, shift, g);
  }
  return q;
}

/// Krull dimension of R/I: the size of the largest variable set containing
/// the support of no initial-ideal generator. -1 for the unit ideal.
template <CoefficientField K>
int dim(const GroebnerBasis<K>& gb) {
  if (gb.is_unit_ideal()) return -1;
  std::size_t n = gb.ring()->nvars();
  if (n > 64) throw std::invalid_argument("dim: too many variables");
  std::vector<std::uint64_t> masks;
  for (const Monomial& m : gb.leading_monomials())
    masks.push_back(m.support_mask());
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  std::size_t best = 0;
  auto independent = [&](std::uint64_t s) {
    for (std::uint64_t m : masks)
      if ((m & ~s) == 0) return false;
    return true;
  };
  // DFS over variables with a simple remaining-count bound.
  std::vector<std::pair<std::size_t, std::pair<std::uint64_t, std::size_t>>>
      stack;
  stack.push_back({0, {0, 0}});
  std::size_t steps = 0;
  while (!stack.empty()) {
    if (((++steps) & 0xfff) == 0) budget::check();
    auto [idx, state] = stack.back();
    stack.pop_back();
    auto [set_mask, cnt] = state;
    if (cnt + (n - idx) <= best) continue;
    if (idx == n) {
      best = std::max(best, cnt);
      continue;
    }
    stack.push_back({idx + 1, {set_mask, cnt}});
    std::uint64_t with = set_mask | (std::uint64_t{1} << idx);
    if (independent(with)) stack.push_back({idx + 1, {with, cnt + 1}});
  }
  return static_cast<int>(best);
}

template <CoefficientField K>
int dim(const Ideal<K>& ideal) {
  return dim(buchberger(ideal, MonomialOrder::grevlex(ideal.ring->nvars())));
}

/// Monomials outside the initial ideal, ascending in the basis order.
/// Finite exactly when dim == 0.
template <CoefficientField K>
std::vector<Monomial> standard_monomials(const GroebnerBasis<K>& gb) {
  std::size_t n = gb.ring()->nvars();
  const auto& lms = gb.leading_monomials();
  auto is_standard = [&](const Monomial& m) {
    for (const Monomial& l : lms)
      if (l.divides(m)) return false;
    return true;
  };
  Monomial one(n);
  if (!is_standard(one)) return {};  // unit ideal
  const MonomialOrder& ord = gb.ring()->order();
  auto cmp = [&ord](const Monomial& a, const Monomial& b) {
    return ord.compare(a, b) < 0;
  };
  std::set<Monomial, decltype(cmp)> out(cmp);
  std::vector<Monomial> frontier{one};
  out.insert(one);
  while (!frontier.empty()) {
    budget::check();
    std::vector<Monomial> next;
    for (const Monomial& m : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        Monomial child = m;
        child[i] += 1;
        if (out.count(child) || !is_standard(child)) continue;
        out.insert(child);
        next.push_back(std::move(child));
        if (out.size() > 2'000'000)
          throw std::runtime_error(
              "standard_monomials: quotient is too large (is dim > 0?)");
      }
    }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

namespace gbdetail {

/// Numerator K(t) of the Hilbert series of a monomial ideal, over (1-t)^n.
/// Splits on the most shared variable: K(I) = K(I + (x)) + t * K(I : x).
UniPolyQ hilbert_numerator(std::vector<std::vector<unsigned>> gens,
                           std::size_t nvars);

}  // namespace gbdetail

/// Degree of the ideal. Zero-dimensional: the number of standard
/// monomials. Homogeneous: the degree of the top-dimensional part, read
/// off the Hilbert series of the initial ideal. Rejects
/// positive-dimensional inhomogeneous input.
template <CoefficientField K>
long degree(const GroebnerBasis<K>& gb) {
  if (gb.is_unit_ideal()) return 0;
  int d = dim(gb);
  if (d == 0) return static_cast<long>(standard_monomials(gb).size());
  for (const auto& g : gb.elements())
    if (!g.is_homogeneous())
      throw std::invalid_argument(
          "degree: positive-dimensional inhomogeneous ideal");
  std::vector<std::vector<unsigned>> exps;
  for (const Monomial& m : gb.leading_monomials())
    exps.push_back(m.exponents());
  UniPolyQ num =
      gbdetail::hilbert_numerator(std::move(exps), gb.ring()->nvars());
  // K(t) = (1-t)^codim * Q(t); peel off codim factors and evaluate at 1.
  std::size_t codim = gb.ring()->nvars() - static_cast<std::size_t>(d);
  Rationals f;
  UniPolyQ one_minus_t = UniPolyQ::from_ints(f, {1, -1});
  for (std::size_t i = 0; i < codim; ++i) {
    auto [q, r] = num.divrem(one_minus_t);
    if (!r.is_zero())
      throw std::logic_error("degree: Hilbert numerator not divisible");
    num = std::move(q);
  }
  Rat v = num.eval(Rat(1));
  if (!v.is_integer() || v.sign() <= 0)
    throw std::logic_error("degree: non-positive multiplicity");
  return std::stol(v.str());
}

template <CoefficientField K>
long degree(const Ideal<K>& ideal) {
  return degree(buchberger(ideal, MonomialOrder::grevlex(ideal.ring->nvars())));
}

/// Generators of I intersected with the subring on the kept variables,
/// computed with a two-block elimination order (dropped block first, lex
/// between blocks, grevlex inside). Returned in the original ring as its
/// reduced basis under the ring's own order.
template <CoefficientField K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::size_t>& drop);

/// I : f^infinity via the Rabinowitsch-style extra variable:
/// (I + (t*f - 1)) intersected back down to k[X].
template <CoefficientField K>
Ideal<K> saturate(const Ideal<K>& ideal, const MultiPoly<K>& f);

/// I : J, as the intersection of the single quotients I : g over the
/// generators of J.
template <CoefficientField K>
Ideal<K> quotient(const Ideal<K>& ideal, const Ideal<K>& other);

/// I intersect J via t*I + (1-t)*J and elimination of t.
template <CoefficientField K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b);

/// f in sqrt(I), decided by 1 in I + (t*f - 1).
template <CoefficientField K>
bool radical_member(const MultiPoly<K>& f, const Ideal<K>& ideal);

// ---- implementation of the elimination-based operations ----

namespace gbdetail {

/// Elim order whose lead block is the dropped variables.
inline MonomialOrder elim_order(std::size_t nvars,
                                const std::vector<std::size_t>& drop) {
  std::vector<char> dropped(nvars, 0);
  for (std::size_t v : drop) {
    if (v >= nvars) throw std::invalid_argument("eliminate: bad variable");
    dropped[v] = 1;
  }
  std::vector<unsigned> prec;
  for (std::size_t v = 0; v < nvars; ++v)
    if (dropped[v]) prec.push_back(static_cast<unsigned>(v));
  std::size_t block = prec.size();
  for (std::size_t v = 0; v < nvars; ++v)
    if (!dropped[v]) prec.push_back(static_cast<unsigned>(v));
  return MonomialOrder::elim(std::move(prec), block);
}

/// Reduced basis of `gens` under the ring's own order, as an Ideal.
template <CoefficientField K>
Ideal<K> reduced_ideal(RingPtr<K> ring, std::vector<MultiPoly<K>> gens) {
  Ideal<K> raw(ring, std::move(gens));
  GroebnerBasis<K> gb = buchberger(raw, ring->order());
  std::vector<MultiPoly<K>> out;
  for (const auto& g : gb.elements()) out.push_back(g.in_ring(ring));
  return Ideal<K>(ring, std::move(out));
}

}  // namespace gbdetail

template <CoefficientField K>
Ideal<K> eliminate(const Ideal<K>& ideal,
                   const std::vector<std::size_t>& drop) {
  std::size_t n = ideal.ring->nvars();
  MonomialOrder ord = gbdetail::elim_order(n, drop);
  GroebnerBasis<K> gb = buchberger(ideal, ord);
  std::vector<char> dropped(n, 0);
  for (std::size_t v : drop) dropped[v] = 1;
  std::vector<MultiPoly<K>> kept;
  for (const auto& g : gb.elements()) {
    std::uint64_t mask = g.support_mask();
    bool uses_dropped = false;
    for (std::size_t v = 0; v < n && !uses_dropped; ++v)
      if (dropped[v] && (mask >> v) & 1) uses_dropped = true;
    if (!uses_dropped) kept.push_back(g.in_ring(ideal.ring));
  }
  return gbdetail::reduced_ideal(ideal.ring, std::move(kept));
}

template <CoefficientField K>
Ideal<K> saturate(const Ideal<K>& ideal, const MultiPoly<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  std::size_t n = ideal.ring->nvars();
  std::vector<unsigned> prec{static_cast<unsigned>(n)};  // t leads
  for (std::size_t v = 0; v < n; ++v) prec.push_back(static_cast<unsigned>(v));
  RingPtr<K> ext =
      append_fresh_var(ideal.ring, MonomialOrder::elim(std::move(prec), 1));
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : ideal.gens) gens.push_back(g.lift_to(ext));
  MultiPoly<K> t = MultiPoly<K>::variable(ext, n);
  gens.push_back(t * f.lift_to(ext) - MultiPoly<K>::from_int(ext, 1));
  GroebnerBasis<K> gb = buchberger(Ideal<K>(ext, std::move(gens)),
                                   ext->order());
  std::vector<MultiPoly<K>> kept;
  for (const auto& g : gb.elements())
    if (g.degree_in(n) == 0) kept.push_back(g.drop_tail_vars(ideal.ring));
  return gbdetail::reduced_ideal(ideal.ring, std::move(kept));
}

template <CoefficientField K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  if (!a.ring->same_as(*b.ring))
    throw std::invalid_argument("intersect: ring mismatch");
  std::size_t n = a.ring->nvars();
  std::vector<unsigned> prec{static_cast<unsigned>(n)};
  for (std::size_t v = 0; v < n; ++v) prec.push_back(static_cast<unsigned>(v));
  RingPtr<K> ext =
      append_fresh_var(a.ring, MonomialOrder::elim(std::move(prec), 1));
  MultiPoly<K> t = MultiPoly<K>::variable(ext, n);
  MultiPoly<K> one_minus_t = MultiPoly<K>::from_int(ext, 1) - t;
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : a.gens) gens.push_back(t * g.lift_to(ext));
  for (const auto& g : b.gens) gens.push_back(one_minus_t * g.lift_to(ext));
  GroebnerBasis<K> gb =
      buchberger(Ideal<K>(ext, std::move(gens)), ext->order());
  std::vector<MultiPoly<K>> kept;
  for (const auto& g : gb.elements())
    if (g.degree_in(n) == 0) kept.push_back(g.drop_tail_vars(a.ring));
  return gbdetail::reduced_ideal(a.ring, std::move(kept));
}

template <CoefficientField K>
Ideal<K> quotient(const Ideal<K>& ideal, const Ideal<K>& other) {
  if (!ideal.ring->same_as(*other.ring))
    throw std::invalid_argument("quotient: ring mismatch");
  if (other.gens.empty())
    throw std::invalid_argument("quotient: colon by the zero ideal");
  bool first = true;
  Ideal<K> acc(ideal.ring, {});
  for (const auto& g : other.gens) {
    // I : g = (I intersect (g)) / g
    Ideal<K> principal(ideal.ring, {g});
    Ideal<K> meet = intersect(ideal, principal);
    std::vector<MultiPoly<K>> quot;
    for (const auto& h : meet.gens) quot.push_back(divide_exact(h, g));
    Ideal<K> single = gbdetail::reduced_ideal(ideal.ring, std::move(quot));
    acc = first ? std::move(single) : intersect(acc, single);
    first = false;
  }
  return acc;
}

template <CoefficientField K>
bool radical_member(const MultiPoly<K>& f, const Ideal<K>& ideal) {
  if (f.is_zero()) return true;
  std::size_t n = ideal.ring->nvars();
  RingPtr<K> ext = append_fresh_var(
      ideal.ring, MonomialOrder::grevlex(n + 1));
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : ideal.gens) gens.push_back(g.lift_to(ext));
  MultiPoly<K> t = MultiPoly<K>::variable(ext, n);
  gens.push_back(t * f.lift_to(ext) - MultiPoly<K>::from_int(ext, 1));
  GroebnerBasis<K> gb =
      buchberger(Ideal<K>(ext, std::move(gens)), ext->order());
  return gb.is_unit_ideal();
}

}  // namespace zdsolve
