#include "zdsolve/realroots.hpp"

#include "zdsolve/budget.hpp"

namespace zdsolve {

namespace {

const Rationals kQ;

int sign_at(const UniPolyQ& p, const Rat& x) { return p.eval(x).sign(); }

int sign_at_plus_inf(const UniPolyQ& p) { return p.leading_coeff().sign(); }

int sign_at_minus_inf(const UniPolyQ& p) {
  int s = p.leading_coeff().sign();
  return (p.degree() % 2 == 0) ? s : -s;
}

// Sign just right of zero: the lowest nonzero coefficient decides.
int sign_at_zero_plus(const UniPolyQ& p) { return p.trailing_coeff().sign(); }

std::vector<int> signs(const SturmChain& c, const Rat& x) {
  std::vector<int> out;
  out.reserve(c.polys.size());
  for (const auto& p : c.polys) out.push_back(sign_at(p, x));
  return out;
}

template <typename F>
std::vector<int> map_signs(const SturmChain& c, F f) {
  std::vector<int> out;
  out.reserve(c.polys.size());
  for (const auto& p : c.polys) out.push_back(f(p));
  return out;
}

}  // namespace

UniPolyQ primitive_positive(const UniPolyQ& f) {
  if (f.is_zero()) return f;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Rat& c : f.coeffs()) {
    if (c.is_zero()) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    den_lcm = l;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    num_gcd = g;
  }
  return f.scaled(Rat(den_lcm, num_gcd));  // factor > 0: signs preserved
}

SturmChain sturm_chain(const UniPolyQ& f) {
  if (f.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
  SturmChain c;
  c.polys.push_back(primitive_positive(f));
  if (f.degree() == 0) return c;
  c.polys.push_back(primitive_positive(f.derivative()));
  while (c.polys.back().degree() > 0) {
    const UniPolyQ& a = c.polys[c.polys.size() - 2];
    const UniPolyQ& b = c.polys.back();
    UniPolyQ r = a.rem(b);
    if (r.is_zero()) break;
    c.polys.push_back(primitive_positive(-r));
  }
  return c;
}

int variations(const std::vector<int>& signs) {
  int n = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

long count_real_roots(const UniPolyQ& f, RootRange range) {
  if (f.is_zero())
    throw std::domain_error("count_real_roots: zero polynomial");
  if (f.degree() == 0) return 0;
  SturmChain c = sturm_chain(f);
  int at_minus = variations(map_signs(c, sign_at_minus_inf));
  int at_plus = variations(map_signs(c, sign_at_plus_inf));
  switch (range) {
    case RootRange::All:
      return at_minus - at_plus;
    case RootRange::Positive:
      return variations(map_signs(c, sign_at_zero_plus)) - at_plus;
    case RootRange::Negative: {
      // V(-inf) - V(0+) counts (-inf, 0]; drop the root at 0 if present.
      long upto_zero = at_minus - variations(map_signs(c, sign_at_zero_plus));
      return upto_zero - (f.coeff(0).is_zero() ? 1 : 0);
    }
  }
  return 0;
}

long count_real_roots(const UniPolyQ& f, const Rat& a, const Rat& b) {
  if (f.is_zero())
    throw std::domain_error("count_real_roots: zero polynomial");
  if (!(a < b)) return 0;
  UniPolyQ sf = squarefree_part(f);  // interval counts need simple roots
  if (sf.degree() == 0) return 0;
  SturmChain c = sturm_chain(sf);
  return variations(signs(c, a)) - variations(signs(c, b));
}

namespace {

// Smallest power of two >= the Cauchy bound 1 + max |c_i| / |c_n|.
Rat dyadic_root_bound(const UniPolyQ& f) {
  Rat lead = f.leading_coeff().abs();
  Rat maxc(0);
  for (int i = 0; i < f.degree(); ++i) {
    Rat a = f.coeff(static_cast<std::size_t>(i)).abs();
    if (a > maxc) maxc = a;
  }
  Rat bound = Rat(1) + maxc / lead;
  Rat pow2(1);
  while (pow2 < bound) pow2 *= Rat(2);
  return pow2;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPolyQ& f,
                                                    const Rat& max_width) {
  if (f.is_zero())
    throw std::domain_error("isolate_real_roots: zero polynomial");
  if (max_width.sign() <= 0)
    throw std::invalid_argument("isolate_real_roots: width must be positive");
  std::vector<std::pair<Rat, Rat>> out;
  if (f.degree() == 0) return out;
  UniPolyQ sf = squarefree_part(f);
  SturmChain c = sturm_chain(sf);
  Rat bound = dyadic_root_bound(sf);

  struct Seg {
    Rat a, b;
    int va, vb;
  };
  std::vector<Seg> stack;
  int v_lo = variations(signs(c, -bound));
  int v_hi = variations(signs(c, bound));
  stack.push_back({-bound, bound, v_lo, v_hi});
  while (!stack.empty()) {
    budget::check();
    Seg s = stack.back();
    stack.pop_back();
    int nroots = s.va - s.vb;
    if (nroots == 0) continue;
    if (nroots == 1 && s.b - s.a <= max_width) {
      out.push_back({s.a, s.b});
      continue;
    }
    Rat mid = (s.a + s.b) / Rat(2);
    int vm = variations(signs(c, mid));
    stack.push_back({s.a, mid, s.va, vm});
    stack.push_back({mid, s.b, vm, s.vb});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace zdsolve
