#include "zdsolve/zerodim.hpp"

namespace zdsolve {

std::pair<long, long> trace_form_signature(const TraceForm<Rationals>& tf) {
  auto [rk, sig] = symmetric_rank_signature(tf.matrix);

  // Independent route for comparison: sign counts of the characteristic
  // polynomial, valid when it is squarefree.
  UniPolyQ cp = char_poly(tf.matrix);
  if (is_squarefree(cp)) {
    long pos = count_real_roots(cp, RootRange::Positive);
    long neg = count_real_roots(cp, RootRange::Negative);
    if (pos - neg != sig)
      throw std::logic_error(
          "trace_form_signature: congruence and Sturm signatures disagree");
    long zero_root = cp.coeff(0).is_zero() ? 1 : 0;
    if (static_cast<long>(cp.degree()) - zero_root !=
        static_cast<long>(rk))
      throw std::logic_error(
          "trace_form_signature: congruence and Sturm ranks disagree");
  }
  return {static_cast<long>(rk), sig};
}

std::vector<std::vector<std::uint64_t>> solve_mod_p(
    const TriangularForm<PrimeField>& t) {
  const PrimeField f = t.g.field();
  std::uint64_t p = f.modulus();
  if (p > 1'000'000)
    throw std::runtime_error("solve_mod_p: scan budget exceeded (p > 1e6)");
  std::vector<std::vector<std::uint64_t>> points;
  std::size_t n = t.ring->nvars();
  for (std::uint64_t x = 0; x < p; ++x) {
    if (f.is_zero(t.g.eval(x))) {
      std::vector<std::uint64_t> pt(n, 0);
      pt[t.pivot] = x;
      for (const auto& [var, gi] : t.assignments) pt[var] = gi.eval(x);
      points.push_back(std::move(pt));
    }
  }
  return points;
}

}  // namespace zdsolve
