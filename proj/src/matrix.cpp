#include "zdsolve/matrix.hpp"

namespace zdsolve {

std::pair<std::size_t, long> symmetric_rank_signature(
    const Matrix<Rationals>& m) {
  if (!m.is_symmetric())
    throw std::invalid_argument("symmetric_rank_signature: not symmetric");
  std::size_t n = m.rows();
  Matrix<Rationals> a = m;
  std::size_t rk = 0;
  long sig = 0;

  auto sym_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
  };
  // row_k -= c*row_i and col_k -= c*col_i
  auto sym_elim = [&](std::size_t k, const Rat& c, std::size_t i) {
    if (c.is_zero()) return;
    for (std::size_t t = 0; t < n; ++t)
      a.at(k, t) = a.at(k, t) - c * a.at(i, t);
    for (std::size_t t = 0; t < n; ++t)
      a.at(t, k) = a.at(t, k) - c * a.at(t, i);
  };

  std::size_t i = 0;
  while (i < n) {
    // Prefer a nonzero diagonal pivot.
    std::size_t dpiv = i;
    while (dpiv < n && a.at(dpiv, dpiv).is_zero()) ++dpiv;
    if (dpiv < n) {
      sym_swap(i, dpiv);
      const Rat piv = a.at(i, i);
      for (std::size_t k_ = i + 1; k_ < n; ++k_)
        sym_elim(k_, a.at(k_, i) / piv, i);
      sig += piv.sign();
      ++rk;
      ++i;
      continue;
    }
    // All remaining diagonal entries are zero: look for an off-diagonal.
    bool found = false;
    std::size_t oi = 0, oj = 0;
    for (std::size_t r_ = i; r_ < n && !found; ++r_)
      for (std::size_t c_ = r_ + 1; c_ < n && !found; ++c_)
        if (!a.at(r_, c_).is_zero()) {
          oi = r_;
          oj = c_;
          found = true;
        }
    if (!found) break;  // remaining block is zero
    sym_swap(i, oi);
    sym_swap(i + 1, oj);
    const Rat b = a.at(i, i + 1);  // hyperbolic block [[0,b],[b,0]]
    for (std::size_t k_ = i + 2; k_ < n; ++k_) {
      Rat ci = a.at(k_, i) / b;
      Rat cj = a.at(k_, i + 1) / b;
      sym_elim(k_, cj, i);
      sym_elim(k_, ci, i + 1);
    }
    rk += 2;  // eigenvalues of the block are +b, -b: signature 0
    i += 2;
  }

  if (rank(m) != rk)
    throw std::logic_error(
        "symmetric_rank_signature: congruence rank disagrees with Gaussian "
        "rank");
  return {rk, sig};
}

}  // namespace zdsolve
