#pragma once

#include <array>

#include "zdsolve/combinatorics.hpp"
#include "zdsolve/groebner.hpp"
#include "zdsolve/matrix.hpp"

namespace zdsolve {

/// Determinant of a small matrix with polynomial entries, by cofactor
/// expansion along the first row. Sizes beyond 6 are rejected.
template <CoefficientField K>
MultiPoly<K> poly_det(const std::vector<std::vector<MultiPoly<K>>>& m) {
  std::size_t n = m.size();
  if (n > 6) throw std::invalid_argument("poly_det: size > 6");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: not square");
  if (n == 0) throw std::invalid_argument("poly_det: empty");
  const RingPtr<K>& ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  MultiPoly<K> acc = MultiPoly<K>::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly<K>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly<K>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly<K> t = m[0][j] * poly_det(minor);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

/// u * M * v^t for row vectors of polynomials over scalar M.
template <CoefficientField K>
MultiPoly<K> bilinear_form(const std::vector<MultiPoly<K>>& u,
                           const Matrix<K>& m,
                           const std::vector<MultiPoly<K>>& v) {
  if (u.size() != m.rows() || v.size() != m.cols())
    throw std::invalid_argument("bilinear_form: size mismatch");
  const RingPtr<K>& ring = u[0].ring();
  MultiPoly<K> acc = MultiPoly<K>::zero(ring);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    MultiPoly<K> row = MultiPoly<K>::zero(ring);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero() || ring->field().is_zero(m.at(i, j))) continue;
      row += v[j].scaled(m.at(i, j));
    }
    acc += u[i] * row;
  }
  return acc;
}

// ---- cylinders through points (axis P + t*V, squared radius r) ----

/// QQ-style ring k[r, y11, y12, y21, y22] used by the cylinder problem.
template <CoefficientField K>
RingPtr<K> cylinder_ring(K field) {
  return make_ring(std::move(field), {"r", "y11", "y12", "y21", "y22"});
}

/// The cylinder through X with axis point P = (0, y11, y12), direction
/// V = (1, y21, y22) and squared radius r, denominators cleared:
///   r*|V|^2 + [V.(X - P)]^2 - |X - P|^2 |V|^2.
template <CoefficientField K>
MultiPoly<K> cylinder_condition(const RingPtr<K>& ring,
                                const std::array<typename K::Elem, 3>& point) {
  using P = MultiPoly<K>;
  auto var = [&](std::size_t i) { return P::variable(ring, i); };
  P r = var(0);
  std::vector<P> v = {P::from_int(ring, 1), var(3), var(4)};
  std::vector<P> xmp = {P::constant(ring, point[0]),
                        P::constant(ring, point[1]) - var(1),
                        P::constant(ring, point[2]) - var(2)};
  auto dot = [&](const std::vector<P>& a, const std::vector<P>& b) {
    P acc = P::zero(ring);
    for (std::size_t i = 0; i < 3; ++i) acc += a[i] * b[i];
    return acc;
  };
  P vv = dot(v, v);
  P vx = dot(v, xmp);
  return r * vv + vx * vx - dot(xmp, xmp) * vv;
}

// ---- lines tangent to quadrics in P^3, local coordinates ----

/// k[y11, y12, y21, y22]: the affine chart of lines P + s V with
/// P = (1, 0, y11, y12) and V = (0, 1, y21, y22).
template <CoefficientField K>
RingPtr<K> lines_ring(K field) {
  return make_ring(std::move(field), {"y11", "y12", "y21", "y22"});
}

/// Symmetric matrix of the sphere with center (a,b,c) and squared radius
/// r, acting on (w, x, y, z).
template <CoefficientField K>
Matrix<K> sphere_matrix(const K& field, const typename K::Elem& a,
                        const typename K::Elem& b, const typename K::Elem& c,
                        const typename K::Elem& r) {
  Matrix<K> m = Matrix<K>::identity(field, 4);
  auto sq = [&](const typename K::Elem& x) { return field.mul(x, x); };
  m.at(0, 0) = field.sub(field.add(field.add(sq(a), sq(b)), sq(c)), r);
  m.at(0, 1) = m.at(1, 0) = field.neg(a);
  m.at(0, 2) = m.at(2, 0) = field.neg(b);
  m.at(0, 3) = m.at(3, 0) = field.neg(c);
  return m;
}

enum class HyperboloidKind { OneSheet, TwoSheet };

/// Hyperboloids sharing the real conic x^2 + y^2 - z^2 = 0 at infinity:
/// (x-a)^2 + (y-b)^2 - (z-c)^2 +- r = 0, plus sign for two sheets.
template <CoefficientField K>
Matrix<K> hyperboloid_matrix(HyperboloidKind kind, const K& field,
                             const typename K::Elem& a,
                             const typename K::Elem& b,
                             const typename K::Elem& c,
                             const typename K::Elem& r) {
  Matrix<K> m(field, 4, 4);
  auto sq = [&](const typename K::Elem& x) { return field.mul(x, x); };
  auto corner = field.sub(field.add(sq(a), sq(b)), sq(c));
  corner = kind == HyperboloidKind::TwoSheet ? field.add(corner, r)
                                             : field.sub(corner, r);
  m.at(0, 0) = corner;
  m.at(0, 1) = m.at(1, 0) = field.neg(a);
  m.at(0, 2) = m.at(2, 0) = field.neg(b);
  m.at(0, 3) = m.at(3, 0) = c;
  m.at(1, 1) = field.one();
  m.at(2, 2) = field.one();
  m.at(3, 3) = field.neg(field.one());
  return m;
}

/// Tangency of the line (P + s V) to the quadric u M u^t = 0, in the local
/// chart: (P M V^t)^2 - (P M P^t)(V M V^t).
template <CoefficientField K>
MultiPoly<K> tangent_to(const RingPtr<K>& ring, const Matrix<K>& m) {
  using P = MultiPoly<K>;
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("tangent_to: expected a 4x4 matrix");
  std::vector<P> p = {P::from_int(ring, 1), P::zero(ring),
                      P::variable(ring, 0), P::variable(ring, 1)};
  std::vector<P> v = {P::zero(ring), P::from_int(ring, 1),
                      P::variable(ring, 2), P::variable(ring, 3)};
  P pmv = bilinear_form(p, m, v);
  return pmv * pmv - bilinear_form(p, m, p) * bilinear_form(v, m, v);
}

// ---- Plucker coordinates and the Grassmannian ----

/// Coordinate ring of P^(C(n,r)-1): one variable per r-subset of
/// {0..n-1} in lexicographic subset order, grevlex with index-lex
/// variable precedence.
template <CoefficientField K>
RingPtr<K> plucker_ring(const K& field, unsigned r, unsigned n) {
  if (n > 9) throw std::invalid_argument("plucker_ring: n > 9 unsupported");
  std::vector<std::string> names;
  for (const auto& s : subsets_lex(n, r)) {
    std::string name = "p";
    for (unsigned v : s) name += static_cast<char>('0' + v);
    names.push_back(std::move(name));
  }
  return make_ring(field, std::move(names));
}

namespace geodetail {

/// Variable index of the Plucker coordinate for an (unsorted, distinct)
/// index tuple, with the sign of sorting it ascending; zero sign marks a
/// repeated index.
inline std::pair<int, std::size_t> plucker_var(std::vector<unsigned> idx,
                                               unsigned n) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return {0, 0};
  return {sign, subset_rank(idx, n)};
}

}  // namespace geodetail

/// Generators of the Plucker ideal of G(r,n): the multi-term
/// Grassmann-Plucker (shuffle) relations, one per pair of an (r-1)-subset
/// and an (r+1)-subset, deduplicated and sign-normalized so each leading
/// coefficient is +1.
template <CoefficientField K>
Ideal<K> plucker_ideal(unsigned r, unsigned n, const RingPtr<K>& ring) {
  using P = MultiPoly<K>;
  if (r == 0 || r >= n) throw std::invalid_argument("plucker_ideal: need 0<r<n");
  std::vector<P> gens;
  if (r == 1 || r + 1 > n) return Ideal<K>(ring, {});  // projective space
  const K& f = ring->field();
  auto alphas = subsets_lex(n, r - 1);
  auto betas = subsets_lex(n, r + 1);
  for (const auto& alpha : alphas) {
    for (const auto& beta : betas) {
      P rel = P::zero(ring);
      for (std::size_t j = 0; j < beta.size(); ++j) {
        std::vector<unsigned> left(alpha);
        left.push_back(beta[j]);
        auto [sgn_l, var_l] = geodetail::plucker_var(std::move(left), n);
        if (sgn_l == 0) continue;
        std::vector<unsigned> right;
        for (std::size_t k = 0; k < beta.size(); ++k)
          if (k != j) right.push_back(beta[k]);
        std::size_t var_r = subset_rank(right, n);
        int sgn = (j % 2 == 0 ? 1 : -1) * sgn_l;
        Monomial mono(ring->nvars());
        mono[var_l] += 1;
        mono[var_r] += 1;
        rel += P::term(ring, std::move(mono), f.from_int(sgn));
      }
      if (rel.is_zero()) continue;
      if (!f.is_one(rel.leading_coeff()))
        rel = rel.scaled(f.inv(rel.leading_coeff()));
      bool dup = false;
      for (const auto& g : gens)
        if (g == rel) {
          dup = true;
          break;
        }
      if (!dup) gens.push_back(std::move(rel));
    }
  }
  return Ideal<K>(ring, std::move(gens));
}

/// Data of a special Schubert problem on G(r,n): the list of condition
/// codimensions l_1..l_m. The problem is finite-dimensional of expected
/// dimension r(n-r) - sum(l); zero-dimensional when they balance.
struct SchubertData {
  unsigned r, n;
  std::vector<unsigned> codims;

  SchubertData(unsigned r_, unsigned n_, std::vector<unsigned> l)
      : r(r_), n(n_), codims(std::move(l)) {
    if (!(1 < r && r < n))
      throw std::invalid_argument("SchubertData: need 1 < r < n");
    unsigned sum = 0;
    for (unsigned li : codims) {
      if (li < 1 || li > n - r)
        throw std::invalid_argument("SchubertData: codimension out of range");
      sum += li;
    }
    if (sum > r * (n - r))
      throw std::invalid_argument("SchubertData: conditions exceed dim G");
  }

  /// Rows of the plane carrying condition i: dim L_i = n - r + 1 - l_i.
  unsigned plane_rows(std::size_t i) const { return n - r + 1 - codims[i]; }
  bool expects_finite() const {
    unsigned sum = 0;
    for (unsigned li : codims) sum += li;
    return sum == r * (n - r);
  }
};

/// Linear Schubert conditions for an r-plane X to meet the row space of L
/// non-trivially: the Laplace expansion of every maximal minor of [L; X]
/// along the X rows, with the minors of X replaced by Plucker variables.
template <CoefficientField K>
Ideal<K> schubert_condition(unsigned r, const Matrix<K>& L,
                            const RingPtr<K>& ring) {
  using P = MultiPoly<K>;
  const K& f = ring->field();
  unsigned n = static_cast<unsigned>(L.cols());
  unsigned q = static_cast<unsigned>(L.rows());
  if (rank(L) != q)
    throw std::invalid_argument("schubert_condition: rank-deficient L");
  if (q + r > n)
    throw std::invalid_argument("schubert_condition: too many rows");
  std::vector<P> gens;
  for (const auto& cols : subsets_lex(n, q + r)) {
    P eq = P::zero(ring);
    auto unit_sets = subsets_lex(q + r, r);  // positions of the X block
    for (const auto& pos : unit_sets) {
      std::vector<unsigned> u_cols, l_cols;
      std::vector<char> taken(q + r, 0);
      for (unsigned t : pos) taken[t] = 1;
      unsigned pos_sum = 0;
      for (unsigned t = 0; t < q + r; ++t) {
        if (taken[t]) {
          u_cols.push_back(cols[t]);
          pos_sum += t;
        } else {
          l_cols.push_back(cols[t]);
        }
      }
      std::vector<unsigned> all_rows(q);
      for (unsigned i = 0; i < q; ++i) all_rows[i] = i;
      auto minor = det(L.submatrix(all_rows, l_cols));
      if (f.is_zero(minor)) continue;
      if (pos_sum % 2 == 1) minor = f.neg(minor);
      Monomial mono(ring->nvars());
      mono[subset_rank(u_cols, n)] += 1;
      eq += P::term(ring, std::move(mono), minor);
    }
    if (!eq.is_zero()) gens.push_back(normalize_scale(eq));
  }
  return Ideal<K>(ring, std::move(gens));
}

/// The i-plane osculating the rational normal curve (1, s, ..., s^(n-1))
/// at s: rows gamma(s), gamma'(s), ..., gamma^(i-1)(s).
template <CoefficientField K>
Matrix<K> osc_plane(unsigned i, unsigned n, const typename K::Elem& s,
                    const K& field) {
  if (i < 1 || i > n) throw std::invalid_argument("osc_plane: need 1 <= i <= n");
  Matrix<K> m(field, i, n);
  for (unsigned row = 0; row < i; ++row)
    for (unsigned col = row; col < n; ++col) {
      long fall = 1;
      for (unsigned t = 0; t < row; ++t) fall *= static_cast<long>(col - t);
      auto c = field.from_int(fall);
      for (unsigned t = 0; t < col - row; ++t) c = field.mul(c, s);
      m.at(row, col) = c;
    }
  return m;
}

/// Quadratic form p . (wedge^r M) . p^t in Plucker coordinates: the locus
/// of r-planes tangent to the quadric of M.
template <CoefficientField K>
MultiPoly<K> tangent_equation(unsigned r, const RingPtr<K>& ring,
                              const Matrix<K>& m) {
  using P = MultiPoly<K>;
  Matrix<K> wedge = exterior_power(r, m);
  if (wedge.rows() != ring->nvars())
    throw std::invalid_argument("tangent_equation: matrix/ring mismatch");
  std::vector<P> p;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    p.push_back(P::variable(ring, i));
  return bilinear_form(p, wedge, p);
}

// ---- lines tangent to quadrics in P^n, local coordinates ----

/// k[z00..z0(n-2), z10..z1(n-2)]: the chart X = [I_2 | Z] of lines in P^n.
template <CoefficientField K>
RingPtr<K> pn_local_ring(const K& field, unsigned n) {
  if (n < 2 || n > 10) throw std::invalid_argument("pn_local_ring: bad n");
  std::vector<std::string> names;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j + 1 < n; ++j)
      names.push_back("z" + std::to_string(i) + std::to_string(j));
  return make_ring(field, std::move(names));
}

/// Sphere in P^n with the given center and squared radius:
/// sum (x_i - w c_i)^2 = r w^2 as a symmetric (n+1)x(n+1) matrix.
template <CoefficientField K>
Matrix<K> pn_sphere(const K& field,
                    const std::vector<typename K::Elem>& center,
                    const typename K::Elem& r) {
  std::size_t n = center.size();
  Matrix<K> m = Matrix<K>::identity(field, n + 1);
  auto corner = field.neg(r);
  for (std::size_t i = 0; i < n; ++i) {
    corner = field.add(corner, field.mul(center[i], center[i]));
    m.at(0, i + 1) = m.at(i + 1, 0) = field.neg(center[i]);
  }
  m.at(0, 0) = corner;
  return m;
}

/// Degenerate-restriction condition for the line rowspace[I_2 | Z] against
/// the quadric of M: (u M u^t)(v M v^t) - (u M v^t)^2.
template <CoefficientField K>
MultiPoly<K> pn_tangency(const Matrix<K>& m, const RingPtr<K>& ring) {
  using P = MultiPoly<K>;
  std::size_t n1 = m.rows();  // n + 1
  if (ring->nvars() != 2 * (n1 - 2))
    throw std::invalid_argument("pn_tangency: matrix/ring mismatch");
  std::vector<P> u = {P::from_int(ring, 1), P::zero(ring)};
  std::vector<P> v = {P::zero(ring), P::from_int(ring, 1)};
  for (std::size_t j = 0; j + 2 < n1; ++j) {
    u.push_back(P::variable(ring, j));
    v.push_back(P::variable(ring, (n1 - 2) + j));
  }
  P umv = bilinear_form(u, m, v);
  return bilinear_form(u, m, u) * bilinear_form(v, m, v) - umv * umv;
}

/// Product of the total degrees: the Bezout bound.
inline std::uint64_t bezout_number(const std::vector<unsigned>& degrees) {
  std::uint64_t b = 1;
  for (unsigned d : degrees) b *= d;
  return b;
}

}  // namespace zdsolve
