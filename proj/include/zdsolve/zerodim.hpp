#pragma once

#include <optional>

#include "zdsolve/groebner.hpp"
#include "zdsolve/matrix.hpp"
#include "zdsolve/realroots.hpp"

namespace zdsolve {

/// A = k[X]/I for a zero-dimensional ideal I: the standard-monomial basis,
/// per-variable multiplication matrices, and the structure-constant table
/// b_i * b_j. Everything is filled at construction; instances are
/// immutable afterwards.
template <CoefficientField K>
class QuotientAlgebra {
 public:
  using Elem = typename K::Elem;

  explicit QuotientAlgebra(Ideal<K> ideal)
      : QuotientAlgebra(ideal, buchberger(ideal, MonomialOrder::grevlex(
                                                     ideal.ring->nvars()))) {}

  /// From a basis already computed under the natural grevlex order.
  QuotientAlgebra(Ideal<K> ideal, GroebnerBasis<K> gb)
      : ideal_(std::move(ideal)), gb_(std::move(gb)) {
    if (!(gb_.order() == MonomialOrder::grevlex(ideal_.ring->nvars())))
      throw std::invalid_argument("QuotientAlgebra: basis must be grevlex");
    int d = zdsolve::dim(gb_);
    if (d != 0)
      throw std::invalid_argument(
          d < 0 ? "QuotientAlgebra: unit ideal has no quotient basis"
                : "QuotientAlgebra: ideal is not zero-dimensional");
    basis_ = standard_monomials(gb_);
    build_tables();
  }

  const Ideal<K>& ideal() const { return ideal_; }
  const GroebnerBasis<K>& gb() const { return gb_; }
  const RingPtr<K>& ring() const { return gb_.ring(); }
  const K& field() const { return gb_.ring()->field(); }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  std::size_t basis_index(const Monomial& m) const {
    const MonomialOrder& ord = ring()->order();
    auto it = std::lower_bound(
        basis_.begin(), basis_.end(), m,
        [&ord](const Monomial& a, const Monomial& b) {
          return ord.compare(a, b) < 0;
        });
    if (it == basis_.end() || !(*it == m))
      throw std::logic_error("QuotientAlgebra: not a standard monomial");
    return static_cast<std::size_t>(it - basis_.begin());
  }

  /// Coordinates of the normal form of f in the standard basis.
  std::vector<Elem> coords(const MultiPoly<K>& f) const {
    MultiPoly<K> nf = normal_form(f.in_ring(ring()), gb_);
    std::vector<Elem> v(basis_.size(), field().zero());
    for (const auto& t : nf.terms()) v[basis_index(t.mono)] = t.coeff;
    return v;
  }

  const Matrix<K>& var_matrix(std::size_t var) const {
    return var_matrices_[var];
  }

  /// Matrix of multiplication by h on A, assembled from the cached
  /// per-variable matrices.
  Matrix<K> regular_rep(const MultiPoly<K>& h) const {
    const K& f = field();
    std::size_t d = basis_.size();
    MultiPoly<K> nf = normal_form(h.in_ring(ring()), gb_);
    Matrix<K> acc(f, d, d);
    for (const auto& t : nf.terms()) {
      Matrix<K> m = monomial_matrix(t.mono);
      acc = acc + m.scaled(t.coeff);
    }
    return acc;
  }

  Matrix<K> monomial_matrix(const Monomial& mono) const {
    Matrix<K> m = Matrix<K>::identity(field(), basis_.size());
    for (std::size_t v = 0; v < ring()->nvars(); ++v)
      if (mono[v]) m = m * var_matrices_[v].pow(mono[v]);
    return m;
  }

  /// Coordinates of b_i * b_j.
  const std::vector<Elem>& product_coords(std::size_t i, std::size_t j) const {
    return table_[i * basis_.size() + j];
  }
  /// trace(m_g) for g given by standard-basis coordinates.
  Elem trace_from_coords(const std::vector<Elem>& c) const {
    const K& f = field();
    Elem acc = f.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!f.is_zero(c[i])) acc = f.add(acc, f.mul(c[i], traces_[i]));
    return acc;
  }

 private:
  void build_tables() {
    const K& f = field();
    std::size_t d = basis_.size();
    std::size_t n = ring()->nvars();

    var_matrices_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      Matrix<K> m(f, d, d);
      for (std::size_t j = 0; j < d; ++j) {
        Monomial prod = basis_[j];
        prod[v] += 1;
        auto col = coords(MultiPoly<K>::term(ring(), prod, f.one()));
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col[i];
      }
      var_matrices_.push_back(std::move(m));
    }

    table_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        auto c = coords(
            MultiPoly<K>::term(ring(), basis_[i] * basis_[j], f.one()));
        table_[i * d + j] = c;
        table_[j * d + i] = std::move(c);
      }

    traces_.assign(d, f.zero());
    for (std::size_t a = 0; a < d; ++a) {
      Elem t = f.zero();
      for (std::size_t j = 0; j < d; ++j)
        t = f.add(t, table_[a * d + j][j]);
      traces_[a] = t;
    }
  }

  Ideal<K> ideal_;
  GroebnerBasis<K> gb_;
  std::vector<Monomial> basis_;
  std::vector<Matrix<K>> var_matrices_;
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> traces_;
};

/// Minimal-degree monic g with g(h) = 0 in A: stack the coordinate vectors
/// of 1, h, h^2, ... and take the first linear relation, found by
/// incremental Gaussian elimination from the lowest power up.
template <CoefficientField K>
UniPoly<K> eliminant(const MultiPoly<K>& h, const QuotientAlgebra<K>& A) {
  const K& f = A.field();
  std::size_t d = A.dimension();
  Matrix<K> mh = A.regular_rep(h);

  // Echelon rows over the power vectors, augmented with relation coords.
  std::vector<std::vector<typename K::Elem>> rows;   // length d
  std::vector<std::vector<typename K::Elem>> augs;   // length d+1
  std::vector<std::size_t> pivots;

  std::vector<typename K::Elem> w(d, f.zero());
  w[0] = f.one();  // coordinates of 1 (the first standard monomial)
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<typename K::Elem> aug(d + 1, f.zero());
    aug[k] = f.one();
    std::vector<typename K::Elem> v = w;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& piv = pivots[r];
      if (f.is_zero(v[piv])) continue;
      auto c = f.div(v[piv], rows[r][piv]);
      for (std::size_t t = 0; t < d; ++t)
        v[t] = f.sub(v[t], f.mul(c, rows[r][t]));
      for (std::size_t t = 0; t <= d; ++t)
        aug[t] = f.sub(aug[t], f.mul(c, augs[r][t]));
    }
    std::size_t piv = 0;
    while (piv < d && f.is_zero(v[piv])) ++piv;
    if (piv == d) {
      UniPoly<K> g(f, std::move(aug));
      return g.monic();
    }
    rows.push_back(std::move(v));
    augs.push_back(std::move(aug));
    pivots.push_back(piv);
    // w <- mh * w
    std::vector<typename K::Elem> next(d, f.zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!f.is_zero(mh.at(i, j)))
          next[i] = f.add(next[i], f.mul(mh.at(i, j), w[j]));
    w = std::move(next);
  }
  throw std::logic_error("eliminant: no relation among d+1 powers");
}

/// Characteristic polynomial det(Z*Id - m_h); degree d, monic.
template <CoefficientField K>
UniPoly<K> char_poly_elem(const MultiPoly<K>& h, const QuotientAlgebra<K>& A) {
  return char_poly(A.regular_rep(h));
}

/// The symmetric bilinear form S_h(f, g) = trace(m_{hfg}) on the standard
/// basis.
template <CoefficientField K>
struct TraceForm {
  MultiPoly<K> weight;
  Matrix<K> matrix;
};

template <CoefficientField K>
TraceForm<K> trace_form(const MultiPoly<K>& h, const QuotientAlgebra<K>& A) {
  const K& f = A.field();
  std::size_t d = A.dimension();
  // Rows of W: coordinates of h*b_i. TT[a][j] = trace(m_{b_a b_j}).
  Matrix<K> W(f, d, d), TT(f, d, d);
  MultiPoly<K> hh = h.in_ring(A.ring());
  for (std::size_t i = 0; i < d; ++i) {
    auto row = A.coords(hh * MultiPoly<K>::term(A.ring(), A.basis()[i],
                                                f.one()));
    for (std::size_t j = 0; j < d; ++j) W.at(i, j) = row[j];
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < d; ++j)
      TT.at(a, j) = A.trace_from_coords(A.product_coords(a, j));
  Matrix<K> S = W * TT;
  if (!S.is_symmetric())
    throw std::logic_error("trace_form: matrix came out non-symmetric");
  return {hh, std::move(S)};
}

/// Exact rank and signature of S_h over QQ. Rank comes from Gaussian
/// elimination, the signature from symmetric congruence diagonalization;
/// when the characteristic polynomial of the matrix is squarefree the
/// result is cross-checked against the Sturm sign counts.
std::pair<long, long> trace_form_signature(const TraceForm<Rationals>& tf);

template <CoefficientField K>
std::pair<long, long> trace_form_signature(const MultiPoly<K>& h,
                                           const QuotientAlgebra<K>& A)
  requires K::is_rationals
{
  return trace_form_signature(trace_form(h, A));
}

/// Number of real points of V(I): the signature of S_1.
template <CoefficientField K>
long num_real_trace(const QuotientAlgebra<K>& A)
  requires K::is_rationals
{
  return trace_form_signature(MultiPoly<K>::from_int(A.ring(), 1), A).second;
}

/// Shape-position data: eliminant g of the pivot with deg g = dim A, plus
/// one univariate expression per remaining variable.
template <CoefficientField K>
struct TriangularForm {
  RingPtr<K> ring;
  std::size_t pivot;
  UniPoly<K> g;
  std::vector<std::pair<std::size_t, UniPoly<K>>> assignments;  // var = g_i
};

/// Lex basis with the pivot variable last; std::nullopt is shape failure
/// (the basis does not match the triangular pattern).
template <CoefficientField K>
std::optional<TriangularForm<K>> triangular_form(const QuotientAlgebra<K>& A,
                                                 std::size_t pivot) {
  const K& f = A.field();
  std::size_t n = A.ring()->nvars();
  std::vector<unsigned> prec;
  for (std::size_t v = 0; v < n; ++v)
    if (v != pivot) prec.push_back(static_cast<unsigned>(v));
  prec.push_back(static_cast<unsigned>(pivot));
  MonomialOrder lex{MonomialOrder::Kind::Lex, std::move(prec), 0};
  GroebnerBasis<K> gb = buchberger(A.ideal(), lex);

  auto to_unipoly = [&](const MultiPoly<K>& p) -> std::optional<UniPoly<K>> {
    std::vector<typename K::Elem> cs;
    for (const auto& t : p.terms()) {
      for (std::size_t v = 0; v < n; ++v)
        if (v != pivot && t.mono[v]) return std::nullopt;
      std::size_t e = t.mono[pivot];
      if (cs.size() <= e) cs.resize(e + 1, f.zero());
      cs[e] = t.coeff;
    }
    return UniPoly<K>(f, std::move(cs));
  };

  TriangularForm<K> out{A.ideal().ring, pivot, UniPoly<K>(f), {}};
  bool have_g = false;
  for (const auto& e : gb.elements()) {
    const Monomial& lm = e.leading_monomial();
    std::uint64_t sup = lm.support_mask();
    if (sup == (std::uint64_t{1} << pivot)) {
      auto g = to_unipoly(e);
      if (!g || have_g) return std::nullopt;
      out.g = std::move(*g);
      have_g = true;
      continue;
    }
    // must be  x_v - g_v(pivot)
    std::size_t var = n;
    for (std::size_t v = 0; v < n; ++v)
      if ((sup >> v) & 1) {
        if (var != n) return std::nullopt;  // lead involves two variables
        var = v;
      }
    if (var == n || var == pivot || lm[var] != 1) return std::nullopt;
    MultiPoly<K> tail =
        MultiPoly<K>::variable(gb.ring(), var).in_ring(gb.ring()) - e;
    auto gi = to_unipoly(tail);
    if (!gi) return std::nullopt;
    out.assignments.emplace_back(var, std::move(*gi));
  }
  if (!have_g || out.assignments.size() + 1 != n) return std::nullopt;
  if (out.g.degree() != static_cast<int>(A.dimension())) return std::nullopt;
  for (const auto& [v, gi] : out.assignments)
    if (gi.degree() >= out.g.degree()) return std::nullopt;
  std::sort(out.assignments.begin(), out.assignments.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// All F_p-rational points of a triangular system, by exhaustive scan of
/// the pivot eliminant. Points come back in ring-variable order.
std::vector<std::vector<std::uint64_t>> solve_mod_p(
    const TriangularForm<PrimeField>& t);

/// Exact content of Stickelberger's eigenvalue correspondence:
/// char_poly(m_h) = prod (Z - h(xi))^mult(xi) over the given roots.
template <CoefficientField K>
bool stickelberger_check(
    const QuotientAlgebra<K>& A, const MultiPoly<K>& h,
    const std::vector<std::pair<std::vector<typename K::Elem>, unsigned>>&
        roots) {
  const K& f = A.field();
  UniPoly<K> cp = char_poly_elem(h, A);
  UniPoly<K> prod = UniPoly<K>::from_int(f, 1);
  MultiPoly<K> hh = h.in_ring(A.ring());
  for (const auto& [point, mult] : roots) {
    auto value = hh.evaluate(point);
    UniPoly<K> lin(f, {f.neg(value), f.one()});
    for (unsigned m = 0; m < mult; ++m) prod = prod * lin;
  }
  return cp == prod;
}

/// Separating-form search: coordinates first, then small deterministic
/// integer combinations. Returns a linear form whose eliminant has degree
/// dim A, together with that eliminant.
template <CoefficientField K>
std::optional<std::pair<MultiPoly<K>, UniPoly<K>>> separating_eliminant(
    const QuotientAlgebra<K>& A, std::size_t max_attempts = 60) {
  std::size_t n = A.ring()->nvars();
  int d = static_cast<int>(A.dimension());
  auto try_form = [&](const MultiPoly<K>& h)
      -> std::optional<std::pair<MultiPoly<K>, UniPoly<K>>> {
    UniPoly<K> g = eliminant(h, A);
    if (g.degree() == d) return std::make_pair(h, g);
    return std::nullopt;
  };
  std::size_t attempts = 0;
  for (std::size_t v = 0; v < n && attempts < max_attempts; ++v, ++attempts) {
    auto r = try_form(MultiPoly<K>::variable(A.ideal().ring, v));
    if (r) return r;
  }
  static const long seq[6] = {1, -1, 2, -2, 3, -3};
  for (std::size_t a = 0; attempts < max_attempts; ++a, ++attempts) {
    MultiPoly<K> h = MultiPoly<K>::zero(A.ideal().ring);
    for (std::size_t v = 0; v < n; ++v) {
      long c = seq[(a + v) % 6];
      h += MultiPoly<K>::variable(A.ideal().ring, v)
               .scaled(A.field().from_int(c));
    }
    auto r = try_form(h);
    if (r) return r;
  }
  return std::nullopt;
}

/// Disjoint rational isolating intervals, one per distinct real root of
/// the eliminant of h, each of width <= precision.
template <CoefficientField K>
std::vector<std::pair<Rat, Rat>> isolate_real_roots(
    const QuotientAlgebra<K>& A, const MultiPoly<K>& h, const Rat& precision)
  requires K::is_rationals
{
  UniPolyQ g = eliminant(h, A);
  return isolate_real_roots(g, precision);
}

}  // namespace zdsolve
