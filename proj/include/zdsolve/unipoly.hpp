#pragma once

#include <sstream>

#include "zdsolve/fields.hpp"

namespace zdsolve {

/// Dense univariate polynomial, constant term first. The zero polynomial
/// has an empty coefficient vector; its degree is reported as -1 and all
/// operations stay total on it.
template <CoefficientField K>
class UniPoly {
 public:
  using Elem = typename K::Elem;

  explicit UniPoly(K field) : field_(std::move(field)) {}
  UniPoly(K field, std::vector<Elem> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    strip();
  }

  static UniPoly zero(K field) { return UniPoly(std::move(field)); }
  static UniPoly constant(K field, Elem c) {
    UniPoly p(std::move(field));
    p.c_.push_back(std::move(c));
    p.strip();
    return p;
  }
  static UniPoly from_int(K field, long n) {
    Elem c = field.from_int(n);
    return constant(std::move(field), std::move(c));
  }
  /// c * Z^e
  static UniPoly monomial(K field, Elem c, std::size_t e) {
    UniPoly p(std::move(field));
    if (!p.field_.is_zero(c)) {
      p.c_.assign(e + 1, p.field_.zero());
      p.c_[e] = std::move(c);
    }
    return p;
  }
  static UniPoly from_ints(K field, std::vector<long> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.push_back(field.from_int(x));
    return UniPoly(std::move(field), std::move(c));
  }

  const K& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : field_.zero();
  }
  const Elem& leading_coeff() const {
    if (c_.empty()) throw std::domain_error("UniPoly: lead of zero");
    return c_.back();
  }
  /// Lowest-order nonzero coefficient (the sign of f just right of 0).
  const Elem& trailing_coeff() const {
    if (c_.empty()) throw std::domain_error("UniPoly: trail of zero");
    for (const Elem& c : c_)
      if (!field_.is_zero(c)) return c;
    return c_.back();  // unreachable given strip()
  }

  UniPoly operator-() const {
    UniPoly r(*this);
    for (Elem& c : r.c_) c = field_.neg(c);
    return r;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    return combine(a, b, false);
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return combine(a, b, true);
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.field_);
    const K& f = a.field_;
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    return UniPoly(f, std::move(c));
  }

  UniPoly scaled(const Elem& s) const {
    UniPoly r(field_);
    if (field_.is_zero(s)) return r;
    r.c_.reserve(c_.size());
    for (const Elem& c : c_) r.c_.push_back(field_.mul(c, s));
    return r;
  }
  UniPoly monic() const {
    if (is_zero()) throw std::domain_error("UniPoly: monic of zero");
    return scaled(field_.inv(leading_coeff()));
  }

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero");
    const K& f = field_;
    UniPoly q(f), r(*this);
    if (degree() < d.degree()) return {q, r};
    q.c_.assign(degree() - d.degree() + 1, f.zero());
    Elem dl = f.inv(d.leading_coeff());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t shift = r.degree() - d.degree();
      Elem coef = f.mul(r.c_.back(), dl);
      q.c_[shift] = coef;
      for (std::size_t i = 0; i < d.c_.size(); ++i) {
        std::size_t k = shift + i;
        r.c_[k] = f.sub(r.c_[k], f.mul(coef, d.c_[i]));
      }
      r.strip();
    }
    q.strip();
    return {q, r};
  }
  UniPoly rem(const UniPoly& d) const { return divrem(d).second; }

  UniPoly derivative() const {
    UniPoly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.c_.push_back(field_.mul(c_[i], field_.from_int(static_cast<long>(i))));
    r.strip();
    return r;
  }

  Elem eval(const Elem& x) const {
    const K& f = field_;
    Elem acc = f.zero();
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = f.add(f.mul(acc, x), c_[i]);
    return acc;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  std::string str(const std::string& var = "Z") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (field_.is_zero(c_[i])) continue;
      std::string c = field_.str(c_[i]);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (first) {
        if (neg) out << "-";
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      if (i == 0 || c != "1") {
        out << c;
        if (i > 0) out << "*";
      }
      if (i > 0) {
        out << var;
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  static UniPoly combine(const UniPoly& a, const UniPoly& b, bool sub) {
    const K& f = a.field_;
    UniPoly r(f);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      Elem x = i < a.c_.size() ? a.c_[i] : f.zero();
      Elem y = i < b.c_.size() ? b.c_[i] : f.zero();
      r.c_[i] = sub ? f.sub(x, y) : f.add(x, y);
    }
    r.strip();
    return r;
  }

  void strip() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_;
  std::vector<Elem> c_;
};

/// Monic gcd by the Euclidean algorithm. gcd(0, g) = monic g; gcd(0,0)
/// is rejected.
template <CoefficientField K>
UniPoly<K> uni_gcd(const UniPoly<K>& f, const UniPoly<K>& g) {
  if (f.is_zero() && g.is_zero())
    throw std::domain_error("uni_gcd: gcd(0, 0) undefined");
  UniPoly<K> a = f, b = g;
  while (!b.is_zero()) {
    UniPoly<K> r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <CoefficientField K>
bool is_squarefree(const UniPoly<K>& f) {
  if (f.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
  if (f.degree() <= 1) return true;
  return uni_gcd(f, f.derivative()).degree() == 0;
}

/// f / gcd(f, f'): same distinct roots, all simple.
template <CoefficientField K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (f.degree() <= 1) return f.monic();
  UniPoly<K> g = uni_gcd(f, f.derivative());
  if (g.degree() == 0) return f.monic();
  return f.divrem(g).first.monic();
}

using UniPolyQ = UniPoly<Rationals>;

}  // namespace zdsolve
