#pragma once

#include <map>
#include <sstream>
#include <utility>

#include "zdsolve/ring.hpp"

namespace zdsolve {

/// Exact multivariate polynomial: term list sorted strictly descending in
/// the ring's order, no zero coefficients, no duplicate monomials. The
/// zero polynomial has an empty term list.
template <CoefficientField K>
class MultiPoly {
 public:
  using Elem = typename K::Elem;
  struct Term {
    Monomial mono;
    Elem coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(RingPtr<K> ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(RingPtr<K> ring, Elem c) {
    MultiPoly p(ring);
    if (!ring->field().is_zero(c))
      p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }
  static MultiPoly from_int(RingPtr<K> ring, long n) {
    Elem c = ring->field().from_int(n);
    return constant(std::move(ring), std::move(c));
  }
  static MultiPoly variable(RingPtr<K> ring, std::size_t i) {
    Monomial m(ring->nvars());
    m[i] = 1;
    Elem one = ring->field().one();
    return term(std::move(ring), std::move(m), std::move(one));
  }
  static MultiPoly term(RingPtr<K> ring, Monomial m, Elem c) {
    MultiPoly p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Monomial& leading_monomial() const {
    require_nonzero("leading_monomial");
    return terms_.front().mono;
  }
  const Elem& leading_coeff() const {
    require_nonzero("leading_coeff");
    return terms_.front().coeff;
  }

  /// Total degree; -1 stands in for the degree of the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const Term& t : terms_)
      d = std::max(d, static_cast<int>(t.mono.total_degree()));
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_[0].mono.total_degree();
    for (const Term& t : terms_)
      if (t.mono.total_degree() != d) return false;
    return true;
  }
  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (const Term& t : terms_) m |= t.mono.support_mask();
    return m;
  }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (Term& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b, "+");
    return merge(a, b, /*negate_b=*/false);
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b, "-");
    return merge(a, b, /*negate_b=*/true);
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b, "*");
    const K& f = a.field();
    auto cmp = [&a](const Monomial& x, const Monomial& y) {
      return a.ring_->order().compare(x, y) > 0;  // descending
    };
    std::map<Monomial, Elem, decltype(cmp)> acc(cmp);
    for (const Term& ta : a.terms_) {
      for (const Term& tb : b.terms_) {
        Monomial m = ta.mono * tb.mono;
        Elem c = f.mul(ta.coeff, tb.coeff);
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(std::move(m), std::move(c));
        } else {
          it->second = f.add(it->second, c);
          if (f.is_zero(it->second)) acc.erase(it);
        }
      }
    }
    MultiPoly r(a.ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, c});
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const Elem& c) const {
    const K& f = field();
    if (f.is_zero(c)) return zero(ring_);
    MultiPoly r(*this);
    for (Term& t : r.terms_) t.coeff = f.mul(t.coeff, c);
    return r;
  }
  MultiPoly monic() const {
    require_nonzero("monic");
    return scaled(field().inv(leading_coeff()));
  }

  /// this - c * m * g, the reduction step of the division algorithm.
  MultiPoly axpy(const Elem& c, const Monomial& m, const MultiPoly& g) const {
    const K& f = field();
    MultiPoly shifted(g.ring_);
    shifted.terms_.reserve(g.terms_.size());
    for (const Term& t : g.terms_)
      shifted.terms_.push_back({t.mono * m, f.neg(f.mul(c, t.coeff))});
    return merge(*this, shifted, /*negate_b=*/false);
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = from_int(ring_, 1);
    MultiPoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (point.size() != ring_->nvars())
      throw std::invalid_argument("evaluate: wrong point arity");
    const K& f = field();
    Elem acc = f.zero();
    for (const Term& t : terms_) {
      Elem v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (unsigned k = 0; k < t.mono[i]; ++k) v = f.mul(v, point[i]);
      acc = f.add(acc, v);
    }
    return acc;
  }

  /// Ring morphism sending variable i to images[i]; images live in the
  /// target ring.
  MultiPoly substitute(const RingPtr<K>& target,
                       const std::vector<MultiPoly>& images) const {
    if (images.size() != ring_->nvars())
      throw std::invalid_argument("substitute: need one image per variable");
    MultiPoly acc = zero(target);
    for (const Term& t : terms_) {
      MultiPoly v = constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i)
        if (t.mono[i]) v = v * images[i].pow(t.mono[i]);
      acc = acc + v;
    }
    return acc;
  }

  /// Same polynomial re-sorted for a sibling ring (same field/variables,
  /// possibly different order).
  MultiPoly in_ring(const RingPtr<K>& target) const {
    if (target->nvars() != ring_->nvars() ||
        target->var_names() != ring_->var_names())
      throw std::invalid_argument("in_ring: incompatible variable set");
    MultiPoly r(target);
    r.terms_ = terms_;
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&target](const Term& a, const Term& b) {
                return target->order().compare(a.mono, b.mono) > 0;
              });
    return r;
  }

  /// Lift into a ring that has the same variables plus extras appended.
  MultiPoly lift_to(const RingPtr<K>& target) const {
    std::size_t n = ring_->nvars(), m = target->nvars();
    if (m < n) throw std::invalid_argument("lift_to: target ring too small");
    MultiPoly r(target);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      std::vector<unsigned> e = t.mono.exponents();
      e.resize(m, 0);
      r.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&target](const Term& a, const Term& b) {
                return target->order().compare(a.mono, b.mono) > 0;
              });
    return r;
  }

  /// Project back after lift_to; every appended variable must be absent.
  MultiPoly drop_tail_vars(const RingPtr<K>& target) const {
    std::size_t n = target->nvars(), m = ring_->nvars();
    if (m < n) throw std::invalid_argument("drop_tail_vars: bad target");
    MultiPoly r(target);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      for (std::size_t i = n; i < m; ++i)
        if (t.mono[i])
          throw std::invalid_argument("drop_tail_vars: variable still present");
      std::vector<unsigned> e(t.mono.exponents().begin(),
                              t.mono.exponents().begin() + n);
      r.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&target](const Term& a, const Term& b) {
                return target->order().compare(a.mono, b.mono) > 0;
              });
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!a.ring_ || !b.ring_) return a.is_zero() && b.is_zero();
    if (!a.ring_->same_as(*b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    const K& f = a.field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
      if (!f.equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  std::string str() const;

  const K& field() const { return ring_->field(); }

  void require_same_ring(const MultiPoly& o, const char* op) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
      throw std::invalid_argument(std::string("MultiPoly: ring mismatch in ") +
                                  op);
  }

 private:
  void require_nonzero(const char* what) const {
    if (terms_.empty())
      throw std::domain_error(std::string("MultiPoly: ") + what +
                              " of zero polynomial");
  }

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b,
                         bool negate_b) {
    const K& f = a.field();
    const MonomialOrder& ord = a.ring_->order();
    MultiPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        r.terms_.push_back({t.mono, negate_b ? f.neg(t.coeff) : t.coeff});
      } else {
        Elem s = negate_b ? f.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                          : f.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!f.is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const Term& t = b.terms_[j];
      r.terms_.push_back({t.mono, negate_b ? f.neg(t.coeff) : t.coeff});
    }
    return r;
  }

  RingPtr<K> ring_;
  std::vector<Term> terms_;
};

/// Renders with the ideal-file grammar: explicit '*' and '^', terms in
/// descending ring order.
template <CoefficientField K>
std::string MultiPoly<K>::str() const {
  if (terms_.empty()) return "0";
  const K& f = field();
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c = f.str(t.coeff);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool coeff_is_one = (c == "1");
    bool wrote_factor = false;
    if (!coeff_is_one || t.mono.is_one()) {
      out << c;
      wrote_factor = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote_factor) out << "*";
      out << ring_->var_name(i);
      if (t.mono[i] > 1) out << "^" << t.mono[i];
      wrote_factor = true;
    }
  }
  return out.str();
}

}  // namespace zdsolve
