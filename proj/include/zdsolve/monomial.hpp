#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdsolve {

/// Exponent vector of fixed length (= #variables of its ring).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  unsigned total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  /// Quotient o / this; requires divides(o).
  Monomial quotient_into(const Monomial& o) const {
    Monomial r(o);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }
  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  /// Bitmask of variables with nonzero exponent (needs nvars <= 64).
  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i]) m |= std::uint64_t{1} << i;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }

 private:
  std::vector<unsigned> e_;
};

/// Term order. Lex and GRevLex act through a variable precedence
/// permutation (prec[0] is the greatest variable). Elim is the two-block
/// order used internally for elimination: lex between the blocks, grevlex
/// inside each, the first `block` precedence entries forming the lead block.
struct MonomialOrder {
  enum class Kind { Lex, GRevLex, Elim };
  Kind kind = Kind::GRevLex;
  std::vector<unsigned> prec;  // position -> variable index
  std::size_t block = 0;       // Elim only

  static MonomialOrder lex(std::size_t nvars) {
    return natural(Kind::Lex, nvars);
  }
  static MonomialOrder grevlex(std::size_t nvars) {
    return natural(Kind::GRevLex, nvars);
  }
  /// Elimination order dropping the variables listed first in `prec`.
  static MonomialOrder elim(std::vector<unsigned> prec, std::size_t block) {
    MonomialOrder o;
    o.kind = Kind::Elim;
    o.prec = std::move(prec);
    o.block = block;
    return o;
  }

  std::size_t nvars() const { return prec.size(); }

  /// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Lex:
        return cmp_lex(a, b, 0, prec.size());
      case Kind::GRevLex:
        return cmp_grevlex(a, b, 0, prec.size());
      case Kind::Elim: {
        int c = cmp_grevlex(a, b, 0, block);
        if (c != 0) return c;
        return cmp_grevlex(a, b, block, prec.size());
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.prec == b.prec && a.block == b.block;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Lex: return "lex";
      case Kind::GRevLex: return "grevlex";
      case Kind::Elim: return "elim(" + std::to_string(block) + ")";
    }
    return "?";
  }

 private:
  static MonomialOrder natural(Kind k, std::size_t nvars) {
    MonomialOrder o;
    o.kind = k;
    o.prec.resize(nvars);
    std::iota(o.prec.begin(), o.prec.end(), 0u);
    return o;
  }

  int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo,
              std::size_t hi) const {
    for (std::size_t i = lo; i < hi; ++i) {
      unsigned ea = a[prec[i]], eb = b[prec[i]];
      if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
  }
  int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) const {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[prec[i]];
      db += b[prec[i]];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      unsigned ea = a[prec[i]], eb = b[prec[i]];
      if (ea != eb) return ea < eb ? 1 : -1;  // smaller trailing exp wins
    }
    return 0;
  }
};

}  // namespace zdsolve
