#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace zdsolve {

/// Arbitrary-precision rational, always kept canonical:
/// gcd(num, den) = 1, den > 0, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpz_class n) : v_(std::move(n)) {}
  Rat(mpz_class n, mpz_class d) : v_(std::move(n), std::move(d)) {
    if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }

  // Accepts "a" or "a/b" with optional leading sign.
  static Rat from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    q.canonicalize();
    Rat r;
    r.v_ = std::move(q);
    return r;
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const { return v_.get_str(); }

 private:
  explicit Rat(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace zdsolve
