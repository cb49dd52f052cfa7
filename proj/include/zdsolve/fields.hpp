#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "zdsolve/rational.hpp"

namespace zdsolve {

bool is_prime_u64(std::uint64_t n);

/// Runtime description of a coefficient field: QQ or F_p, p prime < 2^63.
struct FieldDesc {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static FieldDesc rationals() { return FieldDesc{Kind::Rationals, 0}; }
  static FieldDesc prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 63) || !is_prime_u64(p))
      throw std::invalid_argument("FieldDesc: " + std::to_string(p) +
                                  " is not a prime < 2^63");
    return FieldDesc{Kind::Prime, p};
  }

  // "QQ" or "Fp:<prime>"
  static FieldDesc parse(const std::string& s);
  std::string str() const {
    return kind == Kind::Rationals ? "QQ" : "Fp:" + std::to_string(p);
  }
  std::uint64_t characteristic() const {
    return kind == Kind::Rationals ? 0 : p;
  }
  friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

/// The field QQ. Stateless; element type is Rat.
class Rationals {
 public:
  using Elem = Rat;
  static constexpr bool is_rationals = true;

  FieldDesc desc() const { return FieldDesc::rationals(); }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long n) const { return Rat(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Rat(1) / a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a.is_one(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.str(); }
  Elem parse(const std::string& s) const { return Rat::from_string(s); }
  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// The field F_p with canonical representatives in [0, p).
/// Products go through a 128-bit intermediate, so any prime < 2^63 works.
class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_rationals = false;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 63) || !is_prime_u64(p))
      throw std::invalid_argument("PrimeField: " + std::to_string(p) +
                                  " is not a prime < 2^63");
  }

  std::uint64_t modulus() const { return p_; }
  FieldDesc desc() const { return FieldDesc::prime(p_); }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long n) const {
    long m = n % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return static_cast<Elem>(m);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;  // p < 2^63 so no overflow
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == one(); }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const;
  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
};

template <typename K>
concept CoefficientField = requires(const K k, typename K::Elem a) {
  { k.zero() } -> std::same_as<typename K::Elem>;
  { k.add(a, a) } -> std::same_as<typename K::Elem>;
  { k.mul(a, a) } -> std::same_as<typename K::Elem>;
  { k.inv(a) } -> std::same_as<typename K::Elem>;
  { k.is_zero(a) } -> std::same_as<bool>;
};

}  // namespace zdsolve
