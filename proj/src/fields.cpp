#include "zdsolve/fields.hpp"

namespace zdsolve {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; the witness set below is exact for n < 3.3e24.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldDesc FieldDesc::parse(const std::string& s) {
  if (s == "QQ" || s == "qq") return rationals();
  if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(s.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("FieldDesc: bad prime in '" + s + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("FieldDesc: expected QQ or Fp:<prime>, got '" +
                              s + "'");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // Extended Euclid on signed 128-bit to dodge negative wraparound.
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p_), new_r = static_cast<__int128>(a);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<__int128>(p_);
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::parse(const std::string& s) const {
  // Route through Rat so "a/b" literals work mod p as well.
  Rat q = Rat::from_string(s);
  mpz_class num = q.num(), den = q.den();
  mpz_class pz(std::to_string(p_));
  mpz_class nm = num % pz;
  if (nm < 0) nm += pz;
  mpz_class dm = den % pz;
  Elem n = static_cast<Elem>(nm.get_ui());
  Elem d = static_cast<Elem>(dm.get_ui());
  if (d == 0) throw std::domain_error("PrimeField: denominator divisible by p");
  return div(n, d);
}

}  // namespace zdsolve
