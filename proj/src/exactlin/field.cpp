#include "qha/exactlin/field.hpp"

#include "qha/error.hpp"

namespace qha {
namespace {

using u128 = unsigned __int128;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  u128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mpz_class(std::to_string(p)).get_mpz_t());
  return std::stoull(r.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p))
    throw ValidationError("InvalidField", "characteristic " + std::to_string(p) + " is not a supported prime");
  Field f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

Scalar Field::from(const Rational& q) const {
  if (kind_ == Kind::rationals) return q;
  mpq_class v = q.to_mpq();
  std::uint64_t n = reduce_mpz(v.get_num(), p_);
  std::uint64_t d = reduce_mpz(v.get_den(), p_);
  if (d == 0)
    throw ValidationError("InvalidCoefficient", "denominator of " + q.str() + " vanishes in F_" + std::to_string(p_));
  auto r = static_cast<u128>(n) * pow_mod(d, p_ - 2, p_) % p_;
  return static_cast<long long>(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::rationals) return Rational(1) / a;
  return static_cast<long long>(pow_mod(static_cast<std::uint64_t>(a.small_num()), p_ - 2, p_));
}

std::string Field::name() const { return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_); }

}  // namespace qha
