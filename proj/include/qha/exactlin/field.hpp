#pragma once

#include <cstdint>
#include <string>

#include "qha/exactlin/rational.hpp"

namespace qha {

/// Field elements are Rationals; over F_p they are kept as integers in [0, p).
using Scalar = Rational;

/// The ground field: either Q or a prime field F_p. All arithmetic is exact.
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;
  static Field rationals() { return {}; }
  /// Throws ValidationError unless p is prime and below 2^62.
  static Field prime(std::uint64_t p);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] std::uint64_t characteristic() const noexcept { return p_; }
  [[nodiscard]] bool is_rationals() const noexcept { return kind_ == Kind::rationals; }

  /// Image of a rational number in this field (throws if the denominator vanishes mod p).
  [[nodiscard]] Scalar from(const Rational& q) const;
  [[nodiscard]] Scalar from_int(long long n) const { return from(Rational(n)); }

  [[nodiscard]] Scalar add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return a + b;
    auto s = static_cast<unsigned __int128>(a.small_num()) + static_cast<unsigned __int128>(b.small_num());
    return static_cast<long long>(s % p_);
  }
  [[nodiscard]] Scalar sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }
  [[nodiscard]] Scalar neg(const Scalar& a) const {
    if (kind_ == Kind::rationals) return -a;
    return a.is_zero() ? a : Scalar(static_cast<long long>(p_ - static_cast<std::uint64_t>(a.small_num())));
  }
  [[nodiscard]] Scalar mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return a * b;
    auto m = static_cast<unsigned __int128>(a.small_num()) * static_cast<unsigned __int128>(b.small_num());
    return static_cast<long long>(m % p_);
  }
  [[nodiscard]] Scalar inv(const Scalar& a) const;
  [[nodiscard]] Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  [[nodiscard]] std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

}  // namespace qha
