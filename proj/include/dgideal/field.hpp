#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace dgideal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/* One scalar. All arithmetic goes through Field so prime-field reduction can
   never be forgotten; the stored value is canonical (reduced fraction over the
   rationals, residue in [0,p) over F_p), so operator== is exact equality. */
class Scalar {
 public:
  Scalar() = default;
  const BigRat& raw() const { return v_; }
  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }

 private:
  explicit Scalar(BigRat v) : v_(std::move(v)) {}
  BigRat v_;
  friend class Field;
};

class Field {
 public:
  static Field rationals();
  static Field prime(std::uint32_t p);

  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(BigRat(0)); }
  Scalar one() const { return Scalar(BigRat(1)); }
  Scalar from_int(long long n) const;
  Scalar from_fraction(const BigInt& num, const BigInt& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const { return a.v_ == 0; }
  bool is_one(const Scalar& a) const { return a.v_ == 1; }

  /* "n" or "n/d"; over F_p the value is reduced, a denominator divisible
     by p is rejected */
  Scalar parse(const std::string& text) const;
  std::string str(const Scalar& a) const;

  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  Scalar reduce(BigRat v) const;
  std::uint32_t p_ = 0;  // 0 means rationals
};

}  // namespace dgideal
