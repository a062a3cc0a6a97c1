#include "dgideal/field.hpp"

#include <stdexcept>

namespace dgideal {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/* canonical residue in [0,p) */
BigInt mod_p(const BigInt& n, std::uint32_t p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return r;
}

BigInt inv_mod_p(const BigInt& a, std::uint32_t p) {
  /* extended euclid on (a, p); a already reduced and nonzero */
  BigInt r0 = a, r1 = BigInt(p), s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("element not invertible mod p");
  return mod_p(s0, p);
}

}  // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p))
    throw std::invalid_argument("field characteristic must be prime, got " +
                                std::to_string(p));
  return Field(p);
}

Scalar Field::reduce(BigRat v) const {
  if (p_ == 0) return Scalar(std::move(v));
  BigInt num = numerator(v), den = denominator(v);
  BigInt d = mod_p(den, p_);
  if (d == 0) throw std::invalid_argument("denominator divisible by " + std::to_string(p_));
  BigInt r = mod_p(mod_p(num, p_) * inv_mod_p(d, p_), p_);
  return Scalar(BigRat(r));
}

Scalar Field::from_int(long long n) const { return reduce(BigRat(n)); }

Scalar Field::from_fraction(const BigInt& num, const BigInt& den) const {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) return reduce(BigRat(-num, -den));  // keep denominators positive
  return reduce(BigRat(num, den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const { return reduce(a.v_ + b.v_); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return reduce(a.v_ - b.v_); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return reduce(a.v_ * b.v_); }
Scalar Field::neg(const Scalar& a) const { return reduce(-a.v_); }

Scalar Field::inv(const Scalar& a) const {
  if (a.v_ == 0) throw std::invalid_argument("inverse of zero");
  if (p_ == 0) return Scalar(1 / a.v_);
  return Scalar(BigRat(inv_mod_p(numerator(a.v_), p_)));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) throw std::invalid_argument("empty coefficient");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return reduce(BigRat(BigInt(text)));
    BigInt num(text.substr(0, slash)), den(text.substr(slash + 1));
    return from_fraction(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad coefficient '" + text + "'");
  }
}

std::string Field::str(const Scalar& a) const {
  const BigRat& v = a.raw();
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string Field::name() const {
  if (p_ == 0) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace dgideal
