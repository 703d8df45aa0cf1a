#include "qalg/scalar.hpp"

#include <limits>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<i128>(a) * b) % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  i128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    i128 q = r / nr;
    i128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error("scalar is not invertible");
  if (t < 0) t += p;
  return static_cast<std::int64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
    if (d > 3000000) break;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p > (std::uint64_t(1) << 62) || !is_prime_u64(p))
    throw Error("field characteristic must be a prime below 2^62: " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rational") : "prime " + std::to_string(p_);
}

Scalar::Scalar(const Scalar& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_)
    big_ = std::make_unique<mpq_class>(*o.big_);
  else
    big_.reset();
  return *this;
}

Scalar Scalar::zero(Field f) { return from_int(0, f); }
Scalar Scalar::one(Field f) { return from_int(1, f); }

Scalar Scalar::make_residue(std::int64_t r, std::int64_t p) {
  Scalar s;
  r %= p;
  if (r < 0) r += p;
  s.num_ = r;
  s.den_ = -p;
  return s;
}

Scalar Scalar::from_int(std::int64_t v, Field f) {
  if (!f.is_rational()) return make_residue(v, static_cast<std::int64_t>(f.characteristic()));
  Scalar s;
  s.num_ = v;
  s.den_ = 1;
  return s;
}

Scalar Scalar::from_fraction(std::int64_t n, std::int64_t d, Field f) {
  if (!f.is_rational()) {
    auto p = static_cast<std::int64_t>(f.characteristic());
    Scalar dd = make_residue(d, p);
    if (dd.num_ == 0) throw Error("denominator vanishes in " + f.to_string());
    return make_residue(mod_mul(make_residue(n, p).num_, mod_inv(dd.num_, p), p), p);
  }
  if (d == 0) throw Error("zero denominator");
  return make_rational(n, d);
}

Scalar Scalar::parse(const std::string& text, Field f) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long v = std::stoll(text, &used);
      if (used != text.size()) throw Error("bad number");
      return from_int(v, f);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    long long n = std::stoll(a, &used);
    if (used != a.size()) throw Error("bad number");
    long long d = std::stoll(b, &used);
    if (used != b.size()) throw Error("bad number");
    return from_fraction(n, d, f);
  } catch (const std::logic_error&) {
    throw Error("not a number: " + text);
  }
}

Scalar Scalar::make_rational(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Scalar();
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  Scalar s;
  s.big_ = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
  return s;
}

Scalar Scalar::make_big(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    Scalar s;
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
    if (s.num_ == 0) s.den_ = 1;
    return s;
  }
  Scalar s;
  s.big_ = std::make_unique<mpq_class>(std::move(q));
  return s;
}

mpq_class Scalar::as_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Field Scalar::field() const {
  return is_prime() ? Field::prime(static_cast<std::uint64_t>(-den_)) : Field::rational();
}

void Scalar::check_same(const Scalar& o) const {
  bool a = is_prime(), b = o.is_prime();
  if (a != b || (a && den_ != o.den_)) throw FieldMismatch("scalars from different fields combined");
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }

bool Scalar::is_one() const { return !big_ && num_ == 1 && (den_ == 1 || den_ < 0); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (is_prime()) {
    std::int64_t p = -den_;
    std::int64_t r = num_ + o.num_;
    if (r >= p) r -= p;
    Scalar s;
    s.num_ = r;
    s.den_ = den_;
    return s;
  }
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (big_ || o.big_) return make_big(as_mpq() + o.as_mpq());
  return make_rational(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_);
}

Scalar Scalar::operator-() const {
  if (is_prime()) {
    Scalar s;
    s.num_ = num_ == 0 ? 0 : -den_ - num_;
    s.den_ = den_;
    return s;
  }
  if (big_) return make_big(-*big_);
  return make_rational(-static_cast<i128>(num_), den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (is_prime()) {
    Scalar s;
    s.num_ = mod_mul(num_, o.num_, -den_);
    s.den_ = den_;
    return s;
  }
  if (is_zero() || o.is_zero()) return Scalar();
  if (big_ || o.big_) return make_big(as_mpq() * o.as_mpq());
  i128 g1 = static_cast<i128>(gcd128(uabs(num_), static_cast<u128>(o.den_)));
  i128 g2 = static_cast<i128>(gcd128(uabs(o.num_), static_cast<u128>(den_)));
  i128 n = (static_cast<i128>(num_) / g1) * (static_cast<i128>(o.num_) / g2);
  i128 d = (static_cast<i128>(den_) / g2) * (static_cast<i128>(o.den_) / g1);
  if (fits(n) && fits(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  return make_rational(n, d);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_prime()) {
    Scalar s;
    s.num_ = mod_inv(num_, -den_);
    s.den_ = den_;
    return s;
  }
  if (big_) return make_big(1 / *big_);
  return make_rational(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  if (big_ || o.big_) {
    if (!big_ || !o.big_) return false;
    return *big_ == *o.big_;
  }
  return num_ == o.num_ && (is_prime() || den_ == o.den_);
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (is_prime() || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace qalg
