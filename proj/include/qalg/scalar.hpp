#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace qalg {

/** Ground field: the rationals or a prime field F_p. */
class Field {
 public:
  Field() = default;
  static Field rational() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /** 0 for the rationals. */
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_ = 0;
};

/**
 * Exact field element.
 *
 * Rationals are kept as a reduced int64 fraction and fall back to GMP when
 * an intermediate result overflows. Prime field elements are residues.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Scalar& o);
  Scalar(Scalar&& o) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&& o) noexcept = default;
  ~Scalar() = default;

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(std::int64_t v, Field f);
  /** Throws if d vanishes in f. */
  static Scalar from_fraction(std::int64_t n, std::int64_t d, Field f);
  /** Parses "n" or "n/d". */
  static Scalar parse(const std::string& text, Field f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  bool is_prime() const { return den_ < 0; }
  bool is_big() const { return static_cast<bool>(big_); }
  static Scalar make_rational(__int128 n, __int128 d);
  static Scalar make_big(mpq_class q);
  static Scalar make_residue(std::int64_t r, std::int64_t p);
  mpq_class as_mpq() const;
  void check_same(const Scalar& o) const;

  // Rational: num_/den_ with den_ > 0 (unless big_ is set).
  // Prime field: num_ is the residue and den_ == -p.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace qalg
