#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace linhash {

using BigInt = mpz_class;

inline BigInt big(int64_t v) { return BigInt(static_cast<long>(v)); }

inline int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("BigInt does not fit int64");
  return static_cast<int64_t>(v.get_si());
}

/// Exact fraction with arbitrary-precision numerator and denominator.
/// Always stored reduced with den > 0, so equality is structural and all
/// arithmetic and comparisons are exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int64_t n) : v_(big(n)) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(int64_t num, int64_t den) : Rational(big(num), big(den)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  double to_double() const { return v_.get_d(); }

  /// Canonical "num/den" form, denominator always present ("0/1", "2/3").
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  static Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}  // must be canonical
  mpq_class v_;
};

/// A reduced fraction in [0, 1]; elements of Farey sequences.
using FareyFraction = Rational;

/// Exact sum by pairwise (balanced) reduction; much faster than a left fold
/// when many denominators are involved. Consumes the input.
Rational balanced_sum(std::vector<Rational>& terms);

}  // namespace linhash
