#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace wordlab {

using Rational = boost::multiprecision::cpp_rational;

/// p + q*sqrt(d) with exact rational p, q. Values with q = 0 mix freely with
/// any radicand; two irrational values must share d.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long p) : p_(p) {}  // NOLINT: integers convert implicitly
  QuadraticNumber(Rational p, Rational q = 0, long d = 1);

  // Sums of terms like "3/2", "-1/2*sqrt(5)", "sqrt(5)". The radicand found in
  // the text must equal `d` when one is given (d > 0).
  static QuadraticNumber parse(std::string_view text, long d = 0);

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& radical_part() const noexcept { return q_; }
  long radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return q_ == 0; }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator-(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;

  bool operator==(const QuadraticNumber& o) const { return (*this - o).sign() == 0; }
  bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }
  bool operator<(const QuadraticNumber& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuadraticNumber& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuadraticNumber& o) const { return o < *this; }
  bool operator>=(const QuadraticNumber& o) const { return o <= *this; }

 private:
  long common_radicand(const QuadraticNumber& o) const;
  void normalize();

  Rational p_ = 0;
  Rational q_ = 0;
  long d_ = 1;
};

const QuadraticNumber& min(const QuadraticNumber& a, const QuadraticNumber& b);
const QuadraticNumber& max(const QuadraticNumber& a, const QuadraticNumber& b);

}  // namespace wordlab
