#include "wordlab/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long k = 2; k * k <= d; ++k)
    if (d % (k * k) == 0) return false;
  return true;
}

int rational_sign(const Rational& r) { return r.sign(); }

}  // namespace

QuadraticNumber::QuadraticNumber(Rational p, Rational q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
  if (!is_square_free(d_)) throw Error(ErrorKind::invalid_argument, "radicand must be a positive square-free integer");
  normalize();
}

void QuadraticNumber::normalize() {
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0) d_ = 1;
}

long QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
  if (d_ == 1) return o.d_;
  if (o.d_ == 1 || o.d_ == d_) return d_;
  throw Error(ErrorKind::invalid_argument, "mixed radicands " + std::to_string(d_) + " and " + std::to_string(o.d_));
}

int QuadraticNumber::sign() const {
  int sp = rational_sign(p_), sq = rational_sign(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // opposite signs: compare p^2 with q^2 d
  Rational diff = p_ * p_ - q_ * q_ * d_;
  int sd = rational_sign(diff);
  return sp > 0 ? sd : -sd;
}

double QuadraticNumber::to_double() const {
  return p_.convert_to<double>() + q_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticNumber::to_string() const {
  std::ostringstream out;
  if (q_ == 0) {
    out << p_;
    return out.str();
  }
  if (p_ != 0) out << p_ << (q_ > 0 ? "+" : "");
  out << q_ << "*sqrt(" << d_ << ")";
  return out.str();
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  QuadraticNumber r;
  r.d_ = common_radicand(o);
  r.p_ = p_ + o.p_;
  r.q_ = q_ + o.q_;
  r.normalize();
  return r;
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const { return *this + (-o); }

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  QuadraticNumber r;
  r.d_ = common_radicand(o);
  r.p_ = p_ * o.p_ + q_ * o.q_ * r.d_;
  r.q_ = p_ * o.q_ + q_ * o.p_;
  r.normalize();
  return r;
}

const QuadraticNumber& min(const QuadraticNumber& a, const QuadraticNumber& b) { return b < a ? b : a; }
const QuadraticNumber& max(const QuadraticNumber& a, const QuadraticNumber& b) { return a < b ? b : a; }

namespace {

class TermReader {
 public:
  explicit TermReader(std::string_view t) : text_(t) {}

  QuadraticNumber read(long want_d) {
    QuadraticNumber total;
    skip();
    if (pos_ >= text_.size()) fail("empty number");
    bool first = true;
    while (pos_ < text_.size()) {
      int sgn = 1;
      skip();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        sgn = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      Rational coef = 1;
      bool have_coef = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coef = rational();
        have_coef = true;
        skip();
      }
      long d = 0;
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip();
        d = radical();
      } else if (pos_ < text_.size() && text_[pos_] == 's') {
        d = radical();
      } else if (!have_coef) {
        fail("expected a number");
      }
      if (sgn < 0) coef = -coef;
      if (d == 0) {
        total = total + QuadraticNumber(coef);
      } else {
        if (want_d > 0 && d != want_d) fail("radicand differs from declared d");
        total = total + QuadraticNumber(0, coef, d);
      }
      skip();
    }
    return total;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::parse, why + " in '" + std::string(text_) + "'");
  }
  long integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  Rational rational() {
    Rational r = integer();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip();
      long den = integer();
      if (den == 0) fail("zero denominator");
      r /= den;
    }
    return r;
  }
  long radical() {
    if (text_.substr(pos_, 5) != "sqrt(") fail("expected sqrt(");
    pos_ += 5;
    skip();
    long d = integer();
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return d;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadraticNumber QuadraticNumber::parse(std::string_view text, long d) { return TermReader(text).read(d); }

}  // namespace wordlab
