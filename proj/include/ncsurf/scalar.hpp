#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncsurf {

// Complex scalar with exact rational real and imaginary parts.
// All arithmetic is exact; conversion to floating point happens only at the
// numeric boundary (truncations, norms, reports).
class ExactScalar {
 public:
  ExactScalar() : re_(0), im_(0) {}
  ExactScalar(int v) : re_(v), im_(0) {}
  ExactScalar(long v) : re_(v), im_(0) {}
  ExactScalar(mpq_class re, mpq_class im = mpq_class(0))
      : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return ExactScalar(mpq_class(0), mpq_class(1)); }

  static ExactScalar rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("ExactScalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(std::move(q));
  }

  // num/den + i*inum/iden
  static ExactScalar make(long num, long den, long inum, long iden) {
    if (den == 0 || iden == 0)
      throw std::invalid_argument("ExactScalar: zero denominator");
    mpq_class r(num, den), s(inum, iden);
    r.canonicalize();
    s.canonicalize();
    return ExactScalar(std::move(r), std::move(s));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  ExactScalar conj() const { return ExactScalar(re_, -im_); }

  // |z|^2, exact
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  ExactScalar inverse() const {
    if (is_zero()) throw std::domain_error("ExactScalar: division by zero");
    mpq_class n = norm2();
    return ExactScalar(re_ / n, -im_ / n);
  }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend ExactScalar operator-(const ExactScalar& a) {
    return ExactScalar(-a.re_, -a.im_);
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.re_ * b.re_ - a.im_ * b.im_,
                       a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }
  ExactScalar& operator+=(const ExactScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    *this = *this * o;
    return *this;
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) {
    return !(a == b);
  }

  std::string str() const {
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) return im_.get_str() + "i";
    std::string s = re_.get_str();
    if (im_ > 0) s += "+";
    return s + im_.get_str() + "i";
  }

 private:
  mpq_class re_, im_;
};

}  // namespace ncsurf
