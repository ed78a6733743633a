#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace polyquant {

/// Exact complex number with rational real and imaginary parts.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(mpq_class re, mpq_class im);

  static Coefficient rational(long num, long den);
  static Coefficient imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Coefficient conj() const { return {re_, -im_}; }
  /// Throws std::domain_error on zero.
  Coefficient inverse() const;

  Coefficient operator-() const { return {-re_, -im_}; }
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (real part first), used only to make canonical forms sortable.
  friend int compare(const Coefficient& a, const Coefficient& b);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace polyquant
