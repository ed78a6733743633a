#include "polyquant/symexpr/coefficient.hpp"

#include <stdexcept>
#include <utility>

namespace polyquant {

Coefficient::Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient Coefficient::rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational coefficient with zero denominator");
  return {mpq_class(num, den), mpq_class(0)};
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

int compare(const Coefficient& a, const Coefficient& b) {
  if (int r = cmp(a.re_, b.re_); r != 0) return r < 0 ? -1 : 1;
  int r = cmp(a.im_, b.im_);
  return r < 0 ? -1 : (r > 0 ? 1 : 0);
}

}  // namespace polyquant
