#pragma once

// Exact elements of Q(i): pairs of GMP rationals.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace tetra {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  explicit GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational fraction(long num, long den) {
    if (den == 0) throw std::domain_error("GaussianRational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (is_real()) return GaussianRational(mpq_class(1 / re_));
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_real()) {
      if (sgn(o.re_) == 0) throw std::domain_error("GaussianRational: division by zero");
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Total order used only for deterministic tie-breaking.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  // Rough bit size, used as a pivot-size heuristic.
  std::size_t size_hint() const {
    return mpz_sizeinbase(re_.get_num_mpz_t(), 2) + mpz_sizeinbase(re_.get_den_mpz_t(), 2) +
           mpz_sizeinbase(im_.get_num_mpz_t(), 2) + mpz_sizeinbase(im_.get_den_mpz_t(), 2);
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline GaussianRational pow(GaussianRational base, int e) {
  if (e < 0) return pow(base.inverse(), -e);
  GaussianRational r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

}  // namespace tetra
