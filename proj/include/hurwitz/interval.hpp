#pragma once
// Rational interval arithmetic: closed intervals with exact rational
// endpoints, and axis-aligned boxes standing in for complex enclosures.
// All operations are outward-exact (the true result set is contained in
// the returned interval, with equality for +,-,*).

#include "hurwitz/gaussian.hpp"

namespace hurwitz {

struct RatInterval {
  Rat lo{0};
  Rat hi{0};

  RatInterval() = default;
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
  }
  explicit RatInterval(const Rat& point) : lo(point), hi(point) {}

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_point() const { return lo == hi; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator-() const { return {-hi, -lo}; }
  RatInterval operator*(const RatInterval& o) const;
  // Exact range of x^2 (tighter than *this * *this when 0 is inside).
  RatInterval sq() const;
  // Requires 0 strictly outside [lo, hi].
  RatInterval recip() const;
  RatInterval operator/(const RatInterval& o) const { return *this * o.recip(); }

  // Sign of every point, if uniform: -1, +1, or 0 == indeterminate.
  int uniform_sign() const {
    if (hi < 0) return -1;
    if (lo > 0) return 1;
    return 0;
  }
};

RatInterval hull(const RatInterval& a, const RatInterval& b);

// Tight enclosure of sqrt(x) for x >= 0, width <= 2^-bits.
RatInterval sqrt_interval(const Rat& x, unsigned bits);

// Enclosure of pi, width <= 2^-bits.
RatInterval pi_interval(unsigned bits);

// isqrt floor: largest t with t*t <= n (n >= 0).
Int isqrt_floor(const Int& n);

struct ComplexBox {
  RatInterval re;
  RatInterval im;

  ComplexBox() = default;
  ComplexBox(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexBox(const GaussianRational& z)
      : re(RatInterval(z.re())), im(RatInterval(z.im())) {}

  Rat width() const { return re.width() > im.width() ? re.width() : im.width(); }
  bool contains(const GaussianRational& z) const {
    return re.contains(z.re()) && im.contains(z.im());
  }
  bool contains(const ComplexBox& o) const {
    return re.contains(o.re) && im.contains(o.im);
  }

  ComplexBox operator+(const ComplexBox& o) const { return {re + o.re, im + o.im}; }
  ComplexBox operator-(const ComplexBox& o) const { return {re - o.re, im - o.im}; }
  ComplexBox operator-() const { return {-re, -im}; }
  ComplexBox operator*(const ComplexBox& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  // Requires the box to exclude 0 (uniform sign on at least one axis).
  ComplexBox recip() const;
  ComplexBox operator/(const ComplexBox& o) const { return *this * o.recip(); }

  // Interval enclosure of |z|^2 over the box.
  RatInterval norm() const { return re.sq() + im.sq(); }
};

ComplexBox box_of(const GaussianInt& g);

}  // namespace hurwitz
