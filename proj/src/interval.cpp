#include "hurwitz/interval.hpp"

#include <algorithm>

namespace hurwitz {

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::sq() const {
  Rat a = lo * lo, b = hi * hi;
  if (lo <= 0 && 0 <= hi) return {Rat(0), std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

RatInterval RatInterval::recip() const {
  if (lo <= 0 && 0 <= hi)
    throw std::invalid_argument("RatInterval::recip: interval straddles 0");
  return {Rat(1) / hi, Rat(1) / lo};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative");
  return boost::multiprecision::sqrt(n);
}

RatInterval sqrt_interval(const Rat& x, unsigned bits) {
  if (x < 0) throw std::invalid_argument("sqrt_interval: negative");
  if (x == 0) return RatInterval(Rat(0));
  // sqrt(p/q) = sqrt(p*q)/q; bracket sqrt(p*q) between dyadic bounds.
  Int p = numerator(x), q = denominator(x);
  Int scale = Int(1) << bits;
  Int m = isqrt_floor(p * q * scale * scale);
  Rat denom = Rat(q) * Rat(scale);
  return {Rat(m) / denom, Rat(m + 1) / denom};
}

namespace {

// Bracket of atan(1/x) for integer x >= 2 via the alternating series;
// consecutive partial sums enclose the limit.
RatInterval atan_recip(const Int& x, unsigned bits) {
  Rat x2 = Rat(x) * Rat(x);
  Rat tail_bound = Rat(1, Int(1) << (bits + 4));
  Rat pow = Rat(1) / Rat(x);  // 1/x^(2j+1)
  Rat term = pow;             // 1/((2j+1) x^(2j+1))
  Rat sum = 0;
  RatInterval out(Rat(0), Rat(1));
  for (unsigned j = 0;; ++j) {
    Rat prev = sum;
    if (j % 2 == 0) sum += term; else sum -= term;
    pow /= x2;
    term = pow / Rat(2 * (j + 1) + 1);
    if (term <= tail_bound) {
      // Next partial sum is sum -/+ term'; limit lies between.
      Rat other = (j % 2 == 0) ? Rat(sum - term) : Rat(sum + term);
      out = {std::min(sum, other), std::max(sum, other)};
      break;
    }
    (void)prev;
  }
  return out;
}

}  // namespace

RatInterval pi_interval(unsigned bits) {
  // pi = 16 atan(1/5) - 4 atan(1/239)
  RatInterval a5 = atan_recip(Int(5), bits + 6);
  RatInterval a239 = atan_recip(Int(239), bits + 6);
  RatInterval sixteen(Rat(16)), four(Rat(4));
  return sixteen * a5 - four * a239;
}

ComplexBox ComplexBox::recip() const {
  RatInterval n = norm();
  if (n.lo <= 0)
    throw std::invalid_argument("ComplexBox::recip: box may contain 0");
  RatInterval rn = n.recip();
  return {re * rn, (-im) * rn};
}

ComplexBox box_of(const GaussianInt& g) {
  return {RatInterval(Rat(g.re)), RatInterval(Rat(g.im))};
}

}  // namespace hurwitz
