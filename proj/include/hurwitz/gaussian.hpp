#pragma once
// Exact Gaussian integer / Gaussian rational arithmetic on top of
// boost::multiprecision. Everything here is exact; no floating point.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace hurwitz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division, valid for any sign of n and d (d != 0).
Int floor_div(const Int& n, const Int& d);

// Nearest integer to n/d with ties rounded toward +infinity (d != 0).
// round_half_up(1,2) == 1, round_half_up(-1,2) == 0.
Int round_half_up(const Int& n, const Int& d);

Rat rat_abs(const Rat& r);

struct GaussianInt {
  Int re{0};
  Int im{0};

  GaussianInt() = default;
  GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  GaussianInt(long r, long i) : re(r), im(i) {}
  explicit GaussianInt(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Int norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }

  GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
  GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
  GaussianInt operator-() const { return {-re, -im}; }
  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianInt& o) const { return !(*this == o); }

  // Multiply by i^k (k mod 4).
  GaussianInt times_unit(int k) const;

  std::string str() const;
};

// i^k as a Gaussian integer, k taken mod 4 (negative k fine).
GaussianInt unit_i(int k);

// Exact division: returns a/b when b | a in Z[i], else nullopt.
std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b);

// Gaussian division with componentwise round-half-up on re and im of a/b.
GaussianInt div_round(const GaussianInt& a, const GaussianInt& b);

// Euclidean gcd in Z[i]; result normalized so re > 0 and im >= 0
// (unique unit multiple in that half-open quadrant). gcd(0,0) == 0.
GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b);

// Nearest Gaussian integer to x + iy with ties on each axis rounded
// toward +infinity, i.e. the unique g with (x,y) - g in [-1/2, 1/2)^2.
GaussianInt nearest_gaussian(const Rat& x, const Rat& y);

// Parse "a", "bi", "a+bi", "a-bi", "-a+bi", "i", "-i" (no spaces required,
// interior spaces tolerated). Throws std::invalid_argument on junk.
GaussianInt parse_gaussian_int(const std::string& s);

// Quotient of Gaussian integers kept in canonical form:
//  - gcd(num, den) is a unit,
//  - den.re > 0 and den.im >= 0  (so den == 1 for Gaussian-integer values).
// Equality is structural.
struct GaussianRational {
  GaussianInt num{Int(0), Int(0)};
  GaussianInt den{Int(1), Int(0)};

  GaussianRational() = default;
  GaussianRational(GaussianInt n, GaussianInt d);
  explicit GaussianRational(const GaussianInt& n) : num(n) {}
  GaussianRational(const Rat& x, const Rat& y);

  bool is_zero() const { return num.is_zero(); }
  bool is_gaussian_int() const { return den == GaussianInt(Int(1), Int(0)); }

  Rat re() const;
  Rat im() const;
  Rat norm() const { return Rat(num.norm()) / Rat(den.norm()); }

  GaussianRational operator+(const GaussianRational& o) const;
  GaussianRational operator-(const GaussianRational& o) const;
  GaussianRational operator-() const;
  GaussianRational operator*(const GaussianRational& o) const;
  GaussianRational operator/(const GaussianRational& o) const;  // o != 0
  GaussianRational recip() const;                               // *this != 0
  GaussianRational conj() const;

  bool operator==(const GaussianRational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string str() const;
};

GaussianRational operator+(const GaussianInt& a, const GaussianRational& b);
GaussianRational operator*(const GaussianInt& a, const GaussianRational& b);

// Nearest Gaussian integer (half-up both axes) to a Gaussian rational.
GaussianInt nearest_gaussian(const GaussianRational& z);

// Parse "NUM", "NUM/DEN", "(NUM)/(DEN)" with Gaussian-integer parts.
GaussianRational parse_gaussian_rational(const std::string& s);

std::string rat_str(const Rat& r);

}  // namespace hurwitz
