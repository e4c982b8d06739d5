#pragma once
// Exact real/complex numbers over a single quadratic extension Q(sqrt(d)),
// plus the refinable-number contract: values known either exactly or through
// deterministic on-demand enclosures of arbitrary precision.

#include <functional>
#include <optional>
#include <vector>

#include "hurwitz/interval.hpp"

namespace hurwitz {

// a + b*sqrt(d), d a positive non-square integer. Exact field element;
// sign and comparisons are decided exactly (no floating point).
struct QuadSurd {
  unsigned d{2};
  Rat a{0};
  Rat b{0};

  QuadSurd() = default;
  QuadSurd(unsigned d_, Rat a_, Rat b_);
  static QuadSurd rational(const Rat& r) { return {2, r, Rat(0)}; }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const;
  QuadSurd operator-() const { return {d, -a, -b}; }
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd recip() const;  // *this != 0
  QuadSurd operator/(const QuadSurd& o) const { return *this * o.recip(); }

  // Exact sign: -1, 0, +1.
  int sign() const;
  // Exact sign of (*this - c).
  int compare(const Rat& c) const { return (*this - QuadSurd{d, c, Rat(0)}).sign(); }
  bool operator==(const QuadSurd& o) const { return (*this - o).sign() == 0; }

  // Largest integer <= value, exact.
  Int floor_exact() const;

  // Interval of width <= 2^-bits containing the value.
  RatInterval enclosure(unsigned bits) const;
};

// x + i*y with x, y in Q(sqrt(d)). Closed under field operations; the
// carrier for points whose T-orbit must be followed exactly.
struct QuadExt {
  QuadSurd re;
  QuadSurd im;

  QuadExt() = default;
  QuadExt(QuadSurd r, QuadSurd i);
  static QuadExt from_rational(const GaussianRational& z);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_gaussian_rational() const { return re.is_rational() && im.is_rational(); }
  GaussianRational to_gaussian_rational() const;  // requires is_gaussian_rational

  QuadExt operator+(const QuadExt& o) const { return {re + o.re, im + o.im}; }
  QuadExt operator-(const QuadExt& o) const { return {re - o.re, im - o.im}; }
  QuadExt operator-() const { return {-re, -im}; }
  QuadExt operator+(const GaussianInt& g) const;
  QuadExt operator-(const GaussianInt& g) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt recip() const;  // *this != 0
  QuadExt operator/(const QuadExt& o) const { return *this * o.recip(); }
  bool operator==(const QuadExt& o) const {
    return (re - o.re).sign() == 0 && (im - o.im).sign() == 0;
  }

  ComplexBox enclosure(unsigned bits) const;
};

// A complex number known through deterministic rectangular enclosures:
// enclosure(bits) has width <= 2^-bits on both axes, and all enclosures
// contain the same point. Backed either by an exact QuadExt (preferred;
// enables exact boundary decisions) or by an opaque enclosure function.
class RefinableComplex {
 public:
  using EncloseFn = std::function<ComplexBox(unsigned)>;

  static RefinableComplex from_exact(const QuadExt& v);
  static RefinableComplex from_rational(const GaussianRational& z);
  static RefinableComplex from_fn(EncloseFn fn);

  ComplexBox enclosure(unsigned bits) const;
  // Non-null iff backed by exact quadratic-field data.
  const QuadExt* exact() const { return exact_ ? &*exact_ : nullptr; }

 private:
  RefinableComplex() = default;
  std::optional<QuadExt> exact_;
  EncloseFn fn_;
};

// A real number under the same contract; carrier for RCF inputs.
class RefinableReal {
 public:
  using EncloseFn = std::function<RatInterval(unsigned)>;

  static RefinableReal from_exact(const QuadSurd& v);
  static RefinableReal from_rational(const Rat& r);
  static RefinableReal from_fn(EncloseFn fn);

  RatInterval enclosure(unsigned bits) const;
  const QuadSurd* exact() const { return exact_ ? &*exact_ : nullptr; }

 private:
  RefinableReal() = default;
  std::optional<QuadSurd> exact_;
  EncloseFn fn_;
};

// Result of certified rounding: value absent == Undecidable (the enclosure
// still met a cell boundary at max_bits).
struct CertifiedRound {
  std::optional<GaussianInt> value;
  unsigned bits_used{0};
};

// Refines (starting at 64 bits, doubling, capped at max_bits) until the box
// lies strictly inside one open unit cell g + (-1/2,1/2)^2; returns g.
CertifiedRound nearest_gaussian_certified(const RefinableComplex& z,
                                          unsigned max_bits = 4096);

// How exactly-proven half-integer coordinates are resolved when rounding
// exact values: refuse (undecidable), round toward +inf, or round so the
// integer chosen on the tied axis is even.
enum class TiePolicy { undecidable, half_up, half_even };

struct ExactRound {
  std::optional<GaussianInt> value;  // absent iff policy==undecidable and a tie occurred
  bool tie_re{false};
  bool tie_im{false};
};

// Exact nearest-Gaussian-integer of a QuadExt; boundary cases are decided
// by exact sign tests, ties resolved per policy.
ExactRound nearest_gaussian_exact(const QuadExt& z, TiePolicy policy);

// Built-in named oracle values for the CLI and tests.
struct NamedOracle {
  std::string name;
  std::string describe;
  RefinableComplex value;
  // Known companion approximants worth reporting in approximation searches.
  std::vector<GaussianRational> companions;
};

const std::vector<NamedOracle>& oracle_registry();
const NamedOracle* find_oracle(const std::string& name);

struct NamedRealOracle {
  std::string name;
  std::string describe;
  RefinableReal value;
};

const std::vector<NamedRealOracle>& real_oracle_registry();
const NamedRealOracle* find_real_oracle(const std::string& name);

}  // namespace hurwitz
