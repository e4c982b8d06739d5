#include "hurwitz/oracle.hpp"

namespace hurwitz {

namespace {

int rat_sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

void check_radicand(unsigned d) {
  if (d < 2) throw std::invalid_argument("QuadSurd: radicand must be >= 2");
  Int s = isqrt_floor(Int(d));
  if (s * s == d) throw std::invalid_argument("QuadSurd: radicand must be non-square");
}

// Common radicand for a binary operation; pure-rational operands adopt the
// other side's radicand.
unsigned align(const QuadSurd& x, const QuadSurd& y) {
  if (x.d == y.d) return x.d;
  if (y.b == 0) return x.d;
  if (x.b == 0) return y.d;
  throw std::invalid_argument("QuadSurd: mixed radicands");
}

}  // namespace

QuadSurd::QuadSurd(unsigned d_, Rat a_, Rat b_)
    : d(d_), a(std::move(a_)), b(std::move(b_)) {
  check_radicand(d);
}

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
  return {align(*this, o), a + o.a, b + o.b};
}
QuadSurd QuadSurd::operator-(const QuadSurd& o) const {
  return {align(*this, o), a - o.a, b - o.b};
}
QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
  unsigned dd = align(*this, o);
  return {dd, a * o.a + b * o.b * Rat(dd), a * o.b + b * o.a};
}

QuadSurd QuadSurd::recip() const {
  // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d); denominator nonzero for
  // nonzero values since sqrt(d) is irrational.
  Rat n = a * a - b * b * Rat(d);
  if (n == 0) throw std::invalid_argument("QuadSurd: reciprocal of zero");
  return {d, a / n, -b / n};
}

int QuadSurd::sign() const {
  int sa = rat_sign(a), sb = rat_sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rat lhs = a * a, rhs = b * b * Rat(d);
  int c = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  // c == 0 would make sqrt(d) rational; excluded by construction.
  return sa == 1 ? c : -c;
}

Int QuadSurd::floor_exact() const {
  if (b == 0) return floor_div(numerator(a), denominator(a));
  RatInterval e = enclosure(8);
  Int n = floor_div(numerator(e.lo), denominator(e.lo));
  while (compare(Rat(n + 1)) >= 0) ++n;
  while (compare(Rat(n)) < 0) --n;
  return n;
}

RatInterval QuadSurd::enclosure(unsigned bits) const {
  if (b == 0) return RatInterval(a);
  unsigned prec = bits + 2;
  for (;;) {
    RatInterval s = sqrt_interval(Rat(d), prec);
    RatInterval v = RatInterval(a) + RatInterval(b) * s;
    if (v.width() <= Rat(1, Int(1) << bits)) return v;
    prec += 16;
  }
}

QuadExt::QuadExt(QuadSurd r, QuadSurd i) : re(std::move(r)), im(std::move(i)) {
  align(re, im);
  if (re.b == 0) re.d = im.d;
  if (im.b == 0) im.d = re.d;
}

QuadExt QuadExt::from_rational(const GaussianRational& z) {
  return {QuadSurd::rational(z.re()), QuadSurd::rational(z.im())};
}

GaussianRational QuadExt::to_gaussian_rational() const {
  if (!is_gaussian_rational())
    throw std::invalid_argument("QuadExt: value not in Q(i)");
  return {re.a, im.a};
}

QuadExt QuadExt::operator+(const GaussianInt& g) const {
  return {re + QuadSurd{re.d, Rat(g.re), Rat(0)}, im + QuadSurd{im.d, Rat(g.im), Rat(0)}};
}
QuadExt QuadExt::operator-(const GaussianInt& g) const {
  return *this + GaussianInt(-g.re, -g.im);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

QuadExt QuadExt::recip() const {
  if (is_zero()) throw std::invalid_argument("QuadExt: reciprocal of zero");
  QuadSurd n = re * re + im * im;
  QuadSurd ninv = n.recip();
  return {re * ninv, -(im * ninv)};
}

ComplexBox QuadExt::enclosure(unsigned bits) const {
  return {re.enclosure(bits), im.enclosure(bits)};
}

RefinableComplex RefinableComplex::from_exact(const QuadExt& v) {
  RefinableComplex r;
  r.exact_ = v;
  return r;
}

RefinableComplex RefinableComplex::from_rational(const GaussianRational& z) {
  return from_exact(QuadExt::from_rational(z));
}

RefinableComplex RefinableComplex::from_fn(EncloseFn fn) {
  RefinableComplex r;
  r.fn_ = std::move(fn);
  return r;
}

ComplexBox RefinableComplex::enclosure(unsigned bits) const {
  if (exact_) return exact_->enclosure(bits);
  return fn_(bits);
}

RefinableReal RefinableReal::from_exact(const QuadSurd& v) {
  RefinableReal r;
  r.exact_ = v;
  return r;
}

RefinableReal RefinableReal::from_rational(const Rat& x) {
  return from_exact(QuadSurd::rational(x));
}

RefinableReal RefinableReal::from_fn(EncloseFn fn) {
  RefinableReal r;
  r.fn_ = std::move(fn);
  return r;
}

RatInterval RefinableReal::enclosure(unsigned bits) const {
  if (exact_) return exact_->enclosure(bits);
  return fn_(bits);
}

namespace {

// Strictly inside the open unit cell around g on one axis?
bool axis_inside(const RatInterval& iv, const Int& g) {
  Rat lo = Rat(2 * g - 1) / 2, hi = Rat(2 * g + 1) / 2;
  return lo < iv.lo && iv.hi < hi;
}

}  // namespace

CertifiedRound nearest_gaussian_certified(const RefinableComplex& z,
                                          unsigned max_bits) {
  if (max_bits < 4)
    throw std::invalid_argument("nearest_gaussian_certified: max_bits < 4");
  unsigned bits = std::min(64u, max_bits);
  for (;;) {
    ComplexBox box = z.enclosure(bits);
    GaussianInt g = nearest_gaussian(box.re.mid(), box.im.mid());
    if (axis_inside(box.re, g.re) && axis_inside(box.im, g.im))
      return {g, bits};
    if (bits >= max_bits) return {std::nullopt, bits};
    bits = std::min(bits * 2, max_bits);
  }
}

namespace {

// Exact nearest integer along one axis. Returns the integer and whether the
// coordinate sat exactly on a half-integer boundary.
struct AxisRound {
  Int n;
  bool tie;
};

AxisRound round_axis(const QuadSurd& x, TiePolicy policy) {
  if (x.is_rational()) {
    const Rat& r = x.a;
    Rat twice = 2 * r;
    if (denominator(twice) == 1 && numerator(twice) % 2 != 0) {
      // r == k + 1/2 exactly
      Int k = floor_div(numerator(twice) - 1, Int(2));
      switch (policy) {
        case TiePolicy::half_up: return {k + 1, true};
        case TiePolicy::half_even: return {k % 2 == 0 ? k : k + 1, true};
        case TiePolicy::undecidable: return {k, true};
      }
    }
    return {round_half_up(numerator(r), denominator(r)), false};
  }
  // Irrational coordinate: never on a boundary; decide by exact comparisons.
  RatInterval e = x.enclosure(16);
  Int n = round_half_up(numerator(e.mid()), denominator(e.mid()));
  while (x.compare(Rat(2 * n + 1) / 2) >= 0) ++n;
  while (x.compare(Rat(2 * n - 1) / 2) < 0) --n;
  return {n, false};
}

}  // namespace

ExactRound nearest_gaussian_exact(const QuadExt& z, TiePolicy policy) {
  AxisRound r = round_axis(z.re, policy);
  AxisRound i = round_axis(z.im, policy);
  ExactRound out;
  out.tie_re = r.tie;
  out.tie_im = i.tie;
  if (policy == TiePolicy::undecidable && (r.tie || i.tie)) return out;
  out.value = GaussianInt(r.n, i.n);
  return out;
}

namespace {

std::vector<NamedOracle> build_oracles() {
  std::vector<NamedOracle> v;
  {
    // 2i / (3 - sqrt(10) + 7i)
    QuadSurd ra{10, Rat(3), Rat(-1)}, ia{10, Rat(7), Rat(0)};
    QuadExt den{ra, ia};
    QuadExt num{QuadSurd{10, Rat(0), Rat(0)}, QuadSurd{10, Rat(2), Rat(0)}};
    NamedOracle o{"sqrt10-example", "2i/(3-sqrt(10)+7i)",
                  RefinableComplex::from_exact(num / den),
                  {GaussianRational(GaussianInt(Int(37), Int(6)),
                                    GaussianInt(Int(129), Int(24)))}};
    v.push_back(std::move(o));
  }
  return v;
}

std::vector<NamedRealOracle> build_real_oracles() {
  std::vector<NamedRealOracle> v;
  {
    NamedRealOracle o{"sqrt2-minus-1", "sqrt(2)-1",
                      RefinableReal::from_exact(QuadSurd{2, Rat(-1), Rat(1)})};
    v.push_back(std::move(o));
  }
  return v;
}

}  // namespace

const std::vector<NamedOracle>& oracle_registry() {
  static const std::vector<NamedOracle> reg = build_oracles();
  return reg;
}

const NamedOracle* find_oracle(const std::string& name) {
  for (const auto& o : oracle_registry())
    if (o.name == name) return &o;
  return nullptr;
}

const std::vector<NamedRealOracle>& real_oracle_registry() {
  static const std::vector<NamedRealOracle> reg = build_real_oracles();
  return reg;
}

const NamedRealOracle* find_real_oracle(const std::string& name) {
  for (const auto& o : real_oracle_registry())
    if (o.name == name) return &o;
  return nullptr;
}

}  // namespace hurwitz
