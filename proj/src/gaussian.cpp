#include "hurwitz/gaussian.hpp"

#include <cctype>

namespace hurwitz {

Int floor_div(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("floor_div: zero divisor");
  Int q = n / d;  // truncates toward zero
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

Int round_half_up(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("round_half_up: zero divisor");
  if (d < 0) return round_half_up(-n, -d);
  return floor_div(2 * n + d, 2 * d);
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

GaussianInt GaussianInt::times_unit(int k) const {
  k = ((k % 4) + 4) % 4;
  switch (k) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
  }
}

GaussianInt unit_i(int k) { return GaussianInt(Int(1), Int(0)).times_unit(k); }

std::string GaussianInt::str() const {
  if (im == 0) return re.str();
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = im.str() + "i";
  if (re == 0) return imag;
  if (im > 0) return re.str() + "+" + imag;
  return re.str() + imag;  // imag already carries the minus sign
}

std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) return std::nullopt;
  // a/b = a*conj(b)/norm(b)
  GaussianInt t = a * b.conj();
  Int n = b.norm();
  if (t.re % n != 0 || t.im % n != 0) return std::nullopt;
  return GaussianInt(t.re / n, t.im / n);
}

GaussianInt div_round(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) throw std::invalid_argument("div_round: zero divisor");
  GaussianInt t = a * b.conj();
  Int n = b.norm();
  return {round_half_up(t.re, n), round_half_up(t.im, n)};
}

static GaussianInt normalize_unit(GaussianInt g) {
  // Rotate by i^k into {re > 0, im >= 0}; unique for g != 0.
  if (g.is_zero()) return g;
  for (int k = 0; k < 4; ++k) {
    GaussianInt c = g.times_unit(k);
    if (c.re > 0 && c.im >= 0) return c;
  }
  throw std::logic_error("normalize_unit: unreachable");
}

GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b) {
  while (!b.is_zero()) {
    GaussianInt q = div_round(a, b);
    GaussianInt r = a - q * b;
    a = b;
    b = r;
  }
  return normalize_unit(a);
}

GaussianInt nearest_gaussian(const Rat& x, const Rat& y) {
  Int gx = round_half_up(numerator(x), denominator(x));
  Int gy = round_half_up(numerator(y), denominator(y));
  return {gx, gy};
}

GaussianRational::GaussianRational(GaussianInt n, GaussianInt d) {
  if (d.is_zero()) throw std::invalid_argument("GaussianRational: zero denominator");
  GaussianInt g = gaussian_gcd(n, d);
  if (!g.is_zero()) {
    n = *exact_div(n, g);
    d = *exact_div(d, g);
  }
  // Rotate both by the unit that puts d in {re > 0, im >= 0}.
  for (int k = 0; k < 4; ++k) {
    GaussianInt c = d.times_unit(k);
    if (c.re > 0 && c.im >= 0) {
      num = n.times_unit(k);
      den = c;
      return;
    }
  }
  throw std::logic_error("GaussianRational: unreachable");
}

GaussianRational::GaussianRational(const Rat& x, const Rat& y) {
  Int xd = denominator(x), yd = denominator(y);
  // Common denominator xd*yd (positive by cpp_rational invariant).
  GaussianInt n(numerator(x) * yd, numerator(y) * xd);
  *this = GaussianRational(n, GaussianInt(xd * yd, Int(0)));
}

Rat GaussianRational::re() const {
  // num/den = num*conj(den)/norm(den)
  GaussianInt t = num * den.conj();
  return Rat(t.re) / Rat(den.norm());
}

Rat GaussianRational::im() const {
  GaussianInt t = num * den.conj();
  return Rat(t.im) / Rat(den.norm());
}

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
  return {num * o.den + o.num * den, den * o.den};
}
GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
  return {num * o.den - o.num * den, den * o.den};
}
GaussianRational GaussianRational::operator-() const {
  GaussianRational r = *this;
  r.num = -r.num;
  return r;
}
GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
  return {num * o.num, den * o.den};
}
GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  if (o.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
  return {num * o.den, den * o.num};
}
GaussianRational GaussianRational::recip() const {
  if (is_zero()) throw std::invalid_argument("GaussianRational: recip of zero");
  return {den, num};
}
GaussianRational GaussianRational::conj() const {
  return {num.conj(), den.conj()};
}

std::string GaussianRational::str() const {
  if (is_gaussian_int()) return num.str();
  auto wrap = [](const GaussianInt& g) {
    std::string s = g.str();
    bool simple = (g.im == 0 && g.re >= 0) || (g.re == 0 && g.im > 0);
    return simple ? s : "(" + s + ")";
  };
  return wrap(num) + "/" + wrap(den);
}

GaussianRational operator+(const GaussianInt& a, const GaussianRational& b) {
  return GaussianRational(a) + b;
}
GaussianRational operator*(const GaussianInt& a, const GaussianRational& b) {
  return GaussianRational(a) * b;
}

GaussianInt nearest_gaussian(const GaussianRational& z) {
  GaussianInt t = z.num * z.den.conj();
  Int n = z.den.norm();
  return {round_half_up(t.re, n), round_half_up(t.im, n)};
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("parse: unexpected end: " + s);
    return s[i++];
  }
};

// term := [+-]? (digits 'i'? | 'i')
// gauss := term term?   (second term must be signed)
GaussianInt parse_gauss(Cursor& c) {
  auto term = [&](bool need_sign) -> std::pair<Int, bool> {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      c.take();
      if (p == '-') sign = -1;
    } else if (need_sign) {
      throw std::invalid_argument("parse: expected sign in " + c.s);
    }
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
      digits += c.s[c.i++];
    bool imag = false;
    if (c.i < c.s.size() && c.s[c.i] == 'i') {
      imag = true;
      ++c.i;
    }
    if (digits.empty()) {
      if (!imag) throw std::invalid_argument("parse: expected digits in " + c.s);
      digits = "1";
    }
    return {sign * Int(digits), imag};
  };

  auto [v1, im1] = term(false);
  Int re = 0, im = 0;
  (im1 ? im : re) = v1;
  char p = c.peek();
  if (p == '+' || p == '-') {
    auto [v2, im2] = term(true);
    if (im2 == im1) throw std::invalid_argument("parse: duplicate part in " + c.s);
    (im2 ? im : re) = v2;
  }
  return {re, im};
}

GaussianInt parse_group(Cursor& c) {
  if (c.peek() == '(') {
    c.take();
    GaussianInt g = parse_gauss(c);
    if (c.take() != ')') throw std::invalid_argument("parse: missing ')' in " + c.s);
    return g;
  }
  return parse_gauss(c);
}

}  // namespace

GaussianInt parse_gaussian_int(const std::string& s) {
  Cursor c{s};
  GaussianInt g = parse_gauss(c);
  if (!c.done()) throw std::invalid_argument("parse: trailing junk in " + s);
  return g;
}

GaussianRational parse_gaussian_rational(const std::string& s) {
  Cursor c{s};
  GaussianInt num = parse_group(c);
  GaussianInt den(Int(1), Int(0));
  if (c.peek() == '/') {
    c.take();
    den = parse_group(c);
  }
  if (!c.done()) throw std::invalid_argument("parse: trailing junk in " + s);
  return {num, den};
}

std::string rat_str(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

}  // namespace hurwitz
