#include "hurwitz/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace hurwitz {

namespace {

Int rat_lcm(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

}  // namespace

GenCircle GenCircle::circle(const Rat& cx, const Rat& cy, const Rat& radius_sq) {
  if (radius_sq <= 0) throw std::invalid_argument("circle: radius_sq must be > 0");
  GenCircle g;
  g.kind = CircleKind::circle;
  g.cx = cx;
  g.cy = cy;
  g.radius_sq = radius_sq;
  return g;
}

std::pair<GenCircle, int> GenCircle::line(const Rat& A, const Rat& B, const Rat& C) {
  if (A == 0 && B == 0) throw std::invalid_argument("line: (A,B) must be nonzero");
  Int L = rat_lcm(denominator(A), rat_lcm(denominator(B), denominator(C)));
  Int ia = numerator(A * L), ib = numerator(B * L), ic = numerator(C * L);
  Int g = gcd(gcd(abs(ia), abs(ib)), abs(ic));
  if (g == 0) g = 1;
  ia /= g; ib /= g; ic /= g;
  int sign = 1;
  const Int& lead = (ia != 0) ? ia : ib;
  if (lead < 0) {
    ia = -ia; ib = -ib; ic = -ic;
    sign = -1;
  }
  GenCircle out;
  out.kind = CircleKind::line;
  out.A = ia; out.B = ib; out.C = ic;
  return {out, sign};
}

Rat GenCircle::eval(const Rat& x, const Rat& y) const {
  if (is_line()) return Rat(A) * x + Rat(B) * y - Rat(C);
  Rat dx = x - cx, dy = y - cy;
  return dx * dx + dy * dy - radius_sq;
}

RatInterval GenCircle::eval(const ComplexBox& box) const {
  if (is_line())
    return RatInterval(Rat(A)) * box.re + RatInterval(Rat(B)) * box.im -
           RatInterval(Rat(C));
  RatInterval dx = box.re - RatInterval(cx);
  RatInterval dy = box.im - RatInterval(cy);
  return dx.sq() + dy.sq() - RatInterval(radius_sq);
}

bool GenCircle::through_zero() const { return eval(Rat(0), Rat(0)) == 0; }

bool GenCircle::operator==(const GenCircle& o) const {
  if (kind != o.kind) return false;
  if (is_line()) return A == o.A && B == o.B && C == o.C;
  return cx == o.cx && cy == o.cy && radius_sq == o.radius_sq;
}

std::string GenCircle::str() const {
  if (is_line()) {
    std::string s;
    if (A != 0) s += (A == 1 ? "" : A == -1 ? "-" : A.str()) + std::string("x");
    if (B != 0) {
      if (!s.empty() && B > 0) s += "+";
      s += (B == 1 ? "" : B == -1 ? "-" : B.str()) + std::string("y");
    }
    s += "=" + C.str();
    return s;
  }
  return "|z-(" + rat_str(cx) + "," + rat_str(cy) + ")|^2=" + rat_str(radius_sq);
}

bool circle_less(const GenCircle& a, const GenCircle& b) {
  if (a.kind != b.kind) return a.is_line();
  if (a.is_line()) {
    if (a.A != b.A) return a.A < b.A;
    if (a.B != b.B) return a.B < b.B;
    return a.C < b.C;
  }
  if (a.cx != b.cx) return a.cx < b.cx;
  if (a.cy != b.cy) return a.cy < b.cy;
  return a.radius_sq < b.radius_sq;
}

namespace {

Side flip_side(Side s) {
  if (s == Side::inside) return Side::outside;
  if (s == Side::outside) return Side::inside;
  return Side::on;
}

// Signs of the defining function permitted on the region.
struct SignSet {
  bool neg{false}, zero{false}, pos{false};
};

SignSet to_signs(Side side, BoundaryFlag boundary) {
  bool inc = boundary == BoundaryFlag::included;
  switch (side) {
    case Side::on: return {false, true, false};
    case Side::outside: return {false, inc, true};
    case Side::inside: return {true, inc, false};
  }
  return {};
}

// Maps a merged sign set back to flags; nullopt means the conjunction is
// unsatisfiable on this locus' sign partition.
std::optional<std::pair<Side, BoundaryFlag>> from_signs(const SignSet& s) {
  if (!s.neg && !s.zero && !s.pos) return std::nullopt;
  if (s.neg && s.pos) throw std::logic_error("disconnected sign set");
  if (s.zero && !s.neg && !s.pos) return {{Side::on, BoundaryFlag::included}};
  Side side = s.pos ? Side::outside : Side::inside;
  return {{side, s.zero ? BoundaryFlag::included : BoundaryFlag::excluded}};
}

}  // namespace

Constraint Constraint::inverted() const {
  // Defining function as a (qa, qb, qc, qd) quadruple:
  // F(x, y) = qa (x^2+y^2) + qb x + qc y + qd. Under w = 1/z the pulled-back
  // quadruple is (qd, qb, -qc, qa) and F'(1/z) = F(z)/|z|^2, so the sign is
  // preserved pointwise; only restoring the canonical representative of the
  // image locus can flip it.
  Rat qa, qb, qc, qd;
  if (locus.is_line()) {
    qa = 0; qb = Rat(locus.A); qc = Rat(locus.B); qd = -Rat(locus.C);
  } else {
    qa = 1;
    qb = -2 * locus.cx;
    qc = -2 * locus.cy;
    qd = locus.cx * locus.cx + locus.cy * locus.cy - locus.radius_sq;
  }
  Rat ra = qd, rb = qb, rc = -qc, rd = qa;
  Constraint out;
  int lambda;
  if (ra == 0) {
    auto [line, sign] = GenCircle::line(rb, rc, -rd);
    out.locus = line;
    lambda = sign;
  } else {
    Rat icx = -rb / (2 * ra), icy = -rc / (2 * ra);
    Rat ir2 = icx * icx + icy * icy - rd / ra;
    if (ir2 <= 0) throw std::logic_error("inversion produced a degenerate circle");
    out.locus = GenCircle::circle(icx, icy, ir2);
    lambda = ra > 0 ? 1 : -1;
  }
  out.side = lambda > 0 ? side : flip_side(side);
  out.boundary = boundary;
  return out;
}

Constraint Constraint::translated(const GaussianInt& g) const {
  Constraint out = *this;
  if (locus.is_line()) {
    out.locus.C = locus.C + locus.A * g.re + locus.B * g.im;
  } else {
    out.locus.cx = locus.cx + Rat(g.re);
    out.locus.cy = locus.cy + Rat(g.im);
  }
  return out;
}

bool Constraint::allows_sign(int s) const {
  SignSet ss = to_signs(side, boundary);
  if (s < 0) return ss.neg;
  if (s == 0) return ss.zero;
  return ss.pos;
}

bool Constraint::operator==(const Constraint& o) const {
  return locus == o.locus && side == o.side && boundary == o.boundary;
}

std::string Constraint::str() const {
  std::string rel;
  if (side == Side::on) rel = "=0";
  else if (side == Side::outside)
    rel = boundary == BoundaryFlag::included ? ">=0" : ">0";
  else
    rel = boundary == BoundaryFlag::included ? "<=0" : "<0";
  std::string f;
  if (locus.is_line()) {
    f = locus.str();
    // show as F = Ax+By-C
    size_t eq = f.find('=');
    std::string lhs = f.substr(0, eq);
    Int c = locus.C;
    if (c > 0) f = lhs + "-" + c.str();
    else if (c < 0) f = lhs + "+" + (-c).str();
    else f = lhs;
  } else {
    f = "|z-(" + rat_str(locus.cx) + "," + rat_str(locus.cy) + ")|^2-" +
        rat_str(locus.radius_sq);
  }
  return "{" + f + rel + "}";
}

bool Region::operator==(const Region& o) const {
  return empty == o.empty && degenerate_flag == o.degenerate_flag &&
         constraints == o.constraints;
}

std::string Region::str() const {
  if (empty) return "EMPTY";
  if (*this == region_D()) return "D";
  std::string s;
  for (const auto& c : constraints) {
    if (!s.empty()) s += " & ";
    s += c.str();
  }
  if (degenerate_flag) s += " [degenerate]";
  return s;
}

namespace {

Constraint make_line_constraint(const Rat& A, const Rat& B, const Rat& C,
                                Side side, BoundaryFlag b) {
  auto [locus, sign] = GenCircle::line(A, B, C);
  Constraint c;
  c.locus = locus;
  c.side = sign > 0 || side == Side::on ? side : flip_side(side);
  c.boundary = b;
  return c;
}

Region make_empty_region() {
  Region r;
  r.degenerate_flag = true;
  r.empty = true;
  return r;
}

bool is_edge_locus(const GenCircle& L) {
  if (!L.is_line()) return false;
  return (L.A == 2 && L.B == 0 && (L.C == 1 || L.C == -1)) ||
         (L.A == 0 && L.B == 2 && (L.C == 1 || L.C == -1));
}

struct CircleLess {
  bool operator()(const GenCircle& a, const GenCircle& b) const {
    return circle_less(a, b);
  }
};

}  // namespace

Region region_D() {
  Region r;
  // x >= -1/2 included, x < 1/2 excluded, y >= -1/2 included, y < 1/2 excluded
  r.constraints.push_back(
      make_line_constraint(Rat(2), Rat(0), Rat(-1), Side::outside, BoundaryFlag::included));
  r.constraints.push_back(
      make_line_constraint(Rat(2), Rat(0), Rat(1), Side::inside, BoundaryFlag::excluded));
  r.constraints.push_back(
      make_line_constraint(Rat(0), Rat(2), Rat(-1), Side::outside, BoundaryFlag::included));
  r.constraints.push_back(
      make_line_constraint(Rat(0), Rat(2), Rat(1), Side::inside, BoundaryFlag::excluded));
  return canonicalize_region(r);
}

Region canonicalize_region(Region R) {
  if (R.empty) return make_empty_region();
  std::map<GenCircle, SignSet, CircleLess> merged;
  for (const auto& c : R.constraints) {
    SignSet s = to_signs(c.side, c.boundary);
    auto it = merged.find(c.locus);
    if (it == merged.end()) {
      merged.emplace(c.locus, s);
    } else {
      it->second.neg = it->second.neg && s.neg;
      it->second.zero = it->second.zero && s.zero;
      it->second.pos = it->second.pos && s.pos;
    }
  }
  Region out;
  for (const auto& [locus, signs] : merged) {
    auto sb = from_signs(signs);
    if (!sb) return make_empty_region();
    Constraint c;
    c.locus = locus;
    c.side = sb->first;
    c.boundary = sb->second;
    out.constraints.push_back(c);
    if (c.side == Side::on) out.degenerate_flag = true;
  }
  return out;
}

namespace {

// Signs the defining function can take over the closed unit square.
SignSet possible_signs(const GenCircle& L) {
  static const ComplexBox square{RatInterval(Rat(-1, 2), Rat(1, 2)),
                                 RatInterval(Rat(-1, 2), Rat(1, 2))};
  RatInterval iv = L.eval(square);
  SignSet p;
  p.neg = iv.lo < 0;
  p.zero = iv.contains(Rat(0));
  p.pos = iv.hi > 0;
  return p;
}

bool subset_of(const SignSet& a, const SignSet& b) {
  return (!a.neg || b.neg) && (!a.zero || b.zero) && (!a.pos || b.pos);
}

bool intersects(const SignSet& a, const SignSet& b) {
  return (a.neg && b.neg) || (a.zero && b.zero) || (a.pos && b.pos);
}

// Lower-bound class of an expression on the region: 2 strictly positive,
// 1 nonnegative, 0 identically zero, -1 unknown.
int lower_class(const SignSet& s) {
  if (!s.neg && !s.zero && s.pos) return 2;
  if (!s.neg && s.zero && !s.pos) return 0;
  if (!s.neg) return 1;
  return -1;
}

bool is_unit_center(const Rat& cx, const Rat& cy) {
  return (abs(cx) == 1 && cy == 0) || (cx == 0 && abs(cy) == 1);
}

bool is_corner_center(const Rat& cx, const Rat& cy) {
  return abs(cx) == 1 && abs(cy) == 1;
}

// The domain-edge locus controlling the sign of 1 - 2 e.z for a unit step e,
// together with the orientation that turns the edge's defining function into
// that margin: margin = edge_sign * F_edge.
struct MarginEdge {
  GenCircle locus;
  int edge_sign;
};

MarginEdge margin_edge(int ex, int ey) {
  // e = (1,0): m = 1-2x, right edge F = 2x-1, m = -F.
  // e = (-1,0): m = 1+2x, left edge F = 2x+1, m = +F. Similarly for y.
  Rat A = ex != 0 ? Rat(2) : Rat(0);
  Rat B = ey != 0 ? Rat(2) : Rat(0);
  Rat C = (ex > 0 || ey > 0) ? Rat(1) : Rat(-1);
  auto [locus, sign] = GenCircle::line(A, B, C);
  (void)sign;
  return {locus, (ex > 0 || ey > 0) ? -1 : 1};
}

int margin_lower_class(const std::map<GenCircle, SignSet, CircleLess>& table,
                       int ex, int ey) {
  MarginEdge me = margin_edge(ex, ey);
  auto it = table.find(me.locus);
  if (it == table.end()) return -1;
  SignSet s = it->second;
  if (me.edge_sign < 0) std::swap(s.neg, s.pos);
  return lower_class(s);
}

}  // namespace

Region intersect_with_domain(Region R) {
  if (R.empty) return make_empty_region();
  Region D = region_D();
  for (auto& c : D.constraints) R.constraints.push_back(std::move(c));
  R = canonicalize_region(std::move(R));
  if (R.empty) return R;

  // Drop constraints that hold on the whole closed square (sound because the
  // four edge constraints, which are never dropped, keep the region inside
  // it); detect constraints no point of the square can satisfy.
  std::vector<Constraint> kept;
  for (const auto& c : R.constraints) {
    SignSet allowed = to_signs(c.side, c.boundary);
    SignSet poss = possible_signs(c.locus);
    if (!intersects(poss, allowed)) return make_empty_region();
    if (!is_edge_locus(c.locus) && subset_of(poss, allowed)) continue;
    kept.push_back(c);
  }
  R.constraints = std::move(kept);

  // Drop a corner unit disk implied by an adjacent unit disk: with T a
  // corner center and c an adjacent unit center, F_T - F_c = 1 - 2 (T-c).z,
  // and that margin is controlled by one domain edge.
  std::map<GenCircle, SignSet, CircleLess> table;
  for (const auto& c : R.constraints)
    table.emplace(c.locus, to_signs(c.side, c.boundary));
  std::vector<Constraint> kept2;
  for (const auto& c : R.constraints) {
    bool drop = false;
    if (!c.locus.is_line() && c.locus.radius_sq == 1 &&
        is_corner_center(c.locus.cx, c.locus.cy) && c.side == Side::outside) {
      int tx = c.locus.cx > 0 ? 1 : -1, ty = c.locus.cy > 0 ? 1 : -1;
      const std::pair<std::pair<int, int>, std::pair<int, int>> adj[2] = {
          {{tx, 0}, {0, ty}},  // adjacent center, remaining step e = T - c
          {{0, ty}, {tx, 0}}};
      for (const auto& [cc, ee] : adj) {
        auto it = table.find(GenCircle::circle(Rat(cc.first), Rat(cc.second), Rat(1)));
        if (it == table.end()) continue;
        int fc = lower_class(it->second);
        if (fc < 0) continue;  // inside-side disk: no implication
        int m = margin_lower_class(table, ee.first, ee.second);
        if (m < 0) continue;
        bool need_strict = c.boundary == BoundaryFlag::excluded;
        bool got_strict = fc == 2 || m == 2;
        if (!need_strict || got_strict) {
          drop = true;
          break;
        }
      }
    }
    if (!drop) kept2.push_back(c);
  }
  R.constraints = std::move(kept2);

  R.degenerate_flag = false;
  for (const auto& c : R.constraints)
    if (c.side == Side::on) R.degenerate_flag = true;
  return R;
}

namespace {

Region invert_region_impl(const Region& R) {
  if (R.empty) return make_empty_region();
  Region out;
  out.degenerate_flag = R.degenerate_flag;
  for (const auto& c : R.constraints) out.constraints.push_back(c.inverted());
  return canonicalize_region(std::move(out));
}

}  // namespace

Region invert_region(const Region& R) {
  if (!R.empty) {
    bool zero_interior = true;
    for (const auto& c : R.constraints) {
      Rat v = c.locus.eval(Rat(0), Rat(0));
      int s = v > 0 ? 1 : v < 0 ? -1 : 0;
      bool strict = (c.side == Side::outside && s > 0) ||
                    (c.side == Side::inside && s < 0);
      if (!strict) {
        zero_interior = false;
        break;
      }
    }
    if (zero_interior)
      throw std::invalid_argument("invert_region: 0 lies in the region's interior");
  }
  return invert_region_impl(R);
}

Region translate_region(const Region& R, const GaussianInt& g) {
  if (R.empty) return make_empty_region();
  Region out;
  out.degenerate_flag = R.degenerate_flag;
  for (const auto& c : R.constraints) out.constraints.push_back(c.translated(g));
  return canonicalize_region(std::move(out));
}

Region prototype_set(const Word& w) {
  validate_word(w);
  Region R = region_D();
  for (const auto& b : w) {
    if (R.empty) return make_empty_region();
    R = intersect_with_domain(translate_region(invert_region_impl(R), -b));
  }
  return R;
}

std::string PrototypeClass::str() const {
  switch (tag) {
    case Tag::full: return "full";
    case Tag::irregular: return "irregular";
    case Tag::regular:
      return "regular(j=" + std::to_string(j) + ",k=" + std::to_string(k) + ")";
  }
  return "?";
}

std::optional<PrototypeClass> classify_opt(const Region& R, std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<PrototypeClass> {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (R.empty || R.degenerate_flag)
    return PrototypeClass{PrototypeClass::Tag::irregular, -1, -1};

  // Interior only: boundary flags and edge sharpening are irrelevant here.
  std::vector<std::pair<Rat, Rat>> units, corners;
  for (const auto& c : R.constraints) {
    if (c.locus.is_line()) {
      if (!is_edge_locus(c.locus)) return fail("line off the domain edges: " + c.str());
      continue;
    }
    if (c.side != Side::outside) return fail("inside-side disk: " + c.str());
    if (c.locus.radius_sq != 1) return fail("non-unit radius: " + c.str());
    if (is_unit_center(c.locus.cx, c.locus.cy))
      units.push_back({c.locus.cx, c.locus.cy});
    else if (is_corner_center(c.locus.cx, c.locus.cy))
      corners.push_back({c.locus.cx, c.locus.cy});
    else
      return fail("disk at an unexpected center: " + c.str());
  }

  auto unit_j = [](const std::pair<Rat, Rat>& c) {
    if (c.first == 1) return 0;
    if (c.second == 1) return 1;
    if (c.first == -1) return 2;
    return 3;
  };
  auto corner_j = [](const std::pair<Rat, Rat>& c) {
    if (c.first == 1 && c.second == 1) return 0;
    if (c.first == -1 && c.second == 1) return 1;
    if (c.first == -1 && c.second == -1) return 2;
    return 3;
  };

  // In the open square a corner disk is implied by either adjacent unit disk.
  std::vector<int> corner_kept;
  for (const auto& t : corners) {
    bool implied = false;
    for (const auto& u : units)
      if ((u.first == t.first && u.second == 0) ||
          (u.first == 0 && u.second == t.second))
        implied = true;
    if (!implied) corner_kept.push_back(corner_j(t));
  }

  if (units.empty() && corner_kept.empty()) {
    if (R == region_D()) return PrototypeClass{PrototypeClass::Tag::full, -1, -1};
    return PrototypeClass{PrototypeClass::Tag::regular, 0, 0};
  }
  if (units.empty() && corner_kept.size() == 1)
    return PrototypeClass{PrototypeClass::Tag::regular, corner_kept[0], 3};
  if (!corner_kept.empty()) return fail("corner disk alongside non-adjacent disks");
  if (units.size() == 1)
    return PrototypeClass{PrototypeClass::Tag::regular, unit_j(units[0]), 2};
  if (units.size() == 2) {
    int a = unit_j(units[0]), b = unit_j(units[1]);
    if ((a + 1) % 4 == b) return PrototypeClass{PrototypeClass::Tag::regular, a, 1};
    if ((b + 1) % 4 == a) return PrototypeClass{PrototypeClass::Tag::regular, b, 1};
    return fail("two unit disks at opposite centers");
  }
  return fail("more than two unit disks");
}

PrototypeClass classify(const Region& R) {
  std::string why;
  auto c = classify_opt(R, &why);
  if (!c)
    throw std::runtime_error("region classification inconsistency: " + why +
                             " in " + R.str());
  return *c;
}

Region cylinder_region(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cylinder_region: word must be nonempty");
  Region R = prototype_set(w);
  if (R.empty) return R;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    R = invert_region_impl(translate_region(R, *it));
  return intersect_with_domain(std::move(R));
}

Membership region_contains(const Region& R, const GaussianRational& z) {
  if (R.empty) return Membership::excluded;
  Rat x = z.re(), y = z.im();
  bool on_excluded = false;
  for (const auto& c : R.constraints) {
    Rat v = c.locus.eval(x, y);
    int s = v > 0 ? 1 : v < 0 ? -1 : 0;
    if (!c.allows_sign(s)) {
      if (s == 0 && c.side != Side::on) {
        on_excluded = true;
        continue;
      }
      return Membership::excluded;
    }
  }
  return on_excluded ? Membership::boundary_on_excluded_edge : Membership::included;
}

AreaResult region_area_exact(const Region& R, unsigned bits) {
  std::string why;
  auto cls = classify_opt(R, &why);
  if (!cls)
    throw std::invalid_argument("exact area needs a recognized prototype class: " + why);
  if (cls->tag == PrototypeClass::Tag::irregular)
    return {RatInterval(Rat(0)), "closed-form"};
  if (cls->tag == PrototypeClass::Tag::full || cls->k == 0)
    return {RatInterval(Rat(1)), "closed-form"};

  RatInterval pi = pi_interval(bits + 4);
  RatInterval s3 = sqrt_interval(Rat(3), bits + 4);
  RatInterval six(Rat(6)), four(Rat(4)), twelve(Rat(12));
  RatInterval v;
  switch (cls->k) {
    case 1:  // square minus two adjacent unit disks: 5/4 - pi/6 - sqrt(3)/4
      v = RatInterval(Rat(5, 4)) - pi / six - s3 / four;
      break;
    case 2:  // square minus one unit disk: 3/2 - pi/6 - sqrt(3)/4
      v = RatInterval(Rat(3, 2)) - pi / six - s3 / four;
      break;
    case 3:  // square minus a corner unit disk: 3/4 - pi/12 + sqrt(3)/4
      v = RatInterval(Rat(3, 4)) - pi / twelve + s3 / four;
      break;
    default:
      throw std::logic_error("unreachable prototype class");
  }
  return {v, "closed-form"};
}

namespace {

#ifdef __SIZEOF_INT128__
using Wide = __int128;
#else
#error "128-bit integers required"
#endif

struct ScaledCon {
  Wide a, b, c, d;  // F * L = a (x^2+y^2) + b x + c y + d, L > 0
  SignSet allowed;
};

Wide to_wide(const Int& v) {
  if (abs(v) >= (Int(1) << 62))
    throw std::invalid_argument("constraint coefficients too large for subdivision");
  return static_cast<Wide>(v.convert_to<long long>());
}

std::vector<ScaledCon> scale_constraints(const Region& R) {
  std::vector<ScaledCon> out;
  for (const auto& c : R.constraints) {
    Rat qa, qb, qc, qd;
    if (c.locus.is_line()) {
      qa = 0; qb = Rat(c.locus.A); qc = Rat(c.locus.B); qd = -Rat(c.locus.C);
    } else {
      qa = 1;
      qb = -2 * c.locus.cx;
      qc = -2 * c.locus.cy;
      qd = c.locus.cx * c.locus.cx + c.locus.cy * c.locus.cy - c.locus.radius_sq;
    }
    Int L = rat_lcm(denominator(qa),
                    rat_lcm(denominator(qb), rat_lcm(denominator(qc), denominator(qd))));
    ScaledCon sc;
    sc.a = to_wide(numerator(qa * L));
    sc.b = to_wide(numerator(qb * L));
    sc.c = to_wide(numerator(qc * L));
    sc.d = to_wide(numerator(qd * L));
    sc.allowed = to_signs(c.side, c.boundary);
    out.push_back(sc);
  }
  return out;
}

struct WideIv {
  Wide lo, hi;
};

WideIv square_iv(Wide lo, Wide hi) {
  if (lo >= 0) return {lo * lo, hi * hi};
  if (hi <= 0) return {hi * hi, lo * lo};
  Wide m = std::max(-lo, hi);
  return {0, m * m};
}

WideIv lin_iv(Wide k, Wide lo, Wide hi) {
  return k >= 0 ? WideIv{k * lo, k * hi} : WideIv{k * hi, k * lo};
}

// 0 = outside the region, 1 = inside, 2 = undecided.
int classify_cell(const std::vector<ScaledCon>& cons, int depth, long long jx,
                  long long jy) {
  // Cell [jx, jx+1] x [jy, jy+1] / 2^depth shifted by -1/2:
  // x = X / 2^(depth+1) with X in [2 jx - 2^depth, 2 jx - 2^depth + 2].
  Wide scale = Wide(1) << (depth + 1);
  Wide xlo = 2 * Wide(jx) - (Wide(1) << depth), xhi = xlo + 2;
  Wide ylo = 2 * Wide(jy) - (Wide(1) << depth), yhi = ylo + 2;
  WideIv x2 = square_iv(xlo, xhi), y2 = square_iv(ylo, yhi);
  bool all_sat = true;
  for (const auto& sc : cons) {
    WideIv bx = lin_iv(sc.b * scale, xlo, xhi);
    WideIv cy = lin_iv(sc.c * scale, ylo, yhi);
    WideIv aq = lin_iv(sc.a, x2.lo + y2.lo, x2.hi + y2.hi);
    Wide lo = aq.lo + bx.lo + cy.lo + sc.d * scale * scale;
    Wide hi = aq.hi + bx.hi + cy.hi + sc.d * scale * scale;
    SignSet poss{lo < 0, lo <= 0 && hi >= 0, hi > 0};
    if (!intersects(poss, sc.allowed)) return 0;
    if (!subset_of(poss, sc.allowed)) all_sat = false;
  }
  return all_sat ? 1 : 2;
}

void subdivide(const std::vector<ScaledCon>& cons, int depth, long long jx,
               long long jy, int max_depth, std::vector<Int>& inside,
               Int& undecided) {
  int cls = classify_cell(cons, depth, jx, jy);
  if (cls == 0) return;
  if (cls == 1) {
    inside[depth] += 1;
    return;
  }
  if (depth == max_depth) {
    undecided += 1;
    return;
  }
  for (int dx = 0; dx < 2; ++dx)
    for (int dy = 0; dy < 2; ++dy)
      subdivide(cons, depth + 1, 2 * jx + dx, 2 * jy + dy, max_depth, inside,
                undecided);
}

}  // namespace

AreaResult region_area_certified(const Region& R, const Rat& width_budget) {
  if (width_budget <= 0)
    throw std::invalid_argument("width_budget must be positive");
  if (R.empty) return {RatInterval(Rat(0)), "subdivision"};
  std::vector<ScaledCon> cons = scale_constraints(R);
  RatInterval best(Rat(0), Rat(1));
  for (int max_depth = 12; max_depth <= 28; max_depth += 2) {
    std::vector<Int> inside(max_depth + 1, Int(0));
    Int undecided = 0;
    subdivide(cons, 0, 0, 0, max_depth, inside, undecided);
    Int num = 0;
    for (int d = 0; d <= max_depth; ++d)
      num += inside[d] << (2 * (max_depth - d));
    Rat denom = Rat(Int(1) << (2 * max_depth));
    Rat lo = Rat(num) / denom;
    Rat hi = lo + Rat(undecided) / denom;
    best = RatInterval(lo, hi);
    if (best.width() <= width_budget) break;
  }
  return {best, "subdivision"};
}

AreaResult region_area_montecarlo(const Region& R, size_t samples, uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  std::mt19937_64 rng(seed);
  const Int den = Int(1) << 48;
  size_t hits = 0;
  for (size_t i = 0; i < samples; ++i) {
    uint64_t u = rng(), v = rng();
    GaussianRational z(
        GaussianInt(Int(u >> 16) * 2 - den, Int(v >> 16) * 2 - den),
        GaussianInt(2 * den, Int(0)));
    if (region_contains(R, z) == Membership::included) ++hits;
  }
  Rat p = Rat(Int(hits), Int(samples));
  // 99% two-sided Hoeffding: eps = sqrt(ln(200) / (2n)), ln(200) <= 5.29832.
  Rat eps_sq = Rat(529832, 100000) / Rat(2 * Int(samples));
  Rat eps = sqrt_interval(eps_sq, 64).hi;
  Rat lo = p - eps, hi = p + eps;
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  return {RatInterval(lo, hi), "montecarlo"};
}

AreaResult region_area(const Region& R, const std::string& method, size_t samples,
                       uint64_t seed, unsigned bits) {
  if (method == "exact") return region_area_exact(R, bits);
  if (method == "montecarlo") return region_area_montecarlo(R, samples, seed);
  throw std::invalid_argument("unknown area method: " + method);
}

DiscrepancyInstance build_discrepancy_instance(const Word& a, size_t k,
                                               const GaussianInt& b) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (b.norm() < 8 || b.im < 1)
    throw std::invalid_argument("tail letter must have norm >= 8 and Im >= 1");
  if (classify(prototype_set(a)).tag != PrototypeClass::Tag::full)
    throw std::invalid_argument("head word must be full");
  DiscrepancyInstance out;
  Word vk = make_vk(k);
  out.word = a;
  out.word.insert(out.word.end(), vk.begin(), vk.end());
  out.approx = evaluate(out.word);
  out.word.push_back(b);
  out.expected_dd = 3 * k + 2;
  return out;
}

}  // namespace hurwitz
