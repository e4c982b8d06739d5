#pragma once
// Exact geometry of generalized circles over Q: constraint systems cut out
// of the fundamental domain, the inversion/translation transition that sends
// one prototype set to the next, classification of the resulting regions,
// cylinder construction, exact membership, and rigorous area.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/cf.hpp"

namespace hurwitz {

enum class CircleKind { line, circle };

// A line A x + B y = C (primitive integer coefficients, first nonzero of
// (A, B) positive) or a circle |z - center|^2 = radius_sq with rational
// center and radius_sq > 0. Canonical: one representative per locus.
struct GenCircle {
  CircleKind kind{CircleKind::circle};
  Rat cx{0}, cy{0};   // circle center
  Rat radius_sq{0};
  Int A{0}, B{0}, C{0};  // line coefficients

  static GenCircle circle(const Rat& cx, const Rat& cy, const Rat& radius_sq);
  // Canonicalizes; second element is the sign of the scaling applied to
  // (A, B, C), needed to keep track of which side is which.
  static std::pair<GenCircle, int> line(const Rat& A, const Rat& B, const Rat& C);

  bool is_line() const { return kind == CircleKind::line; }
  // Defining function: line A x + B y - C, circle |z - c|^2 - radius_sq.
  Rat eval(const Rat& x, const Rat& y) const;
  RatInterval eval(const ComplexBox& box) const;
  bool through_zero() const;

  bool operator==(const GenCircle& o) const;
  std::string str() const;
};

// Total order used for canonical constraint lists.
bool circle_less(const GenCircle& a, const GenCircle& b);

enum class Side { inside, outside, on };
enum class BoundaryFlag { included, excluded };

// One membership condition: which side of the locus, and whether points on
// the locus belong. side == on means the region lies on the locus itself.
struct Constraint {
  GenCircle locus;
  Side side{Side::outside};
  BoundaryFlag boundary{BoundaryFlag::excluded};

  // Image under z -> 1/z; the side flips when the scaling that restores the
  // canonical defining function is negative (locus encircling 0).
  Constraint inverted() const;
  Constraint translated(const GaussianInt& g) const;
  // Sign test of the defining function at an exact point, folded with the
  // side/boundary flags: +1 satisfied strictly, 0 on the locus (satisfied
  // only if included or side == on), -1 violated.
  bool allows_sign(int sign_of_eval) const;
  bool operator==(const Constraint& o) const;
  std::string str() const;
};

struct Region {
  std::vector<Constraint> constraints;  // conjunction; domain-clipped regions
                                        // carry the four edge constraints
  bool degenerate_flag{false};          // empty interior
  bool empty{false};                    // no points at all

  bool operator==(const Region& o) const;
  std::string str() const;
};

// The fundamental domain [-1/2,1/2)^2: left/bottom edges included,
// right/top excluded.
Region region_D();

// Merge same-locus constraints, sort canonically, detect emptiness that is
// visible from merges alone. Valid for any region (no domain assumption).
Region canonicalize_region(Region R);

// Add the four domain edges, then simplify relative to the closed unit
// square: drop constraints that hold on all of it, detect emptiness, merge,
// drop corner disks implied by an adjacent unit disk, set flags.
Region intersect_with_domain(Region R);

// Checked image under z -> 1/z; rejects regions with 0 in the interior
// (every constraint satisfied strictly at 0).
Region invert_region(const Region& R);
Region translate_region(const Region& R, const GaussianInt& g);

// Fold of the per-letter transition R -> (1/R - b) clipped to the domain,
// starting from the full domain. Empty cylinders come back with empty and
// degenerate_flag set.
Region prototype_set(const Word& w);

// full: the region equals the domain exactly. regular: nonempty interior;
// k = 1: interior is the domain interior minus two closed unit disks at
// adjacent unit centers, k = 2: minus one such disk, k = 3: minus the unit
// disk at a corner of the square; j counts quarter turns (the disks sit at
// i^j * {1, i}, i^j * 1, i^j * (1+i) respectively). k = 0: the interior is
// the full open square but a boundary edge is missing from the region.
// irregular: empty interior.
struct PrototypeClass {
  enum class Tag { full, regular, irregular };
  Tag tag{Tag::irregular};
  int j{-1};
  int k{-1};

  bool operator==(const PrototypeClass& o) const {
    return tag == o.tag && j == o.j && k == o.k;
  }
  std::string str() const;
};

// Throws std::runtime_error if a region with nonempty interior matches none
// of the recognized interior classes (that would contradict the structure
// theory this build relies on). classify_opt returns nullopt instead.
PrototypeClass classify(const Region& R);
std::optional<PrototypeClass> classify_opt(const Region& R, std::string* why = nullptr);

// Image of prototype_set(w) under the word's Moebius map, composed letter by
// letter as translate-then-invert, clipped to the domain at the end.
Region cylinder_region(const Word& w);

enum class Membership { included, excluded, boundary_on_excluded_edge };

// Exact three-way test: excluded if any constraint is strictly violated;
// boundary_on_excluded_edge if z sits on the locus of some
// boundary-excluded constraint and satisfies everything else.
Membership region_contains(const Region& R, const GaussianRational& z);

struct AreaResult {
  RatInterval value;   // rigorous enclosure, or montecarlo estimate +- 99% bound
  std::string method;  // "closed-form" | "subdivision" | "montecarlo"
};

// Closed forms for the recognized prototype classes only (square area minus
// circular segments); throws std::invalid_argument for anything else.
// The enclosure has width <= 2^-bits.
AreaResult region_area_exact(const Region& R, unsigned bits = 64);

// Adaptive quadtree enclosure of the area of any region inside the closed
// unit square, refined until the undecided boundary layer is at most
// width_budget (or the depth cap is hit; the returned interval stays honest).
AreaResult region_area_certified(const Region& R, const Rat& width_budget);

// Uniform dyadic samples on the square, exact membership per sample,
// Hoeffding 99% radius. Deterministic for a fixed seed.
AreaResult region_area_montecarlo(const Region& R, size_t samples, uint64_t seed);

// Dispatcher for the two documented methods: "exact" | "montecarlo".
AreaResult region_area(const Region& R, const std::string& method,
                       size_t samples = 1000000, uint64_t seed = 1,
                       unsigned bits = 64);

// A worked mismatch-count instance: word = a . v_k . b, the reference
// approximant evaluate(a . v_k), and the mismatch count 3k+2 that any point
// of the word's cylinder produces against it. a must be full, k >= 1,
// norm(b) >= 8 with Im b >= 1.
struct DiscrepancyInstance {
  Word word;
  GaussianRational approx;
  size_t expected_dd;
};
DiscrepancyInstance build_discrepancy_instance(const Word& a, size_t k,
                                               const GaussianInt& b);

}  // namespace hurwitz
