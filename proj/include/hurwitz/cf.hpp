#pragma once
// Continued-fraction core: words over the quotient alphabet, the Q-pair
// (convergent) recursion, expansion of exact and refinable inputs, Mobius
// action of a word, the position-mismatch count dd, and the two special
// word families used by the discrepancy construction.

#include "hurwitz/oracle.hpp"

namespace hurwitz {

// A finite word of partial quotients; every letter must have norm >= 2.
using Word = std::vector<GaussianInt>;

// Throws std::invalid_argument when a letter has norm < 2.
void validate_word(const Word& w);

// "[3,-2i,-2]" (empty word prints "[]").
std::string word_str(const Word& w);
Word parse_word(const std::string& s);

// Error kinds surfaced to the CLI: a value outside an operation's domain
// versus an enclosure that ran out of precision.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The 2x2 matrix [[p(u), p(u^-)], [q(u), q(u^-)]] built by the recursion
// p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}.
struct QPair {
  GaussianInt p{Int(0), Int(0)};
  GaussianInt p_minus{Int(1), Int(0)};
  GaussianInt q{Int(1), Int(0)};
  GaussianInt q_minus{Int(0), Int(0)};

  static QPair of(const Word& w);
  QPair extended(const GaussianInt& b) const;
  // q p_minus - q_minus p; equals (-1)^n for a length-n word.
  GaussianInt det() const { return q * p_minus - q_minus * p; }
  bool operator==(const QPair& o) const {
    return p == o.p && p_minus == o.p_minus && q == o.q && q_minus == o.q_minus;
  }
};

// p(w)/q(w) in canonical form; rejects words with q(w) == 0.
GaussianRational evaluate(const Word& w);

// T_u(z) = (p(u^-) z + p(u)) / (q(u^-) z + q(u)); exact on rationals,
// enclosure-sound on boxes (box must exclude the denominator's zero).
GaussianRational mobius_apply(const Word& u, const GaussianRational& z);
ComplexBox mobius_apply(const Word& u, const ComplexBox& z);

struct HcfExpansion {
  Word quotients;
  bool terminated{false};
  size_t certified_prefix_len{0};
};

// Exact expansion of a Gaussian rational: the input is first reduced by its
// nearest Gaussian integer (half-up ties, the unit-cell convention); then
// a_n = [1/T^{n-1}] until the remainder hits 0. Always terminates.
HcfExpansion hcf_expand_rational(const GaussianRational& z);

// Certified expansion of a refinable input: up to n quotients, each either
// certified from enclosures alone or — when the value is exact and provably
// sits on a cell boundary — resolved by the tie policy. A tie under
// TiePolicy::undecidable, or an enclosure that cannot be decided within
// max_bits, truncates the certified prefix; a wrong quotient is never
// emitted.
HcfExpansion hcf_expand_stream(const RefinableComplex& z, size_t n,
                               unsigned max_bits = 4096,
                               TiePolicy ties = TiePolicy::half_even);

// Mismatch count between z's quotients and those of approx, over the full
// length N of approx's expansion. Throws DomainError when z is a terminated
// expansion shorter than N (or equal to approx's value); PrecisionError when
// fewer than N quotients of z are certified.
size_t dd(const HcfExpansion& z, const GaussianRational& approx);

// (3, -2i) followed by k copies of (-2, 2i, -2, -2i).
Word make_vk(size_t k);
// (3+i, 2i) followed by k copies of (-2+i, 2i, -2+i, 2i).
Word make_vk_tilde(size_t k);

// [[s_k, s_k^-], [t_k, t_k^-]] = [[1,0],[-2i,1]] * M^k where M is the
// product of the four quotient matrices of the period (-2, 2i, -2, -2i).
QPair stk_matrix_power(size_t k);
// That period product M itself.
QPair period_matrix();

// ---- Real (regular) continued fractions ----

struct RealCFExpansion {
  std::vector<Int> quotients;
};

// Floor-algorithm expansion of x in (0,1); the last quotient is >= 2.
RealCFExpansion rcf_expand_rational(const Rat& x);

Rat rcf_evaluate(const std::vector<Int>& quotients);

struct RcfPrefix {
  std::vector<Int> quotients;
  size_t certified{0};
  bool terminated{false};
};

// Up to n certified RCF quotients of a refinable real in (0,1).
RcfPrefix rcf_quotients(const RefinableReal& x, size_t n,
                        unsigned max_bits = 4096);

struct RcfPrefixReport {
  bool precondition_ok{false};
  std::string note;
  std::vector<Int> pq_quotients;  // expansion of p/q, length N
  std::vector<Int> x_prefix;      // first N-1 quotients of x
  bool match{false};
};

// Checks that the first N-1 RCF quotients of x equal those of p/q, where N
// is the length of p/q's expansion; requires |x - p/q| < 1/q^2 (verified,
// and reported as a violation otherwise).
RcfPrefixReport rcf_check_prefix_property(const RefinableReal& x, const Int& p,
                                          const Int& q,
                                          unsigned max_bits = 4096);

// Interval containing |z - w|, from a bits-wide enclosure of z.
RatInterval distance_interval(const RefinableComplex& z,
                              const GaussianRational& w, unsigned bits);

}  // namespace hurwitz
