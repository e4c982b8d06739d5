#include "hurwitz/cf.hpp"

namespace hurwitz {

void validate_word(const Word& w) {
  for (const auto& a : w)
    if (a.norm() < 2)
      throw std::invalid_argument("word letter " + a.str() + " has norm < 2");
}

std::string word_str(const Word& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s + "]";
}

Word parse_word(const std::string& s) {
  size_t b = s.find('['), e = s.rfind(']');
  if (b == std::string::npos || e == std::string::npos || e < b)
    throw std::invalid_argument("parse_word: expected [..] in " + s);
  std::string body = s.substr(b + 1, e - b - 1);
  Word w;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    if (tok.find_first_not_of(" \t") != std::string::npos)
      w.push_back(parse_gaussian_int(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  validate_word(w);
  return w;
}

QPair QPair::extended(const GaussianInt& b) const {
  QPair n;
  n.p = b * p + p_minus;
  n.p_minus = p;
  n.q = b * q + q_minus;
  n.q_minus = q;
  return n;
}

QPair QPair::of(const Word& w) {
  validate_word(w);
  QPair r;
  for (const auto& b : w) r = r.extended(b);
  return r;
}

GaussianRational evaluate(const Word& w) {
  QPair pq = QPair::of(w);
  if (pq.q.is_zero())
    throw DomainError("evaluate: q(word) == 0, not a valid expansion word");
  return {pq.p, pq.q};
}

GaussianRational mobius_apply(const Word& u, const GaussianRational& z) {
  QPair pq = QPair::of(u);
  GaussianRational num = GaussianRational(pq.p_minus) * z + GaussianRational(pq.p);
  GaussianRational den = GaussianRational(pq.q_minus) * z + GaussianRational(pq.q);
  if (den.is_zero()) throw DomainError("mobius_apply: denominator is 0 at this point");
  return num / den;
}

ComplexBox mobius_apply(const Word& u, const ComplexBox& z) {
  QPair pq = QPair::of(u);
  ComplexBox num = box_of(pq.p_minus) * z + box_of(pq.p);
  ComplexBox den = box_of(pq.q_minus) * z + box_of(pq.q);
  return num / den;  // recip() rejects boxes that may contain 0
}

HcfExpansion hcf_expand_rational(const GaussianRational& z) {
  HcfExpansion out;
  GaussianInt g0 = nearest_gaussian(z);
  GaussianRational w = z - GaussianRational(g0);
  while (!w.is_zero()) {
    GaussianRational winv = w.recip();
    GaussianInt a = nearest_gaussian(winv);
    if (a.norm() < 2)
      throw std::logic_error("hcf_expand_rational: quotient norm < 2");
    out.quotients.push_back(a);
    w = winv - GaussianRational(a);
  }
  out.terminated = true;
  out.certified_prefix_len = out.quotients.size();
  return out;
}

namespace {

bool axis_in_open_cell(const RatInterval& iv, const Int& g) {
  return Rat(2 * g - 1) / 2 < iv.lo && iv.hi < Rat(2 * g + 1) / 2;
}

std::optional<GaussianInt> certify_from_box(const ComplexBox& box) {
  GaussianInt g = nearest_gaussian(box.re.mid(), box.im.mid());
  if (axis_in_open_cell(box.re, g.re) && axis_in_open_cell(box.im, g.im)) return g;
  return std::nullopt;
}

}  // namespace

HcfExpansion hcf_expand_stream(const RefinableComplex& z, size_t n,
                               unsigned max_bits, TiePolicy ties) {
  if (n < 1) throw std::invalid_argument("hcf_expand_stream: n must be >= 1");
  HcfExpansion out;

  if (const QuadExt* ze = z.exact()) {
    ExactRound r0 = nearest_gaussian_exact(*ze, ties);
    if (!r0.value) return out;
    QuadExt w = *ze - *r0.value;
    while (out.quotients.size() < n) {
      if (w.is_zero()) {
        out.terminated = true;
        break;
      }
      QuadExt winv = w.recip();
      ExactRound r = nearest_gaussian_exact(winv, ties);
      if (!r.value) break;
      GaussianInt a = *r.value;
      if (a.norm() < 2) throw std::logic_error("hcf_expand_stream: quotient norm < 2");
      out.quotients.push_back(a);
      w = winv - a;
    }
    out.certified_prefix_len = out.quotients.size();
    return out;
  }

  // Enclosure-backed input: every step re-derives T^k(z) from a fresh base
  // enclosure through the Mobius inverse of the emitted prefix, so precision
  // loss never accumulates across steps.
  CertifiedRound r0 = nearest_gaussian_certified(z, max_bits);
  if (!r0.value) return out;
  const GaussianInt g0 = *r0.value;
  QPair pq;
  unsigned bits = std::min(64u, max_bits);
  while (out.quotients.size() < n) {
    std::optional<GaussianInt> got;
    for (;;) {
      ComplexBox bz = z.enclosure(bits) - box_of(g0);
      // T^k(z) = (p - q z)/(q^- z - p^-)
      ComplexBox num = box_of(pq.p) - box_of(pq.q) * bz;
      ComplexBox den = box_of(pq.q_minus) * bz - box_of(pq.p_minus);
      if (den.norm().lo > 0) {
        ComplexBox w = num / den;
        if (w.norm().lo > 0) {
          got = certify_from_box(w.recip());
          if (got) break;
        }
      }
      if (bits >= max_bits) break;
      bits = std::min(bits * 2, max_bits);
    }
    if (!got) break;
    if (got->norm() < 2) throw std::logic_error("hcf_expand_stream: quotient norm < 2");
    out.quotients.push_back(*got);
    pq = pq.extended(*got);
  }
  out.certified_prefix_len = out.quotients.size();
  return out;
}

size_t dd(const HcfExpansion& z, const GaussianRational& approx) {
  HcfExpansion ae = hcf_expand_rational(approx);
  const size_t N = ae.quotients.size();
  if (z.certified_prefix_len < N) {
    if (z.terminated)
      throw DomainError("dd: input's expansion is shorter than the approximant's");
    throw PrecisionError("dd: fewer certified quotients than the approximant's length");
  }
  if (z.terminated && z.quotients.size() == N && z.quotients == ae.quotients)
    throw DomainError("dd: inputs are the same value");
  size_t count = 0;
  for (size_t i = 0; i < N; ++i)
    if (z.quotients[i] != ae.quotients[i]) ++count;
  return count;
}

Word make_vk(size_t k) {
  Word w{GaussianInt(3, 0), GaussianInt(0, -2)};
  for (size_t j = 0; j < k; ++j) {
    w.push_back(GaussianInt(-2, 0));
    w.push_back(GaussianInt(0, 2));
    w.push_back(GaussianInt(-2, 0));
    w.push_back(GaussianInt(0, -2));
  }
  return w;
}

Word make_vk_tilde(size_t k) {
  Word w{GaussianInt(3, 1), GaussianInt(0, 2)};
  for (size_t j = 0; j < k; ++j) {
    w.push_back(GaussianInt(-2, 1));
    w.push_back(GaussianInt(0, 2));
    w.push_back(GaussianInt(-2, 1));
    w.push_back(GaussianInt(0, 2));
  }
  return w;
}

namespace {

QPair mat_mul(const QPair& A, const QPair& B) {
  QPair r;
  r.p = A.p * B.p + A.p_minus * B.q;
  r.p_minus = A.p * B.p_minus + A.p_minus * B.q_minus;
  r.q = A.q * B.p + A.q_minus * B.q;
  r.q_minus = A.q * B.p_minus + A.q_minus * B.q_minus;
  return r;
}

QPair quotient_matrix(const GaussianInt& b) {
  QPair m;
  m.p = b;
  m.p_minus = GaussianInt(1, 0);
  m.q = GaussianInt(1, 0);
  m.q_minus = GaussianInt(0, 0);
  return m;
}

}  // namespace

QPair period_matrix() {
  QPair m = quotient_matrix(GaussianInt(-2, 0));
  m = mat_mul(m, quotient_matrix(GaussianInt(0, 2)));
  m = mat_mul(m, quotient_matrix(GaussianInt(-2, 0)));
  m = mat_mul(m, quotient_matrix(GaussianInt(0, -2)));
  return m;
}

QPair stk_matrix_power(size_t k) {
  QPair acc;  // [[1,0],[-2i,1]]
  acc.p = GaussianInt(1, 0);
  acc.p_minus = GaussianInt(0, 0);
  acc.q = GaussianInt(0, -2);
  acc.q_minus = GaussianInt(1, 0);
  QPair M = period_matrix();
  for (size_t j = 0; j < k; ++j) acc = mat_mul(acc, M);
  return acc;
}

RealCFExpansion rcf_expand_rational(const Rat& x) {
  if (!(x > 0 && x < 1))
    throw std::invalid_argument("rcf_expand_rational: need 0 < x < 1");
  RealCFExpansion out;
  Rat w = x;
  while (w != 0) {
    Rat inv = Rat(1) / w;
    Int a = floor_div(numerator(inv), denominator(inv));
    out.quotients.push_back(a);
    w = inv - Rat(a);
  }
  return out;
}

Rat rcf_evaluate(const std::vector<Int>& quotients) {
  Rat v = 0;
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
    v = Rat(1) / (Rat(*it) + v);
  }
  return v;
}

RcfPrefix rcf_quotients(const RefinableReal& x, size_t n, unsigned max_bits) {
  RcfPrefix out;
  if (const QuadSurd* xe = x.exact()) {
    QuadSurd w = *xe;
    if (w.sign() <= 0 || w.compare(Rat(1)) >= 0)
      throw std::invalid_argument("rcf_quotients: need 0 < x < 1");
    while (out.quotients.size() < n) {
      if (w.sign() == 0) {
        out.terminated = true;
        break;
      }
      QuadSurd winv = w.recip();
      Int a = winv.floor_exact();
      out.quotients.push_back(a);
      w = winv - QuadSurd{winv.d, Rat(a), Rat(0)};
    }
    out.certified = out.quotients.size();
    return out;
  }
  // Enclosure-backed path; integer convergents, fresh base interval per step.
  Int p = 0, pm = 1, q = 1, qm = 0;
  unsigned bits = std::min(64u, max_bits);
  while (out.quotients.size() < n) {
    std::optional<Int> got;
    for (;;) {
      RatInterval bx = x.enclosure(bits);
      RatInterval num = RatInterval(Rat(p)) - RatInterval(Rat(q)) * bx;
      RatInterval den = RatInterval(Rat(qm)) * bx - RatInterval(Rat(pm));
      if (den.uniform_sign() != 0) {
        RatInterval w = num / den;
        if (w.lo > 0) {
          RatInterval winv = w.recip();
          Int f = floor_div(numerator(winv.lo), denominator(winv.lo));
          if (Rat(f) < winv.lo && winv.hi < Rat(f + 1)) {
            got = f;
            break;
          }
        }
      }
      if (bits >= max_bits) break;
      bits = std::min(bits * 2, max_bits);
    }
    if (!got) break;
    Int a = *got;
    Int np = a * p + pm, nq = a * q + qm;
    pm = p; qm = q; p = np; q = nq;
    out.quotients.push_back(a);
  }
  out.certified = out.quotients.size();
  return out;
}

RcfPrefixReport rcf_check_prefix_property(const RefinableReal& x, const Int& p_in,
                                          const Int& q_in, unsigned max_bits) {
  RcfPrefixReport r;
  if (q_in < 1 || p_in < 1 || p_in >= q_in) {
    r.note = "approximant must satisfy 0 < p < q";
    return r;
  }
  Rat pq(p_in, q_in);  // auto-reduced
  Int q = denominator(pq);
  Rat bound = Rat(1) / Rat(q * q);
  r.pq_quotients = rcf_expand_rational(pq).quotients;
  const size_t N = r.pq_quotients.size();

  if (const QuadSurd* xe = x.exact()) {
    QuadSurd diff = *xe - QuadSurd::rational(pq);
    if (diff.sign() == 0) {
      r.note = "x equals p/q";
      return r;
    }
    if (!(diff.compare(bound) < 0 && diff.compare(-bound) > 0)) {
      r.note = "|x - p/q| >= 1/q^2";
      return r;
    }
    if (xe->sign() <= 0 || xe->compare(Rat(1)) >= 0) {
      r.note = "x outside (0,1)";
      return r;
    }
    if (xe->is_rational() &&
        rcf_expand_rational(xe->a).quotients.size() <= N) {
      r.note = "rational x must have a longer expansion than p/q";
      return r;
    }
  } else {
    unsigned bits = std::min(64u, max_bits);
    for (;;) {
      RatInterval bx = x.enclosure(bits);
      RatInterval d = bx - RatInterval(pq);
      Rat hi = std::max(rat_abs(d.lo), rat_abs(d.hi));
      Rat lo = d.contains(Rat(0)) ? Rat(0) : std::min(rat_abs(d.lo), rat_abs(d.hi));
      if (hi < bound) break;
      if (lo >= bound) {
        r.note = "|x - p/q| >= 1/q^2";
        return r;
      }
      if (bits >= max_bits) {
        r.note = "precondition undecided at max_bits";
        return r;
      }
      bits = std::min(bits * 2, max_bits);
    }
  }

  r.precondition_ok = true;
  if (N >= 1) {
    RcfPrefix xp = rcf_quotients(x, N - 1, max_bits);
    r.x_prefix = xp.quotients;
    r.match = xp.quotients.size() == N - 1;
    for (size_t i = 0; r.match && i < N - 1; ++i)
      r.match = xp.quotients[i] == r.pq_quotients[i];
  } else {
    r.match = true;
  }
  return r;
}

RatInterval distance_interval(const RefinableComplex& z, const GaussianRational& w,
                              unsigned bits) {
  ComplexBox d = z.enclosure(bits) - ComplexBox(w);
  RatInterval d2 = d.norm();
  Rat lo = sqrt_interval(d2.lo, bits).lo;
  Rat hi = sqrt_interval(d2.hi, bits).hi;
  return {lo, hi};
}

}  // namespace hurwitz
