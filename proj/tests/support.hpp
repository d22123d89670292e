#pragma once

// Random generators and brute-force oracles shared by the unit and
// acceptance tests. Oracles avoid the library's fast paths: factor search
// is a naive scan, rotations are enumerated, determinants use the Leibniz
// formula.

#include <algorithm>
#include <numeric>
#include <random>

#include "ncrat/io.hpp"
#include "ncrat/parse.hpp"

namespace testsupport {

using namespace ncrat;

inline SpecPtr S(unsigned m) { return RingSpec::stage(m); }
inline SpecPtr S_inf() { return RingSpec::stage(std::nullopt); }
inline SpecPtr Z() { return RingSpec::integers(); }

inline RingElement el(const SpecPtr& spec, std::string_view text) { return parse_element(text, spec); }
inline RingElement num(const SpecPtr& spec, long v) { return RingElement(spec, Integer(v)); }

/// Series in one or more indeterminates from "coefficient@word" pairs.
inline TruncatedSeries series(const SpecPtr& spec, unsigned mu, std::size_t order,
                              std::vector<std::pair<std::string, std::string>> terms) {
  TruncatedSeries p(spec, mu, order);
  for (const auto& [c, w] : terms)
    p.add_term(parse_indet_word(w, mu), parse_element(c, spec));
  return p;
}

/// 1 + c1 x + c2 x^2 ... from coefficient strings (index = degree).
inline TruncatedSeries univariate(const SpecPtr& spec, std::size_t order, std::vector<std::string> coeffs) {
  TruncatedSeries p(spec, 1, order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k)
    p.add_term(IndetWord(k, 0), parse_element(coeffs[k], spec));
  return p;
}

// ---- naive oracles ---------------------------------------------------------

inline bool naive_has_factor(const Word& w, const Word& pattern) {
  if (pattern.size() > w.size())
    return false;
  for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i)
    if (std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<long>(i)))
      return true;
  return false;
}

/// Factor test by explicit enumeration; star patterns expanded up to |w|.
inline bool naive_forbidden(const Word& w, const RingSpec& spec) {
  for (const auto& p : spec.forbidden_words())
    if (naive_has_factor(w, p))
      return true;
  if (const auto& star = spec.star_pattern()) {
    for (std::size_t k = 0; k <= w.size(); ++k) {
      Word p{star->prefix};
      p.insert(p.end(), k, star->repeated);
      p.push_back(star->suffix);
      if (p.size() > w.size())
        break;
      if (naive_has_factor(w, p))
        return true;
    }
  }
  return false;
}

inline Word naive_least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
    best = std::min(best, rot);
  }
  return best;
}

inline bool naive_annihilated(const Word& w, const RingSpec& spec) {
  for (std::size_t r = 0; r < std::max<std::size_t>(w.size(), 1); ++r) {
    Word rot(w.begin() + static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
    if (naive_forbidden(rot, spec))
      return true;
  }
  return false;
}

/// Necklace coefficients as a plain map, computed from raw words.
inline std::map<Word, Integer> naive_project(const RingElement& a) {
  std::map<Word, Integer> out;
  for (const auto& [w, c] : a.terms()) {
    if (naive_annihilated(w, *a.spec()))
      continue;
    out[naive_least_rotation(w)] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<Word, Integer> as_map(const NecklaceElement& n) {
  return {n.terms().begin(), n.terms().end()};
}

/// Naive quotient product: concatenate then scan.
inline RingElement naive_mul(const RingElement& a, const RingElement& b) {
  Terms raw;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      if (!naive_forbidden(w, *a.spec()))
        raw[w] += cu * cv;
    }
  std::erase_if(raw, [](const auto& kv) { return kv.second == 0; });
  RingElement out(a.spec());
  for (const auto& [w, c] : raw)
    out += RingElement::monomial(a.spec(), w, c);
  return out;
}

/// Leibniz determinant over Z[[x]].
inline TruncatedSeries leibniz_det(const SeriesMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  TruncatedSeries total(m.spec(), m.mu(), m.order());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        inversions += perm[i] > perm[j];
    TruncatedSeries term = TruncatedSeries::one(m.spec(), m.mu(), m.order());
    for (std::size_t i = 0; i < n; ++i)
      term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// f * s_{w1} * ... * s_{wk} * g by explicit matrix products.
inline RingElement naive_weight(const LinearMachine& m, const IndetWord& w) {
  RingMatrix row = m.f();
  for (auto letter : w)
    row = row * m.s(letter);
  return (row * m.g())(0, 0);
}

// ---- random generation -----------------------------------------------------

using Rng = std::mt19937;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Word random_word(Rng& rng, const RingSpec& spec, std::size_t max_len) {
  Word w(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len))));
  for (auto& s : w)
    s = static_cast<Symbol>(uniform(rng, 0, static_cast<long>(spec.size()) - 1));
  if (spec.size() == 0)
    w.clear();
  return w;
}

inline RingElement random_element(Rng& rng, const SpecPtr& spec, std::size_t max_len = 3,
                                  std::size_t max_terms = 3, long coeff = 3) {
  RingElement out(spec);
  const auto terms = uniform(rng, 0, static_cast<long>(max_terms));
  for (long t = 0; t < terms; ++t)
    out += RingElement::monomial(spec, random_word(rng, *spec, max_len), Integer(uniform(rng, -coeff, coeff)));
  return out;
}

inline RingMatrix random_ring_matrix(Rng& rng, const SpecPtr& spec, std::size_t rows, std::size_t cols,
                                     std::size_t max_len = 2, std::size_t max_terms = 2, long coeff = 2) {
  RingMatrix m(spec, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, random_element(rng, spec, max_len, max_terms, coeff));
  return m;
}

inline TruncatedSeries random_series(Rng& rng, const SpecPtr& spec, unsigned mu, std::size_t order,
                                     std::size_t max_terms = 4, std::size_t coeff_len = 1, long coeff = 2) {
  TruncatedSeries p(spec, mu, order);
  const auto terms = uniform(rng, 0, static_cast<long>(max_terms));
  for (long t = 0; t < terms; ++t) {
    IndetWord w(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(order))));
    for (auto& letter : w)
      letter = static_cast<std::uint8_t>(uniform(rng, 0, static_cast<long>(mu) - 1));
    p.add_term(w, random_element(rng, spec, coeff_len, 2, coeff));
  }
  return p;
}

/// Random unimodular integer matrix as a product of elementary matrices
/// and sign flips.
inline RingMatrix random_unimodular(Rng& rng, const SpecPtr& spec, std::size_t n, int steps = 4) {
  RingMatrix m = RingMatrix::identity(spec, n);
  for (int k = 0; k < steps && n > 1; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i)
      ++j;
    RingMatrix e = RingMatrix::identity(spec, n);
    e.set(i, j, RingElement(spec, Integer(uniform(rng, -2, 2))));
    m = m * e;
  }
  if (uniform(rng, 0, 1)) {
    RingMatrix flip = RingMatrix::identity(spec, n);
    flip.set(0, 0, RingElement(spec, -1));
    m = flip * m;
  }
  return m;
}

/// Invertible series matrix: unimodular constant term plus random higher terms.
inline SeriesMatrix random_invertible_series_matrix(Rng& rng, const SpecPtr& spec, std::size_t n,
                                                    std::size_t order, std::size_t max_terms = 3) {
  SeriesMatrix m = SeriesMatrix::constant(random_unimodular(rng, spec, n), 1, order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TruncatedSeries extra = random_series(rng, spec, 1, order, max_terms);
      extra.add_term({}, -extra.coefficient({}));
      m.set(i, j, m(i, j) + extra);
    }
  return m;
}

inline NcPolynomial random_polynomial(Rng& rng, const SpecPtr& spec, unsigned mu, std::size_t max_deg = 2,
                                      std::size_t max_terms = 3) {
  NcPolynomial p(spec, mu);
  const auto terms = uniform(rng, 1, static_cast<long>(max_terms));
  for (long t = 0; t < terms; ++t) {
    IndetWord w(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_deg))));
    for (auto& letter : w)
      letter = static_cast<std::uint8_t>(uniform(rng, 0, static_cast<long>(mu) - 1));
    p.add_term(w, random_element(rng, spec, 1, 2, 2));
  }
  return p;
}

/// Random expression of depth <= `depth`; every Inv child is shifted by a
/// constant so its augmentation is exactly +1 or -1.
inline RationalExpr random_expr(Rng& rng, const SpecPtr& spec, unsigned mu, std::size_t depth) {
  if (depth <= 1 || uniform(rng, 0, 4) == 0) {
    if (uniform(rng, 0, 5) == 0)
      return RationalExpr::integer(Integer(uniform(rng, -3, 3)));
    return RationalExpr::atom(random_polynomial(rng, spec, mu));
  }
  switch (uniform(rng, 0, 3)) {
  case 0:
    return RationalExpr::add(random_expr(rng, spec, mu, depth - 1), random_expr(rng, spec, mu, depth - 1));
  case 1:
    return RationalExpr::sub(random_expr(rng, spec, mu, depth - 1), random_expr(rng, spec, mu, depth - 1));
  case 2:
    return RationalExpr::mul(random_expr(rng, spec, mu, depth - 1), random_expr(rng, spec, mu, depth - 1));
  default: {
    // The shift adds one level, so the child gets two fewer.
    RationalExpr child = random_expr(rng, spec, mu, depth - 2);
    const RingElement aug = series_augment(evaluate(child, spec, mu, 0));
    const long target = uniform(rng, 0, 1) ? 1 : -1;
    const RingElement shift = aug - RingElement(spec, Integer(target));
    return RationalExpr::inv(RationalExpr::sub(child, RationalExpr::atom(NcPolynomial::constant(shift, mu))));
  }
  }
}

inline GroupRingElement random_group_element(Rng& rng, const SpecPtr& spec, unsigned mu,
                                             std::size_t max_len = 4, std::size_t max_terms = 3) {
  GroupRingElement out(spec, mu);
  const auto terms = uniform(rng, 1, static_cast<long>(max_terms));
  for (long t = 0; t < terms; ++t) {
    GroupWord w(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len))));
    for (auto& letter : w) {
      letter = static_cast<int>(uniform(rng, 1, mu));
      if (uniform(rng, 0, 1))
        letter = -letter;
    }
    out.add_term(w, RingElement(spec, Integer(uniform(rng, -3, 3))));
  }
  return out;
}

} // namespace testsupport
