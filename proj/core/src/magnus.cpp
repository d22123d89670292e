#include "ncrat/magnus.hpp"

#include <cstdlib>
#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0)
      throw InvalidArgument("0 is not a group letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

std::string group_word_to_string(const GroupWord& w) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += 'z' + std::to_string(std::abs(w[i]));
    if (w[i] < 0)
      out += "^-1";
  }
  return out;
}

GroupRingElement::GroupRingElement(SpecPtr spec, unsigned mu) : spec_(std::move(spec)), mu_(mu) {}

GroupRingElement GroupRingElement::scalar(const RingElement& a, unsigned mu) {
  return term(a, {}, mu);
}

GroupRingElement GroupRingElement::term(const RingElement& c, const GroupWord& w, unsigned mu) {
  GroupRingElement out(c.spec(), mu);
  out.add_term(w, c);
  return out;
}

void GroupRingElement::add_term(const GroupWord& w, const RingElement& c) {
  require_same_spec(spec_, c.spec(), "group ring term");
  for (int letter : w)
    if (letter == 0 || static_cast<unsigned>(std::abs(letter)) > mu_)
      throw UnknownSymbol("group letter z" + std::to_string(std::abs(letter)) + " with mu = " +
                          std::to_string(mu_));
  if (c.is_zero())
    return;
  auto key = free_reduce(w);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [w, c] : out.terms_)
    c = -c;
  return out;
}

namespace {
void require_same_rank(const GroupRingElement& a, const GroupRingElement& b, std::string_view context) {
  require_same_spec(a.spec(), b.spec(), context);
  if (a.mu() != b.mu())
    throw SpecMismatch(std::string(context) + ": rank " + std::to_string(a.mu()) + " vs " +
                       std::to_string(b.mu()));
}
} // namespace

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_rank(a, b, "group ring addition");
  GroupRingElement out = a;
  for (const auto& [w, c] : b.terms_)
    out.add_term(w, c);
  return out;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  return a + (-b);
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_rank(a, b, "group ring multiplication");
  GroupRingElement out(a.spec_, a.mu_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      GroupWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, cu * cv);
    }
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.mu_ == b.mu_ && (a.spec_ == b.spec_ || *a.spec_ == *b.spec_) && a.terms_ == b.terms_;
}

RingElement GroupRingElement::augmentation() const {
  RingElement out(spec_);
  for (const auto& [w, c] : terms_)
    out += c;
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const auto text = c.to_string();
    const bool simple_negative = c.as_integer() && *c.as_integer() < 0;
    if (!first)
      out << (simple_negative ? " - " : " + ");
    else if (simple_negative)
      out << '-';
    first = false;
    const std::string magnitude = simple_negative ? text.substr(1) : text;
    const bool unit = magnitude == "1";
    if (w.empty())
      out << (c.as_integer() ? magnitude : "(" + text + ")");
    else if (unit)
      out << group_word_to_string(w);
    else
      out << (c.as_integer() ? magnitude : "(" + text + ")") << ' ' << group_word_to_string(w);
  }
  return out.str();
}

TruncatedSeries magnus_expand(const GroupRingElement& a, std::size_t order) {
  const auto& spec = a.spec();
  const unsigned mu = a.mu();
  const RingElement one(spec, 1);
  // Expansions of each letter, built once.
  std::vector<TruncatedSeries> forward, backward;
  for (unsigned i = 0; i < mu; ++i) {
    const IndetWord xi{static_cast<std::uint8_t>(i)};
    forward.push_back(TruncatedSeries::one(spec, mu, order) + TruncatedSeries::monomial(one, xi, mu, order));
    TruncatedSeries inverse(spec, mu, order);
    for (std::size_t k = 0; k <= order; ++k)
      inverse.add_term(IndetWord(k, static_cast<std::uint8_t>(i)), RingElement(spec, k % 2 ? -1 : 1));
    backward.push_back(std::move(inverse));
  }
  TruncatedSeries out(spec, mu, order);
  for (const auto& [w, c] : a.terms()) {
    TruncatedSeries product = TruncatedSeries::constant(c, mu, order);
    for (int letter : w) {
      const auto index = static_cast<std::size_t>(std::abs(letter) - 1);
      product = product * (letter > 0 ? forward[index] : backward[index]);
    }
    out = out + product;
  }
  return out;
}

SeriesMatrix magnus_expand(const GroupRingMatrix& m, std::size_t order) {
  if (m.entries.empty())
    throw DimensionMismatch("empty group ring matrix");
  SeriesMatrix out(m.entries.front().spec(), m.entries.front().mu(), order, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out.set(i, j, magnus_expand(m(i, j), order));
  return out;
}

bool psi_check(const GroupRingMatrix& m) {
  if (m.rows != m.cols)
    throw NotSquare("psi_check of a non-square matrix");
  if (m.entries.size() != m.rows * m.cols || m.entries.empty())
    throw DimensionMismatch("group ring matrix shape");
  RingMatrix augmented(m.entries.front().spec(), m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      augmented.set(i, j, m(i, j).augmentation());
  try {
    mat_inverse_graded(augmented);
    return true;
  } catch (const NotUnit&) {
    return false;
  }
}

RationalExpr group_to_expr(const GroupRingElement& a) {
  const auto& spec = a.spec();
  const unsigned mu = a.mu();
  if (a.is_zero())
    return RationalExpr::integer(0);
  std::optional<RationalExpr> sum;
  for (const auto& [w, c] : a.terms()) {
    RationalExpr term = RationalExpr::atom(NcPolynomial::constant(c, mu));
    for (int letter : w) {
      const auto index = static_cast<unsigned>(std::abs(letter) - 1);
      auto one_plus_x = RationalExpr::atom(NcPolynomial::constant(RingElement(spec, 1), mu) +
                                           NcPolynomial::indeterminate(spec, mu, index));
      term = RationalExpr::mul(std::move(term),
                               letter > 0 ? std::move(one_plus_x) : RationalExpr::inv(std::move(one_plus_x)));
    }
    sum = sum ? RationalExpr::add(std::move(*sum), std::move(term)) : std::move(term);
  }
  return *sum;
}

LinearMachine group_to_machine(const GroupRingElement& a) {
  return linearize(group_to_expr(a), a.spec(), a.mu());
}

} // namespace ncrat
