#include "ncrat/cyclic.hpp"

#include <algorithm>
#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

std::size_t least_rotation_index(std::span<const Symbol> w) {
  const std::size_t n = w.size();
  if (n == 0)
    return 0;
  // Booth's failure-function algorithm over the doubled word.
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return w[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Symbol sj = at(j);
    long i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1))
        k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      // i == -1 here.
      if (sj < at(k))
        k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

Word least_rotation(std::span<const Symbol> w) {
  const std::size_t k = least_rotation_index(w);
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

bool necklace_annihilated(std::span<const Symbol> w, const RingSpec& spec) {
  if (!spec.has_relations() || w.empty())
    return false;
  Word rotation(w.begin(), w.end());
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (spec.contains_forbidden(rotation))
      return true;
    std::rotate(rotation.begin(), rotation.begin() + 1, rotation.end());
  }
  return false;
}

NecklaceElement::NecklaceElement(SpecPtr spec) : spec_(std::move(spec)) {}

Integer NecklaceElement::coefficient(const Word& necklace) const {
  auto it = terms_.find(least_rotation(necklace));
  return it == terms_.end() ? Integer(0) : it->second;
}

void NecklaceElement::add_word(const Word& w, const Integer& c) {
  if (c == 0 || necklace_annihilated(w, *spec_))
    return;
  auto key = least_rotation(w);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

NecklaceElement NecklaceElement::operator-() const { return scaled(-1); }

NecklaceElement operator+(NecklaceElement a, const NecklaceElement& b) {
  require_same_spec(a.spec_, b.spec_, "necklace addition");
  for (const auto& [w, c] : b.terms_)
    a.add_word(w, c);
  return a;
}

NecklaceElement operator-(NecklaceElement a, const NecklaceElement& b) {
  require_same_spec(a.spec_, b.spec_, "necklace subtraction");
  for (const auto& [w, c] : b.terms_)
    a.add_word(w, -c);
  return a;
}

NecklaceElement NecklaceElement::scaled(const Integer& c) const {
  NecklaceElement out(spec_);
  if (c == 0)
    return out;
  out.terms_ = terms_;
  for (auto& [w, v] : out.terms_)
    v *= c;
  return out;
}

bool operator==(const NecklaceElement& a, const NecklaceElement& b) {
  return (a.spec_ == b.spec_ || *a.spec_ == *b.spec_) && a.terms_ == b.terms_;
}

std::string NecklaceElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    out << Integer(abs(c)).get_str() << "·[" << (w.empty() ? "" : spec_->word_to_string(w)) << ']';
  }
  return out.str();
}

NecklaceElement project_necklace(const RingElement& a) {
  NecklaceElement out(a.spec());
  for (const auto& [w, c] : a.terms())
    out.add_word(w, c);
  return out;
}

std::vector<NecklaceElement> chi(const RingMatrix& alpha, std::size_t order) {
  if (!alpha.is_square())
    throw NotSquare("chi of a " + std::to_string(alpha.rows()) + "x" + std::to_string(alpha.cols()) +
                    " matrix");
  std::vector<NecklaceElement> out;
  out.reserve(order);
  RingMatrix power = alpha;
  for (std::size_t i = 1; i <= order; ++i) {
    if (i > 1)
      power = power * alpha;
    out.push_back(project_necklace(power.trace()));
  }
  return out;
}

std::vector<NecklaceElement> project_coefficients(const TruncatedSeries& p, std::size_t order) {
  if (p.mu() != 1)
    throw MultiVariable("necklace coefficients need mu = 1");
  std::vector<NecklaceElement> out;
  out.reserve(order);
  for (std::size_t i = 1; i <= order; ++i)
    out.push_back(project_necklace(p.coefficient(IndetWord(i, 0))));
  return out;
}

std::vector<NecklaceElement> tmap(const SeriesMatrix& m, std::size_t order) {
  if (m.mu() != 1)
    throw MultiVariable("T needs a single indeterminate, got mu = " + std::to_string(m.mu()));
  if (!m.is_square())
    throw NotSquare("T of a non-square matrix");
  if (order > m.order())
    throw InvalidArgument("T at order " + std::to_string(order) + " of a matrix known to order " +
                          std::to_string(m.order()));
  const SeriesMatrix mt = m.truncated(order);
  const SeriesMatrix inverse = series_mat_inverse(mt);
  const SeriesMatrix euler = mt.map([](const TruncatedSeries& e) { return series_euler(e); });
  return project_coefficients(-(euler * inverse).trace(), order);
}

} // namespace ncrat
