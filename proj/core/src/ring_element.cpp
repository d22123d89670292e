#include "ncrat/ring_element.hpp"

#include <cctype>
#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

RingElement normalize(Terms raw, SpecPtr spec) {
  for (auto it = raw.begin(); it != raw.end();) {
    for (Symbol s : it->first)
      if (s >= spec->size())
        throw UnknownSymbol("symbol index " + std::to_string(s) + " outside the alphabet of " +
                            spec->name());
    if (it->second == 0 || spec->contains_forbidden(it->first))
      it = raw.erase(it);
    else
      ++it;
  }
  return RingElement(std::move(spec), std::move(raw), 0);
}

RingElement normalize(const std::vector<std::pair<std::string, Integer>>& raw, SpecPtr spec) {
  Terms terms;
  for (const auto& [text, c] : raw)
    terms[spec->parse_word(text)] += c;
  return normalize(std::move(terms), std::move(spec));
}

RingElement::RingElement(SpecPtr spec) : spec_(std::move(spec)) {}

RingElement::RingElement(SpecPtr spec, Integer scalar) : spec_(std::move(spec)) {
  if (scalar != 0)
    terms_.emplace(Word{}, std::move(scalar));
}

RingElement RingElement::monomial(SpecPtr spec, Word w, Integer coefficient) {
  Terms t;
  t.emplace(std::move(w), std::move(coefficient));
  return normalize(std::move(t), std::move(spec));
}

RingElement RingElement::symbol(SpecPtr spec, std::string_view name) {
  const Symbol s = spec->symbol(name);
  return monomial(std::move(spec), Word{s});
}

std::size_t RingElement::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Integer RingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Integer> RingElement::as_integer() const {
  if (terms_.empty())
    return Integer(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty())
    return terms_.begin()->second;
  return std::nullopt;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& [w, c] : out.terms_)
    c = -c;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_spec(spec_, other.spec_, "ring addition");
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_spec(spec_, other.spec_, "ring subtraction");
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

RingElement RingElement::scaled(const Integer& c) const {
  if (c == 0)
    return RingElement(spec_);
  RingElement out = *this;
  for (auto& [w, v] : out.terms_)
    v *= c;
  return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_spec(a.spec_, b.spec_, "ring multiplication");
  Terms out;
  const bool relations = a.spec_->has_relations();
  Word w;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      w.assign(u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      if (relations && !u.empty() && !v.empty() && a.spec_->contains_forbidden(w))
        continue;
      auto [it, inserted] = out.try_emplace(w, cu * cv);
      if (!inserted)
        it->second += cu * cv;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return RingElement(a.spec_, std::move(out), 0);
}

bool operator==(const RingElement& a, const RingElement& b) {
  return (a.spec_ == b.spec_ || *a.spec_ == *b.spec_) && a.terms_ == b.terms_;
}

std::string RingElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    if (w.empty()) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1)
        out << magnitude.get_str() << ' ';
      out << spec_->word_to_string(w);
    }
    first = false;
  }
  return out.str();
}

Integer epsilon(const RingElement& a) { return a.coefficient(Word{}); }

RingElement graded_component(const RingElement& a, std::size_t k) {
  Terms out;
  for (const auto& [w, c] : a.terms())
    if (w.size() == k)
      out.emplace(w, c);
  return normalize(std::move(out), a.spec());
}

RingElement parse_element(std::string_view text, const SpecPtr& spec) {
  Terms terms;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto at_end = [&] {
    skip_space();
    return pos >= text.size();
  };
  if (at_end())
    throw SyntaxError("empty ring element", pos);
  bool first = true;
  while (!at_end()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw SyntaxError("expected '+' or '-'", pos);
    }
    first = false;
    skip_space();
    Integer coefficient = 1;
    bool have_number = false;
    Word w;
    bool any = false;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
      const char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (have_number || !w.empty())
          throw SyntaxError("integer inside a word", start);
        coefficient = Integer(std::string(text.substr(start, pos - start)));
        have_number = true;
        any = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        const auto name = text.substr(start, pos - start);
        // Accept concatenations such as "fsg" over single-letter alphabets.
        const auto part = spec->parse_word(name);
        w.insert(w.end(), part.begin(), part.end());
        any = true;
        continue;
      }
      throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }
    if (!any)
      throw SyntaxError("missing term", pos);
    terms[w] += sign * coefficient;
  }
  return normalize(std::move(terms), spec);
}

} // namespace ncrat
