#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncrat/ring_spec.hpp"

namespace ncrat {

using Terms = std::map<Word, Integer, DegLexLess>;

/// An element of Z<Y>/(monomial ideal): a finite Z-combination of words
/// with no forbidden factor. Every constructor normalizes, so stored terms
/// are always in normal form with nonzero coefficients.
class RingElement {
public:
  /// Zero of the ring.
  explicit RingElement(SpecPtr spec);
  RingElement(SpecPtr spec, Integer scalar);

  static RingElement monomial(SpecPtr spec, Word w, Integer coefficient = 1);
  static RingElement symbol(SpecPtr spec, std::string_view name);

  const SpecPtr& spec() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Longest word length; 0 for the zero element.
  std::size_t degree() const noexcept;
  /// Coefficient of `w` (0 when absent or not normal).
  Integer coefficient(const Word& w) const;
  /// The integer value if the element has degree 0.
  std::optional<Integer> as_integer() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other) { return *this = *this * other; }
  RingElement scaled(const Integer& c) const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

  /// Degree-then-lex signed sum, e.g. "1 - g f + 3 f s s g"; "0" for zero.
  std::string to_string() const;

private:
  friend RingElement normalize(Terms raw, SpecPtr spec);
  RingElement(SpecPtr spec, Terms normal_terms, int /*trusted*/)
      : spec_(std::move(spec)), terms_(std::move(normal_terms)) {}

  SpecPtr spec_;
  Terms terms_;
};

/// Drops words containing a forbidden factor and zero coefficients.
/// Throws UnknownSymbol for symbol indices outside the alphabet.
RingElement normalize(Terms raw, SpecPtr spec);
/// Same, with words given as text (see RingSpec::parse_word).
RingElement normalize(const std::vector<std::pair<std::string, Integer>>& raw, SpecPtr spec);

/// Degree-0 part (the integer coefficient of the empty word).
Integer epsilon(const RingElement& a);
RingElement graded_component(const RingElement& a, std::size_t k);

/// Reads the `to_string` format: signed terms of an optional integer
/// followed by symbols, e.g. "1 - g f + 3 f s s g" or "-2*f*s".
/// Throws SyntaxError / UnknownSymbol.
RingElement parse_element(std::string_view text, const SpecPtr& spec);

} // namespace ncrat
