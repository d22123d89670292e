#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ncrat/series.hpp"

namespace ncrat {

/// Element of the cyclic quotient A / Z{ab - ba}: a Z-combination of
/// necklaces (words up to rotation), each keyed by its least rotation.
class NecklaceElement {
public:
  explicit NecklaceElement(SpecPtr spec);

  const SpecPtr& spec() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Word& necklace) const;

  /// Adds c times the necklace of `w` (canonicalized; dropped if annihilated).
  void add_word(const Word& w, const Integer& c);

  NecklaceElement operator-() const;
  friend NecklaceElement operator+(NecklaceElement a, const NecklaceElement& b);
  friend NecklaceElement operator-(NecklaceElement a, const NecklaceElement& b);
  NecklaceElement scaled(const Integer& c) const;
  friend bool operator==(const NecklaceElement& a, const NecklaceElement& b);

  /// "1·[s] + 3·[f s s s g]"; "0" for zero.
  std::string to_string() const;

private:
  SpecPtr spec_;
  Terms terms_;
};

/// Start index of the lexicographically least rotation (Booth).
std::size_t least_rotation_index(std::span<const Symbol> w);
Word least_rotation(std::span<const Symbol> w);
/// True iff some rotation of `w` contains a forbidden factor.
bool necklace_annihilated(std::span<const Symbol> w, const RingSpec& spec);

NecklaceElement project_necklace(const RingElement& a);

/// Entries i = 1..order: necklace projection of Trace(alpha^i).
/// Throws NotSquare.
std::vector<NecklaceElement> chi(const RingMatrix& alpha, std::size_t order);

/// Entries i = 1..order of -Trace((x dM/dx) M^{-1}), projected to
/// necklaces. Throws MultiVariable, NotSquare, NotUnit, InvalidArgument
/// when order exceeds the order of M.
std::vector<NecklaceElement> tmap(const SeriesMatrix& m, std::size_t order);

/// Projection of each coefficient of a single-variable series, x^1..x^order.
std::vector<NecklaceElement> project_coefficients(const TruncatedSeries& p, std::size_t order);

} // namespace ncrat
