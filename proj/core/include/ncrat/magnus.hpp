#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncrat/rational_expr.hpp"

namespace ncrat {

/// Letter +i is z_i, -i is z_i^{-1} (i >= 1).
using GroupWord = std::vector<int>;

/// Free reduction (cancel adjacent z z^{-1}).
GroupWord free_reduce(const GroupWord& w);
/// "z1 z2^-1"; "1" for the identity.
std::string group_word_to_string(const GroupWord& w);

/// Element of the group ring A F_mu; group letters commute with A.
class GroupRingElement {
public:
  GroupRingElement(SpecPtr spec, unsigned mu);
  static GroupRingElement scalar(const RingElement& a, unsigned mu);
  /// c * w with w freely reduced on insertion. Throws UnknownSymbol for
  /// letters outside z1..z_mu.
  static GroupRingElement term(const RingElement& c, const GroupWord& w, unsigned mu);

  const SpecPtr& spec() const noexcept { return spec_; }
  unsigned mu() const noexcept { return mu_; }
  const std::map<GroupWord, RingElement>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const GroupWord& w, const RingElement& c);

  GroupRingElement operator-() const;
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  /// z_i -> 1: sum of coefficients.
  RingElement augmentation() const;

  std::string to_string() const;

private:
  SpecPtr spec_;
  unsigned mu_;
  std::map<GroupWord, RingElement> terms_;
};

/// Square-or-not matrix of group ring elements, row-major.
struct GroupRingMatrix {
  std::size_t rows;
  std::size_t cols;
  std::vector<GroupRingElement> entries;

  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// z_i -> 1 + x_i, z_i^{-1} -> 1 - x_i + x_i^2 - ..., truncated at `order`.
TruncatedSeries magnus_expand(const GroupRingElement& a, std::size_t order);
SeriesMatrix magnus_expand(const GroupRingMatrix& m, std::size_t order);

/// True iff eps(M) (z_i -> 1) is invertible over A within the default
/// graded bound. Throws NotSquare, BoundExceeded.
bool psi_check(const GroupRingMatrix& m);

/// Expression obtained by z_i -> (1 + x_i), z_i^{-1} -> (1 + x_i)^{-1}.
RationalExpr group_to_expr(const GroupRingElement& a);
/// linearize(group_to_expr(a)).
LinearMachine group_to_machine(const GroupRingElement& a);

} // namespace ncrat
