#pragma once

#include <vector>

#include "ncrat/series.hpp"

namespace ncrat {

/// A linear machine (f, s_1, ..., s_mu, g) over a coefficient ring A,
/// standing for f (1 - s_1 x_1 - ... - s_mu x_mu)^{-1} g. Machines are
/// concrete representatives; two different machines may expand to the
/// same series.
class LinearMachine {
public:
  /// Throws DimensionMismatch / SpecMismatch on inconsistent shapes.
  LinearMachine(RingMatrix f, std::vector<RingMatrix> s, RingMatrix g);

  const SpecPtr& spec() const noexcept { return f_.spec(); }
  unsigned mu() const noexcept { return static_cast<unsigned>(s_.size()); }
  std::size_t dim() const noexcept { return f_.cols(); }
  const RingMatrix& f() const noexcept { return f_; }
  const std::vector<RingMatrix>& s() const noexcept { return s_; }
  const RingMatrix& s(std::size_t i) const { return s_.at(i); }
  const RingMatrix& g() const noexcept { return g_; }

  /// f s_w g for the word w.
  RingElement weight(const IndetWord& w) const;

  std::string to_string() const;

private:
  RingMatrix f_;
  std::vector<RingMatrix> s_;
  RingMatrix g_;
};

/// Series w -> f s_w g for |w| <= order.
TruncatedSeries machine_expand(const LinearMachine& m, std::size_t order);

enum class CombineKind { Add, Sub, Neg, Mul };

/// Block constructions: Sub is ((f1, -f2), diag(s), (g1; g2)); Mul is the
/// composite pencil with coupling block -g1 f2, brought to machine form.
/// Neg ignores `b`. Throws SpecMismatch.
LinearMachine machine_combine(const LinearMachine& a, const LinearMachine& b, CombineKind kind);
LinearMachine machine_negate(const LinearMachine& a);

/// Machine of a constant a, from the pencil (1 0)(1 -a; 0 1)^{-1}(0 1)^T.
LinearMachine constant_machine(const RingElement& a, unsigned mu);
/// Machine of a * x_{index+1}, from (1 0)(1 -a x; 0 1)^{-1}(0 1)^T.
LinearMachine linear_term_machine(const RingElement& a, unsigned mu, unsigned index);

/// Machine of alpha^{-1} for the element alpha of `m`:
/// bordered pencil [[1 - sum s x, g], [f, 0]] whose Schur complement is
/// -alpha. Throws NotSigmaInvertible when f g is not a unit of A, and
/// BoundExceeded when graded inversion cannot decide.
LinearMachine machine_inverse(const LinearMachine& m);

} // namespace ncrat
