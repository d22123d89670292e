#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncrat/cyclic.hpp"

namespace ncrat {

/// Elementary matrix e_ij(a) applied on the left (RowAdd: row i += a row j)
/// or on the right (ColAdd: col j += col i a).
struct ElementaryOp {
  enum class Kind { RowAdd, ColAdd };
  Kind kind;
  std::size_t i;
  std::size_t j;
  TruncatedSeries multiplier;

  ElementaryOp inverse() const { return {kind, i, j, -multiplier}; }
  std::string to_string() const;
};

/// Throws InvalidArgument for i == j or out-of-range indices.
SeriesMatrix apply_op(const ElementaryOp& op, const SeriesMatrix& m);
/// The n x n matrix e_ij(a).
SeriesMatrix elementary_matrix(const ElementaryOp& op, std::size_t n);

/// Replayable certificate: applying `ops` in order to `initial` yields
/// `final`.
struct ElementaryOpLog {
  SeriesMatrix initial;
  std::vector<ElementaryOp> ops;
  SeriesMatrix final;

  SeriesMatrix replay() const;
  bool verify() const { return replay() == final; }
};

struct GaussianReduction {
  /// eps(M); the log starts from eps(M)^{-1} M.
  RingMatrix unit_part;
  std::vector<TruncatedSeries> diagonal;
  ElementaryOpLog log;
};

/// Row reduction of eps(M)^{-1} M to a diagonal matrix whose entries lie in
/// 1 + x A[[x]]: clear below the diagonal column by column, then above.
/// Throws MultiVariable, NotSquare, NotUnit, BoundExceeded.
GaussianReduction gaussian_reduce(const SeriesMatrix& m);

/// unit_part * (inverse ops replayed backwards on diag) -- equals the
/// reduced matrix exactly.
SeriesMatrix recombine(const GaussianReduction& r);

/// K1(A[[x]]) = K1(A) + W1(A) at finite order.
struct WittSplit {
  RingMatrix unit_part;
  /// Product of the reduction's diagonal entries; constant term 1.
  TruncatedSeries witt_part;
  GaussianReduction reduction;
};

WittSplit witt_split(const SeriesMatrix& m);

/// Determinant over Z[[x]] (subset dynamic programming over columns).
/// Throws NotCommutative for a nonempty coefficient alphabet, NotSquare.
TruncatedSeries det_series(const SeriesMatrix& m);

struct ChainCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct ChainReport {
  /// nullopt for the limit ring S.
  std::optional<unsigned> stage;
  std::size_t order;
  std::vector<ChainCheck> checks;
  /// chi([s]) - chi([(1-gf)s]) at x^{m+1}; empty over S.
  std::string chi_gap;

  bool pass() const;
  std::string to_text() const;
};

/// Builds the matrices of the K1 identity chain for [1 - sx] and
/// [1 - (1-gf)sx] over S_m[[x]] (or S[[x]]) at `order` and checks each
/// identity exactly, plus the chi separation over S_m. Never throws on a
/// failed identity; failures appear in the report.
ChainReport verify_counterexample_chain(std::optional<unsigned> stage, std::size_t order);

} // namespace ncrat
