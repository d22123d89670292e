#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncrat/ring_element.hpp"

namespace ncrat {

/// Dense rows x cols matrix over one graded ring.
class RingMatrix {
public:
  RingMatrix(SpecPtr spec, std::size_t rows, std::size_t cols);

  static RingMatrix identity(SpecPtr spec, std::size_t n);
  /// Throws DimensionMismatch on ragged input, SpecMismatch on mixed rings.
  static RingMatrix from_rows(SpecPtr spec, const std::vector<std::vector<RingElement>>& rows);

  const SpecPtr& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, RingElement value);

  bool is_zero() const;
  std::size_t max_degree() const;
  /// Integer matrix of degree-0 coefficients, row-major.
  std::vector<Integer> degree_zero() const;
  RingElement trace() const;

  RingMatrix operator-() const;
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

  /// Rows separated by "; ", entries by ", " inside brackets.
  std::string to_string() const;

private:
  SpecPtr spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> entries_;
};

/// 2 * n * (max entry degree) + 4.
std::size_t default_inverse_bound(const RingMatrix& m);

/// Inverse over the graded ring. With M0 the degree-0 integer matrix and
/// E = I - M0^{-1} M, returns (sum_k E^k) M0^{-1}, which exists once some
/// E^k vanishes.
///
/// Throws NotSquare, NotUnit when det M0 is not +-1, and BoundExceeded when
/// E^k is still nonzero at k = bound (invertibility then undecided).
RingMatrix mat_inverse_graded(const RingMatrix& m, std::optional<std::size_t> bound = std::nullopt);

/// Inverse of a square integer matrix (row-major) if its determinant is
/// +-1, otherwise nullopt.
std::optional<std::vector<Integer>> invert_unimodular(const std::vector<Integer>& m, std::size_t n);

/// Exact integer determinant via fraction-free elimination.
Integer integer_determinant(const std::vector<Integer>& m, std::size_t n);

} // namespace ncrat
