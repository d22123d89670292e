#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncrat/ring_matrix.hpp"

namespace ncrat {

/// Word over the indeterminates; letter i stands for x_{i+1}.
using IndetWord = std::vector<std::uint8_t>;
using SeriesTerms = std::map<IndetWord, RingElement, DegLexLess>;

/// "x1 x2" style rendering; "1" for the empty word.
std::string indet_word_to_string(const IndetWord& w);
/// Inverse of `indet_word_to_string`; throws FormatError / UnknownSymbol.
IndetWord parse_indet_word(std::string_view text, unsigned mu);

/// Element of A<X> (indeterminates central over A): a finite map from
/// indeterminate words to nonzero coefficients.
class NcPolynomial {
public:
  NcPolynomial(SpecPtr spec, unsigned mu);
  static NcPolynomial constant(const RingElement& a, unsigned mu);
  /// a * x_{index+1}.
  static NcPolynomial indeterminate(SpecPtr spec, unsigned mu, unsigned index);

  const SpecPtr& spec() const noexcept { return spec_; }
  unsigned mu() const noexcept { return mu_; }
  const SeriesTerms& terms() const noexcept { return terms_; }
  std::size_t degree() const noexcept;
  RingElement constant_term() const;
  void add_term(const IndetWord& w, const RingElement& c);

  friend NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator-(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  NcPolynomial operator-() const;
  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b);

  std::string to_string() const;

private:
  SpecPtr spec_;
  unsigned mu_;
  SeriesTerms terms_;
};

/// Power series in mu noncommuting indeterminates (central over the
/// coefficient ring), known exactly up to word length `order`.
class TruncatedSeries {
public:
  TruncatedSeries(SpecPtr spec, unsigned mu, std::size_t order);
  /// Truncation of a polynomial.
  TruncatedSeries(const NcPolynomial& p, std::size_t order);
  static TruncatedSeries constant(const RingElement& a, unsigned mu, std::size_t order);
  static TruncatedSeries one(SpecPtr spec, unsigned mu, std::size_t order);
  /// Single term c * w (dropped if |w| > order).
  static TruncatedSeries monomial(const RingElement& c, IndetWord w, unsigned mu, std::size_t order);

  const SpecPtr& spec() const noexcept { return spec_; }
  unsigned mu() const noexcept { return mu_; }
  std::size_t order() const noexcept { return order_; }
  const SeriesTerms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  RingElement coefficient(const IndetWord& w) const;
  void add_term(const IndetWord& w, const RingElement& c);
  TruncatedSeries truncated(std::size_t order) const;
  /// Terms whose words have length exactly k.
  TruncatedSeries homogeneous(std::size_t k) const;
  /// Multiplies every coefficient on the left by `a`.
  TruncatedSeries left_scaled(const RingElement& a) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& p, const TruncatedSeries& q);
  friend TruncatedSeries operator-(const TruncatedSeries& p, const TruncatedSeries& q);
  friend TruncatedSeries operator*(const TruncatedSeries& p, const TruncatedSeries& q);
  /// Equal order, spec, mu and coefficients.
  friend bool operator==(const TruncatedSeries& p, const TruncatedSeries& q);

  /// "(1) + (s)·x1 + (s s)·x1 x1"; "0" for the zero series.
  std::string to_string() const;

private:
  SpecPtr spec_;
  unsigned mu_;
  std::size_t order_;
  SeriesTerms terms_;
};

/// Coefficient of the empty word.
RingElement series_augment(const TruncatedSeries& p);
/// Formal d/dx for mu = 1; result order is N - 1. Throws MultiVariable, and
/// InvalidArgument at order 0.
TruncatedSeries series_x_derivative(const TruncatedSeries& p);
/// x d/dx: sum a_n x^n -> sum n a_n x^n, same order. Throws MultiVariable.
TruncatedSeries series_euler(const TruncatedSeries& p);

/// Rectangular matrix of series sharing spec, mu and order.
class SeriesMatrix {
public:
  SeriesMatrix(SpecPtr spec, unsigned mu, std::size_t order, std::size_t rows, std::size_t cols);
  static SeriesMatrix identity(SpecPtr spec, unsigned mu, std::size_t order, std::size_t n);
  static SeriesMatrix constant(const RingMatrix& m, unsigned mu, std::size_t order);
  /// Entries are truncated to the minimum order among them.
  static SeriesMatrix from_rows(const std::vector<std::vector<TruncatedSeries>>& rows);

  const SpecPtr& spec() const noexcept { return spec_; }
  unsigned mu() const noexcept { return mu_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const TruncatedSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Value is truncated to this matrix's order; throws if its order is lower.
  void set(std::size_t i, std::size_t j, const TruncatedSeries& value);

  RingMatrix constant_term() const;
  SeriesMatrix truncated(std::size_t order) const;
  TruncatedSeries trace() const;
  bool is_zero() const;
  SeriesMatrix map(const auto& fn) const {
    SeriesMatrix out = *this;
    for (auto& e : out.entries_)
      e = fn(e);
    return out;
  }

  SeriesMatrix operator-() const;
  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b);

  std::string to_string() const;

private:
  SpecPtr spec_;
  unsigned mu_;
  std::size_t order_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TruncatedSeries> entries_;
};

/// Inverse up to the matrix order via Neumann summation:
/// M = M0 (I - E), M^{-1} = (sum_{k<=N} E^k) M0^{-1}.
/// Throws NotSquare, NotUnit (constant term not invertible), BoundExceeded.
SeriesMatrix series_mat_inverse(const SeriesMatrix& m);

} // namespace ncrat
