#include "ncrat/ring_matrix.hpp"

#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

RingMatrix::RingMatrix(SpecPtr spec, std::size_t rows, std::size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(rows * cols, RingElement(spec_)) {}

RingMatrix RingMatrix::identity(SpecPtr spec, std::size_t n) {
  RingMatrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.entries_[i * n + i] = RingElement(spec, 1);
  return m;
}

RingMatrix RingMatrix::from_rows(SpecPtr spec, const std::vector<std::vector<RingElement>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  RingMatrix m(spec, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j)
      m.set(i, j, rows[i][j]);
  }
  return m;
}

void RingMatrix::set(std::size_t i, std::size_t j, RingElement value) {
  require_same_spec(spec_, value.spec(), "matrix entry");
  entries_.at(i * cols_ + j) = std::move(value);
}

bool RingMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero())
      return false;
  return true;
}

std::size_t RingMatrix::max_degree() const {
  std::size_t d = 0;
  for (const auto& e : entries_)
    d = std::max(d, e.degree());
  return d;
}

std::vector<Integer> RingMatrix::degree_zero() const {
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_)
    out.push_back(epsilon(e));
  return out;
}

RingElement RingMatrix::trace() const {
  if (!is_square())
    throw NotSquare("trace of a " + std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  RingElement t(spec_);
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

RingMatrix RingMatrix::operator-() const {
  RingMatrix out = *this;
  for (auto& e : out.entries_)
    e = -e;
  return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  require_same_spec(a.spec_, b.spec_, "matrix addition");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix addition");
  RingMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k)
    out.entries_[k] += b.entries_[k];
  return out;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  require_same_spec(a.spec_, b.spec_, "matrix subtraction");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix subtraction");
  RingMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k)
    out.entries_[k] -= b.entries_[k];
  return out;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  require_same_spec(a.spec_, b.spec_, "matrix multiplication");
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix multiplication: " + std::to_string(a.cols_) + " vs " +
                            std::to_string(b.rows_));
  RingMatrix out(a.spec_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (!bkj.is_zero())
          out.entries_[i * out.cols_ + j] += aik * bkj;
      }
    }
  return out;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string RingMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i)
      out << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j)
        out << ", ";
      out << (*this)(i, j).to_string();
    }
  }
  out << ']';
  return out.str();
}

Integer integer_determinant(const std::vector<Integer>& m, std::size_t n) {
  // Bareiss fraction-free elimination.
  std::vector<Integer> a = m;
  Integer sign = 1, previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[pivot * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[i * n + j] = v;
      }
      a[i * n + k] = 0;
    }
    previous = a[k * n + k];
  }
  return n == 0 ? Integer(1) : Integer(sign * a[(n - 1) * n + (n - 1)]);
}

std::optional<std::vector<Integer>> invert_unimodular(const std::vector<Integer>& m, std::size_t n) {
  const Integer det = integer_determinant(m, n);
  if (det != 1 && det != -1)
    return std::nullopt;
  // Gauss-Jordan over Q; the inverse of a unimodular matrix is integral.
  std::vector<mpq_class> a(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i * 2 * n + j] = m[i * n + j];
    a[i * 2 * n + n + i] = 1;
  }
  const std::size_t w = 2 * n;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (a[pivot * w + k] == 0)
      ++pivot;
    if (pivot != k)
      for (std::size_t j = 0; j < w; ++j)
        std::swap(a[pivot * w + j], a[k * w + j]);
    const mpq_class p = a[k * w + k];
    for (std::size_t j = 0; j < w; ++j)
      a[k * w + j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i * w + k] == 0)
        continue;
      const mpq_class factor = a[i * w + k];
      for (std::size_t j = 0; j < w; ++j)
        a[i * w + j] -= factor * a[k * w + j];
    }
  }
  std::vector<Integer> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = a[i * w + n + j].get_num();
  return out;
}

std::size_t default_inverse_bound(const RingMatrix& m) {
  return 2 * m.rows() * m.max_degree() + 4;
}

RingMatrix mat_inverse_graded(const RingMatrix& m, std::optional<std::size_t> bound) {
  if (!m.is_square())
    throw NotSquare("graded inverse of a " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  const auto& spec = m.spec();
  const auto m0_inverse = invert_unimodular(m.degree_zero(), n);
  if (!m0_inverse)
    throw NotUnit("degree-0 part " + m.to_string() + " has determinant " +
                  integer_determinant(m.degree_zero(), n).get_str() + ", not a unit of Z");
  RingMatrix m0_inv(spec, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m0_inv.set(i, j, RingElement(spec, (*m0_inverse)[i * n + j]));

  const std::size_t limit = bound.value_or(default_inverse_bound(m));
  const RingMatrix identity = RingMatrix::identity(spec, n);
  const RingMatrix e = identity - m0_inv * m;
  RingMatrix sum = identity;
  RingMatrix power = identity;
  for (std::size_t k = 1;; ++k) {
    power = power * e;
    if (power.is_zero())
      break;
    if (k >= limit)
      throw BoundExceeded("Neumann series of " + m.to_string() + " still nonzero at degree " +
                          std::to_string(k));
    sum = sum + power;
  }
  return sum * m0_inv;
}

} // namespace ncrat
