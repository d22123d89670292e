#include "ncrat/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

namespace {

void require_same_mu(unsigned a, unsigned b, std::string_view context) {
  if (a != b)
    throw SpecMismatch(std::string(context) + ": mu " + std::to_string(a) + " vs " +
                       std::to_string(b));
}

void accumulate(SeriesTerms& terms, const IndetWord& w, const RingElement& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

SeriesTerms add_terms(const SeriesTerms& a, const SeriesTerms& b, bool subtract,
                      std::size_t max_length) {
  SeriesTerms out;
  for (const auto& [w, c] : a)
    if (w.size() <= max_length)
      out.emplace(w, c);
  for (const auto& [w, c] : b)
    if (w.size() <= max_length)
      accumulate(out, w, subtract ? -c : c);
  return out;
}

// Cauchy product on words: coeff(uv) += p_u q_v for |uv| <= max_length.
SeriesTerms mul_terms(const SeriesTerms& a, const SeriesTerms& b, std::size_t max_length) {
  SeriesTerms out;
  IndetWord w;
  for (const auto& [u, cu] : a) {
    if (u.size() > max_length)
      break;
    for (const auto& [v, cv] : b) {
      if (u.size() + v.size() > max_length)
        break;
      w.assign(u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      accumulate(out, w, cu * cv);
    }
  }
  return out;
}

std::string terms_to_string(const SeriesTerms& terms) {
  if (terms.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first)
      out << " + ";
    first = false;
    out << '(' << c.to_string() << ')';
    if (!w.empty())
      out << "·" << indet_word_to_string(w);
  }
  return out.str();
}

} // namespace

std::string indet_word_to_string(const IndetWord& w) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += 'x' + std::to_string(w[i] + 1);
  }
  return out;
}

IndetWord parse_indet_word(std::string_view text, unsigned mu) {
  IndetWord out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1")
      continue;
    if (token.size() < 2 || token[0] != 'x' ||
        !std::all_of(token.begin() + 1, token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw FormatError("'" + token + "' is not an indeterminate");
    const unsigned index = static_cast<unsigned>(std::stoul(token.substr(1)));
    if (index < 1 || index > mu)
      throw UnknownSymbol("indeterminate " + token + " outside x1..x" + std::to_string(mu));
    out.push_back(static_cast<std::uint8_t>(index - 1));
  }
  return out;
}

// ---- NcPolynomial ----------------------------------------------------------

NcPolynomial::NcPolynomial(SpecPtr spec, unsigned mu) : spec_(std::move(spec)), mu_(mu) {}

NcPolynomial NcPolynomial::constant(const RingElement& a, unsigned mu) {
  NcPolynomial p(a.spec(), mu);
  p.add_term({}, a);
  return p;
}

NcPolynomial NcPolynomial::indeterminate(SpecPtr spec, unsigned mu, unsigned index) {
  if (index >= mu)
    throw UnknownSymbol("indeterminate x" + std::to_string(index + 1) + " with mu = " +
                        std::to_string(mu));
  NcPolynomial p(spec, mu);
  p.add_term({static_cast<std::uint8_t>(index)}, RingElement(spec, 1));
  return p;
}

std::size_t NcPolynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

RingElement NcPolynomial::constant_term() const {
  auto it = terms_.find(IndetWord{});
  return it == terms_.end() ? RingElement(spec_) : it->second;
}

void NcPolynomial::add_term(const IndetWord& w, const RingElement& c) {
  require_same_spec(spec_, c.spec(), "polynomial term");
  accumulate(terms_, w, c);
}

NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b) {
  require_same_spec(a.spec_, b.spec_, "polynomial addition");
  require_same_mu(a.mu_, b.mu_, "polynomial addition");
  NcPolynomial out(a.spec_, a.mu_);
  out.terms_ = add_terms(a.terms_, b.terms_, false, SIZE_MAX);
  return out;
}

NcPolynomial operator-(const NcPolynomial& a, const NcPolynomial& b) {
  require_same_spec(a.spec_, b.spec_, "polynomial subtraction");
  require_same_mu(a.mu_, b.mu_, "polynomial subtraction");
  NcPolynomial out(a.spec_, a.mu_);
  out.terms_ = add_terms(a.terms_, b.terms_, true, SIZE_MAX);
  return out;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  require_same_spec(a.spec_, b.spec_, "polynomial multiplication");
  require_same_mu(a.mu_, b.mu_, "polynomial multiplication");
  NcPolynomial out(a.spec_, a.mu_);
  out.terms_ = mul_terms(a.terms_, b.terms_, SIZE_MAX);
  return out;
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial out = *this;
  for (auto& [w, c] : out.terms_)
    c = -c;
  return out;
}

bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
  return a.mu_ == b.mu_ && (a.spec_ == b.spec_ || *a.spec_ == *b.spec_) && a.terms_ == b.terms_;
}

std::string NcPolynomial::to_string() const { return terms_to_string(terms_); }

// ---- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(SpecPtr spec, unsigned mu, std::size_t order)
    : spec_(std::move(spec)), mu_(mu), order_(order) {}

TruncatedSeries::TruncatedSeries(const NcPolynomial& p, std::size_t order)
    : spec_(p.spec()), mu_(p.mu()), order_(order) {
  for (const auto& [w, c] : p.terms())
    if (w.size() <= order)
      terms_.emplace(w, c);
}

TruncatedSeries TruncatedSeries::constant(const RingElement& a, unsigned mu, std::size_t order) {
  TruncatedSeries p(a.spec(), mu, order);
  p.add_term({}, a);
  return p;
}

TruncatedSeries TruncatedSeries::one(SpecPtr spec, unsigned mu, std::size_t order) {
  return constant(RingElement(std::move(spec), 1), mu, order);
}

TruncatedSeries TruncatedSeries::monomial(const RingElement& c, IndetWord w, unsigned mu,
                                          std::size_t order) {
  TruncatedSeries p(c.spec(), mu, order);
  p.add_term(w, c);
  return p;
}

RingElement TruncatedSeries::coefficient(const IndetWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RingElement(spec_) : it->second;
}

void TruncatedSeries::add_term(const IndetWord& w, const RingElement& c) {
  require_same_spec(spec_, c.spec(), "series term");
  for (auto letter : w)
    if (letter >= mu_)
      throw UnknownSymbol("indeterminate x" + std::to_string(letter + 1) + " with mu = " +
                          std::to_string(mu_));
  if (w.size() <= order_)
    accumulate(terms_, w, c);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > order_)
    throw InvalidArgument("cannot raise series order " + std::to_string(order_) + " to " +
                          std::to_string(order));
  TruncatedSeries out(spec_, mu_, order);
  for (const auto& [w, c] : terms_) {
    if (w.size() > order)
      break;
    out.terms_.emplace(w, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::homogeneous(std::size_t k) const {
  TruncatedSeries out(spec_, mu_, order_);
  for (const auto& [w, c] : terms_)
    if (w.size() == k)
      out.terms_.emplace(w, c);
  return out;
}

TruncatedSeries TruncatedSeries::left_scaled(const RingElement& a) const {
  TruncatedSeries out(spec_, mu_, order_);
  for (const auto& [w, c] : terms_)
    accumulate(out.terms_, w, a * c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [w, c] : out.terms_)
    c = -c;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& p, const TruncatedSeries& q) {
  require_same_spec(p.spec_, q.spec_, "series addition");
  require_same_mu(p.mu_, q.mu_, "series addition");
  TruncatedSeries out(p.spec_, p.mu_, std::min(p.order_, q.order_));
  out.terms_ = add_terms(p.terms_, q.terms_, false, out.order_);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& p, const TruncatedSeries& q) {
  require_same_spec(p.spec_, q.spec_, "series subtraction");
  require_same_mu(p.mu_, q.mu_, "series subtraction");
  TruncatedSeries out(p.spec_, p.mu_, std::min(p.order_, q.order_));
  out.terms_ = add_terms(p.terms_, q.terms_, true, out.order_);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& p, const TruncatedSeries& q) {
  require_same_spec(p.spec_, q.spec_, "series multiplication");
  require_same_mu(p.mu_, q.mu_, "series multiplication");
  TruncatedSeries out(p.spec_, p.mu_, std::min(p.order_, q.order_));
  out.terms_ = mul_terms(p.terms_, q.terms_, out.order_);
  return out;
}

bool operator==(const TruncatedSeries& p, const TruncatedSeries& q) {
  return p.order_ == q.order_ && p.mu_ == q.mu_ &&
         (p.spec_ == q.spec_ || *p.spec_ == *q.spec_) && p.terms_ == q.terms_;
}

std::string TruncatedSeries::to_string() const { return terms_to_string(terms_); }

RingElement series_augment(const TruncatedSeries& p) { return p.coefficient({}); }

TruncatedSeries series_x_derivative(const TruncatedSeries& p) {
  if (p.mu() != 1)
    throw MultiVariable("d/dx needs a single indeterminate, got mu = " + std::to_string(p.mu()));
  if (p.order() == 0)
    throw InvalidArgument("derivative of a series known only to order 0");
  TruncatedSeries out(p.spec(), 1, p.order() - 1);
  for (const auto& [w, c] : p.terms()) {
    if (w.empty())
      continue;
    out.add_term(IndetWord(w.size() - 1, 0), c.scaled(Integer(static_cast<unsigned long>(w.size()))));
  }
  return out;
}

TruncatedSeries series_euler(const TruncatedSeries& p) {
  if (p.mu() != 1)
    throw MultiVariable("x d/dx needs a single indeterminate, got mu = " + std::to_string(p.mu()));
  TruncatedSeries out(p.spec(), 1, p.order());
  for (const auto& [w, c] : p.terms())
    out.add_term(w, c.scaled(Integer(static_cast<unsigned long>(w.size()))));
  return out;
}

// ---- SeriesMatrix ----------------------------------------------------------

SeriesMatrix::SeriesMatrix(SpecPtr spec, unsigned mu, std::size_t order, std::size_t rows,
                           std::size_t cols)
    : spec_(spec), mu_(mu), order_(order), rows_(rows), cols_(cols),
      entries_(rows * cols, TruncatedSeries(spec, mu, order)) {}

SeriesMatrix SeriesMatrix::identity(SpecPtr spec, unsigned mu, std::size_t order, std::size_t n) {
  SeriesMatrix m(spec, mu, order, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.entries_[i * n + i] = TruncatedSeries::one(spec, mu, order);
  return m;
}

SeriesMatrix SeriesMatrix::constant(const RingMatrix& c, unsigned mu, std::size_t order) {
  SeriesMatrix m(c.spec(), mu, order, c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      m.entries_[i * c.cols() + j] = TruncatedSeries::constant(c(i, j), mu, order);
  return m;
}

SeriesMatrix SeriesMatrix::from_rows(const std::vector<std::vector<TruncatedSeries>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionMismatch("series matrix needs at least one entry");
  const auto& first = rows.front().front();
  std::size_t order = first.order();
  for (const auto& row : rows)
    for (const auto& e : row)
      order = std::min(order, e.order());
  SeriesMatrix m(first.spec(), first.mu(), order, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw DimensionMismatch("ragged series matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j)
      m.set(i, j, rows[i][j]);
  }
  return m;
}

void SeriesMatrix::set(std::size_t i, std::size_t j, const TruncatedSeries& value) {
  require_same_spec(spec_, value.spec(), "series matrix entry");
  require_same_mu(mu_, value.mu(), "series matrix entry");
  entries_.at(i * cols_ + j) = value.truncated(order_);
}

RingMatrix SeriesMatrix::constant_term() const {
  RingMatrix out(spec_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.set(i, j, series_augment((*this)(i, j)));
  return out;
}

SeriesMatrix SeriesMatrix::truncated(std::size_t order) const {
  SeriesMatrix out(spec_, mu_, order, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = entries_[k].truncated(order);
  return out;
}

TruncatedSeries SeriesMatrix::trace() const {
  if (!is_square())
    throw NotSquare("trace of a non-square series matrix");
  TruncatedSeries t(spec_, mu_, order_);
  for (std::size_t i = 0; i < rows_; ++i)
    t = t + (*this)(i, i);
  return t;
}

bool SeriesMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

SeriesMatrix SeriesMatrix::operator-() const {
  return map([](const TruncatedSeries& e) { return -e; });
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("series matrix addition");
  require_same_spec(a.spec_, b.spec_, "series matrix addition");
  require_same_mu(a.mu_, b.mu_, "series matrix addition");
  SeriesMatrix out(a.spec_, a.mu_, std::min(a.order_, b.order_), a.rows_, a.cols_);
  for (std::size_t k = 0; k < out.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("series matrix subtraction");
  require_same_spec(a.spec_, b.spec_, "series matrix subtraction");
  require_same_mu(a.mu_, b.mu_, "series matrix subtraction");
  SeriesMatrix out(a.spec_, a.mu_, std::min(a.order_, b.order_), a.rows_, a.cols_);
  for (std::size_t k = 0; k < out.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("series matrix multiplication");
  require_same_spec(a.spec_, b.spec_, "series matrix multiplication");
  require_same_mu(a.mu_, b.mu_, "series matrix multiplication");
  SeriesMatrix out(a.spec_, a.mu_, std::min(a.order_, b.order_), a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (!bkj.is_zero()) {
          auto& slot = out.entries_[i * out.cols_ + j];
          slot = slot + aik * bkj;
        }
      }
    }
  return out;
}

bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.order_ == b.order_ &&
         a.entries_ == b.entries_;
}

std::string SeriesMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      out << '[' << i + 1 << ',' << j + 1 << "] " << (*this)(i, j).to_string() << '\n';
  }
  return out.str();
}

SeriesMatrix series_mat_inverse(const SeriesMatrix& m) {
  if (!m.is_square())
    throw NotSquare("series inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto c0_inverse =
      SeriesMatrix::constant(mat_inverse_graded(m.constant_term()), m.mu(), m.order());
  const auto identity = SeriesMatrix::identity(m.spec(), m.mu(), m.order(), n);
  // E has zero constant term, so E^{N+1} vanishes at order N.
  const SeriesMatrix e = identity - c0_inverse * m;
  SeriesMatrix sum = identity;
  SeriesMatrix power = identity;
  for (std::size_t k = 1; k <= m.order(); ++k) {
    power = power * e;
    if (power.is_zero())
      break;
    sum = sum + power;
  }
  return sum * c0_inverse;
}

} // namespace ncrat
