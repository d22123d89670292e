#include "ncrat/whitehead.hpp"

#include <bit>
#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

std::string ElementaryOp::to_string() const {
  std::ostringstream out;
  if (kind == Kind::RowAdd)
    out << "row " << i + 1 << " += (" << multiplier.to_string() << ") * row " << j + 1;
  else
    out << "col " << j + 1 << " += col " << i + 1 << " * (" << multiplier.to_string() << ")";
  return out.str();
}

SeriesMatrix apply_op(const ElementaryOp& op, const SeriesMatrix& m) {
  if (op.i == op.j)
    throw InvalidArgument("elementary operation needs distinct indices");
  SeriesMatrix out = m;
  if (op.kind == ElementaryOp::Kind::RowAdd) {
    if (op.i >= m.rows() || op.j >= m.rows())
      throw InvalidArgument("row index out of range");
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.set(op.i, c, m(op.i, c) + op.multiplier * m(op.j, c));
  } else {
    if (op.i >= m.cols() || op.j >= m.cols())
      throw InvalidArgument("column index out of range");
    for (std::size_t r = 0; r < m.rows(); ++r)
      out.set(r, op.j, m(r, op.j) + m(r, op.i) * op.multiplier);
  }
  return out;
}

SeriesMatrix elementary_matrix(const ElementaryOp& op, std::size_t n) {
  if (op.i == op.j || op.i >= n || op.j >= n)
    throw InvalidArgument("elementary matrix index out of range");
  auto e = SeriesMatrix::identity(op.multiplier.spec(), op.multiplier.mu(), op.multiplier.order(), n);
  e.set(op.i, op.j, op.multiplier);
  return e;
}

SeriesMatrix ElementaryOpLog::replay() const {
  SeriesMatrix m = initial;
  for (const auto& op : ops)
    m = apply_op(op, m);
  return m;
}

GaussianReduction gaussian_reduce(const SeriesMatrix& m) {
  if (m.mu() != 1)
    throw MultiVariable("Gaussian reduction over A[[x]] needs mu = 1");
  if (!m.is_square())
    throw NotSquare("Gaussian reduction of a non-square matrix");
  const std::size_t n = m.rows();
  const RingMatrix unit_part = m.constant_term();
  const RingMatrix unit_inverse = mat_inverse_graded(unit_part);
  const SeriesMatrix normalized = SeriesMatrix::constant(unit_inverse, 1, m.order()) * m;

  // Diagonal entries have constant term 1, so each pivot is a unit series.
  auto pivot_inverse = [](const TruncatedSeries& d) {
    SeriesMatrix one_by_one(d.spec(), 1, d.order(), 1, 1);
    one_by_one.set(0, 0, d);
    return series_mat_inverse(one_by_one)(0, 0);
  };

  SeriesMatrix work = normalized;
  std::vector<ElementaryOp> ops;
  auto eliminate = [&](std::size_t i, std::size_t j) {
    if (work(i, j).is_zero())
      return;
    ElementaryOp op{ElementaryOp::Kind::RowAdd, i, j, -(work(i, j) * pivot_inverse(work(j, j)))};
    work = apply_op(op, work);
    ops.push_back(std::move(op));
  };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i)
      eliminate(i, j);
  for (std::size_t j = n; j-- > 0;)
    for (std::size_t i = 0; i < j; ++i)
      eliminate(i, j);

  std::vector<TruncatedSeries> diagonal;
  diagonal.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    diagonal.push_back(work(i, i));
  return GaussianReduction{unit_part, std::move(diagonal),
                           ElementaryOpLog{normalized, std::move(ops), work}};
}

SeriesMatrix recombine(const GaussianReduction& r) {
  SeriesMatrix m = r.log.final;
  for (auto it = r.log.ops.rbegin(); it != r.log.ops.rend(); ++it)
    m = apply_op(it->inverse(), m);
  return SeriesMatrix::constant(r.unit_part, m.mu(), m.order()) * m;
}

WittSplit witt_split(const SeriesMatrix& m) {
  GaussianReduction reduction = gaussian_reduce(m);
  TruncatedSeries product = TruncatedSeries::one(m.spec(), 1, m.order());
  for (const auto& d : reduction.diagonal)
    product = product * d;
  return WittSplit{reduction.unit_part, std::move(product), std::move(reduction)};
}

TruncatedSeries det_series(const SeriesMatrix& m) {
  if (!m.is_square())
    throw NotSquare("determinant of a non-square matrix");
  if (m.spec()->size() != 0)
    throw NotCommutative("determinant needs the commutative coefficient ring Z, got " +
                         m.spec()->name());
  const std::size_t n = m.rows();
  if (n > 20)
    throw InvalidArgument("determinant size limit is 20");
  // partial[mask]: signed sum over injections of rows 0..|mask|-1 onto mask.
  std::vector<TruncatedSeries> partial(std::size_t{1} << n, TruncatedSeries(m.spec(), m.mu(), m.order()));
  partial[0] = TruncatedSeries::one(m.spec(), m.mu(), m.order());
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (partial[mask].is_zero())
      continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n)
      continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col))
        continue;
      // Columns already used to the right of `col` are inversions.
      const auto above = static_cast<unsigned>(std::popcount(mask >> (col + 1)));
      const auto term = partial[mask] * m(row, col);
      auto& slot = partial[mask | (std::size_t{1} << col)];
      slot = (above % 2) ? slot - term : slot + term;
    }
  }
  return partial.back();
}

// ---- counterexample chain --------------------------------------------------

bool ChainReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass)
      return false;
  return true;
}

std::string ChainReport::to_text() const {
  std::ostringstream out;
  out << "counterexample chain over " << (stage ? "S_" + std::to_string(*stage) : std::string("S"))
      << " at order " << order << '\n';
  for (const auto& c : checks) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << '\n';
    std::istringstream detail(c.detail);
    for (std::string line; std::getline(detail, line);)
      out << "      " << line << '\n';
  }
  if (!chi_gap.empty())
    out << "chi gap at x^" << (*stage + 1) << ": " << chi_gap << '\n';
  out << (pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

SeriesMatrix matrix2(const TruncatedSeries& a, const TruncatedSeries& b, const TruncatedSeries& c,
                     const TruncatedSeries& d) {
  return SeriesMatrix::from_rows({{a, b}, {c, d}});
}

std::string first_difference(const SeriesMatrix& got, const SeriesMatrix& want) {
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j) {
      const auto diff = got(i, j) - want(i, j);
      if (!diff.is_zero()) {
        const auto& [w, c] = *diff.terms().begin();
        return "entry [" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "] differs at word " + indet_word_to_string(w) + " by " + c.to_string();
      }
    }
  return {};
}

ChainCheck matrix_check(std::string name, const SeriesMatrix& got, const SeriesMatrix& want) {
  const std::string diff = first_difference(got, want);
  if (diff.empty())
    return {std::move(name), true, "product =\n" + got.to_string()};
  return {std::move(name), false, diff};
}

} // namespace

ChainReport verify_counterexample_chain(std::optional<unsigned> stage, std::size_t order) {
  const SpecPtr spec = RingSpec::stage(stage);
  const unsigned mu = 1;
  ChainReport report{stage, order, {}, {}};

  auto constant = [&](const RingElement& a) { return TruncatedSeries::constant(a, mu, order); };
  const RingElement f = RingElement::symbol(spec, "f");
  const RingElement s = RingElement::symbol(spec, "s");
  const RingElement g = RingElement::symbol(spec, "g");
  const RingElement one_r(spec, 1);
  const auto one = constant(one_r);
  const auto zero = constant(RingElement(spec));
  const auto x = TruncatedSeries::monomial(one_r, {0}, mu, order);
  const auto fs = constant(f), ss = constant(s), gs = constant(g);
  const auto sigma = one - ss * x; // 1 - sx
  const RingElement twisted = (one_r - g * f) * s;
  const auto twisted_sigma = one - constant(twisted) * x; // 1 - (1-gf)sx

  SeriesMatrix sigma_1x1(spec, mu, order, 1, 1);
  sigma_1x1.set(0, 0, sigma);
  const auto sigma_inv = series_mat_inverse(sigma_1x1)(0, 0);
  const auto transfer = fs * sigma_inv * gs; // f (1-sx)^{-1} g

  // (i) f(1-sx)^{-1}g: zero over S, zero below degree m+1 over S_m.
  {
    ChainCheck c{stage ? "f(1-sx)^-1 g vanishes below x^{m+1}" : "f(1-sx)^-1 g vanishes", true, "f(1-sx)^-1 g = " + transfer.to_string()};
    const std::size_t vanish_through = stage ? std::min<std::size_t>(*stage, order) : order;
    for (const auto& [w, coefficient] : transfer.terms())
      if (w.size() <= vanish_through) {
        c.pass = false;
        c.detail += "\nnonzero coefficient at x^" + std::to_string(w.size());
      }
    if (stage && *stage + 1 <= order) {
      Word expected{0};
      expected.insert(expected.end(), *stage + 1, Symbol{1});
      expected.push_back(2);
      const auto want = RingElement::monomial(spec, expected);
      const auto got = transfer.coefficient(IndetWord(*stage + 1, 0));
      const bool ok = got == want && !got.is_zero();
      c.pass = c.pass && ok;
      c.detail += std::string("\ncoefficient of x^") + std::to_string(*stage + 1) + " is " +
                  got.to_string() + (ok ? " (nonzero, as expected over S_m)" : " (expected " +
                                                                                   want.to_string() + ")");
    }
    report.checks.push_back(std::move(c));
  }

  // (ii) diag(1, 1-sx) (1 f; 0 1) diag(1 + f(1-sx)^{-1}g, 1) (1 0; -(1-sx)^{-1}g 1)
  //      = (1 f; -g 1-sx).
  const auto bordered = matrix2(one, fs, -gs, sigma);
  {
    const auto product = matrix2(one, zero, zero, sigma) * matrix2(one, fs, zero, one) *
                         matrix2(one + transfer, zero, zero, one) *
                         matrix2(one, zero, -(sigma_inv * gs), one);
    report.checks.push_back(matrix_check("stabilized product equals (1 f; -g 1-sx)", product, bordered));
  }

  // (iii) (1 f; 0 1)(1 0; g 1)(1 -f; 0 1) (1 f; -g 1-sx) (1 -f; 0 1)
  //       = diag(1, 1-(1-gf)sx).
  {
    const auto product = matrix2(one, fs, zero, one) * matrix2(one, zero, gs, one) *
                         matrix2(one, -fs, zero, one) * bordered * matrix2(one, -fs, zero, one);
    report.checks.push_back(matrix_check("elementary conjugation gives diag(1, 1-(1-gf)sx)", product,
                                         matrix2(one, zero, zero, twisted_sigma)));
  }

  // (iv) chi separates over S_m and agrees over S.
  RingMatrix alpha_plain(spec, 1, 1), alpha_twisted(spec, 1, 1);
  alpha_plain.set(0, 0, s);
  alpha_twisted.set(0, 0, twisted);
  if (stage) {
    const std::size_t degree = *stage + 1;
    const auto plain = chi(alpha_plain, degree);
    const auto other = chi(alpha_twisted, degree);
    ChainCheck c{"chi([s]) - chi([(1-gf)s]) is (m+1)[f s^{m+1} g] at x^{m+1}", true, {}};
    for (std::size_t i = 1; i <= degree; ++i) {
      const auto diff = plain[i - 1] - other[i - 1];
      c.detail += (i > 1 ? "\n" : "") + std::string("x^") + std::to_string(i) + ": " + diff.to_string();
      if (i < degree && !diff.is_zero())
        c.pass = false;
      if (i == degree) {
        Word necklace{0};
        necklace.insert(necklace.end(), degree, Symbol{1});
        necklace.push_back(2);
        NecklaceElement want(spec);
        want.add_word(necklace, Integer(static_cast<unsigned long>(degree)));
        if (!(diff == want) || diff.is_zero())
          c.pass = false;
        report.chi_gap = diff.to_string();
      }
    }
    report.checks.push_back(std::move(c));
  } else {
    const auto plain = chi(alpha_plain, order);
    const auto other = chi(alpha_twisted, order);
    ChainCheck c{"chi([s]) = chi([(1-gf)s]) over S", plain == other, {}};
    for (std::size_t i = 1; i <= order; ++i)
      c.detail += (i > 1 ? "\n" : "") + std::string("x^") + std::to_string(i) + ": " +
                  plain[i - 1].to_string() + " vs " + other[i - 1].to_string();
    report.checks.push_back(std::move(c));
  }

  // (v) T(1 - alpha x) = chi(alpha) for both endomorphisms.
  for (const auto* alpha : {&alpha_plain, &alpha_twisted}) {
    SeriesMatrix pencil(spec, mu, order, 1, 1);
    pencil.set(0, 0, one - constant((*alpha)(0, 0)) * x);
    const bool ok = tmap(pencil, order) == chi(*alpha, order);
    report.checks.push_back({"T(1 - alpha x) = chi(alpha) for alpha = " + (*alpha)(0, 0).to_string(), ok,
                             ok ? "coefficients agree through x^" + std::to_string(order)
                                : "coefficients differ"});
  }
  return report;
}

} // namespace ncrat
