#include <doctest.h>

#include "ncrat/error.hpp"
#include "support.hpp"

using namespace ncrat;
using namespace testsupport;

namespace {

SeriesMatrix mat2(const SpecPtr& spec, std::size_t order, std::vector<std::vector<std::string>> a,
                  std::vector<std::vector<std::string>> b, std::vector<std::vector<std::string>> c,
                  std::vector<std::vector<std::string>> d) {
  return SeriesMatrix::from_rows({{univariate(spec, order, a[0]), univariate(spec, order, b[0])},
                                  {univariate(spec, order, c[0]), univariate(spec, order, d[0])}});
}

TruncatedSeries product(const std::vector<TruncatedSeries>& diagonal) {
  TruncatedSeries out = TruncatedSeries::one(diagonal.front().spec(), 1, diagonal.front().order());
  for (const auto& d : diagonal)
    out = out * d;
  return out;
}

SeriesMatrix diagonal_matrix(const std::vector<TruncatedSeries>& d) {
  SeriesMatrix out(d.front().spec(), 1, d.front().order(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    out.set(i, i, d[i]);
  return out;
}

} // namespace

TEST_SUITE("whitehead") {

TEST_CASE("elementary operations") {
  const auto z = Z();
  const auto m = mat2(z, 3, {{"1"}}, {{"2"}}, {{"3"}}, {{"4"}});
  const ElementaryOp row{ElementaryOp::Kind::RowAdd, 1, 0, univariate(z, 3, {"0", "1"})};
  CHECK(apply_op(row, m) == elementary_matrix(row, 2) * m);
  const ElementaryOp col{ElementaryOp::Kind::ColAdd, 0, 1, univariate(z, 3, {"1", "1"})};
  CHECK(apply_op(col, m) == m * elementary_matrix(col, 2));
  CHECK(apply_op(row.inverse(), apply_op(row, m)) == m);
  CHECK_THROWS_AS(apply_op({ElementaryOp::Kind::RowAdd, 1, 1, univariate(z, 3, {"1"})}, m), InvalidArgument);
  CHECK_THROWS_AS(apply_op({ElementaryOp::Kind::RowAdd, 2, 1, univariate(z, 3, {"1"})}, m), InvalidArgument);
}

TEST_CASE("gaussian_reduce examples") {
  const auto z = Z();
  const auto m = mat2(z, 4, {{"1"}}, {{"0", "1"}}, {{"0", "1"}}, {{"1"}});
  const auto r = gaussian_reduce(m);
  REQUIRE(r.diagonal.size() == 2);
  CHECK(r.diagonal[0] == univariate(z, 4, {"1"}));
  CHECK(r.diagonal[1] == univariate(z, 4, {"1", "0", "-1"}));
  CHECK(r.log.ops.size() == 2);
  CHECK(r.log.verify());
  CHECK(r.log.final == diagonal_matrix(r.diagonal));
  CHECK(recombine(r) == m);

  const auto id = SeriesMatrix::identity(z, 1, 4, 3);
  const auto ri = gaussian_reduce(id);
  CHECK(ri.log.ops.empty());
  CHECK(ri.log.final == id);

  const auto s = S_inf();
  const auto chain = mat2(s, 4, {{"1"}}, {{"f"}}, {{"-g"}}, {{"1", "-s"}});
  const auto rc = gaussian_reduce(chain);
  CHECK(rc.log.verify());
  CHECK(rc.diagonal[0] == univariate(s, 4, {"1"}));
  CHECK(rc.diagonal[1] == univariate(s, 4, {"1", "-s + g f s"}));
  CHECK(recombine(rc) == chain);

  CHECK_THROWS_AS(gaussian_reduce(SeriesMatrix::identity(z, 2, 3, 2)), MultiVariable);
  CHECK_THROWS_AS(gaussian_reduce(mat2(z, 2, {{"2"}}, {{"0"}}, {{"0"}}, {{"1"}})), NotUnit);
}

TEST_CASE("snapshot starts from the normalized matrix") {
  const auto z = Z();
  const auto m = mat2(z, 3, {{"-1", "1"}}, {{"0"}}, {{"1"}}, {{"1"}});
  const auto r = gaussian_reduce(m);
  CHECK(r.unit_part == m.constant_term());
  CHECK(r.log.initial == SeriesMatrix::constant(mat_inverse_graded(r.unit_part), 1, 3) * m);
  CHECK(r.log.verify());
  CHECK(recombine(r) == m);
  for (const auto& d : r.diagonal)
    CHECK(d.coefficient({}) == num(z, 1));
}

TEST_CASE("random reductions: certificates, unit diagonals, determinants") {
  Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto m = random_invertible_series_matrix(rng, Z(), n, 6);
    const auto r = gaussian_reduce(m);
    CHECK(r.log.verify());
    CHECK(recombine(r) == m);
    for (const auto& d : r.diagonal)
      CHECK(d.coefficient({}) == num(Z(), 1));
    const auto det = det_series(m);
    CHECK(det == leibniz_det(m));
    const Integer sign = integer_determinant(m.constant_term().degree_zero(), n);
    CHECK(det == product(r.diagonal).left_scaled(RingElement(Z(), sign)));
    const auto td = tmap(m, 6), tr = tmap(diagonal_matrix(r.diagonal), 6);
    CHECK(td == tr);
  }
  Rng rng2(101);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_invertible_series_matrix(rng2, S(1), 2, 4);
    const auto r = gaussian_reduce(m);
    CHECK(r.log.verify());
    CHECK(recombine(r) == m);
  }
}

TEST_CASE("det_series examples") {
  const auto z = Z();
  CHECK(det_series(mat2(z, 4, {{"1"}}, {{"0", "1"}}, {{"0", "1"}}, {{"1"}})) == univariate(z, 4, {"1", "0", "-1"}));
  CHECK(det_series(mat2(z, 4, {{"1", "1"}}, {{"0"}}, {{"0"}}, {{"1", "-1"}})) == univariate(z, 4, {"1", "0", "-1"}));
  CHECK_THROWS_AS(det_series(SeriesMatrix::identity(S(0), 1, 2, 2)), NotCommutative);
  CHECK_THROWS_AS(det_series(SeriesMatrix(z, 1, 2, 2, 3)), NotSquare);
}

TEST_CASE("witt_split examples") {
  const auto z = Z();
  SeriesMatrix m(z, 1, 3, 1, 1);
  m.set(0, 0, univariate(z, 3, {"1", "1"}));
  const auto w = witt_split(m);
  CHECK(w.unit_part == RingMatrix::identity(z, 1));
  CHECK(w.witt_part == univariate(z, 3, {"1", "1"}));

  m.set(0, 0, univariate(z, 3, {"2", "1"}));
  CHECK_THROWS_AS(witt_split(m), NotUnit);

  const auto s = S_inf();
  const auto c = mat2(s, 3, {{"1"}}, {{"f"}}, {{"0"}}, {{"1"}});
  const auto wc = witt_split(c);
  CHECK(wc.unit_part == c.constant_term());
  CHECK(wc.witt_part == TruncatedSeries::one(s, 1, 3));

  Rng rng(103);
  for (int t = 0; t < 10; ++t) {
    const auto r = random_invertible_series_matrix(rng, S(1), 2, 4);
    const auto split = witt_split(r);
    CHECK(split.witt_part.coefficient({}) == num(S(1), 1));
    CHECK(recombine(split.reduction) == r);
  }
}

TEST_CASE("counterexample chain") {
  for (unsigned m = 0; m <= 3; ++m) {
    const auto report = verify_counterexample_chain(m, m + 2);
    CHECK(report.pass());
    CHECK(report.checks.size() >= 4);
    const long coefficient = static_cast<long>(m) + 1;
    std::string word = "f";
    for (unsigned k = 0; k <= m; ++k)
      word += " s";
    word += " g";
    CHECK(report.chi_gap == std::to_string(coefficient) + "·[" + word + "]");
    CHECK(report.to_text().find("PASS") != std::string::npos);
  }
  CHECK(verify_counterexample_chain(0, 2).chi_gap == "1·[f s g]");
  CHECK(verify_counterexample_chain(2, 4).chi_gap == "3·[f s s s g]");
  const auto limit = verify_counterexample_chain(std::nullopt, 8);
  CHECK(limit.pass());
  CHECK(limit.chi_gap.empty());
  const auto json = io::write_report(limit);
  CHECK(json.find("\"stage\": \"inf\"") != std::string::npos);
}

} // TEST_SUITE
