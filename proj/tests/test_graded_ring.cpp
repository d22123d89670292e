#include <doctest.h>

#include "ncrat/error.hpp"
#include "support.hpp"

using namespace ncrat;
using namespace testsupport;

TEST_SUITE("graded_ring") {

TEST_CASE("ring spec parsing and naming") {
  CHECK(RingSpec::parse("Z")->size() == 0);
  CHECK(RingSpec::parse("free:f,s,g")->alphabet() == std::vector<std::string>{"f", "s", "g"});
  const auto s2 = RingSpec::parse("S:2");
  CHECK(s2->forbidden_words().size() == 3);
  CHECK(s2->name() == "S:2");
  CHECK(RingSpec::parse("S:inf")->star_pattern().has_value());
  CHECK(RingSpec::parse("S:inf")->name() == "S:inf");
  const auto q = RingSpec::parse("quot:f,s,g/fg,fsg");
  CHECK(q->forbidden_words().size() == 2);
  CHECK(*RingSpec::parse(q->name()) == *q);
  CHECK(*RingSpec::parse("quot:f,s,g/fg,fsg,fssg") == *S(2));

  CHECK_THROWS_AS(RingSpec::parse("bogus"), InvalidSpec);
  CHECK_THROWS_AS(RingSpec::parse("free:a,a"), InvalidSpec);
  CHECK_THROWS_AS(RingSpec::parse("free:x1"), InvalidSpec);
  CHECK_THROWS_AS(RingSpec::parse("quot:a,b/ac"), UnknownSymbol);
  CHECK_THROWS_AS(RingSpec::parse("S:-1"), InvalidSpec);
}

TEST_CASE("normalize drops words with forbidden factors") {
  const auto s0 = S(0);
  CHECK(normalize({{"f g", 2}, {"s", 3}}, s0) == el(s0, "3 s"));
  CHECK(normalize({{"f s s g", 1}}, S(1)).to_string() == "f s s g");
  CHECK(normalize({{"f s s g", 1}}, S_inf()).is_zero());
  CHECK(normalize({{"g f", 1}, {"g f", -1}}, s0).is_zero());
  CHECK_THROWS_AS(normalize({{"f q", 1}}, s0), UnknownSymbol);
}

TEST_CASE("arithmetic examples") {
  const auto s0 = S(0), s1 = S(1);
  CHECK((el(s0, "f") * el(s0, "g")).is_zero());
  CHECK((el(s0, "g") * el(s0, "f")).to_string() == "g f");
  CHECK(((el(s1, "f") + el(s1, "s")) * el(s1, "g")) == el(s1, "s g"));
  CHECK((el(s1, "f + s") * el(s1, "g")) == naive_mul(el(s1, "f + s"), el(s1, "g")));
  CHECK_THROWS_AS(el(s0, "f") + el(s1, "f"), SpecMismatch);
}

TEST_CASE("printing is degree-then-lex with signed coefficients") {
  const auto s = S(1);
  CHECK(el(s, "3 f s s g - g f + 1").to_string() == "1 - g f + 3 f s s g");
  CHECK(el(s, "-g f").to_string() == "-g f");
  CHECK(RingElement(s).to_string() == "0");
  CHECK(el(s, "f s + s f").to_string() == "f s + s f");
  CHECK(el(s, "s + f").to_string() == "f + s");
}

TEST_CASE("epsilon and graded components") {
  const auto s = S_inf();
  CHECK(epsilon(el(s, "3 + f s")) == 3);
  CHECK(epsilon(el(s, "g f")) == 0);
  CHECK(epsilon(el(s, "1 - g f")) == 1);
  CHECK(graded_component(el(s, "1 + f s + s s"), 2) == el(s, "f s + s s"));
  CHECK(graded_component(el(s, "1 + f s"), 5).is_zero());
  CHECK(graded_component(el(S(2), "f s s s g"), 5) == el(S(2), "f s s s g"));
}

TEST_CASE("parse_element round trip") {
  Rng rng(11);
  for (const auto& spec : {S(1), S_inf(), RingSpec::parse("free:a,b,c"), Z()}) {
    for (int t = 0; t < 50; ++t) {
      const auto a = random_element(rng, spec, 4, 4, 5);
      CHECK(parse_element(a.to_string(), spec) == a);
    }
  }
  CHECK_THROWS_AS(parse_element("f + ", S(0)), SyntaxError);
  CHECK_THROWS_AS(parse_element("q", S(0)), UnknownSymbol);
}

TEST_CASE("factor detection agrees with naive scan") {
  Rng rng(3);
  const std::vector<SpecPtr> specs{S(0), S(1), S(3), S_inf(), RingSpec::parse("quot:a,b/aba,bb,a"),
                                   RingSpec::parse("quot:a,b,c/abc,bca,cc")};
  for (const auto& spec : specs)
    for (int t = 0; t < 400; ++t) {
      const Word w = random_word(rng, *spec, 9);
      CHECK(spec->contains_forbidden(w) == naive_forbidden(w, *spec));
    }
}

TEST_CASE("ring axioms on random elements") {
  Rng rng(5);
  for (const auto& spec : {S(0), S(2), S_inf(), RingSpec::parse("free:a,b")}) {
    const RingElement one(spec, 1);
    for (int t = 0; t < 40; ++t) {
      const auto a = random_element(rng, spec), b = random_element(rng, spec), c = random_element(rng, spec);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * one == a);
      CHECK(one * a == a);
      CHECK(a - a == RingElement(spec));
      CHECK(a * b == naive_mul(a, b));
      for (std::size_t k = 0; k <= 6; ++k) {
        RingElement rhs(spec);
        for (std::size_t i = 0; i <= k; ++i)
          rhs += graded_component(a, i) * graded_component(b, k - i);
        CHECK(graded_component(a * b, k) == rhs);
      }
    }
  }
}

TEST_CASE("normalize is idempotent and never merges surviving words") {
  Rng rng(8);
  const auto spec = S(2);
  for (int t = 0; t < 100; ++t) {
    Terms raw;
    for (int k = 0; k < 5; ++k)
      raw[random_word(rng, *spec, 6)] += uniform(rng, -3, 3);
    const auto a = normalize(raw, spec);
    CHECK(normalize(a.terms(), spec) == a);
    for (const auto& [w, c] : raw)
      if (c != 0 && !naive_forbidden(w, *spec))
        CHECK(a.coefficient(w) == c);
    for (const auto& [w, c] : a.terms())
      CHECK_FALSE(naive_forbidden(w, *spec));
  }
}

TEST_CASE("mat_inverse_graded examples") {
  const auto s0 = S(0);
  const auto m1 = RingMatrix::from_rows(s0, {{el(s0, "1"), el(s0, "f")}, {el(s0, "0"), el(s0, "1")}});
  CHECK(mat_inverse_graded(m1) ==
        RingMatrix::from_rows(s0, {{el(s0, "1"), el(s0, "-f")}, {el(s0, "0"), el(s0, "1")}}));

  const auto m2 = RingMatrix::from_rows(s0, {{el(s0, "1"), el(s0, "f")}, {el(s0, "g"), el(s0, "1")}});
  const auto inv2 = mat_inverse_graded(m2);
  CHECK(inv2 == RingMatrix::from_rows(s0, {{el(s0, "1"), el(s0, "-f")}, {el(s0, "-g"), el(s0, "1 + g f")}}));
  CHECK(inv2 * m2 == RingMatrix::identity(s0, 2));
  CHECK(m2 * inv2 == RingMatrix::identity(s0, 2));

  CHECK_THROWS_AS(mat_inverse_graded(RingMatrix::from_rows(Z(), {{num(Z(), 2)}})), NotUnit);
  CHECK_THROWS_AS(mat_inverse_graded(RingMatrix(Z(), 2, 3)), NotSquare);
}

TEST_CASE("scalar units are exactly plus or minus one") {
  for (long v = -4; v <= 4; ++v) {
    const auto m = RingMatrix::from_rows(Z(), {{num(Z(), v)}});
    if (v == 1 || v == -1)
      CHECK(mat_inverse_graded(m)(0, 0) == num(Z(), v));
    else
      CHECK_THROWS_AS(mat_inverse_graded(m), NotUnit);
  }
}

TEST_CASE("bound exceeded means undecided") {
  // 1 - s is a unit of the completion but not of the polynomial ring.
  const auto free = RingSpec::parse("free:s");
  const auto m = RingMatrix::from_rows(free, {{el(free, "1 - s")}});
  CHECK_THROWS_AS(mat_inverse_graded(m), BoundExceeded);
  CHECK_THROWS_AS(mat_inverse_graded(m, 50), BoundExceeded);
  CHECK(default_inverse_bound(m) == 2 * 1 * 1 + 4);
}

TEST_CASE("random unitriangular-plus-nilpotent inverses over S0") {
  Rng rng(21);
  const auto s0 = S(0);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    // U (I + N) with N strictly upper: E = I - M0^-1 M is strictly upper, hence nilpotent.
    RingMatrix upper = RingMatrix::identity(s0, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        upper.set(i, j, random_element(rng, s0, 2, 2));
    const RingMatrix m = random_unimodular(rng, s0, n) * upper;
    const auto inv = mat_inverse_graded(m);
    CHECK(inv * m == RingMatrix::identity(s0, n));
    CHECK(m * inv == RingMatrix::identity(s0, n));
  }
}

TEST_CASE("integer determinant agrees with Leibniz") {
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::vector<Integer> m(n * n);
    for (auto& v : m)
      v = uniform(rng, -4, 4);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer expected = 0;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          inversions += perm[i] > perm[j];
      Integer term = 1;
      for (std::size_t i = 0; i < n; ++i)
        term *= m[i * n + perm[i]];
      expected += inversions % 2 ? Integer(-term) : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(integer_determinant(m, n) == expected);
  }
}

TEST_CASE("matrix printing") {
  const auto s0 = S(0);
  const auto m = RingMatrix::from_rows(s0, {{el(s0, "1"), el(s0, "f")}, {el(s0, "-g"), el(s0, "0")}});
  CHECK(m.to_string() == "[1, f; -g, 0]");
  CHECK(m.trace() == el(s0, "1"));
  CHECK_THROWS_AS(RingMatrix(s0, 1, 2).trace(), NotSquare);
}

} // TEST_SUITE
