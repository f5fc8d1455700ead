#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/catalog.hpp"
#include "nlie/error.hpp"
#include "nlie/series.hpp"

using namespace nlie;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Subspace span_of(const NLieAlgebra& alg, std::initializer_list<std::size_t> basis_idx) {
  std::vector<Vec> rows;
  for (std::size_t i : basis_idx) rows.push_back(alg.basis_element(i));
  return Subspace::span_rows(alg.field(), alg.dim(), rows);
}

std::vector<std::size_t> dims(const SeriesReport& r) {
  std::vector<std::size_t> d;
  for (const auto& t : r.terms) d.push_back(t.dim());
  return d;
}

}  // namespace

TEST_CASE("derived series") {
  SeriesReport ab = derived_series(catalog_abelian(Q, 3, 4));
  CHECK(dims(ab) == std::vector<std::size_t>{4, 0});
  CHECK(ab.terminated_at_zero);
  CHECK(is_soluble(catalog_abelian(Q, 3, 4)));

  for (std::size_t n : {2ul, 3ul}) {
    SeriesReport h = derived_series(catalog_heisenberg(Q, n));
    CHECK(dims(h) == std::vector<std::size_t>{n + 1, 1, 0});
    CHECK(h.terms[1] == span_of(catalog_heisenberg(Q, n), {n}));
    CHECK(h.terminated_at_zero);

    SeriesReport a = derived_series(catalog_affine(Q, n));
    CHECK(dims(a) == std::vector<std::size_t>{n, 1, 0});
    CHECK(a.terms[1] == span_of(catalog_affine(Q, n), {n - 1}));
    CHECK(is_soluble(catalog_affine(Q, n)));
  }
}

TEST_CASE("cross(n) is not soluble") {
  for (std::size_t n : {2ul, 3ul}) {
    SeriesReport r = derived_series(catalog_cross(Q, n));
    CHECK(!r.terminated_at_zero);
    CHECK(dims(r).back() == n + 1);  // perfect: [nL] = L
  }
}

TEST_CASE("lower central series") {
  CHECK(is_nilpotent(catalog_abelian(Q, 2, 3)));
  CHECK(dims(lower_central_series(catalog_abelian(Q, 2, 3))) ==
        std::vector<std::size_t>{3, 0});

  for (std::size_t n : {2ul, 3ul, 4ul}) {
    NLieAlgebra h = catalog_heisenberg(Q, n);
    CHECK(dims(lower_central_series(h)) == std::vector<std::size_t>{n + 1, 1, 0});
    CHECK(is_nilpotent(h));

    NLieAlgebra a = catalog_affine(Q, n);
    SeriesReport r = lower_central_series(a);
    CHECK(!r.terminated_at_zero);
    CHECK(dims(r) == std::vector<std::size_t>{n, 1});  // stabilises at span(e_n)
    CHECK(!is_nilpotent(a));
  }
}

TEST_CASE("zero algebra is soluble and nilpotent") {
  NLieAlgebra z = catalog_abelian(Q, 2, 0);
  CHECK(is_soluble(z));
  CHECK(is_nilpotent(z));
  CHECK(derived_series(z).terms.size() == 1);
}

TEST_CASE("k-solubly embedded series") {
  NLieAlgebra aff = catalog_affine(Q, 3);
  CHECK(is_k_solubly_embedded(aff, aff.zero_space(), 2));

  Subspace last = span_of(aff, {2});
  SeriesReport one_dim = k_soluble_embedded_series(aff, last, 2);
  CHECK(one_dim.terminated_at_zero);
  CHECK(one_dim.terms.size() == 2);  // two factors from one dimension repeat

  for (std::size_t n : {3ul, 4ul}) {
    NLieAlgebra a = catalog_affine(Q, n);
    SeriesReport r = k_soluble_embedded_series(a, a.full_space(), 2);
    CHECK(dims(r) == std::vector<std::size_t>{n, 1, 0});
    CHECK(is_k_solubly_embedded(a, a.full_space(), 2));
  }

  CHECK_THROWS_AS(k_soluble_embedded_series(aff, last, 1), std::invalid_argument);
  CHECK_THROWS_AS(k_soluble_embedded_series(aff, last, 4), std::invalid_argument);
  CHECK_THROWS_AS(k_soluble_embedded_series(aff, span_of(aff, {0}), 2), std::invalid_argument);
}

TEST_CASE("k-nilpotently embedded series") {
  NLieAlgebra heis = catalog_heisenberg(Q, 3);
  CHECK(is_k_nilpotently_embedded(heis, heis.zero_space(), 2));
  CHECK(is_k_nilpotently_embedded(heis, span_of(heis, {3}), 2));
  SeriesReport r = k_nilpotent_series(heis, heis.full_space(), 2);
  CHECK(dims(r) == std::vector<std::size_t>{4, 1, 0});
  CHECK(r.terminated_at_zero);

  // aff(3) is not 2-nilpotently embedded in itself
  NLieAlgebra aff = catalog_affine(Q, 3);
  CHECK(!is_k_nilpotently_embedded(aff, aff.full_space(), 2));
}

TEST_CASE("k_radical") {
  FieldSpec f2 = FieldSpec::gf(2);
  NLieAlgebra ab = catalog_abelian(f2, 2, 3);
  CHECK(k_radical(ab, 2) == ab.full_space());

  NLieAlgebra aff = catalog_affine(FieldSpec::gf(5), 3);
  CHECK(k_radical(aff, 2) == aff.full_space());  // aff(3) is 2-soluble
  CHECK(k_radical(aff, 3) == aff.full_space());  // and soluble, so k = n works too

  NLieAlgebra cross = catalog_cross(f2, 2);
  CHECK(k_radical(cross, 2).is_zero());  // simple: no nonzero soluble ideals

  CHECK_THROWS_AS(k_radical(catalog_affine(Q, 3), 2), UnsupportedError);
}

TEST_CASE("all_string_derivations_nilpotent") {
  StringNilpotencyReport ab = all_string_derivations_nilpotent(catalog_abelian(Q, 3, 4));
  CHECK(ab.generator_verdict);
  CHECK(ab.sampled_verdict);
  CHECK(ab.ok());

  for (std::size_t n : {2ul, 3ul}) {
    StringNilpotencyReport h =
        all_string_derivations_nilpotent(catalog_heisenberg(FieldSpec::gf(7), n));
    CHECK(h.ok());

    StringNilpotencyReport a =
        all_string_derivations_nilpotent(catalog_affine(FieldSpec::gf(7), n));
    CHECK(!a.generator_verdict);
    REQUIRE(a.generator_witness.has_value());
    // witness string (e1, ..., e_{n-1}) has eigenvalue 1 on e_n
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i + 1 < n; ++i) expected.push_back(i);
    CHECK(*a.generator_witness == expected);
  }
}

TEST_CASE("Engel equivalence on a small corpus") {
  CorpusLimits limits;
  limits.max_dim = 4;
  limits.max_members = 25;
  for (const auto& alg : corpus(3, FieldSpec::gf(5), limits)) {
    StringNilpotencyReport r = all_string_derivations_nilpotent(alg);
    CHECK(is_nilpotent(alg) == r.ok());
    CHECK(r.generator_verdict == r.sampled_verdict);
  }
}

TEST_CASE("embedded-series closure under quotients on enumerable algebras") {
  // B k-solubly embedded and A/B k-solubly embedded in L/B imply A is
  for (const auto& alg : {catalog_heisenberg(FieldSpec::gf(2), 2),
                          catalog_affine(FieldSpec::gf(3), 3)}) {
    auto ideals = enumerate_ideals(alg);
    for (std::size_t k = 2; k <= alg.arity(); ++k) {
      for (const auto& b : ideals) {
        if (!is_k_solubly_embedded(alg, b, k)) continue;
        QuotientResult q = quotient(alg, b);
        for (const auto& a : ideals) {
          if (!contains(a, b)) continue;
          std::vector<Vec> rows;
          for (const auto& r : a.basis_rows()) rows.push_back(q.projection.apply(r));
          Subspace ab = Subspace::span_rows(alg.field(), q.algebra.dim(), rows);
          if (!is_ideal(q.algebra, ab)) continue;
          if (is_k_solubly_embedded(q.algebra, ab, k)) CHECK(is_k_solubly_embedded(alg, a, k));
        }
      }
    }
  }
}
