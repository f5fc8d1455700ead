#include "nlie/series.hpp"

#include <stdexcept>

#include "nlie/error.hpp"

namespace nlie {

namespace {

// Runs term -> step(term) until zero or a repeat; dimensions strictly
// decrease otherwise, so dim+1 steps bound the loop.
template <class Step>
SeriesReport run_series(SeriesKind kind, std::optional<std::size_t> k, Subspace first,
                        Step&& step) {
  SeriesReport report{kind, k, {}, false};
  report.terms.push_back(std::move(first));
  while (!report.terms.back().is_zero()) {
    Subspace next = step(report.terms.back());
    if (next == report.terms.back()) return report;  // stabilized above zero
    report.terms.push_back(std::move(next));
  }
  report.terminated_at_zero = true;
  return report;
}

void check_embedding_params(const NLieAlgebra& alg, const Subspace& k_ideal, std::size_t k) {
  if (k < 2 || k > alg.arity()) throw std::invalid_argument("embedding parameter k out of range");
  if (!is_ideal(alg, k_ideal)) throw std::invalid_argument("embedded series requires an ideal");
}

}  // namespace

SeriesReport derived_series(const NLieAlgebra& alg) {
  return run_series(SeriesKind::derived, std::nullopt, alg.full_space(), [&](const Subspace& t) {
    std::vector<std::pair<Subspace, std::size_t>> factors{{t, alg.arity()}};
    return product_subspaces(alg, factors);
  });
}

bool is_soluble(const NLieAlgebra& alg) { return derived_series(alg).terminated_at_zero; }

SeriesReport k_soluble_embedded_series(const NLieAlgebra& alg, const Subspace& k_ideal,
                                       std::size_t k) {
  check_embedding_params(alg, k_ideal, k);
  return run_series(SeriesKind::k_soluble_embedded, k, k_ideal, [&](const Subspace& t) {
    std::vector<std::pair<Subspace, std::size_t>> factors{
        {t, k}, {alg.full_space(), alg.arity() - k}};
    return product_subspaces(alg, factors);
  });
}

bool is_k_solubly_embedded(const NLieAlgebra& alg, const Subspace& k_ideal, std::size_t k) {
  return k_soluble_embedded_series(alg, k_ideal, k).terminated_at_zero;
}

SeriesReport lower_central_series(const NLieAlgebra& alg) {
  return run_series(SeriesKind::lower_central, std::nullopt, alg.full_space(),
                    [&](const Subspace& t) {
                      std::vector<std::pair<Subspace, std::size_t>> factors{
                          {t, 1}, {alg.full_space(), alg.arity() - 1}};
                      return product_subspaces(alg, factors);
                    });
}

bool is_nilpotent(const NLieAlgebra& alg) { return lower_central_series(alg).terminated_at_zero; }

SeriesReport k_nilpotent_series(const NLieAlgebra& alg, const Subspace& k_ideal, std::size_t k) {
  check_embedding_params(alg, k_ideal, k);
  return run_series(SeriesKind::k_nilpotent_embedded, k, k_ideal, [&](const Subspace& t) {
    std::vector<std::pair<Subspace, std::size_t>> factors{
        {t, 1}, {k_ideal, k - 1}, {alg.full_space(), alg.arity() - k}};
    return product_subspaces(alg, factors);
  });
}

bool is_k_nilpotently_embedded(const NLieAlgebra& alg, const Subspace& k_ideal, std::size_t k) {
  return k_nilpotent_series(alg, k_ideal, k).terminated_at_zero;
}

Subspace k_radical(const NLieAlgebra& alg, std::size_t k, const LatticeBudget& budget) {
  if (k < 2 || k > alg.arity()) throw std::invalid_argument("embedding parameter k out of range");
  Subspace radical = alg.zero_space();
  for (const auto& ideal : enumerate_ideals(alg, budget))
    if (is_k_solubly_embedded(alg, ideal, k)) radical = sum(radical, ideal);
  if (!is_k_solubly_embedded(alg, radical, k))
    throw std::logic_error("sum of k-solubly embedded ideals failed the predicate");
  return radical;
}

Vec random_element(const FieldSpec& f, std::size_t dim, std::mt19937_64& rng) {
  Vec v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (f.is_finite())
      v.push_back(Scalar::of(f, static_cast<long>(rng() % f.prime())));
    else
      v.push_back(Scalar::of(f, static_cast<long>(rng() % 9) - 4));
  }
  return v;
}

StringNilpotencyReport all_string_derivations_nilpotent(const NLieAlgebra& alg,
                                                        std::uint64_t seed,
                                                        std::size_t samples) {
  StringNilpotencyReport report{true, true, seed, samples, std::nullopt};
  for (const auto& t : increasing_tuples(alg.dim(), alg.arity() - 1)) {
    std::vector<Vec> args;
    for (std::size_t i : t) args.push_back(alg.basis_element(i));
    if (!is_nilpotent_matrix(inner_derivation(alg, args).matrix)) {
      report.generator_verdict = false;
      report.generator_witness = t;
      break;
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples && report.sampled_verdict; ++s) {
    std::vector<Vec> args;
    for (std::size_t i = 0; i + 1 < alg.arity(); ++i)
      args.push_back(random_element(alg.field(), alg.dim(), rng));
    if (!is_nilpotent_matrix(inner_derivation(alg, args).matrix)) report.sampled_verdict = false;
  }
  return report;
}

}  // namespace nlie
