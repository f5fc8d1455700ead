#ifndef NLIE_SERIES_HPP
#define NLIE_SERIES_HPP

#include <cstdint>
#include <optional>

#include "nlie/algebra.hpp"
#include "nlie/latticescan.hpp"

namespace nlie {

inline constexpr std::uint64_t kDefaultSampleSeed = 1;

enum class SeriesKind { derived, lower_central, k_soluble_embedded, k_nilpotent_embedded };

// Terms strictly decrease; computation stops at zero or at the first repeat.
struct SeriesReport {
  SeriesKind kind;
  std::optional<std::size_t> k;
  std::vector<Subspace> terms;
  bool terminated_at_zero;
};

SeriesReport derived_series(const NLieAlgebra& alg);
bool is_soluble(const NLieAlgebra& alg);

SeriesReport k_soluble_embedded_series(const NLieAlgebra& alg, const Subspace& k_ideal,
                                       std::size_t k);
bool is_k_solubly_embedded(const NLieAlgebra& alg, const Subspace& k_ideal, std::size_t k);

SeriesReport lower_central_series(const NLieAlgebra& alg);
bool is_nilpotent(const NLieAlgebra& alg);

SeriesReport k_nilpotent_series(const NLieAlgebra& alg, const Subspace& k_ideal, std::size_t k);
bool is_k_nilpotently_embedded(const NLieAlgebra& alg, const Subspace& k_ideal, std::size_t k);

// Sum of all k-solubly embedded ideals, by exhaustive ideal enumeration.
// Requires a prime field within budget.
Subspace k_radical(const NLieAlgebra& alg, std::size_t k, const LatticeBudget& budget = {});

// Nilpotency of the inner derivations D(x) as linear maps.  The generator
// verdict covers all strictly increasing basis strings; since nilpotency is
// not closed under spans, a seeded random sample gives separate heuristic
// evidence over arbitrary strings.
struct StringNilpotencyReport {
  bool generator_verdict;
  bool sampled_verdict;
  std::uint64_t seed;
  std::size_t samples;
  std::optional<std::vector<std::size_t>> generator_witness;  // violating basis tuple
  bool ok() const { return generator_verdict && sampled_verdict; }
};
StringNilpotencyReport all_string_derivations_nilpotent(const NLieAlgebra& alg,
                                                        std::uint64_t seed = kDefaultSampleSeed,
                                                        std::size_t samples = 200);

// Seeded random element with coordinates across the field (small integers
// over Q).  Shared by the samplers and the corpus generator.
Vec random_element(const FieldSpec& f, std::size_t dim, std::mt19937_64& rng);

}  // namespace nlie

#endif
