#ifndef NLIE_LATTICESCAN_HPP
#define NLIE_LATTICESCAN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlie/algebra.hpp"

namespace nlie {

// Exhaustive lattice work refuses to start past these caps.
struct LatticeBudget {
  std::uint64_t max_points = std::uint64_t{1} << 20;     // cap on p^dim
  std::uint64_t max_subspaces = std::uint64_t{1} << 22;  // cap on total subspace count
};

// Number of subspaces of GF(p)^ambient (sum of Gaussian binomials).  Throws
// UnsupportedError over the rationals or on overflow past 2^62.
std::uint64_t subspace_count(const FieldSpec& f, std::size_t ambient);

// Every subspace of GF(p)^ambient exactly once, as canonical RREF
// representatives generated by pivot set and free entries, sorted by
// (dimension, lexicographic basis).
std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, std::size_t ambient,
                                          const LatticeBudget& budget = {});

// All subspaces of the ambient space contained in `within`.
std::vector<Subspace> enumerate_subspaces_within(const Subspace& within,
                                                 const LatticeBudget& budget = {});

std::vector<Subspace> enumerate_subalgebras(const NLieAlgebra& alg,
                                            const LatticeBudget& budget = {});
std::vector<Subspace> enumerate_ideals(const NLieAlgebra& alg, const LatticeBudget& budget = {});

// Maximal elements under inclusion among the proper subalgebras.
std::vector<Subspace> maximal_subalgebras(const NLieAlgebra& alg,
                                          const LatticeBudget& budget = {});

// Intersection of the maximal subalgebras.  For nilpotent L the result is
// checked against L . L.
Subspace frattini(const NLieAlgebra& alg, const LatticeBudget& budget = {});

struct TheoremCheck {
  std::string id;
  std::string title;
  bool applicable = false;
  std::size_t instances = 0;
  bool passed = true;
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
};

struct TheoremSuiteReport {
  std::vector<TheoremCheck> checks;
  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
};

// Machine-checks the enumeration-dependent theorems on one algebra; any
// counterexample bundle signals an implementation bug, not new mathematics.
// Enumeration-dependent items are marked inapplicable over infinite fields or
// past budget.  extra_chains supplements the scanned subnormal chains.
TheoremSuiteReport theorem_suite(const NLieAlgebra& alg, const LatticeBudget& budget = {},
                                 std::uint64_t seed = 1,
                                 const std::vector<std::vector<Subspace>>& extra_chains = {},
                                 std::size_t jobs = 1);

}  // namespace nlie

#endif
