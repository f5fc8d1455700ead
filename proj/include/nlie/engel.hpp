#ifndef NLIE_ENGEL_HPP
#define NLIE_ENGEL_HPP

#include <cstdint>

#include "nlie/algebra.hpp"

namespace nlie {

// An Engel subalgebra certificate: engel_set is the Fitting null component of
// the derivation, and the derivation lies in D(engel_set) when certified.
struct EngelWitness {
  DerivationMatrix derivation;
  Subspace engel_set;
};

// E_L(d) = {x : d^r x = 0 for some r}, the Fitting null component.  d must be
// a derivation; the result is checked to be a subalgebra.
Subspace engel_set(const NLieAlgebra& alg, const Matrix& d);

// Recomputes the Engel set and checks d in D(E).
bool is_engel_subalgebra(const NLieAlgebra& alg, const EngelWitness& w);

// For a certified Engel subalgebra E and a subalgebra U containing it,
// returns whether N_L(U) = U; true by theory, exposed for the property suite.
bool self_normalizing_above(const NLieAlgebra& alg, const EngelWitness& w, const Subspace& u);

struct EngelDescent {
  EngelWitness witness;
  std::vector<std::size_t> dims;  // Engel set dimension after each descent step
};

// Descends through Engel sets of combinations (1-lambda) d0 + lambda d1 until
// every generator of D(E) has Engel set containing E; the result is verified
// to be a Cartan subalgebra.  Requires |F| >= dim + 1.
EngelDescent minimal_engel_descent(const NLieAlgebra& alg, std::uint64_t seed);

// Nilpotent and self-normalizing.
bool is_cartan(const NLieAlgebra& alg, const Subspace& s);

Subspace cartan_subalgebra(const NLieAlgebra& alg, std::uint64_t seed);

struct IntravarianceResult {
  bool holds;
  Subspace cartan_of_ideal;  // embedded back into the big algebra
};

// For an ideal K: computes a Cartan subalgebra S of K and returns whether
// L = K + N_L(S).
IntravarianceResult intravariance_check(const NLieAlgebra& alg, const Subspace& k,
                                        std::uint64_t seed);

}  // namespace nlie

#endif
