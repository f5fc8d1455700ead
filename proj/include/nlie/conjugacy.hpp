#ifndef NLIE_CONJUGACY_HPP
#define NLIE_CONJUGACY_HPP

#include <cstdint>

#include "nlie/engel.hpp"
#include "nlie/latticescan.hpp"

namespace nlie {

// A bracket-preserving invertible map; when built from A-inner factors the
// matrix equals the ordered product of the recorded (I + D(a, rest)) maps.
struct AutomorphismFactor {
  Vec a;                      // element of the abelian embedded ideal
  std::vector<Vec> rest;      // n-2 further string entries
};
struct AlgebraAutomorphism {
  Matrix matrix;
  std::optional<std::vector<AutomorphismFactor>> factors;
};

bool is_automorphism(const NLieAlgebra& alg, const Matrix& m);

// I + D(a, x_1, ..., x_{n-2}) for a in an abelian embedded ideal A; the
// square of the derivation vanishes, so this is an automorphism.
AlgebraAutomorphism a_inner_automorphism(const NLieAlgebra& alg, const Subspace& a_ideal,
                                         const Vec& a, std::span<const Vec> x);

Subspace apply_to_subspace(const Matrix& m, const Subspace& s);

struct PrimitiveSplit {
  Subspace complement;
  std::optional<EngelWitness> witness;  // absent only in the degenerate case L = A
};

// Splits a primitive 2-soluble algebra over its minimal abelian embedded
// self-centralising ideal.  Prime fields only (the quotient ideal scan is
// exhaustive).
PrimitiveSplit primitive_split(const NLieAlgebra& alg, const Subspace& a_ideal,
                               std::uint64_t seed = 1, const LatticeBudget& budget = {});

// The explicit A-inner automorphism carrying the complement U = E_L(D(x))
// onto another complement V.
AlgebraAutomorphism conjugate_complements(const NLieAlgebra& alg, const Subspace& a_ideal,
                                          const Subspace& u, const Subspace& v,
                                          const EngelWitness& witness);

// Builds per-basis-vector A-inner images of U and returns whether their
// intersection with U is zero.
bool complement_intersection_zero(const NLieAlgebra& alg, const Subspace& a_ideal,
                                  const Subspace& u, const EngelWitness& witness);

}  // namespace nlie

#endif
