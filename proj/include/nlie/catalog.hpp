#ifndef NLIE_CATALOG_HPP
#define NLIE_CATALOG_HPP

#include <cstdint>
#include <map>
#include <string>

#include "nlie/algebra.hpp"

namespace nlie {

// Constructible algebras; every constructor output passes validate_jacobi.
NLieAlgebra catalog_abelian(const FieldSpec& f, std::size_t arity, std::size_t dim);
// dim n+1; only [e_1, ..., e_n] = e_{n+1}
NLieAlgebra catalog_heisenberg(const FieldSpec& f, std::size_t n);
// dim n; only [e_1, ..., e_n] = e_n
NLieAlgebra catalog_affine(const FieldSpec& f, std::size_t n);
// dim n+1; [e_1, ..., ^e_i, ..., e_{n+1}] = (-1)^{n+1-i} e_i
NLieAlgebra catalog_cross(const FieldSpec& f, std::size_t n);

// Name-and-parameter entry point used by the CLI:
//   abelian (n, d), heis (n), aff (n), cross (n); field from params
//   ("field": "Q" or "GF", "p": prime).
NLieAlgebra catalog(const std::string& name, const std::map<std::string, std::string>& params);

struct CorpusLimits {
  std::size_t max_dim = 5;
  std::size_t max_members = 40;
  std::vector<std::size_t> arities = {2, 3};
};

// Deterministic-under-seed stream of validated algebras: catalog entries,
// direct sums, quotients by scanned ideals (finite fields), fixed-slot
// reductions, and random split extensions filtered by the representation
// validator.
std::vector<NLieAlgebra> corpus(std::uint64_t seed, const FieldSpec& f,
                                const CorpusLimits& limits = {});

}  // namespace nlie

#endif
