#ifndef NLIE_ALGEBRA_HPP
#define NLIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlie/subspace.hpp"
#include "nlie/tuples.hpp"

namespace nlie {

// A finite-dimensional n-Lie algebra given by structure constants on strictly
// increasing basis n-tuples; every other ordering follows by antisymmetry.
// Absent tuples bracket to zero.  Construction checks shapes only; call
// validate_jacobi to certify the algebra.
class NLieAlgebra {
 public:
  NLieAlgebra(const FieldSpec& f, std::size_t n, std::size_t dim,
              std::vector<std::string> basis_names = {});

  const FieldSpec& field() const { return field_; }
  std::size_t arity() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::map<std::uint64_t, Vec>& table() const { return sc_; }

  // tuple must be strictly increasing, 0-based; zero vectors are dropped.
  void set_bracket(std::span<const std::size_t> tuple, Vec value);

  // Bracket of basis elements in any order, sign-resolved; length n.
  Vec bracket_of_basis(std::span<const std::size_t> idx) const;

  Subspace full_space() const { return Subspace::full(field_, dim_); }
  Subspace zero_space() const { return Subspace::zero(field_, dim_); }
  Vec basis_element(std::size_t i) const { return basis_vec(field_, dim_, i); }

  bool operator==(const NLieAlgebra& o) const;

 private:
  FieldSpec field_;
  std::size_t n_, dim_;
  std::vector<std::string> basis_names_;
  std::map<std::uint64_t, Vec> sc_;
};

// An inner derivation (or a combination of them) with an optional record of
// the strings that produced it.
struct DerivationTerm {
  Scalar coeff;
  std::vector<Vec> string_args;  // n-1 elements
};
struct DerivationMatrix {
  Matrix matrix;
  std::optional<std::vector<DerivationTerm>> provenance;
};
Matrix recompute_provenance(const NLieAlgebra& alg, const DerivationMatrix& d);

struct JacobiViolation {
  std::vector<std::size_t> x_tuple;  // n entries
  std::vector<std::size_t> y_tuple;  // n-1 entries
  Vec defect;
};
struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

// Multilinear alternating expansion over the stored table; args.size() == n.
Vec bracket(const NLieAlgebra& alg, std::span<const Vec> args);

JacobiReport validate_jacobi(const NLieAlgebra& alg, bool fail_fast = false);

// D(a_1, ..., a_{n-1}): column j is [a_1, ..., a_{n-1}, e_j].
DerivationMatrix inner_derivation(const NLieAlgebra& alg, std::span<const Vec> string_args);

// D(u) for all strictly increasing (n-1)-tuples u of U's canonical basis;
// these span D(U).
std::vector<DerivationMatrix> derivation_span(const NLieAlgebra& alg, const Subspace& u);

bool is_derivation(const NLieAlgebra& alg, const Matrix& d);

// Span of [b_1, ..., b_n] over basis choices from each factor; factors.size() == n.
Subspace product_subspaces(const NLieAlgebra& alg, std::span<const Subspace> factors);
// Product with r copies of each listed factor; sum of r's must be n.
Subspace product_subspaces(const NLieAlgebra& alg,
                           std::span<const std::pair<Subspace, std::size_t>> factors);

// A . B = [A, B, (n-2)L]
Subspace dot(const NLieAlgebra& alg, const Subspace& a, const Subspace& b);

bool is_subalgebra(const NLieAlgebra& alg, const Subspace& k);
bool is_ideal(const NLieAlgebra& alg, const Subspace& k);
Subspace subalgebra_closure(const NLieAlgebra& alg, const Subspace& s);

struct QuotientResult {
  NLieAlgebra algebra;
  Matrix projection;  // (dim - dim K) x dim
};
QuotientResult quotient(const NLieAlgebra& alg, const Subspace& k);

Subspace center(const NLieAlgebra& alg);
Subspace centralizer(const NLieAlgebra& alg, const Subspace& a);  // a must be an ideal
Subspace normalizer(const NLieAlgebra& alg, const Subspace& u);   // u must be a subalgebra

bool is_abelian(const NLieAlgebra& alg);
bool is_abelian_embedded(const NLieAlgebra& alg, const Subspace& a);  // a must be an ideal

// Fix the last slot at a; result has arity n-1.  Requires n > 2.
NLieAlgebra reduce_fix_element(const NLieAlgebra& alg, const Vec& a);

NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b);

// Structure constants of the subalgebra S re-expressed in S's canonical
// basis, as a standalone algebra of dimension dim S.
NLieAlgebra restrict_to(const NLieAlgebra& alg, const Subspace& s);

}  // namespace nlie

#endif
