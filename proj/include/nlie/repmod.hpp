#ifndef NLIE_REPMOD_HPP
#define NLIE_REPMOD_HPP

#include <map>
#include <span>
#include <vector>

#include "nlie/algebra.hpp"

namespace nlie {

struct LatticeBudget;

// An L-module: rho maps strictly increasing basis (n-1)-tuples to vdim x vdim
// matrices; other orderings follow by antisymmetry, mirroring structure
// constant storage.  Construction checks shapes; validate_representation
// certifies the module laws.
class LModule {
 public:
  LModule(NLieAlgebra alg, std::size_t vdim);

  const NLieAlgebra& algebra() const { return alg_; }
  std::size_t vdim() const { return vdim_; }
  const std::map<std::uint64_t, Matrix>& table() const { return rho_; }

  void set_rho(std::span<const std::size_t> tuple, Matrix m);

  // rho on basis indices in any order, sign-resolved.
  Matrix rho_of_basis(std::span<const std::size_t> idx) const;
  // Multilinear alternating expansion for arbitrary elements; n-1 args.
  Matrix rho_apply(std::span<const Vec> args) const;

 private:
  NLieAlgebra alg_;
  std::size_t vdim_;
  std::map<std::uint64_t, Matrix> rho_;
};

enum class RepLaw {
  commutator,      // [rho(x), rho(y)] expands over the bracketed slots
  bracket_action,  // rho of a bracket expands into signed products
};
struct RepViolation {
  RepLaw law;
  std::vector<std::size_t> tuple_a;
  std::vector<std::size_t> tuple_b;
  Matrix defect;
};
struct RepReport {
  bool ok = true;
  std::vector<RepViolation> violations;
};

RepReport validate_representation(const LModule& m, bool fail_fast = false);

struct SplitExtension {
  NLieAlgebra algebra;    // dimension dim L + vdim
  Matrix embed_algebra;   // (dim+vdim) x dim
  Matrix embed_module;    // (dim+vdim) x vdim
  Subspace algebra_part;  // image of L, a subalgebra
  Subspace module_part;   // image of V, an abelian embedded ideal
};

// Split extension of a validated module; checks the representation first and
// verifies the structural claims on the result.
SplitExtension split_extension(const LModule& m);

// The same construction without any validity check, for cross-validating
// the representation laws against the Jacobi identity.
NLieAlgebra build_split_extension_unchecked(const LModule& m);

// {k in L : rho(k, x) = 0 for all x}; an ideal.
Subspace rep_kernel(const LModule& m);

LModule adjoint_module(const NLieAlgebra& alg);

// Spanning set of rho_r(U): all rho(x) with at least r slots from U's basis
// and the rest from L's basis.  1 <= r <= n-1.
std::vector<Matrix> rho_r_span(const LModule& m, const Subspace& u, std::size_t r);

// A-component decomposition of the module under a nilpotent ideal N
// (exhaustive over the submodule lattice; prime fields only).  Returns the
// components; their sum is direct and exhausts V.  level > 1 sorts by the
// rho_level(N) factors instead, the possibly finer decomposition available
// when N is level-nilpotently embedded.
std::vector<Subspace> components(const LModule& m, const Subspace& n_ideal,
                                 const LatticeBudget& budget, std::size_t level = 1);
std::vector<Subspace> components(const LModule& m, const Subspace& n_ideal);

// Chain from U up to L with each term an ideal of the next.
bool verify_subnormal_chain(const NLieAlgebra& alg, std::span<const Subspace> chain);

// Invertible map commuting with the paired generator actions, if any.
// gens_a and gens_b must have equal lengths and square shapes.
std::optional<Matrix> module_isomorphism(std::span<const Matrix> gens_a,
                                         std::span<const Matrix> gens_b);

}  // namespace nlie

#endif
