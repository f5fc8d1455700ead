#include "nlie/engel.hpp"

#include <sstream>
#include <stdexcept>

#include "nlie/error.hpp"
#include "nlie/series.hpp"

namespace nlie {

namespace {

// Fitting null component without the derivation check, for inner loops where
// the input is a combination of known derivations.
Subspace engel_set_of_derivation(const NLieAlgebra& alg, const Matrix& d) {
  Subspace e = fitting_split(d).null_part;
  if (!is_subalgebra(alg, e))
    throw std::logic_error("Engel set of a derivation is not a subalgebra");
  return e;
}

void check_field_size(const NLieAlgebra& alg) {
  auto card = alg.field().cardinality();
  if (card && *card < alg.dim() + 1) {
    std::ostringstream msg;
    msg << "field " << alg.field().str() << " has fewer than dim+1 = " << alg.dim() + 1
        << " elements";
    throw UnsupportedError(msg.str());
  }
}

DerivationMatrix combine(const FieldSpec& f, const Scalar& c0, const DerivationMatrix& d0,
                         const Scalar& c1, const DerivationMatrix& d1) {
  DerivationMatrix out{d0.matrix.scaled(c0) + d1.matrix.scaled(c1), std::nullopt};
  if (d0.provenance && d1.provenance) {
    std::vector<DerivationTerm> terms;
    for (const auto& t : *d0.provenance)
      if (!(c0 * t.coeff).is_zero()) terms.push_back({c0 * t.coeff, t.string_args});
    for (const auto& t : *d1.provenance)
      if (!(c1 * t.coeff).is_zero()) terms.push_back({c1 * t.coeff, t.string_args});
    out.provenance = std::move(terms);
  }
  (void)f;
  return out;
}

}  // namespace

Subspace engel_set(const NLieAlgebra& alg, const Matrix& d) {
  if (!is_derivation(alg, d)) throw std::invalid_argument("engel_set requires a derivation");
  return engel_set_of_derivation(alg, d);
}

bool is_engel_subalgebra(const NLieAlgebra& alg, const EngelWitness& w) {
  if (!(engel_set_of_derivation(alg, w.derivation.matrix) == w.engel_set)) return false;
  std::vector<Matrix> gens;
  for (const auto& g : derivation_span(alg, w.engel_set)) gens.push_back(g.matrix);
  return member_of_span(gens, w.derivation.matrix).has_value();
}

bool self_normalizing_above(const NLieAlgebra& alg, const EngelWitness& w, const Subspace& u) {
  if (!is_engel_subalgebra(alg, w))
    throw std::invalid_argument("witness is not a certified Engel subalgebra");
  if (!contains(u, w.engel_set)) throw std::invalid_argument("U must contain the Engel set");
  if (!is_subalgebra(alg, u)) throw std::invalid_argument("U must be a subalgebra");
  return normalizer(alg, u) == u;
}

EngelDescent minimal_engel_descent(const NLieAlgebra& alg, std::uint64_t seed) {
  (void)seed;  // scan orders are deterministic; kept for interface stability
  check_field_size(alg);
  const FieldSpec& f = alg.field();

  DerivationMatrix d0{Matrix(f, alg.dim(), alg.dim()), std::vector<DerivationTerm>{}};
  if (alg.dim() >= alg.arity() - 1) {
    std::vector<Vec> first;
    for (std::size_t i = 0; i + 1 < alg.arity(); ++i) first.push_back(alg.basis_element(i));
    d0 = inner_derivation(alg, first);
  }
  // dim < n-1 leaves D(L) = 0: the zero derivation already has Engel set L.

  EngelDescent result{{std::move(d0), alg.full_space()}, {}};
  result.witness.engel_set = engel_set_of_derivation(alg, result.witness.derivation.matrix);
  result.dims.push_back(result.witness.engel_set.dim());

  while (true) {
    const Subspace& e = result.witness.engel_set;
    std::vector<DerivationMatrix> gens = derivation_span(alg, e);
    const DerivationMatrix* violating = nullptr;
    for (const auto& g : gens) {
      if (!contains(engel_set_of_derivation(alg, g.matrix), e)) {
        violating = &g;
        break;
      }
    }
    if (!violating) break;

    // (1-lambda) d0 + lambda d1 over dim+1 distinct field elements; at least
    // one combination descends strictly.
    bool descended = false;
    std::vector<std::size_t> scanned_dims;
    for (std::size_t lam = 0; lam <= alg.dim(); ++lam) {
      Scalar lambda = Scalar::of(f, static_cast<long>(lam));
      DerivationMatrix c = combine(f, Scalar::one(f) - lambda, result.witness.derivation, lambda,
                                   *violating);
      Subspace ec = engel_set_of_derivation(alg, c.matrix);
      scanned_dims.push_back(ec.dim());
      if (ec.dim() < e.dim() && contains(e, ec)) {
        result.witness = {std::move(c), std::move(ec)};
        result.dims.push_back(result.witness.engel_set.dim());
        descended = true;
        break;
      }
    }
    if (!descended) {
      std::ostringstream msg;
      msg << "Engel descent found a violating generator but no descending combination; "
             "Engel set dims over the lambda scan:";
      for (std::size_t d : scanned_dims) msg << " " << d;
      throw SearchExhaustedError(msg.str());
    }
  }

  if (!is_cartan(alg, result.witness.engel_set))
    throw std::logic_error("Engel descent terminated at a non-Cartan subalgebra");
  return result;
}

bool is_cartan(const NLieAlgebra& alg, const Subspace& s) {
  if (!is_subalgebra(alg, s)) throw std::invalid_argument("is_cartan requires a subalgebra");
  if (!is_nilpotent(restrict_to(alg, s))) return false;
  return normalizer(alg, s) == s;
}

Subspace cartan_subalgebra(const NLieAlgebra& alg, std::uint64_t seed) {
  EngelDescent descent = minimal_engel_descent(alg, seed);
  if (!is_cartan(alg, descent.witness.engel_set))
    throw std::logic_error("descent result failed the Cartan verification");
  return descent.witness.engel_set;
}

IntravarianceResult intravariance_check(const NLieAlgebra& alg, const Subspace& k,
                                        std::uint64_t seed) {
  if (!is_ideal(alg, k)) throw std::invalid_argument("intravariance requires an ideal");
  NLieAlgebra rk = restrict_to(alg, k);
  check_field_size(rk);
  Subspace s = lift_through(cartan_subalgebra(rk, seed), k);
  bool holds = sum(k, normalizer(alg, s)) == alg.full_space();
  return {holds, std::move(s)};
}

}  // namespace nlie
