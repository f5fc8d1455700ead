#include "nlie/conjugacy.hpp"

#include <sstream>
#include <stdexcept>

#include "nlie/error.hpp"
#include "nlie/series.hpp"

namespace nlie {

bool is_automorphism(const NLieAlgebra& alg, const Matrix& m) {
  if (m.rows() != alg.dim() || m.cols() != alg.dim())
    throw std::invalid_argument("automorphism matrix shape mismatch");
  if (rref(m).rank != alg.dim()) return false;
  std::vector<Vec> args;
  for (const auto& t : increasing_tuples(alg.dim(), alg.arity())) {
    args.clear();
    for (std::size_t i : t) args.push_back(m.col(i));
    Vec lhs = bracket(alg, args);
    Vec rhs = m.apply(alg.bracket_of_basis(t));
    if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
  }
  return true;
}

AlgebraAutomorphism a_inner_automorphism(const NLieAlgebra& alg, const Subspace& a_ideal,
                                         const Vec& a, std::span<const Vec> x) {
  if (x.size() + 2 != alg.arity())
    throw std::invalid_argument("A-inner automorphism needs n-2 extra string entries");
  if (!is_abelian_embedded(alg, a_ideal))
    throw std::invalid_argument("A must be an abelian embedded ideal");
  if (!a_ideal.contains_vec(a)) throw std::invalid_argument("a must lie in A");
  std::vector<Vec> string_args{a};
  string_args.insert(string_args.end(), x.begin(), x.end());
  Matrix d = inner_derivation(alg, string_args).matrix;
  if (!(d * d).is_zero())
    throw std::invalid_argument("derivation square does not vanish; A is not qualifying");
  Subspace dl = image(d);
  std::vector<std::pair<Subspace, std::size_t>> factors{
      {dl, 2}, {alg.full_space(), alg.arity() - 2}};
  if (!product_subspaces(alg, factors).is_zero())
    throw std::invalid_argument("[2(dL), (n-2)L] does not vanish; A is not qualifying");
  Matrix alpha = Matrix::identity(alg.field(), alg.dim()) + d;
  if (!is_automorphism(alg, alpha))
    throw std::logic_error("I + D(a, x) failed the automorphism check");
  return {std::move(alpha),
          std::vector<AutomorphismFactor>{{a, {x.begin(), x.end()}}}};
}

Subspace apply_to_subspace(const Matrix& m, const Subspace& s) {
  std::vector<Vec> rows;
  for (const auto& r : s.basis_rows()) rows.push_back(m.apply(r));
  return Subspace::span_rows(s.field(), s.ambient(), rows);
}

namespace {

void check_split_preconditions(const NLieAlgebra& alg, const Subspace& a_ideal,
                               const LatticeBudget& budget) {
  if (!alg.field().is_finite())
    throw UnsupportedError("primitive split requires a finite field");
  if (!is_k_solubly_embedded(alg, alg.full_space(), 2))
    throw std::invalid_argument("algebra is not 2-soluble");
  if (!is_abelian_embedded(alg, a_ideal))
    throw std::invalid_argument("A must be an abelian embedded ideal");
  if (a_ideal.is_zero()) throw std::invalid_argument("A must be nonzero");
  for (const auto& i : enumerate_ideals(alg, budget))
    if (!i.is_zero() && i.dim() < a_ideal.dim() && contains(a_ideal, i))
      throw std::invalid_argument("A is not a minimal ideal");
  if (!(centralizer(alg, a_ideal) == a_ideal))
    throw std::invalid_argument("A is not self-centralising");
}

}  // namespace

PrimitiveSplit primitive_split(const NLieAlgebra& alg, const Subspace& a_ideal,
                               std::uint64_t seed, const LatticeBudget& budget) {
  check_split_preconditions(alg, a_ideal, budget);
  if (a_ideal == alg.full_space()) return {alg.zero_space(), std::nullopt};

  // B/A: a minimal abelian embedded ideal of L/A, lifted back.
  QuotientResult q = quotient(alg, a_ideal);
  std::vector<Subspace> q_ideals = enumerate_ideals(q.algebra, budget);
  const Subspace* bbar = nullptr;
  for (const auto& i : q_ideals) {
    if (i.is_zero() || !is_abelian_embedded(q.algebra, i)) continue;
    bool minimal = true;
    for (const auto& j : q_ideals)
      if (!j.is_zero() && j.dim() < i.dim() && contains(i, j)) minimal = false;
    if (minimal && (!bbar || compare_subspaces(i, *bbar) == std::strong_ordering::less))
      bbar = &i;
  }
  if (!bbar) throw std::logic_error("2-soluble quotient without a minimal abelian embedded ideal");
  std::vector<std::size_t> comp = complement_coords(a_ideal);
  std::vector<Vec> b_rows = a_ideal.basis_rows();
  for (const auto& row : bbar->basis_rows()) {
    Vec lifted = vec_zero(alg.field(), alg.dim());
    for (std::size_t i = 0; i < comp.size(); ++i) lifted[comp[i]] = row[i];
    b_rows.push_back(std::move(lifted));
  }
  Subspace b = Subspace::span_rows(alg.field(), alg.dim(), b_rows);

  // a non-nilpotent D(b, x) with b in B: deterministic scan, then a seeded
  // random fallback
  std::size_t scanned = 0;
  auto try_string = [&](std::vector<Vec> string_args) -> std::optional<EngelWitness> {
    ++scanned;
    DerivationMatrix d = inner_derivation(alg, string_args);
    if (is_nilpotent_matrix(d.matrix)) return std::nullopt;
    Subspace u = fitting_split(d.matrix).null_part;
    if (!is_subalgebra(alg, u)) throw std::logic_error("Engel set is not a subalgebra");
    return EngelWitness{std::move(d), std::move(u)};
  };

  std::optional<EngelWitness> witness;
  for (std::size_t bi = 0; bi < b.dim() && !witness; ++bi) {
    for (const auto& t : increasing_tuples(alg.dim(), alg.arity() - 2)) {
      std::vector<Vec> string_args{b.row(bi)};
      for (std::size_t j : t) string_args.push_back(alg.basis_element(j));
      witness = try_string(std::move(string_args));
      if (witness) break;
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < 200 && !witness; ++s) {
    Vec belt = vec_zero(alg.field(), alg.dim());
    for (std::size_t bi = 0; bi < b.dim(); ++bi)
      vec_add_scaled(belt, random_element(alg.field(), 1, rng)[0], b.row(bi));
    std::vector<Vec> string_args{std::move(belt)};
    for (std::size_t i = 0; i + 2 < alg.arity(); ++i)
      string_args.push_back(random_element(alg.field(), alg.dim(), rng));
    witness = try_string(std::move(string_args));
  }
  if (!witness) {
    std::ostringstream msg;
    msg << "no non-nilpotent D(b, x) with b in B found after scanning " << scanned
        << " strings (generator strings plus 200 seeded samples)";
    throw SearchExhaustedError(msg.str());
  }

  const Subspace& u = witness->engel_set;
  if (!(sum(u, a_ideal) == alg.full_space()) || !intersect(u, a_ideal).is_zero())
    throw std::logic_error("Engel set of the witness does not complement A");
  return {u, std::move(witness)};
}

AlgebraAutomorphism conjugate_complements(const NLieAlgebra& alg, const Subspace& a_ideal,
                                          const Subspace& u, const Subspace& v,
                                          const EngelWitness& witness) {
  const FieldSpec& f = alg.field();
  const std::size_t n = alg.arity();
  if (!witness.derivation.provenance || witness.derivation.provenance->size() != 1)
    throw std::invalid_argument("witness must carry a single-string provenance");
  const std::vector<Vec>& x = witness.derivation.provenance->front().string_args;
  if (!(witness.engel_set == u))
    throw std::invalid_argument("U must be the witness Engel set");
  if (!is_subalgebra(alg, v)) throw std::invalid_argument("V must be a subalgebra");
  if (!(sum(v, a_ideal) == alg.full_space()) || !intersect(v, a_ideal).is_zero())
    throw std::invalid_argument("V does not complement A");

  const Matrix& d = witness.derivation.matrix;
  // d acts invertibly on A
  auto a_rows = a_ideal.basis_rows();
  Matrix d_on_a(f, a_ideal.dim(), a_ideal.dim());
  for (std::size_t j = 0; j < a_ideal.dim(); ++j) {
    auto c = a_ideal.coords_of(d.apply(a_rows[j]));
    if (!c) throw std::invalid_argument("witness derivation does not preserve A");
    for (std::size_t i = 0; i < a_ideal.dim(); ++i) d_on_a.at(i, j) = (*c)[i];
  }
  if (rref(d_on_a).rank != a_ideal.dim())
    throw std::invalid_argument("witness derivation is not invertible on A");

  // y_i = x_i + a_i is the unique element of V in the coset x_i + A
  Matrix va_basis = vstack(v.basis(), a_ideal.basis()).transpose();
  Matrix alpha = Matrix::identity(f, alg.dim());
  std::vector<AutomorphismFactor> factors;
  for (std::size_t i = 0; i < n - 1; ++i) {
    auto split = solve(va_basis, x[i]);
    if (!split) throw std::logic_error("V + A does not span L");
    Vec a_i = vec_zero(f, alg.dim());
    for (std::size_t j = 0; j < a_ideal.dim(); ++j)
      vec_add_scaled(a_i, -(*split)[v.dim() + j], a_rows[j]);
    // solve d a'_i = a_i inside A
    auto a_coords = a_ideal.coords_of(a_i);
    if (!a_coords) throw std::logic_error("coset defect left A");
    auto prim = solve(d_on_a, *a_coords);
    if (!prim) throw std::logic_error("invertible restriction failed to solve");
    Vec a_prime = vec_zero(f, alg.dim());
    for (std::size_t j = 0; j < a_ideal.dim(); ++j)
      vec_add_scaled(a_prime, (*prim)[j], a_rows[j]);

    std::vector<Vec> string_args;
    for (std::size_t s = 0; s < n - 1; ++s)
      if (s != i) string_args.push_back(x[s]);
    string_args.push_back(a_prime);
    Matrix di = inner_derivation(alg, string_args).matrix;
    Scalar sign = Scalar::of(f, ((n - 1 - i) % 2 == 1) ? -1 : 1);
    Matrix alpha_i = Matrix::identity(f, alg.dim()) + di.scaled(sign);
    alpha = alpha * alpha_i;
    // normalised A-first factor: the sign and the reordering fold into a
    AutomorphismFactor factor;
    factor.a = (i % 2 == 0) ? vec_scale(Scalar::of(f, -1), a_prime) : a_prime;
    for (std::size_t s = 0; s < n - 1; ++s)
      if (s != i) factor.rest.push_back(x[s]);
    factors.push_back(std::move(factor));
  }

  if (!is_automorphism(alg, alpha))
    throw std::logic_error("conjugating map failed the automorphism check");
  if (!(apply_to_subspace(alpha, u) == v))
    throw std::logic_error("conjugating automorphism does not carry U onto V");
  return {std::move(alpha), std::move(factors)};
}

bool complement_intersection_zero(const NLieAlgebra& alg, const Subspace& a_ideal,
                                  const Subspace& u, const EngelWitness& witness) {
  if (!(witness.engel_set == u))
    throw std::invalid_argument("U must be the witness Engel set");
  const FieldSpec& f = alg.field();
  Subspace meet = u;
  for (std::size_t ui = 0; ui < u.dim(); ++ui) {
    Vec uvec = u.row(ui);
    // find [y, u, a] != 0 with a in A; u is not in C_L(A) = A
    std::optional<std::vector<Vec>> theta_string;
    for (const auto& t : increasing_tuples(alg.dim(), alg.arity() - 2)) {
      for (std::size_t ai = 0; ai < a_ideal.dim() && !theta_string; ++ai) {
        std::vector<Vec> args;
        for (std::size_t j : t) args.push_back(alg.basis_element(j));
        args.push_back(uvec);
        args.push_back(a_ideal.row(ai));
        if (!vec_is_zero(bracket(alg, args))) {
          std::vector<Vec> string_args;
          for (std::size_t j : t) string_args.push_back(alg.basis_element(j));
          string_args.push_back(a_ideal.row(ai));
          theta_string = std::move(string_args);
        }
      }
      if (theta_string) break;
    }
    if (!theta_string)
      throw SearchExhaustedError("no string [y, u, a] != 0 found; U meets the centraliser of A");
    Matrix theta = Matrix::identity(f, alg.dim()) +
                   inner_derivation(alg, *theta_string).matrix;
    Subspace image_u = apply_to_subspace(theta, u);
    if (image_u.contains_vec(uvec))
      throw std::logic_error("constructed A-inner image still contains the basis vector");
    meet = intersect(meet, image_u);
  }
  return meet.is_zero();
}

}  // namespace nlie
