#include "nlie/repmod.hpp"

#include <stdexcept>

#include "nlie/error.hpp"
#include "nlie/latticescan.hpp"
#include "nlie/series.hpp"

namespace nlie {

LModule::LModule(NLieAlgebra alg, std::size_t vdim) : alg_(std::move(alg)), vdim_(vdim) {}

void LModule::set_rho(std::span<const std::size_t> tuple, Matrix m) {
  if (tuple.size() + 1 != alg_.arity())
    throw std::invalid_argument("rho tuple length must be n-1");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= alg_.dim()) throw std::invalid_argument("rho tuple index out of range");
    if (i > 0 && tuple[i - 1] >= tuple[i])
      throw std::invalid_argument("rho tuple must be strictly increasing");
  }
  if (m.rows() != vdim_ || m.cols() != vdim_ || !(m.field() == alg_.field()))
    throw std::invalid_argument("rho matrix shape mismatch");
  std::uint64_t key = tuple_key(tuple);
  if (m.is_zero())
    rho_.erase(key);
  else
    rho_.insert_or_assign(key, std::move(m));
}

Matrix LModule::rho_of_basis(std::span<const std::size_t> idx) const {
  if (idx.size() + 1 != alg_.arity()) throw std::invalid_argument("rho needs n-1 indices");
  std::vector<std::size_t> sorted(idx.begin(), idx.end());
  int sign = sort_with_sign(sorted);
  if (sign == 0) return Matrix(alg_.field(), vdim_, vdim_);
  auto it = rho_.find(tuple_key(sorted));
  if (it == rho_.end()) return Matrix(alg_.field(), vdim_, vdim_);
  return sign == 1 ? it->second : it->second.scaled(Scalar::of(alg_.field(), -1));
}

Matrix LModule::rho_apply(std::span<const Vec> args) const {
  if (args.size() + 1 != alg_.arity()) throw std::invalid_argument("rho needs n-1 arguments");
  for (const auto& a : args)
    if (a.size() != alg_.dim()) throw std::invalid_argument("element dimension mismatch");
  Matrix result(alg_.field(), vdim_, vdim_);
  for_each_support_combo(args, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> sorted = idx;
    int sign = sort_with_sign(sorted);
    if (sign == 0) return;
    auto it = rho_.find(tuple_key(sorted));
    if (it == rho_.end()) return;
    Scalar c = Scalar::of(alg_.field(), sign);
    for (std::size_t i = 0; i < idx.size(); ++i) c *= args[i][idx[i]];
    result = result + it->second.scaled(c);
  });
  return result;
}

RepReport validate_representation(const LModule& m, bool fail_fast) {
  RepReport report;
  const NLieAlgebra& alg = m.algebra();
  const std::size_t n = alg.arity(), dim = alg.dim();
  auto record = [&](RepLaw law, const std::vector<std::size_t>& a,
                    const std::vector<std::size_t>& b, Matrix defect) {
    report.ok = false;
    report.violations.push_back({law, a, b, std::move(defect)});
  };

  // [rho(x), rho(y)] = sum_i rho(y_1, ..., [x, y_i], ..., y_{n-1})
  auto tuples_n1 = increasing_tuples(dim, n - 1);
  std::vector<Vec> args;
  std::vector<Vec> bracket_args;
  for (const auto& x : tuples_n1) {
    Matrix rx = m.rho_of_basis(x);
    for (const auto& y : tuples_n1) {
      Matrix ry = m.rho_of_basis(y);
      Matrix lhs = rx * ry - ry * rx;
      Matrix rhs(alg.field(), m.vdim(), m.vdim());
      for (std::size_t i = 0; i < n - 1; ++i) {
        bracket_args.clear();
        for (std::size_t j : x) bracket_args.push_back(alg.basis_element(j));
        bracket_args.push_back(alg.basis_element(y[i]));
        Vec w = bracket(alg, bracket_args);
        if (vec_is_zero(w)) continue;
        args.clear();
        for (std::size_t s = 0; s < n - 1; ++s)
          args.push_back(s == i ? w : alg.basis_element(y[s]));
        rhs = rhs + m.rho_apply(args);
      }
      Matrix defect = lhs - rhs;
      if (!defect.is_zero()) {
        record(RepLaw::commutator, x, y, std::move(defect));
        if (fail_fast) return report;
      }
    }
  }

  // rho([x_1..x_n], y_2..y_{n-1}) matches the signed sum of rho products
  for (const auto& x : increasing_tuples(dim, n)) {
    Vec w = alg.bracket_of_basis(x);
    for (const auto& y : increasing_tuples(dim, n - 2)) {
      args.clear();
      args.push_back(w);
      for (std::size_t j : y) args.push_back(alg.basis_element(j));
      Matrix lhs = m.rho_apply(args);
      Matrix rhs(alg.field(), m.vdim(), m.vdim());
      std::vector<std::size_t> omitted(n - 1), right(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t t = 0;
        for (std::size_t s = 0; s < n; ++s)
          if (s != i) omitted[t++] = x[s];
        right[0] = x[i];
        for (std::size_t s = 0; s < n - 2; ++s) right[s + 1] = y[s];
        Matrix term = m.rho_of_basis(omitted) * m.rho_of_basis(right);
        // the alternating sign follows the omitted slot, counted from the right
        if ((n - 1 - i) % 2 == 1) term = term.scaled(Scalar::of(alg.field(), -1));
        rhs = rhs + term;
      }
      Matrix defect = lhs - rhs;
      if (!defect.is_zero()) {
        record(RepLaw::bracket_action, x, y, std::move(defect));
        if (fail_fast) return report;
      }
    }
  }
  return report;
}

NLieAlgebra build_split_extension_unchecked(const LModule& m) {
  const NLieAlgebra& alg = m.algebra();
  const std::size_t dim = alg.dim(), vdim = m.vdim(), total = dim + vdim;
  NLieAlgebra ext(alg.field(), alg.arity(), total);
  for (const auto& [key, value] : alg.table()) {
    Vec v = value;
    v.resize(total, Scalar::zero(alg.field()));
    ext.set_bracket(key_tuple(key, alg.arity()), std::move(v));
  }
  // exactly one module slot: [x_1, ..., x_{n-1}, v_j] = rho(x) v_j
  std::vector<std::size_t> tuple(alg.arity());
  for (const auto& [key, rho] : m.table()) {
    std::vector<std::size_t> t = key_tuple(key, alg.arity() - 1);
    for (std::size_t i = 0; i < t.size(); ++i) tuple[i] = t[i];
    for (std::size_t j = 0; j < vdim; ++j) {
      tuple[alg.arity() - 1] = dim + j;
      Vec v = vec_zero(alg.field(), total);
      for (std::size_t i = 0; i < vdim; ++i) v[dim + i] = rho.at(i, j);
      ext.set_bracket(tuple, std::move(v));
    }
  }
  return ext;
}

SplitExtension split_extension(const LModule& m) {
  RepReport check = validate_representation(m, true);
  if (!check.ok) throw std::invalid_argument("split extension of an invalid representation");
  const NLieAlgebra& alg = m.algebra();
  const std::size_t dim = alg.dim(), vdim = m.vdim(), total = dim + vdim;
  NLieAlgebra ext = build_split_extension_unchecked(m);
  if (!validate_jacobi(ext, true).ok)
    throw std::logic_error("split extension failed the Jacobi identity");
  Matrix embed_l(alg.field(), total, dim);
  for (std::size_t i = 0; i < dim; ++i) embed_l.at(i, i) = Scalar::one(alg.field());
  Matrix embed_v(alg.field(), total, vdim);
  for (std::size_t i = 0; i < vdim; ++i) embed_v.at(dim + i, i) = Scalar::one(alg.field());
  Subspace lpart = image(embed_l);
  Subspace vpart = image(embed_v);
  if (!is_subalgebra(ext, lpart))
    throw std::logic_error("algebra part of a split extension is not a subalgebra");
  if (!is_abelian_embedded(ext, vpart))
    throw std::logic_error("module part of a split extension is not abelian embedded");
  return {std::move(ext), std::move(embed_l), std::move(embed_v), std::move(lpart),
          std::move(vpart)};
}

Subspace rep_kernel(const LModule& m) {
  const NLieAlgebra& alg = m.algebra();
  const std::size_t dim = alg.dim(), vdim = m.vdim();
  Matrix stacked(alg.field(), 0, dim);
  std::vector<std::size_t> idx(alg.arity() - 1);
  for (const auto& y : increasing_tuples(dim, alg.arity() - 2)) {
    Matrix block(alg.field(), vdim * vdim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      idx[0] = j;
      for (std::size_t s = 0; s + 2 < alg.arity(); ++s) idx[s + 1] = y[s];
      Matrix r = m.rho_of_basis(idx);
      for (std::size_t t = 0; t < vdim * vdim; ++t) block.at(t, j) = r.entries()[t];
    }
    stacked = vstack(stacked, block);
  }
  Subspace ker = kernel(stacked);
  if (!is_ideal(alg, ker)) throw std::logic_error("representation kernel is not an ideal");
  return ker;
}

LModule adjoint_module(const NLieAlgebra& alg) {
  LModule m(alg, alg.dim());
  std::vector<Vec> args;
  for (const auto& t : increasing_tuples(alg.dim(), alg.arity() - 1)) {
    args.clear();
    for (std::size_t i : t) args.push_back(alg.basis_element(i));
    m.set_rho(t, inner_derivation(alg, args).matrix);
  }
  return m;
}

std::vector<Matrix> rho_r_span(const LModule& m, const Subspace& u, std::size_t r) {
  const NLieAlgebra& alg = m.algebra();
  if (r < 1 || r > alg.arity() - 1) throw std::invalid_argument("rho_r index out of range");
  std::vector<Matrix> out;
  if (u.dim() < r) return out;
  auto urows = u.basis_rows();
  std::vector<Vec> args;
  for (const auto& us : increasing_tuples(u.dim(), r)) {
    for (const auto& ls : increasing_tuples(alg.dim(), alg.arity() - 1 - r)) {
      args.clear();
      for (std::size_t i : us) args.push_back(urows[i]);
      for (std::size_t j : ls) args.push_back(alg.basis_element(j));
      Matrix rho = m.rho_apply(args);
      if (!rho.is_zero()) out.push_back(std::move(rho));
    }
  }
  return out;
}

bool verify_subnormal_chain(const NLieAlgebra& alg, std::span<const Subspace> chain) {
  if (chain.empty()) return false;
  if (!(chain.back() == alg.full_space())) return false;
  for (const auto& term : chain)
    if (!is_subalgebra(alg, term)) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].dim() >= chain[i + 1].dim() || !contains(chain[i + 1], chain[i])) return false;
    std::vector<std::pair<Subspace, std::size_t>> factors{
        {chain[i], 1}, {chain[i + 1], alg.arity() - 1}};
    if (!contains(chain[i], product_subspaces(alg, factors))) return false;
  }
  return true;
}

std::optional<Matrix> module_isomorphism(std::span<const Matrix> gens_a,
                                         std::span<const Matrix> gens_b) {
  if (gens_a.size() != gens_b.size())
    throw std::invalid_argument("generator lists must be aligned");
  if (!gens_a.empty() && !gens_a.front().field().is_finite())
    throw UnsupportedError("module isomorphism search requires a finite field");
  std::size_t qa = 0, qb = 0;
  FieldSpec f = FieldSpec::rationals();
  if (gens_a.empty()) return std::nullopt;  // cannot even infer shapes
  f = gens_a.front().field();
  qa = gens_a.front().rows();
  qb = gens_b.front().rows();
  if (qa != qb) return std::nullopt;
  const std::size_t q = qa;
  if (q == 0) return std::nullopt;
  // intertwiner space: phi g_a = g_b phi for every generator pair
  Matrix sys(f, gens_a.size() * q * q, q * q);
  for (std::size_t g = 0; g < gens_a.size(); ++g) {
    const Matrix& ga = gens_a[g];
    const Matrix& gb = gens_b[g];
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < q; ++c) {
        std::size_t row = g * q * q + r * q + c;
        for (std::size_t k = 0; k < q; ++k) {
          sys.at(row, r * q + k) += ga.at(k, c);
          sys.at(row, k * q + c) -= gb.at(r, k);
        }
      }
  }
  Subspace space = kernel(sys);
  if (space.is_zero()) return std::nullopt;
  // exhaustive scan of the solution space for an invertible member
  const std::uint32_t p = f.prime();
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, space.dim());
  if (count > 1 << 16) throw UnsupportedError("intertwiner space too large to scan");
  std::vector<std::uint32_t> coeff(space.dim(), 0);
  while (true) {
    std::size_t t = space.dim();
    bool carry = true;
    while (t-- > 0) {
      if (++coeff[t] < p) {
        carry = false;
        break;
      }
      coeff[t] = 0;
    }
    if (carry) break;  // all combinations tried
    Vec flat = vec_zero(f, q * q);
    for (std::size_t i = 0; i < space.dim(); ++i)
      vec_add_scaled(flat, Scalar::of(f, coeff[i]), space.row(i));
    Matrix phi(f, q, q);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < q; ++c) phi.at(r, c) = flat[r * q + c];
    if (rref(phi).rank == q) return phi;
  }
  return std::nullopt;
}

namespace {

struct Factor {
  Subspace below;
  Subspace above;
  std::vector<Matrix> actions;  // aligned with the generator list
};

// Invariant subspaces of the coordinate module, canonical order.
std::vector<Subspace> invariant_subspaces(const FieldSpec& f, std::size_t vdim,
                                          std::span<const Matrix> gens,
                                          const LatticeBudget& budget) {
  std::vector<Subspace> out;
  for (const auto& s : enumerate_subspaces(f, vdim, budget)) {
    bool invariant = true;
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < s.dim() && invariant; ++i)
        if (!s.contains_vec(g.apply(s.row(i)))) invariant = false;
      if (!invariant) break;
    }
    if (invariant) out.push_back(s);
  }
  return out;
}

// Maximal chain between two invariant subspaces; each step is minimal, hence
// a composition factor.
std::vector<std::pair<Subspace, Subspace>> composition_steps(
    const Subspace& from, const Subspace& to, std::span<const Subspace> invariant) {
  std::vector<std::pair<Subspace, Subspace>> steps;
  Subspace cur = from;
  while (!(cur == to)) {
    const Subspace* best = nullptr;
    for (const auto& s : invariant) {
      if (s.dim() <= cur.dim() || !contains(to, s) || !contains(s, cur)) continue;
      if (!best || s.dim() < best->dim()) best = &s;
    }
    if (!best) throw std::logic_error("no step in the submodule lattice");
    steps.emplace_back(cur, *best);
    cur = *best;
  }
  return steps;
}

Factor make_factor(const Subspace& below, const Subspace& above, std::span<const Matrix> gens) {
  Subspace a_in_b = [&] {
    std::vector<Vec> rows;
    for (const auto& r : below.basis_rows()) {
      auto c = above.coords_of(r);
      if (!c) throw std::logic_error("factor numerator does not contain denominator");
      rows.push_back(std::move(*c));
    }
    return Subspace::span_rows(above.field(), above.dim(), rows);
  }();
  Matrix proj = quotient_projection(a_in_b);
  std::vector<std::size_t> comp = complement_coords(a_in_b);
  Factor factor{below, above, {}};
  for (const auto& g : gens) {
    // action in `above` coordinates
    Matrix gb(above.field(), above.dim(), above.dim());
    for (std::size_t j = 0; j < above.dim(); ++j) {
      auto c = above.coords_of(g.apply(above.row(j)));
      if (!c) throw std::logic_error("generator leaves the submodule");
      for (std::size_t i = 0; i < above.dim(); ++i) gb.at(i, j) = (*c)[i];
    }
    // induced action on the quotient coordinates
    Matrix lift(above.field(), above.dim(), comp.size());
    for (std::size_t r = 0; r < comp.size(); ++r)
      lift.at(comp[r], r) = Scalar::one(above.field());
    factor.actions.push_back(proj * gb * lift);
  }
  return factor;
}

}  // namespace

std::vector<Subspace> components(const LModule& m, const Subspace& n_ideal,
                                 const LatticeBudget& budget, std::size_t level) {
  const NLieAlgebra& alg = m.algebra();
  const FieldSpec& f = alg.field();
  if (!f.is_finite()) throw UnsupportedError("component decomposition requires a finite field");
  if (!is_ideal(alg, n_ideal)) throw std::invalid_argument("components requires an ideal");
  if (level == 1) {
    if (!is_nilpotent(restrict_to(alg, n_ideal)))
      throw std::invalid_argument("components requires a nilpotent ideal");
  } else {
    // the finer decomposition needs rho_level(N) nilpotent, which follows
    // from the ideal being level-nilpotently embedded
    if (!is_k_nilpotently_embedded(alg, n_ideal, level))
      throw std::invalid_argument("finer components require a k-nilpotently embedded ideal");
  }

  std::vector<Matrix> gens = rho_r_span(m, n_ideal, level);
  const std::size_t vdim = m.vdim();
  Subspace zero = Subspace::zero(f, vdim);
  Subspace full = Subspace::full(f, vdim);
  std::vector<Subspace> invariant = invariant_subspaces(f, vdim, gens, budget);

  if (vdim == 0) return {};
  if (gens.empty()) return {full};  // N acts by zero: V is a single component

  // composition factors of V and their isomorphism classes
  auto steps = composition_steps(zero, full, invariant);
  std::vector<Factor> factors;
  for (const auto& [below, above] : steps) factors.push_back(make_factor(below, above, gens));
  std::vector<std::size_t> class_of(factors.size());
  std::vector<const Factor*> reps;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    bool matched = false;
    for (std::size_t c = 0; c < reps.size() && !matched; ++c)
      if (module_isomorphism(reps[c]->actions, factors[i].actions)) {
        class_of[i] = c;
        matched = true;
      }
    if (!matched) {
      class_of[i] = reps.size();
      reps.push_back(&factors[i]);
    }
  }

  auto classes_of_span = [&](const Subspace& from, const Subspace& to) {
    std::vector<std::size_t> classes;
    for (const auto& [below, above] : composition_steps(from, to, invariant)) {
      Factor fac = make_factor(below, above, gens);
      std::size_t cls = reps.size();
      for (std::size_t c = 0; c < reps.size(); ++c)
        if (module_isomorphism(reps[c]->actions, fac.actions)) {
          cls = c;
          break;
        }
      classes.push_back(cls);
    }
    return classes;
  };

  // the class-c component is the sum of the submodules all of whose factors
  // lie in class c
  std::vector<Subspace> comps;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    Subspace comp = zero;
    for (const auto& w : invariant) {
      if (w.is_zero()) continue;
      auto classes = classes_of_span(zero, w);
      bool pure = true;
      for (std::size_t cls : classes)
        if (cls != c) pure = false;
      if (pure) comp = sum(comp, w);
    }
    comps.push_back(comp);
  }

  // verify the decomposition is direct, exhaustive, and class-separated
  Subspace total = zero;
  std::size_t dim_sum = 0;
  for (const auto& comp : comps) {
    total = sum(total, comp);
    dim_sum += comp.dim();
  }
  if (!(total == full) || dim_sum != vdim)
    throw std::logic_error("components do not decompose the module");
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t d = c + 1; d < comps.size(); ++d)
      if (!intersect(comps[c], comps[d]).is_zero())
        throw std::logic_error("components intersect nontrivially");
    for (std::size_t cls : classes_of_span(comps[c], full))
      if (cls == c) throw std::logic_error("component class recurs above the component");
    // components are submodules for the whole algebra, not just for N
    for (const auto& [key, rho] : m.table())
      for (std::size_t i = 0; i < comps[c].dim(); ++i)
        if (!comps[c].contains_vec(rho.apply(comps[c].row(i))))
          throw std::logic_error("component is not a full submodule");
  }
  return comps;
}

std::vector<Subspace> components(const LModule& m, const Subspace& n_ideal) {
  return components(m, n_ideal, LatticeBudget{});
}

}  // namespace nlie
