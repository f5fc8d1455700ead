#include "nlie/algebra.hpp"

#include <stdexcept>

namespace nlie {

namespace {

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

}  // namespace

NLieAlgebra::NLieAlgebra(const FieldSpec& f, std::size_t n, std::size_t dim,
                         std::vector<std::string> basis_names)
    : field_(f), n_(n), dim_(dim), basis_names_(std::move(basis_names)) {
  if (n < 2) throw std::invalid_argument("arity must be at least 2");
  if (dim > 200) throw std::invalid_argument("dimension too large");
  if (basis_names_.empty()) basis_names_ = default_names(dim);
  if (basis_names_.size() != dim) throw std::invalid_argument("basis name count mismatch");
}

void NLieAlgebra::set_bracket(std::span<const std::size_t> tuple, Vec value) {
  if (tuple.size() != n_) throw std::invalid_argument("tuple length must equal arity");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= dim_) throw std::invalid_argument("tuple index out of range");
    if (i > 0 && tuple[i - 1] >= tuple[i])
      throw std::invalid_argument("tuple must be strictly increasing");
  }
  if (value.size() != dim_) throw std::invalid_argument("value length mismatch");
  for (const auto& c : value)
    if (!(c.field() == field_)) throw std::invalid_argument("value field mismatch");
  std::uint64_t key = tuple_key(tuple);
  if (vec_is_zero(value))
    sc_.erase(key);
  else
    sc_[key] = std::move(value);
}

Vec NLieAlgebra::bracket_of_basis(std::span<const std::size_t> idx) const {
  if (idx.size() != n_) throw std::invalid_argument("tuple length must equal arity");
  std::vector<std::size_t> sorted(idx.begin(), idx.end());
  int sign = sort_with_sign(sorted);
  if (sign == 0) return vec_zero(field_, dim_);
  auto it = sc_.find(tuple_key(sorted));
  if (it == sc_.end()) return vec_zero(field_, dim_);
  return sign == 1 ? it->second : vec_scale(Scalar::of(field_, -1), it->second);
}

bool NLieAlgebra::operator==(const NLieAlgebra& o) const {
  return field_ == o.field_ && n_ == o.n_ && dim_ == o.dim_ &&
         basis_names_ == o.basis_names_ && sc_ == o.sc_;
}

Vec bracket(const NLieAlgebra& alg, std::span<const Vec> args) {
  if (args.size() != alg.arity()) throw std::invalid_argument("bracket needs n arguments");
  for (const auto& a : args)
    if (a.size() != alg.dim()) throw std::invalid_argument("element dimension mismatch");
  Vec result = vec_zero(alg.field(), alg.dim());
  const auto& table = alg.table();
  for_each_support_combo(args, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> sorted = idx;
    int sign = sort_with_sign(sorted);
    if (sign == 0) return;
    auto it = table.find(tuple_key(sorted));
    if (it == table.end()) return;
    Scalar c = Scalar::of(alg.field(), sign);
    for (std::size_t i = 0; i < idx.size(); ++i) c *= args[i][idx[i]];
    vec_add_scaled(result, c, it->second);
  });
  return result;
}

Matrix recompute_provenance(const NLieAlgebra& alg, const DerivationMatrix& d) {
  if (!d.provenance) throw std::invalid_argument("derivation has no provenance");
  Matrix m(alg.field(), alg.dim(), alg.dim());
  for (const auto& term : *d.provenance)
    m = m + inner_derivation(alg, term.string_args).matrix.scaled(term.coeff);
  return m;
}

JacobiReport validate_jacobi(const NLieAlgebra& alg, bool fail_fast) {
  JacobiReport report;
  const std::size_t n = alg.arity(), dim = alg.dim();
  // Multilinearity and built-in alternation make increasing basis tuples
  // sufficient.
  auto xs = increasing_tuples(dim, n);
  auto ys = increasing_tuples(dim, n - 1);
  std::vector<Vec> outer;
  for (const auto& x : xs) {
    Vec inner_x = alg.bracket_of_basis(x);
    for (const auto& y : ys) {
      // left side: [[x...], y...]
      outer.clear();
      outer.push_back(inner_x);
      for (std::size_t j : y) outer.push_back(alg.basis_element(j));
      Vec lhs = bracket(alg, outer);
      // right side: sum over slots of [x1, ..., [xi, y...], ..., xn]
      Vec rhs = vec_zero(alg.field(), dim);
      std::vector<std::size_t> inner_idx(n);
      for (std::size_t i = 0; i < n; ++i) {
        inner_idx[0] = x[i];
        for (std::size_t j = 0; j < n - 1; ++j) inner_idx[j + 1] = y[j];
        Vec w = alg.bracket_of_basis(inner_idx);
        if (vec_is_zero(w)) continue;
        outer.clear();
        for (std::size_t s = 0; s < n; ++s)
          outer.push_back(s == i ? w : alg.basis_element(x[s]));
        rhs = vec_add(rhs, bracket(alg, outer));
      }
      Vec defect = vec_sub(lhs, rhs);
      if (!vec_is_zero(defect)) {
        report.ok = false;
        report.violations.push_back({x, y, std::move(defect)});
        if (fail_fast) return report;
      }
    }
  }
  return report;
}

DerivationMatrix inner_derivation(const NLieAlgebra& alg, std::span<const Vec> string_args) {
  if (string_args.size() + 1 != alg.arity())
    throw std::invalid_argument("inner derivation needs n-1 arguments");
  Matrix m(alg.field(), alg.dim(), alg.dim());
  std::vector<Vec> args(string_args.begin(), string_args.end());
  args.push_back(vec_zero(alg.field(), alg.dim()));
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    args.back() = alg.basis_element(j);
    Vec col = bracket(alg, args);
    for (std::size_t i = 0; i < alg.dim(); ++i) m.at(i, j) = col[i];
  }
  DerivationTerm term{Scalar::one(alg.field()), {string_args.begin(), string_args.end()}};
  return {std::move(m), std::vector<DerivationTerm>{std::move(term)}};
}

std::vector<DerivationMatrix> derivation_span(const NLieAlgebra& alg, const Subspace& u) {
  std::vector<DerivationMatrix> out;
  if (alg.arity() - 1 > u.dim()) return out;
  auto rows = u.basis_rows();
  for (const auto& t : increasing_tuples(u.dim(), alg.arity() - 1)) {
    std::vector<Vec> string_args;
    string_args.reserve(t.size());
    for (std::size_t i : t) string_args.push_back(rows[i]);
    out.push_back(inner_derivation(alg, string_args));
  }
  return out;
}

bool is_derivation(const NLieAlgebra& alg, const Matrix& d) {
  if (d.rows() != alg.dim() || d.cols() != alg.dim())
    throw std::invalid_argument("derivation matrix shape mismatch");
  const std::size_t n = alg.arity();
  std::vector<Vec> args;
  for (const auto& x : increasing_tuples(alg.dim(), n)) {
    Vec lhs = d.apply(alg.bracket_of_basis(x));
    Vec rhs = vec_zero(alg.field(), alg.dim());
    for (std::size_t i = 0; i < n; ++i) {
      args.clear();
      for (std::size_t s = 0; s < n; ++s)
        args.push_back(s == i ? d.col(x[s]) : alg.basis_element(x[s]));
      rhs = vec_add(rhs, bracket(alg, args));
    }
    if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
  }
  return true;
}

Subspace product_subspaces(const NLieAlgebra& alg, std::span<const Subspace> factors) {
  if (factors.size() != alg.arity())
    throw std::invalid_argument("product needs n factors");
  for (const auto& f : factors)
    if (f.ambient() != alg.dim() || !(f.field() == alg.field()))
      throw std::invalid_argument("factor ambient mismatch");
  std::vector<std::vector<Vec>> rows;
  rows.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.dim() == 0) return alg.zero_space();
    rows.push_back(f.basis_rows());
  }
  std::vector<Vec> generators;
  std::vector<std::size_t> pos(factors.size(), 0);
  std::vector<Vec> args(factors.size(), vec_zero(alg.field(), alg.dim()));
  while (true) {
    for (std::size_t i = 0; i < factors.size(); ++i) args[i] = rows[i][pos[i]];
    Vec w = bracket(alg, args);
    if (!vec_is_zero(w)) generators.push_back(std::move(w));
    std::size_t i = factors.size();
    bool done = true;
    while (i-- > 0) {
      if (++pos[i] < rows[i].size()) {
        done = false;
        break;
      }
      pos[i] = 0;
      if (i == 0) break;
    }
    if (done) break;
  }
  return Subspace::span_rows(alg.field(), alg.dim(), generators);
}

Subspace product_subspaces(const NLieAlgebra& alg,
                           std::span<const std::pair<Subspace, std::size_t>> factors) {
  std::vector<Subspace> expanded;
  for (const auto& [sub, count] : factors)
    for (std::size_t i = 0; i < count; ++i) expanded.push_back(sub);
  return product_subspaces(alg, expanded);
}

Subspace dot(const NLieAlgebra& alg, const Subspace& a, const Subspace& b) {
  std::vector<std::pair<Subspace, std::size_t>> factors{
      {a, 1}, {b, 1}, {alg.full_space(), alg.arity() - 2}};
  return product_subspaces(alg, factors);
}

bool is_subalgebra(const NLieAlgebra& alg, const Subspace& k) {
  std::vector<std::pair<Subspace, std::size_t>> factors{{k, alg.arity()}};
  return contains(k, product_subspaces(alg, factors));
}

bool is_ideal(const NLieAlgebra& alg, const Subspace& k) {
  std::vector<std::pair<Subspace, std::size_t>> factors{
      {k, 1}, {alg.full_space(), alg.arity() - 1}};
  return contains(k, product_subspaces(alg, factors));
}

Subspace subalgebra_closure(const NLieAlgebra& alg, const Subspace& s) {
  Subspace cur = s;
  while (true) {
    std::vector<std::pair<Subspace, std::size_t>> factors{{cur, alg.arity()}};
    Subspace next = sum(cur, product_subspaces(alg, factors));
    if (next == cur) return cur;
    cur = next;
  }
}

QuotientResult quotient(const NLieAlgebra& alg, const Subspace& k) {
  if (!is_ideal(alg, k)) throw std::invalid_argument("quotient by a non-ideal");
  Matrix proj = quotient_projection(k);
  std::vector<std::size_t> comp = complement_coords(k);
  const std::size_t q = comp.size();
  NLieAlgebra result(alg.field(), alg.arity(), q);
  std::vector<std::size_t> lifted(alg.arity());
  for (const auto& t : increasing_tuples(q, alg.arity())) {
    for (std::size_t i = 0; i < t.size(); ++i) lifted[i] = comp[t[i]];
    Vec w = proj.apply(alg.bracket_of_basis(lifted));
    result.set_bracket(t, std::move(w));
  }
  if (!validate_jacobi(result, true).ok)
    throw std::logic_error("quotient by an ideal failed the Jacobi identity");
  return {std::move(result), std::move(proj)};
}

Subspace center(const NLieAlgebra& alg) {
  Matrix stacked(alg.field(), 0, alg.dim());
  for (const auto& d : derivation_span(alg, alg.full_space()))
    stacked = vstack(stacked, d.matrix);
  return kernel(stacked);
}

Subspace centralizer(const NLieAlgebra& alg, const Subspace& a) {
  if (!is_ideal(alg, a)) throw std::invalid_argument("centralizer requires an ideal");
  Matrix stacked(alg.field(), 0, alg.dim());
  std::vector<Vec> string_args;
  for (const auto& arow : a.basis_rows()) {
    for (const auto& t : increasing_tuples(alg.dim(), alg.arity() - 2)) {
      string_args.clear();
      string_args.push_back(arow);
      for (std::size_t j : t) string_args.push_back(alg.basis_element(j));
      stacked = vstack(stacked, inner_derivation(alg, string_args).matrix);
    }
  }
  return kernel(stacked);
}

Subspace normalizer(const NLieAlgebra& alg, const Subspace& u) {
  if (!is_subalgebra(alg, u)) throw std::invalid_argument("normalizer requires a subalgebra");
  Matrix proj = quotient_projection(u);
  Matrix stacked(alg.field(), 0, alg.dim());
  auto rows = u.basis_rows();
  if (u.dim() >= alg.arity() - 1) {
    std::vector<Vec> args(alg.arity(), vec_zero(alg.field(), alg.dim()));
    for (const auto& t : increasing_tuples(u.dim(), alg.arity() - 1)) {
      // columns of m: [e_j, u_1, ..., u_{n-1}], condition proj(m x) = 0
      Matrix m(alg.field(), alg.dim(), alg.dim());
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        args[0] = alg.basis_element(j);
        for (std::size_t i = 0; i < t.size(); ++i) args[i + 1] = rows[t[i]];
        Vec col = bracket(alg, args);
        for (std::size_t i = 0; i < alg.dim(); ++i) m.at(i, j) = col[i];
      }
      stacked = vstack(stacked, proj * m);
    }
  }
  return kernel(stacked);
}

bool is_abelian(const NLieAlgebra& alg) {
  std::vector<std::pair<Subspace, std::size_t>> factors{{alg.full_space(), alg.arity()}};
  return product_subspaces(alg, factors).is_zero();
}

bool is_abelian_embedded(const NLieAlgebra& alg, const Subspace& a) {
  if (!is_ideal(alg, a)) throw std::invalid_argument("abelian embedding requires an ideal");
  std::vector<std::pair<Subspace, std::size_t>> factors{
      {a, 2}, {alg.full_space(), alg.arity() - 2}};
  return product_subspaces(alg, factors).is_zero();
}

NLieAlgebra reduce_fix_element(const NLieAlgebra& alg, const Vec& a) {
  if (alg.arity() == 2) throw std::invalid_argument("reduction requires arity > 2");
  if (a.size() != alg.dim()) throw std::invalid_argument("element dimension mismatch");
  NLieAlgebra result(alg.field(), alg.arity() - 1, alg.dim(), alg.basis_names());
  std::vector<Vec> args;
  for (const auto& t : increasing_tuples(alg.dim(), alg.arity() - 1)) {
    args.clear();
    for (std::size_t i : t) args.push_back(alg.basis_element(i));
    args.push_back(a);
    result.set_bracket(t, bracket(alg, args));
  }
  if (!validate_jacobi(result, true).ok)
    throw std::logic_error("fixed-slot reduction failed the Jacobi identity");
  return result;
}

NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b) {
  if (!(a.field() == b.field()) || a.arity() != b.arity())
    throw std::invalid_argument("direct sum needs matching field and arity");
  const std::size_t da = a.dim(), db = b.dim();
  NLieAlgebra result(a.field(), a.arity(), da + db);
  for (const auto& [key, value] : a.table()) {
    Vec v = value;
    v.resize(da + db, Scalar::zero(a.field()));
    result.set_bracket(key_tuple(key, a.arity()), std::move(v));
  }
  for (const auto& [key, value] : b.table()) {
    std::vector<std::size_t> t = key_tuple(key, b.arity());
    for (auto& i : t) i += da;
    Vec v = vec_zero(a.field(), da);
    v.insert(v.end(), value.begin(), value.end());
    result.set_bracket(t, std::move(v));
  }
  if (!validate_jacobi(result, true).ok)
    throw std::logic_error("direct sum failed the Jacobi identity");
  return result;
}

NLieAlgebra restrict_to(const NLieAlgebra& alg, const Subspace& s) {
  if (!is_subalgebra(alg, s)) throw std::invalid_argument("restriction requires a subalgebra");
  NLieAlgebra result(alg.field(), alg.arity(), s.dim());
  auto rows = s.basis_rows();
  std::vector<Vec> args;
  for (const auto& t : increasing_tuples(s.dim(), alg.arity())) {
    args.clear();
    for (std::size_t i : t) args.push_back(rows[i]);
    Vec w = bracket(alg, args);
    auto coords = s.coords_of(w);
    if (!coords) throw std::logic_error("restriction: bracket left the subalgebra");
    result.set_bracket(t, std::move(*coords));
  }
  return result;
}

}  // namespace nlie
