#include "nlie/subspace.hpp"

#include <stdexcept>

namespace nlie {

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  return Subspace(ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::span(const Matrix& rows) {
  RrefResult r = rref(rows);
  Matrix basis(rows.field(), r.rank, rows.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.mat.at(i, j);
  return Subspace(rows.cols(), std::move(basis), std::move(r.pivots));
}

Subspace Subspace::span_rows(const FieldSpec& f, std::size_t ambient,
                             const std::vector<Vec>& rows) {
  return span(Matrix::from_rows(f, ambient, rows));
}

std::vector<Vec> Subspace::basis_rows() const {
  std::vector<Vec> rows;
  rows.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(row(i));
  return rows;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  // RREF basis: the coordinate along row i is v at that row's pivot column.
  Vec c;
  c.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) c.push_back(v[pivots_[i]]);
  Vec residual = v;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= c[i] * basis_.at(i, j);
  if (!vec_is_zero(residual)) return std::nullopt;
  return c;
}

bool Subspace::contains_vec(const Vec& v) const { return coords_of(v).has_value(); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw std::invalid_argument("ambient mismatch");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw std::invalid_argument("ambient mismatch");
  // x in both spans iff x = u^T A = v^T B; solve A^T u = B^T v via the kernel
  // of [A^T | -B^T].
  const std::size_t ra = a.dim(), rb = b.dim();
  Matrix m(a.field(), a.ambient(), ra + rb);
  for (std::size_t i = 0; i < a.ambient(); ++i) {
    for (std::size_t j = 0; j < ra; ++j) m.at(i, j) = a.basis().at(j, i);
    for (std::size_t j = 0; j < rb; ++j) m.at(i, ra + j) = -b.basis().at(j, i);
  }
  Subspace k = kernel(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vec uv = k.row(i);
    Vec x = vec_zero(a.field(), a.ambient());
    for (std::size_t j = 0; j < ra; ++j) vec_add_scaled(x, uv[j], a.row(j));
    rows.push_back(std::move(x));
  }
  return Subspace::span_rows(a.field(), a.ambient(), rows);
}

bool contains(const Subspace& outer, const Subspace& inner) {
  if (inner.dim() > outer.dim()) return false;
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!outer.contains_vec(inner.row(i))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = vec_zero(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    rows.push_back(std::move(v));
  }
  return Subspace::span_rows(m.field(), m.cols(), rows);
}

Subspace image(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) rows.push_back(m.col(j));
  return Subspace::span_rows(m.field(), m.rows(), rows);
}

FittingSplit fitting_split(const Matrix& d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("fitting_split of non-square matrix");
  Matrix dt = d.pow(d.rows());
  return {kernel(dt), image(dt)};
}

bool is_nilpotent_matrix(const Matrix& d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("nilpotency of non-square matrix");
  return d.pow(d.rows()).is_zero();
}

std::optional<Vec> member_of_span(std::span<const Matrix> gens, const Matrix& target) {
  const std::size_t len = target.rows() * target.cols();
  Matrix sys(target.field(), len, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].rows() != target.rows() || gens[g].cols() != target.cols())
      throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < len; ++i) sys.at(i, g) = gens[g].entries()[i];
  }
  return solve(sys, target.entries());
}

Matrix quotient_projection(const Subspace& u) {
  std::vector<std::size_t> comp = complement_coords(u);
  Matrix proj(u.field(), comp.size(), u.ambient());
  // reduce mod u, then read the complementary coordinates
  for (std::size_t r = 0; r < comp.size(); ++r) {
    proj.at(r, comp[r]) = Scalar::one(u.field());
    for (std::size_t i = 0; i < u.dim(); ++i)
      proj.at(r, u.pivots()[i]) -= u.basis().at(i, comp[r]);
  }
  return proj;
}

std::vector<std::size_t> complement_coords(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient(), false);
  for (std::size_t p : u.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < u.ambient(); ++j)
    if (!is_pivot[j]) comp.push_back(j);
  return comp;
}

std::strong_ordering compare_subspaces(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.basis().entries().size(); ++i) {
    auto c = a.basis().entries()[i].compare(b.basis().entries()[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

Subspace lift_through(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient() != outer.dim()) throw std::invalid_argument("coordinate mismatch");
  return Subspace::span(inner.basis() * outer.basis());
}

}  // namespace nlie
