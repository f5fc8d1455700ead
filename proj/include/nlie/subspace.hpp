#ifndef NLIE_SUBSPACE_HPP
#define NLIE_SUBSPACE_HPP

#include <optional>
#include <span>
#include <vector>

#include "nlie/matrix.hpp"

namespace nlie {

// A subspace of F^ambient, held as its unique RREF basis with no zero rows.
// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  static Subspace span(const Matrix& rows);
  static Subspace span_rows(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& rows);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec row(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_rows() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool contains_vec(const Vec& v) const;
  // Coordinates of v in this basis, or nullopt if v lies outside.
  std::optional<Vec> coords_of(const Vec& v) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& outer, const Subspace& inner);

Subspace kernel(const Matrix& m);  // {v : m v = 0}
Subspace image(const Matrix& m);   // column space

struct FittingSplit {
  Subspace null_part;        // ker(d^t), t = size
  Subspace invertible_part;  // im(d^t); d restricts to a bijection on it
};
FittingSplit fitting_split(const Matrix& d);

bool is_nilpotent_matrix(const Matrix& d);

// Coefficients c with target = sum c_i gens[i], or nullopt.
std::optional<Vec> member_of_span(std::span<const Matrix> gens, const Matrix& target);

// Projection L -> L/U onto the coordinates complementary to U's pivots,
// as a (ambient - dim U) x ambient matrix.  Rows correspond to the non-pivot
// coordinates in increasing order.
Matrix quotient_projection(const Subspace& u);
// The non-pivot coordinate indices, i.e. the lift positions of the quotient.
std::vector<std::size_t> complement_coords(const Subspace& u);

// Deterministic total order: by dimension, then row-major entry comparison.
std::strong_ordering compare_subspaces(const Subspace& a, const Subspace& b);

// Rows of `inner` (given in coordinates of `outer`'s basis) mapped into the
// ambient space of `outer`.
Subspace lift_through(const Subspace& inner, const Subspace& outer);

}  // namespace nlie

#endif
