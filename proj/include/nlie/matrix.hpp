#ifndef NLIE_MATRIX_HPP
#define NLIE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nlie/field.hpp"

namespace nlie {

// Dense matrix over one FieldSpec.  All arithmetic is exact.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vec>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix pow(std::size_t k) const;

  bool operator==(const Matrix& o) const = default;

  // Flatten row-major; used to treat matrices as vectors of a linear space.
  const std::vector<Scalar>& entries() const { return e_; }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Unique reduced row echelon form.
RrefResult rref(const Matrix& m);

// One solution of m * x = b, or nullopt if inconsistent (free vars set to 0).
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Matrix vstack(const Matrix& top, const Matrix& bottom);

}  // namespace nlie

#endif
