// Test-only oracles, kept independent of the library's increasing-tuple
// bracket path.
#ifndef NLIE_TEST_ORACLES_HPP
#define NLIE_TEST_ORACLES_HPP

#include <map>
#include <vector>

#include "nlie/algebra.hpp"

namespace nlie::testing {

// Full structure tensor on all ordered basis n-tuples, antisymmetrised
// explicitly from the stored table.
class FullTensor {
 public:
  explicit FullTensor(const NLieAlgebra& alg) : alg_(&alg) {
    const std::size_t n = alg.arity(), dim = alg.dim();
    std::vector<std::size_t> idx(n, 0);
    if (dim == 0) return;
    while (true) {
      table_[flat(idx)] = alg.bracket_of_basis(idx);
      std::size_t i = n;
      bool done = true;
      while (i-- > 0) {
        if (++idx[i] < dim) {
          done = false;
          break;
        }
        idx[i] = 0;
        if (i == 0) break;
      }
      if (done) break;
    }
  }

  const Vec& value(const std::vector<std::size_t>& idx) const { return table_.at(flat(idx)); }

  // [w, e_{y_1}, ..., e_{y_{n-1}}] expanded through the tensor only.
  Vec bracket_left(const Vec& w, const std::vector<std::size_t>& y) const {
    Vec out = vec_zero(alg_->field(), alg_->dim());
    std::vector<std::size_t> idx(alg_->arity());
    for (std::size_t j = 0; j + 1 < alg_->arity(); ++j) idx[j + 1] = y[j];
    for (std::size_t i = 0; i < alg_->dim(); ++i) {
      if (w[i].is_zero()) continue;
      idx[0] = i;
      vec_add_scaled(out, w[i], value(idx));
    }
    return out;
  }

 private:
  std::size_t flat(const std::vector<std::size_t>& idx) const {
    std::size_t f = 0;
    for (std::size_t i : idx) f = f * alg_->dim() + i;
    return f;
  }
  const NLieAlgebra* alg_;
  std::map<std::size_t, Vec> table_;
};

// Checks the generalised Jacobi identity over ALL ordered tuples, not just
// increasing ones, recomputing every bracket from the full tensor.
inline bool jacobi_holds_brute_force(const NLieAlgebra& alg) {
  const std::size_t n = alg.arity(), dim = alg.dim();
  if (dim == 0) return true;
  FullTensor tensor(alg);

  std::vector<std::size_t> x(n, 0), y(n - 1, 0);
  auto advance = [dim](std::vector<std::size_t>& t) {
    std::size_t i = t.size();
    while (i-- > 0) {
      if (++t[i] < dim) return true;
      t[i] = 0;
    }
    return false;
  };
  do {
    std::fill(y.begin(), y.end(), 0);
    do {
      Vec lhs = tensor.bracket_left(tensor.value(x), y);
      Vec rhs = vec_zero(alg.field(), dim);
      std::vector<std::size_t> inner(n), outer(n);
      for (std::size_t i = 0; i < n; ++i) {
        inner[0] = x[i];
        for (std::size_t j = 0; j + 1 < n; ++j) inner[j + 1] = y[j];
        const Vec& w = tensor.value(inner);
        // [x_1, ..., w at slot i, ..., x_n] via the tensor
        for (std::size_t b = 0; b < dim; ++b) {
          if (w[b].is_zero()) continue;
          for (std::size_t s = 0; s < n; ++s) outer[s] = (s == i) ? b : x[s];
          vec_add_scaled(rhs, w[b], tensor.value(outer));
        }
      }
      if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
    } while (advance(y));
  } while (advance(x));
  return true;
}

}  // namespace nlie::testing

#endif
