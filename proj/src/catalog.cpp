#include "nlie/catalog.hpp"

#include <stdexcept>

#include "nlie/error.hpp"
#include "nlie/latticescan.hpp"
#include "nlie/repmod.hpp"
#include "nlie/series.hpp"

namespace nlie {

namespace {

NLieAlgebra validated(NLieAlgebra alg, const char* what) {
  if (!validate_jacobi(alg, true).ok)
    throw std::logic_error(std::string(what) + " failed the Jacobi identity");
  return alg;
}

std::size_t param_size(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter: " + key);
  return std::stoul(it->second);
}

}  // namespace

NLieAlgebra catalog_abelian(const FieldSpec& f, std::size_t arity, std::size_t dim) {
  return NLieAlgebra(f, arity, dim);
}

NLieAlgebra catalog_heisenberg(const FieldSpec& f, std::size_t n) {
  NLieAlgebra alg(f, n, n + 1);
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  alg.set_bracket(t, basis_vec(f, n + 1, n));
  return validated(std::move(alg), "heis");
}

NLieAlgebra catalog_affine(const FieldSpec& f, std::size_t n) {
  NLieAlgebra alg(f, n, n);
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  alg.set_bracket(t, basis_vec(f, n, n - 1));
  return validated(std::move(alg), "aff");
}

NLieAlgebra catalog_cross(const FieldSpec& f, std::size_t n) {
  NLieAlgebra alg(f, n, n + 1);
  std::vector<std::size_t> t(n);
  for (std::size_t omitted = 0; omitted < n + 1; ++omitted) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n + 1; ++i)
      if (i != omitted) t[s++] = i;
    // paper-style index i = omitted+1 in 1..n+1: sign (-1)^{n+1-i}
    long sign = ((n - omitted) % 2 == 1) ? -1 : 1;
    Vec v = vec_zero(f, n + 1);
    v[omitted] = Scalar::of(f, sign);
    alg.set_bracket(t, std::move(v));
  }
  return validated(std::move(alg), "cross");
}

NLieAlgebra catalog(const std::string& name, const std::map<std::string, std::string>& params) {
  FieldSpec f = FieldSpec::rationals();
  auto field_it = params.find("field");
  if (field_it != params.end() && field_it->second != "Q") {
    if (field_it->second != "GF") throw std::invalid_argument("unknown field kind");
    f = FieldSpec::gf(static_cast<std::uint32_t>(param_size(params, "p")));
  }
  if (name == "abelian") return catalog_abelian(f, param_size(params, "n"), param_size(params, "d"));
  if (name == "heis") return catalog_heisenberg(f, param_size(params, "n"));
  if (name == "aff") return catalog_affine(f, param_size(params, "n"));
  if (name == "cross") return catalog_cross(f, param_size(params, "n"));
  throw std::invalid_argument("unknown catalog name: " + name);
}

namespace {

void push_member(std::vector<NLieAlgebra>& out, NLieAlgebra alg, const CorpusLimits& limits) {
  if (out.size() >= limits.max_members || alg.dim() > limits.max_dim) return;
  out.push_back(std::move(alg));
}

}  // namespace

std::vector<NLieAlgebra> corpus(std::uint64_t seed, const FieldSpec& f,
                                const CorpusLimits& limits) {
  std::vector<NLieAlgebra> out;
  if (limits.arities.empty()) return out;

  // catalog layer
  for (std::size_t d = 1; d <= std::min<std::size_t>(3, limits.max_dim); ++d)
    push_member(out, catalog_abelian(f, limits.arities.front(), d), limits);
  for (std::size_t n : limits.arities) {
    if (n + 1 <= limits.max_dim) push_member(out, catalog_heisenberg(f, n), limits);
    if (n <= limits.max_dim) push_member(out, catalog_affine(f, n), limits);
    if (n + 1 <= limits.max_dim) push_member(out, catalog_cross(f, n), limits);
  }

  // direct sums of earlier members of matching arity
  const std::size_t base_count = out.size();
  for (std::size_t i = 0; i < base_count; ++i)
    for (std::size_t j = i; j < base_count; ++j) {
      if (out[i].arity() != out[j].arity()) continue;
      if (out[i].dim() + out[j].dim() > limits.max_dim) continue;
      if (out[i].dim() == 0 || out[j].dim() == 0) continue;
      push_member(out, direct_sum(out[i], out[j]), limits);
    }

  // quotients by the first nonzero proper ideal (finite fields)
  if (f.is_finite()) {
    for (std::size_t i = 0; i < base_count; ++i) {
      if (out.size() >= limits.max_members) break;
      try {
        for (const auto& ideal : enumerate_ideals(out[i])) {
          if (ideal.is_zero() || ideal.dim() == out[i].dim()) continue;
          QuotientResult q = quotient(out[i], ideal);
          if (q.algebra.dim() == 0) continue;
          push_member(out, std::move(q.algebra), limits);
          break;
        }
      } catch (const UnsupportedError&) {
        // ideal scan past budget: skip this member
      }
    }
  }

  // fixed-slot reductions of higher-arity members
  for (std::size_t i = 0; i < base_count; ++i) {
    if (out[i].arity() < 3 || out[i].dim() == 0) continue;
    push_member(out, reduce_fix_element(out[i], out[i].basis_element(out[i].dim() - 1)), limits);
  }

  // random split extensions: random rho tables, rejection-filtered
  std::mt19937_64 rng(seed);
  const std::size_t attempt_cap = 500;
  for (std::size_t n : limits.arities) {
    for (std::size_t vdim = 1; vdim <= 2; ++vdim) {
      if (out.size() >= limits.max_members) break;
      std::size_t base_dim = n - 1;
      if (base_dim + vdim > limits.max_dim || base_dim == 0) continue;
      NLieAlgebra base = catalog_abelian(f, n, base_dim);
      for (std::size_t attempt = 0; attempt < attempt_cap; ++attempt) {
        LModule m(base, vdim);
        for (const auto& t : increasing_tuples(base_dim, n - 1)) {
          Matrix r(f, vdim, vdim);
          for (std::size_t a = 0; a < vdim; ++a)
            for (std::size_t b = 0; b < vdim; ++b)
              r.at(a, b) = random_element(f, 1, rng)[0];
          m.set_rho(t, std::move(r));
        }
        if (!validate_representation(m, true).ok) continue;
        push_member(out, split_extension(m).algebra, limits);
        break;
      }
    }
  }

  for (const auto& alg : out)
    if (!validate_jacobi(alg, true).ok) throw std::logic_error("corpus member failed validation");
  return out;
}

}  // namespace nlie
