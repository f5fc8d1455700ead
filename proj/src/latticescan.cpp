#include "nlie/latticescan.hpp"

#include <algorithm>
#include <future>

#include "nlie/error.hpp"
#include "nlie/repmod.hpp"
#include "nlie/series.hpp"

namespace nlie {

namespace {

mpz_class gaussian_binomial(std::size_t d, std::size_t k, std::uint32_t p) {
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class pn, pd;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, d - i);
    mpz_ui_pow_ui(pd.get_mpz_t(), p, i + 1);
    num *= pn - 1;
    den *= pd - 1;
  }
  return num / den;
}

void check_budget(const FieldSpec& f, std::size_t ambient, const LatticeBudget& budget) {
  if (!f.is_finite())
    throw UnsupportedError("subspace enumeration requires a finite field");
  mpz_class points;
  mpz_ui_pow_ui(points.get_mpz_t(), f.prime(), ambient);
  if (points > budget.max_points)
    throw UnsupportedError("enumeration budget exceeded: p^dim too large");
  mpz_class total = 0;
  for (std::size_t k = 0; k <= ambient; ++k) total += gaussian_binomial(ambient, k, f.prime());
  if (total > budget.max_subspaces)
    throw UnsupportedError("enumeration budget exceeded: too many subspaces");
}

nlohmann::ordered_json subspace_json(const Subspace& s) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < s.ambient(); ++j) row.push_back(s.basis().at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::uint64_t subspace_count(const FieldSpec& f, std::size_t ambient) {
  if (!f.is_finite()) throw UnsupportedError("subspace count over an infinite field");
  mpz_class total = 0;
  for (std::size_t k = 0; k <= ambient; ++k) total += gaussian_binomial(ambient, k, f.prime());
  if (!total.fits_ulong_p() || total > mpz_class(std::uint64_t{1} << 62))
    throw UnsupportedError("subspace count overflow");
  return total.get_ui();
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, std::size_t ambient,
                                          const LatticeBudget& budget) {
  check_budget(f, ambient, budget);
  const std::uint32_t p = f.prime();
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= ambient; ++k) {
    for (const auto& pivots : increasing_tuples(ambient, k)) {
      std::vector<bool> is_pivot(ambient, false);
      for (std::size_t c : pivots) is_pivot[c] = true;
      // free entries of the RREF shape: right of the row's pivot, not in a
      // pivot column
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = pivots[i] + 1; j < ambient; ++j)
          if (!is_pivot[j]) free_pos.emplace_back(i, j);
      std::vector<std::uint32_t> vals(free_pos.size(), 0);
      while (true) {
        Matrix basis(f, k, ambient);
        for (std::size_t i = 0; i < k; ++i) basis.at(i, pivots[i]) = Scalar::one(f);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          basis.at(free_pos[t].first, free_pos[t].second) = Scalar::of(f, vals[t]);
        out.push_back(Subspace::span(basis));
        std::size_t t = free_pos.size();
        bool carry = true;
        while (t-- > 0) {
          if (++vals[t] < p) {
            carry = false;
            break;
          }
          vals[t] = 0;
        }
        if (carry) break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return compare_subspaces(a, b) == std::strong_ordering::less;
  });
  return out;
}

std::vector<Subspace> enumerate_subspaces_within(const Subspace& within,
                                                 const LatticeBudget& budget) {
  std::vector<Subspace> out;
  for (const auto& s : enumerate_subspaces(within.field(), within.dim(), budget))
    out.push_back(lift_through(s, within));
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return compare_subspaces(a, b) == std::strong_ordering::less;
  });
  return out;
}

std::vector<Subspace> enumerate_subalgebras(const NLieAlgebra& alg, const LatticeBudget& budget) {
  std::vector<Subspace> out;
  for (const auto& s : enumerate_subspaces(alg.field(), alg.dim(), budget))
    if (is_subalgebra(alg, s)) out.push_back(s);
  return out;
}

std::vector<Subspace> enumerate_ideals(const NLieAlgebra& alg, const LatticeBudget& budget) {
  std::vector<Subspace> out;
  for (const auto& s : enumerate_subspaces(alg.field(), alg.dim(), budget))
    if (is_ideal(alg, s)) out.push_back(s);
  return out;
}

namespace {

std::vector<Subspace> maximal_among(const std::vector<Subspace>& proper) {
  std::vector<Subspace> out;
  for (const auto& s : proper) {
    bool maximal = true;
    for (const auto& t : proper) {
      if (t.dim() <= s.dim()) continue;
      if (contains(t, s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Subspace> maximal_subalgebras(const NLieAlgebra& alg, const LatticeBudget& budget) {
  std::vector<Subspace> proper;
  for (const auto& s : enumerate_subalgebras(alg, budget))
    if (s.dim() < alg.dim()) proper.push_back(s);
  return maximal_among(proper);
}

Subspace frattini(const NLieAlgebra& alg, const LatticeBudget& budget) {
  Subspace phi = alg.full_space();
  for (const auto& m : maximal_subalgebras(alg, budget)) phi = intersect(phi, m);
  if (is_nilpotent(alg) && !(phi == dot(alg, alg.full_space(), alg.full_space())))
    throw std::logic_error("Frattini subalgebra of a nilpotent algebra differs from L.L");
  return phi;
}

bool TheoremSuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::ordered_json TheoremSuiteReport::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["applicable"] = c.applicable;
    j["instances"] = c.instances;
    j["passed"] = c.passed;
    if (!c.counterexamples.empty()) j["counterexamples"] = c.counterexamples;
    arr.push_back(j);
  }
  return arr;
}

namespace {

// Subspaces of w that are ideals of w viewed as an algebra.
std::vector<Subspace> ideals_of_subalgebra(const NLieAlgebra& alg, const Subspace& w,
                                           const LatticeBudget& budget) {
  std::vector<Subspace> out;
  for (const auto& s : enumerate_subspaces_within(w, budget)) {
    std::vector<std::pair<Subspace, std::size_t>> factors{{s, 1}, {w, alg.arity() - 1}};
    if (contains(s, product_subspaces(alg, factors))) out.push_back(s);
  }
  return out;
}

Subspace in_coords_of(const Subspace& sub, const Subspace& space) {
  std::vector<Vec> rows;
  for (const auto& r : sub.basis_rows()) {
    auto c = space.coords_of(r);
    if (!c) throw std::logic_error("subspace is not inside the coordinate space");
    rows.push_back(std::move(*c));
  }
  return Subspace::span_rows(space.field(), space.dim(), rows);
}

}  // namespace

TheoremSuiteReport theorem_suite(const NLieAlgebra& alg, const LatticeBudget& budget,
                                 std::uint64_t /*seed*/,
                                 const std::vector<std::vector<Subspace>>& extra_chains,
                                 std::size_t jobs) {
  const Subspace full = alg.full_space();
  const Subspace ll = dot(alg, full, full);
  const bool nilpotent = is_nilpotent(alg);

  bool enumerable = true;
  std::vector<Subspace> subalgebras, ideals, maximals;
  Subspace phi = full;
  try {
    subalgebras = enumerate_subalgebras(alg, budget);
    for (const auto& s : subalgebras)
      if (is_ideal(alg, s)) ideals.push_back(s);
    std::vector<Subspace> proper;
    for (const auto& s : subalgebras)
      if (s.dim() < alg.dim()) proper.push_back(s);
    maximals = maximal_among(proper);
    for (const auto& m : maximals) phi = intersect(phi, m);
  } catch (const UnsupportedError&) {
    enumerable = false;
  }

  using CheckFn = std::function<void(TheoremCheck&)>;
  std::vector<std::pair<TheoremCheck, CheckFn>> items;

  items.emplace_back(TheoremCheck{"maximal-ideals-nilpotent",
                                  "all maximal subalgebras ideals implies nilpotent",
                                  enumerable},
                     [&](TheoremCheck& c) {
                       if (!enumerable) return;
                       bool all_ideal = true;
                       for (const auto& m : maximals)
                         if (!is_ideal(alg, m)) all_ideal = false;
                       c.instances = maximals.size();
                       if (all_ideal && !nilpotent) {
                         c.passed = false;
                         c.counterexamples.push_back({{"reason", "not nilpotent"}});
                       }
                     });

  items.emplace_back(
      TheoremCheck{"frattini-dot", "Phi(L) contains L.L iff nilpotent, equality when nilpotent",
                   enumerable},
      [&](TheoremCheck& c) {
        if (!enumerable) return;
        c.instances = 1;
        if (contains(phi, ll) && !nilpotent) {
          c.passed = false;
          c.counterexamples.push_back({{"reason", "Phi contains L.L but L not nilpotent"}});
        }
        if (nilpotent && !(phi == ll)) {
          c.passed = false;
          c.counterexamples.push_back({{"reason", "nilpotent but Phi(L) != L.L"}});
        }
      });

  items.emplace_back(
      TheoremCheck{"frattini-subnormal",
                   "subnormal U with K ideal of U inside Phi(L), U/K nilpotent implies U nilpotent",
                   enumerable},
      [&](TheoremCheck& c) {
        if (!enumerable) return;
        // subnormal subalgebras reachable by chains of length <= 3
        std::vector<Subspace> level{full}, subnormal{full};
        for (int depth = 0; depth < 3; ++depth) {
          std::vector<Subspace> next;
          for (const auto& w : level)
            for (const auto& u : ideals_of_subalgebra(alg, w, budget)) {
              bool seen = false;
              for (const auto& s : subnormal)
                if (s == u) seen = true;
              if (!seen) {
                subnormal.push_back(u);
                next.push_back(u);
              }
            }
          level = std::move(next);
        }
        for (const auto& chain : extra_chains) {
          if (!verify_subnormal_chain(alg, chain) || chain.empty()) continue;
          bool seen = false;
          for (const auto& s : subnormal)
            if (s == chain.front()) seen = true;
          if (!seen) subnormal.push_back(chain.front());
        }
        for (const auto& u : subnormal) {
          NLieAlgebra ru = restrict_to(alg, u);
          for (const auto& k : ideals_of_subalgebra(alg, u, budget)) {
            if (!contains(phi, k)) continue;
            QuotientResult q = quotient(ru, in_coords_of(k, u));
            if (!is_nilpotent(q.algebra)) continue;
            ++c.instances;
            if (!is_nilpotent(ru)) {
              c.passed = false;
              c.counterexamples.push_back(
                  {{"U", subspace_json(u)}, {"K", subspace_json(k)}});
            }
          }
        }
      });

  items.emplace_back(
      TheoremCheck{"frattini-2nilpotent",
                   "B/A 2-nilpotently embedded in L/A with A inside Phi(L) lifts to B",
                   enumerable && alg.arity() >= 2},
      [&](TheoremCheck& c) {
        if (!enumerable) return;
        for (const auto& a : ideals) {
          if (!contains(phi, a)) continue;
          QuotientResult q = quotient(alg, a);
          for (const auto& b : ideals) {
            if (!contains(b, a)) continue;
            std::vector<Vec> rows;
            for (const auto& r : b.basis_rows()) rows.push_back(q.projection.apply(r));
            Subspace ba = Subspace::span_rows(alg.field(), q.algebra.dim(), rows);
            if (!is_k_nilpotently_embedded(q.algebra, ba, 2)) continue;
            ++c.instances;
            if (!is_k_nilpotently_embedded(alg, b, 2)) {
              c.passed = false;
              c.counterexamples.push_back(
                  {{"A", subspace_json(a)}, {"B", subspace_json(b)}});
            }
          }
        }
      });

  items.emplace_back(
      TheoremCheck{"minimal-complement",
                   "U < L with U + A = L for minimal abelian embedded A meets A trivially and is "
                   "maximal",
                   enumerable},
      [&](TheoremCheck& c) {
        if (!enumerable) return;
        std::vector<Subspace> min_ae;
        for (const auto& a : ideals) {
          if (a.is_zero() || !is_abelian_embedded(alg, a)) continue;
          bool minimal = true;
          for (const auto& i : ideals)
            if (!i.is_zero() && i.dim() < a.dim() && contains(a, i)) minimal = false;
          if (minimal) min_ae.push_back(a);
        }
        for (const auto& a : min_ae) {
          for (const auto& u : subalgebras) {
            if (u.dim() >= alg.dim()) continue;
            if (!(sum(u, a) == full)) continue;
            ++c.instances;
            bool zero_meet = intersect(u, a).is_zero();
            bool maximal = false;
            for (const auto& m : maximals)
              if (m == u) maximal = true;
            if (!zero_meet || !maximal) {
              c.passed = false;
              c.counterexamples.push_back({{"A", subspace_json(a)},
                                           {"U", subspace_json(u)},
                                           {"zero_intersection", zero_meet},
                                           {"maximal", maximal}});
            }
          }
        }
      });

  items.emplace_back(
      TheoremCheck{"soluble-trivia",
                   "nonzero soluble/2-soluble/nilpotent algebras have the stated nonzero pieces",
                   true},
      [&](TheoremCheck& c) {
        if (alg.dim() == 0) return;
        if (nilpotent) {
          ++c.instances;
          if (center(alg).is_zero()) {
            c.passed = false;
            c.counterexamples.push_back({{"reason", "nilpotent with zero centre"}});
          }
        }
        if (!enumerable) return;
        if (is_soluble(alg)) {
          ++c.instances;
          bool found = false;
          for (const auto& i : ideals) {
            if (i.is_zero()) continue;
            std::vector<std::pair<Subspace, std::size_t>> factors{{i, alg.arity()}};
            if (product_subspaces(alg, factors).is_zero()) found = true;
          }
          if (!found) {
            c.passed = false;
            c.counterexamples.push_back({{"reason", "soluble without nonzero abelian ideal"}});
          }
        }
        if (is_k_solubly_embedded(alg, full, 2)) {
          ++c.instances;
          bool found = false;
          for (const auto& i : ideals)
            if (!i.is_zero() && is_abelian_embedded(alg, i)) found = true;
          if (!found) {
            c.passed = false;
            c.counterexamples.push_back(
                {{"reason", "2-soluble without nonzero abelian embedded ideal"}});
          }
        }
      });

  items.emplace_back(
      TheoremCheck{"phi-ideal-nilpotent", "ideals contained in Phi(L) are nilpotent", enumerable},
      [&](TheoremCheck& c) {
        if (!enumerable) return;
        for (const auto& i : ideals) {
          if (!contains(phi, i)) continue;
          ++c.instances;
          if (!is_nilpotent(restrict_to(alg, i))) {
            c.passed = false;
            c.counterexamples.push_back({{"ideal", subspace_json(i)}});
          }
        }
      });

  TheoremSuiteReport report;
  report.checks.resize(items.size());
  if (jobs > 1) {
    std::vector<std::future<TheoremCheck>> futures;
    for (auto& [check, fn] : items)
      futures.push_back(std::async(std::launch::async, [check, fn]() mutable {
        fn(check);
        return check;
      }));
    for (std::size_t i = 0; i < futures.size(); ++i) report.checks[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) {
      items[i].second(items[i].first);
      report.checks[i] = items[i].first;
    }
  }
  return report;
}

}  // namespace nlie
