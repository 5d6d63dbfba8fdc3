#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "closys/canonical.hpp"
#include "closys/closure.hpp"
#include "closys/drelation.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/kbasis.hpp"
#include "closys/oracle.hpp"
#include "closys/standard.hpp"

namespace closys {

struct EBasisOptions {
  oracle::OracleConfig oracle;
  /// Recompute through the oracle when the ground set is within its bound.
  bool cross_check = true;
};

/// a -> b for every cover pair a > b of the phi-order, in unit form.
inline ImplicationSet cover_binary_part(const PhiOrder& ord) {
  ImplicationSet out(ord.ground);
  for (auto [a, b] : ord.covers.pairs()) out.add(ord.ground.singleton(a), ord.ground.singleton(b));
  return out;
}

namespace detail {

/// Keeps the candidates whose closure is containment-minimal among all
/// candidate closures.
inline std::vector<AttrSet> closure_minimal(const std::vector<AttrSet>& candidates, const std::vector<AttrSet>& closures) {
  std::vector<AttrSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < candidates.size() && minimal; ++j)
      if (closures[j].is_proper_subset_of(closures[i])) minimal = false;
    if (minimal) out.push_back(candidates[i]);
  }
  return out;
}

/// Non-binary E part from the refined canonical basis: the candidates for x
/// are the premises C_K with x in the full canonical conclusion.
inline ImplicationSet e_nonbinary_from_canonical(const ImplicationSet& canon) {
  const auto star = sigma_star_from_canonical(canon).nonbinary_part();
  ClosureEngine engine(canon);
  std::vector<AttrSet> closures;
  for (const auto& imp : star) closures.push_back(engine.closure(imp.premise()));
  ImplicationSet out(canon.ground());
  for (std::size_t x = 0; x < canon.universe(); ++x) {
    std::vector<AttrSet> cand, cl;
    for (std::size_t i = 0; i < star.size(); ++i)
      if (star[i].conclusion().test(x)) {
        cand.push_back(star[i].premise());
        cl.push_back(closures[i]);
      }
    for (const auto& p : closure_minimal(cand, cl)) out.add(p, canon.ground().singleton(x));
  }
  return out.normalized();
}

/// Same part from the oracle's minimal covers, straight from the definition.
inline ImplicationSet e_nonbinary_from_oracle(const oracle::Oracle& o) {
  const std::size_t n = o.universe();
  ImplicationSet out(o.ground());
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<AttrSet> cand, cl;
    for (auto m : o.minimal_covers(x)) {
      cand.push_back(oracle::set_of(n, m));
      cl.push_back(oracle::set_of(n, o.closure(m)));
    }
    for (const auto& p : closure_minimal(cand, cl)) out.add(p, o.ground().singleton(x));
  }
  return out.normalized();
}

}  // namespace detail

/// Unit-form E-basis. Requires a standard system without D-cycles.
inline ImplicationSet e_basis(const ImplicationSet& sigma, const EBasisOptions& opts = {}) {
  require_standard(sigma);
  require_d_cycle_free(sigma);
  const auto canon = canonical_basis(sigma);
  const auto nb = detail::e_nonbinary_from_canonical(canon);
  if (opts.cross_check && sigma.universe() <= std::min(opts.oracle.bound, oracle::kMaxBound)) {
    const auto from_covers = detail::e_nonbinary_from_oracle(oracle::Oracle(sigma, opts.oracle));
    if (!(from_covers == nb)) throw InternalError("E-basis: minimal-cover route and canonical route disagree");
  }
  return (cover_binary_part(phi_order(canon)) + nb).normalized();
}

inline ImplicationSet aggregated_e_basis(const ImplicationSet& sigma, const EBasisOptions& opts = {}) {
  return aggregation(e_basis(sigma, opts)).normalized();
}

namespace detail {

/// From the K-basis: x stays in Y_K only where phi(X_K) is minimal among the
/// non-binary K implications concluding x. An implication left with an
/// empty conclusion is dropped, so the result can fail to be a basis.
inline ImplicationSet optimized_e_from_k(const ImplicationSet& kb, const ClosureEngine& engine) {
  const auto nb = kb.nonbinary_part();
  std::vector<AttrSet> closures;
  for (const auto& imp : nb) closures.push_back(engine.closure(imp.premise()));
  std::vector<AttrSet> kept;
  for (const auto& imp : nb) kept.push_back(imp.conclusion());
  for (std::size_t x = 0; x < kb.universe(); ++x)
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!nb[i].conclusion().test(x)) continue;
      for (std::size_t j = 0; j < nb.size(); ++j)
        if (nb[j].conclusion().test(x) && closures[j].is_proper_subset_of(closures[i])) {
          kept[i].reset(x);
          break;
        }
    }
  ImplicationSet out = kb.binary_part();
  for (std::size_t i = 0; i < nb.size(); ++i)
    if (!kept[i].empty()) out.add(nb[i].premise(), kept[i]);
  return out.normalized();
}

}  // namespace detail

/// Aggregated E-basis with each non-binary conclusion cut to its maximal
/// elements.
inline ImplicationSet optimized_e_basis(const ImplicationSet& sigma, const EBasisOptions& opts = {}) {
  const auto eag = aggregated_e_basis(sigma, opts);
  const PhiOrder ord = phi_order(canonical_basis(sigma));
  ImplicationSet out(sigma.ground());
  for (const auto& imp : eag)
    out.add(imp.premise(), imp.is_binary() ? imp.conclusion() : ord.max_elements(imp.conclusion()));
  return out.normalized();
}

/// The same basis read off the K-basis by per-element closure minimality.
/// Agrees with `optimized_e_basis` unless an element of a full canonical
/// conclusion only becomes maximal once a larger element is removed; then
/// it loses that element and possibly whole implications.
inline ImplicationSet optimized_e_from_k_basis(const ImplicationSet& sigma) {
  require_standard(sigma);
  require_d_cycle_free(sigma);
  const auto canon = canonical_basis(sigma);
  return detail::optimized_e_from_k(k_basis_from_canonical(canon), ClosureEngine(canon));
}

struct FBasisOptions {
  /// Skip the join-semidistributivity precondition. The result is then
  /// unverified.
  bool force = false;
  oracle::OracleConfig oracle;
};

/// D-cycle-free, or join-semidistributive as certified by the oracle.
inline void require_join_semidistributive(const ImplicationSet& sigma, const FBasisOptions& opts) {
  if (opts.force || is_d_cycle_free(sigma)) return;
  if (sigma.universe() > std::min(opts.oracle.bound, oracle::kMaxBound))
    throw PreconditionError(
        "the system has D-cycles and is too large for the join-semidistributivity check; use --force to skip it");
  if (!oracle::is_join_semidistributive(oracle::enumerate_closed(sigma, opts.oracle)))
    throw PreconditionError("the closure lattice is not join-semidistributive");
}

/// Minimal order generator of phi({a}) \ {a} for every non-closed {a}.
inline ImplicationSet f_binary_part(const ImplicationSet& canon) {
  ClosureEngine engine(canon);
  const PhiOrder ord = phi_order(canon);
  ImplicationSet out(canon.ground());
  for (std::size_t a = 0; a < canon.universe(); ++a) {
    const AttrSet lower = ord.below[a].without(a);
    if (lower.empty()) continue;
    out.add(canon.ground().singleton(a), minimal_order_generator(engine, ord, lower));
  }
  return out;
}

inline ImplicationSet f_basis(const ImplicationSet& sigma, const FBasisOptions& opts = {}) {
  require_standard(sigma);
  require_join_semidistributive(sigma, opts);
  const auto canon = canonical_basis(sigma);
  return (f_binary_part(canon) + k_basis_from_canonical(canon).nonbinary_part()).normalized();
}

inline ImplicationSet foe_basis(const ImplicationSet& sigma, const EBasisOptions& opts = {}) {
  const auto oe = optimized_e_basis(sigma, opts);  // checks the preconditions
  return (f_binary_part(canonical_basis(sigma)) + oe.nonbinary_part()).normalized();
}

/// Optimized E-basis as a sequence: binary part top-down, the non-binary
/// part, then the binary part again.
inline ImplicationSet ordered_e_sequence(const ImplicationSet& sigma, const EBasisOptions& opts = {}) {
  const auto oe = optimized_e_basis(sigma, opts);
  ClosureEngine engine(oe);
  auto bin = oe.binary_part().implications();
  std::stable_sort(bin.begin(), bin.end(), [&](const Implication& x, const Implication& y) {
    return engine.closure(x.premise()).count() > engine.closure(y.premise()).count();
  });
  ImplicationSet out(sigma.ground(), bin);
  for (const auto& imp : oe.nonbinary_part()) out.push_back(imp);
  for (const auto& imp : bin) out.push_back(imp);
  return out;
}

struct MSet {
  AttrSet critical;
  AttrSet m;
};

namespace detail {

inline void require_uc(const ImplicationSet& sigma) {
  if (!is_uc_system(sigma)) throw PreconditionError("M(C) sets are defined for UC-systems only");
}

}  // namespace detail

/// For each critical set C with |C| > 1: remove from phi(C) \ C everything
/// in some phi(C') \ C' with C' critical, |C'| > 1 and phi(C') strictly
/// inside phi(C), then keep the maximal elements. Requires a UC-system.
inline std::vector<MSet> m_sets(const ImplicationSet& sigma) {
  detail::require_uc(sigma);
  const auto canon = canonical_basis(sigma);
  const PhiOrder ord = phi_order(canon);
  const auto nb = canon.nonbinary_part();
  std::vector<AttrSet> closures;
  for (const auto& imp : nb) closures.push_back(imp.premise() | imp.conclusion());
  std::vector<MSet> out;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    AttrSet rest = nb[i].conclusion();
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (closures[j].is_proper_subset_of(closures[i])) rest -= nb[j].conclusion();
    out.push_back({nb[i].premise(), ord.max_elements(rest)});
  }
  return out;
}

/// Maximal elements of phi(C) \ C first, then drop those inside any
/// smaller phi(C'). Never larger than `m_sets`, so a weaker lower bound.
inline std::vector<MSet> m_sets_max_first(const ImplicationSet& sigma) {
  detail::require_uc(sigma);
  const auto canon = canonical_basis(sigma);
  const PhiOrder ord = phi_order(canon);
  const auto nb = canon.nonbinary_part();
  std::vector<AttrSet> closures;
  for (const auto& imp : nb) closures.push_back(imp.premise() | imp.conclusion());
  std::vector<MSet> out;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    AttrSet m = ord.max_elements(nb[i].conclusion());
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (closures[j].is_proper_subset_of(closures[i])) m -= closures[j];
    out.push_back({nb[i].premise(), m});
  }
  return out;
}

inline std::size_t m_lower_bound(const std::vector<MSet>& sets) {
  std::size_t total = 0;
  for (const auto& s : sets) total += s.m.count();
  return total;
}

}  // namespace closys
