#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "closys/canonical.hpp"
#include "closys/closure.hpp"
#include "closys/drelation.hpp"
#include "closys/ebasis.hpp"
#include "closys/implication.hpp"
#include "closys/io.hpp"
#include "closys/kbasis.hpp"
#include "closys/optsearch.hpp"
#include "closys/oracle.hpp"
#include "closys/relation.hpp"
#include "closys/report.hpp"
#include "closys/standard.hpp"

// Checks that tie the modules together. Each function returns one entry per
// property; preconditions that fail are thrown, not reported.

namespace closys {

namespace detail {

inline std::string pair_list(const PairRelation& r) {
  std::string out;
  for (auto [a, b] : r.pairs()) {
    if (!out.empty()) out += " ";
    out += "(" + r.ground().name(a) + "," + r.ground().name(b) + ")";
  }
  return out.empty() ? "none" : out;
}

inline PairRelation difference(const PairRelation& a, const PairRelation& b) {
  PairRelation out(a.ground());
  for (auto [x, y] : a.pairs())
    if (!b.contains(x, y)) out.add(x, y);
  return out;
}

inline std::string basis_line(const ImplicationSet& b) {
  std::string out;
  for (const auto& imp : b) out += (out.empty() ? "" : ", ") + format_implication(b.ground(), imp);
  return out.empty() ? "empty" : out;
}

inline std::string size_str(std::size_t got, std::size_t want) {
  return std::to_string(got) + " vs " + std::to_string(want);
}

}  // namespace detail

/// The D-relation recovered from the refined canonical basis, against the
/// oracle's minimal covers.
inline std::vector<CheckResult> verify_tr(const ImplicationSet& sigma, const oracle::OracleConfig& cfg = {}) {
  require_standard(sigma);
  const oracle::Oracle o(sigma, cfg);
  const auto canon = canonical_basis(sigma);
  const auto star = sigma_star_from_canonical(canon);
  const PairRelation d_dual = o.d_relation().dual();
  const PairRelation delta_star = delta(star);

  std::vector<CheckResult> out;
  out.push_back(check("delta(sigma*) inside dual D", delta_star.is_subset_of(d_dual),
                      "extra pairs: " + detail::pair_list(detail::difference(delta_star, d_dual))));
  const auto lhs = transitive_closure(delta_star);
  const auto rhs = transitive_closure(d_dual);
  out.push_back(check("transitive closures agree", lhs == rhs,
                      "only in delta: " + detail::pair_list(detail::difference(lhs, rhs)) +
                          "; only in dual D: " + detail::pair_list(detail::difference(rhs, lhs))));
  const auto d_basis = o.d_basis();
  bool inside = true;
  for (const auto& imp : unit_expansion(k_basis_from_canonical(canon)))
    if (std::find(d_basis.begin(), d_basis.end(), imp) == d_basis.end()) inside = false;
  out.push_back(check("K-basis unit expansion inside D-basis", inside));

  if (is_regular(canon)) {
    const auto plain = transitive_closure(delta(canon));
    auto r = check("transitive closure of delta(canonical) agrees", plain == rhs,
                   "only in delta: " + detail::pair_list(detail::difference(plain, rhs)));
    r.informational = true;
    out.push_back(r);
  }
  return out;
}

/// Refinement map from the aggregated E-basis onto the canonical basis,
/// and non-redundancy of the F-basis binary part. Needs no D-cycles.
inline std::vector<CheckResult> verify_main_e(const ImplicationSet& sigma, const EBasisOptions& opts = {}) {
  const auto eag = aggregated_e_basis(sigma, opts);
  const auto canon = canonical_basis(sigma);
  Saturator sat(canon);
  std::vector<CheckResult> out;

  std::map<AttrSet, std::size_t> image;  // canonical premise -> hits
  bool shaped = true;
  std::string bad;
  for (const auto& imp : eag) {
    const AttrSet phi = sat.closure(imp.premise());
    const AttrSet s = sat.saturate(imp.premise(), phi);
    bool found = false;
    for (const auto& c : canon)
      if (c.premise() == s && (c.premise() | c.conclusion()) == phi) found = true;
    if (!found || !imp.conclusion().is_subset_of(phi - s)) {
      shaped = false;
      bad = format_implication(sigma.ground(), imp);
    }
    ++image[s];
  }
  bool injective = image.size() == eag.size();
  out.push_back(check("E^ag maps into the canonical basis", shaped, bad.empty() ? "" : "offending: " + bad));
  out.push_back(check("the map is one-to-one", injective));
  out.push_back(check("the map is onto", image.size() == canon.size(), detail::size_str(image.size(), canon.size())));
  const auto se = metrics(eag).total.s, sc = metrics(canon).total.s;
  out.push_back(check("s(E^ag) <= s(canonical)", se <= sc, detail::size_str(se, sc)));
  out.push_back(check("E^ag is a basis", equivalent(eag, sigma)));

  // Unit-form binary part of F, each implication needed against the rest.
  const auto f = f_basis(sigma, {false, opts.oracle});
  const auto fb_unit = unit_expansion(f.binary_part());
  const auto whole = fb_unit + f.nonbinary_part();
  bool irredundant = true;
  std::string redundant;
  for (std::size_t i = 0; i < fb_unit.size(); ++i)
    if (follows(whole.without(i), fb_unit[i])) {
      irredundant = false;
      redundant = format_implication(sigma.ground(), fb_unit[i]);
    }
  out.push_back(check("F binary part is non-redundant", irredundant, redundant.empty() ? "" : "redundant: " + redundant));
  return out;
}

/// The optimized E-basis reaches the least non-binary right size, which
/// equals the total size of the M(C) sets.
inline std::vector<CheckResult> verify_rs_min(const ImplicationSet& sigma, const EBasisOptions& opts = {},
                                              const SearchLimits& limits = {}) {
  const auto oe = optimized_e_basis(sigma, opts);
  const std::size_t got = metrics(oe).nonbinary.sR;
  const std::size_t m = m_lower_bound(m_sets(sigma));
  const std::size_t best = min_nonbinary_right_size(sigma, limits);
  std::vector<CheckResult> out;
  out.push_back(check("sR(OE non-binary) = sum |M(C)|", got == m, detail::size_str(got, m)));
  out.push_back(check("sR(OE non-binary) = exhaustive minimum", got == best, detail::size_str(got, best)));
  const std::size_t weak = m_lower_bound(m_sets_max_first(sigma));
  out.push_back(check("max-first sum |M(C)| <= exhaustive minimum", weak <= best, detail::size_str(weak, best)));
  const auto k_route = optimized_e_from_k_basis(sigma);
  auto r = check("K-basis route gives the same basis", k_route == oe,
                 k_route == oe ? "" : "K route: " + detail::basis_line(k_route));
  r.informational = true;
  out.push_back(r);
  return out;
}

/// Optimum bases against the size parameters and the other bases.
inline std::vector<CheckResult> verify_hierarchy(const ImplicationSet& sigma, const SearchLimits& limits = {},
                                                 const EBasisOptions& opts = {}) {
  const auto search = optimum_search(sigma, limits);
  const auto& canon = search.canonical;
  Saturator sat(canon);
  ClosureEngine engine(canon);
  const bool standard = is_standard(sigma);

  // Independent per-set parameters.
  std::map<AttrSet, std::size_t> k;
  for (const auto& imp : canon)
    if (!imp.is_binary()) k[imp.premise()] = k_c(sigma, imp.premise(), limits).size;
  std::map<std::size_t, Witness> b;
  if (standard)
    for (const auto& imp : canon)
      if (imp.is_binary()) b[*imp.premise().first()] = b_c(sigma, *imp.premise().first(), limits);

  std::vector<CheckResult> out;
  std::size_t idx = 0;
  std::size_t nb_right = 0;
  for (const auto& basis : search.bases) {
    const std::string tag = "optimum basis " + std::to_string(++idx) + ": ";
    const auto m = metrics(basis);
    out.push_back(check(tag + "equivalent", equivalent(basis, sigma)));
    out.push_back(check(tag + "minimum count", basis.size() == canon.size(), detail::size_str(basis.size(), canon.size())));
    out.push_back(check(tag + "left-optimum", m.total.sL == search.min_left_size(),
                        detail::size_str(m.total.sL, search.min_left_size())));
    out.push_back(check(tag + "right-optimum", m.total.sR == search.min_right_size(),
                        detail::size_str(m.total.sR, search.min_right_size())));
    out.push_back(check(tag + "regular", is_regular(basis)));

    bool premises_ok = true, conclusions_ok = true, extreme_ok = true;
    for (const auto& imp : basis) {
      if (!imp.is_binary()) {
        const AttrSet c = sat(imp.premise());
        if (!k.count(c) || imp.premise().count() != k[c]) premises_ok = false;
      } else if (standard) {
        const std::size_t x = *imp.premise().first();
        if (!b.count(x) || imp.conclusion().count() != b[x].size) conclusions_ok = false;
        const AttrSet lower = engine.closure(imp.premise()).without(x);
        if (!extreme_points(engine, lower).is_subset_of(imp.conclusion())) extreme_ok = false;
      }
    }
    out.push_back(check(tag + "non-binary premise sizes are k_C", premises_ok));
    if (standard) {
      out.push_back(check(tag + "binary conclusion sizes are b_C", conclusions_ok));
      out.push_back(check(tag + "binary conclusions contain the extreme points", extreme_ok));
    }

    if (idx == 1) nb_right = m.nonbinary.sR;
    out.push_back(check(tag + "non-binary right size is constant", m.nonbinary.sR == nb_right,
                        detail::size_str(m.nonbinary.sR, nb_right)));

    const auto s = m.total.s;
    out.push_back(check(tag + "s <= s(canonical)", s <= metrics(canon).total.s));
    if (standard) out.push_back(check(tag + "s <= s(K)", s <= metrics(k_basis_from_canonical(canon)).total.s));
    if (standard && is_d_cycle_free(sigma))
      out.push_back(check(tag + "s <= s(OE)", s <= metrics(optimized_e_basis(sigma, opts)).total.s));
  }

  // Conjectured invariance of conclusion sizes within a closure class.
  // Logged, never asserted.
  for (const auto& g : search.groups) {
    bool constant = true;
    for (const auto& t : g.tuples)
      for (std::size_t j = 0; j < t.size(); ++j)
        if (t[j].count() != g.tuples.front()[j].count()) constant = false;
    CheckResult r = check("class of {" + canon.ground().format(search.critical[g.members.front()].set, ",") +
                              "}: conclusion sizes constant",
                          constant, std::to_string(g.tuples.size()) + " optimal choice(s), total " + std::to_string(g.best));
    r.informational = true;
    out.push_back(r);
  }
  return out;
}

}  // namespace closys
