// Copyright 2026 The metdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METDIM_THEOREMS_HPP_
#define METDIM_THEOREMS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/composer.hpp"
#include "metdim/distances.hpp"
#include "metdim/error.hpp"
#include "metdim/graph.hpp"
#include "metdim/resolver.hpp"
#include "metdim/tree.hpp"

namespace metdim {

enum class Verdict { kFormulaMatches, kBoundHolds, kHypothesesUnmet, kRefuted, kUnverified };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kFormulaMatches: return "formula-matches";
    case Verdict::kBoundHolds: return "bound-holds";
    case Verdict::kHypothesesUnmet: return "hypotheses-unmet";
    case Verdict::kRefuted: return "refuted";
    case Verdict::kUnverified: return "unverified";
  }
  return "unknown";
}

struct Hypothesis {
  std::string name;
  bool holds = false;
};

/// Outcome of checking one closed formula against the exact oracle.
/// `refuted` means every hypothesis held and the formula still disagreed.
struct VerificationReport {
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  std::optional<long long> formula;
  std::optional<long long> oracle;  // empty when the oracle was skipped
  Verdict verdict = Verdict::kHypothesesUnmet;
  std::map<std::string, std::vector<long long>> details;

  bool hypotheses_hold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.holds; });
  }
};

namespace detail {

inline std::optional<long long> oracle_dim(const Graph& g, const Limits& limits) {
  if (g.order() > std::min(limits.max_search_order, kMaskBits)) return std::nullopt;
  return static_cast<long long>(Resolver(g, limits).dim());
}

inline void settle_equality(VerificationReport& r) {
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::kHypothesesUnmet;
  } else if (!r.oracle || !r.formula) {
    r.verdict = Verdict::kUnverified;
  } else {
    r.verdict = *r.formula == *r.oracle ? Verdict::kFormulaMatches : Verdict::kRefuted;
  }
}

/// dim, dim*(A_i) for every component.
struct ComponentNumbers {
  std::vector<long long> dim;
  std::vector<long long> dim_star;
};

inline ComponentNumbers component_numbers(const Composition& c, const Limits& limits) {
  ComponentNumbers out;
  for (std::size_t i = 0; i < c.component_count(); ++i) {
    const Resolver r(c.component(i), limits);
    out.dim.push_back(static_cast<long long>(r.dim()));
    out.dim_star.push_back(
        static_cast<long long>(r.attaching_dimension(c.profile(i).attachment).size));
  }
  return out;
}

inline long long sum(const std::vector<long long>& v) {
  long long s = 0;
  for (auto x : v) s += x;
  return s;
}

inline bool end_attachments_disjoint(const Composition& c) {
  VertexSet seen;
  for (const auto& p : c.profiles()) {
    if (!p.is_end()) continue;
    const Vertex v = c.image(p.component, p.attachment.front());
    if (contains(seen, v)) return false;
    seen.insert(std::lower_bound(seen.begin(), seen.end(), v), v);
  }
  return true;
}

inline std::vector<Hypothesis> main_equality_hypotheses(const Composition& c) {
  bool p1 = true, p2 = true;
  for (const auto& p : c.profiles()) {
    if (p.is_end()) p2 = p2 && p.p2;
    else p1 = p1 && p.p1;
  }
  return {{"k>=3", c.component_count() >= 3},
          {"internal-satisfy-P1", p1},
          {"end-satisfy-P2", p2},
          {"end-attachments-disjoint", end_attachments_disjoint(c)}};
}

}  // namespace detail

/// dim(G) >= Σ dim*(G_i); unconditional.
inline VerificationReport lower_bound_report(const Composition& c, const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "lower-bound";
  const auto nums = detail::component_numbers(c, limits);
  r.details["dim_star"] = nums.dim_star;
  r.formula = detail::sum(nums.dim_star);
  r.oracle = detail::oracle_dim(c.graph(), limits);
  if (!r.oracle) r.verdict = Verdict::kUnverified;
  else r.verdict = *r.oracle >= *r.formula ? Verdict::kBoundHolds : Verdict::kRefuted;
  return r;
}

/// dim(G) = Σ dim*(G_i) under k >= 3, P1 on internal, P2 on end subgraphs and
/// pairwise distinct end attachment vertices.
inline VerificationReport main_equality_report(const Composition& c, const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "main-equality";
  r.hypotheses = detail::main_equality_hypotheses(c);
  const auto nums = detail::component_numbers(c, limits);
  r.details["dim_star"] = nums.dim_star;
  r.formula = detail::sum(nums.dim_star);
  r.oracle = detail::oracle_dim(c.graph(), limits);
  detail::settle_equality(r);
  return r;
}

/// dim(G) = Σ (dim(G_i) - τ_i) under the main-equality hypotheses plus
/// dim = dim+ for every component with A(G_i) != V(G_i).
inline VerificationReport extremal_report(const Composition& c, const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "extremal";
  r.hypotheses = detail::main_equality_hypotheses(c);
  bool tight = true;
  std::vector<long long> dims, taus, uppers;
  long long formula = 0;
  for (std::size_t i = 0; i < c.component_count(); ++i) {
    const Resolver res(c.component(i), limits);
    const auto& att = c.profile(i).attachment;
    const long long d = static_cast<long long>(res.dim());
    const long long t = static_cast<long long>(res.tau(att));
    const long long up = static_cast<long long>(res.upper_dimension());
    if (att.size() != c.component(i).order() && up != d) tight = false;
    dims.push_back(d);
    taus.push_back(t);
    uppers.push_back(up);
    formula += d - t;
  }
  r.hypotheses.push_back({"dim-equals-upper-dim", tight});
  r.details["dim"] = dims;
  r.details["tau"] = taus;
  r.details["upper_dim"] = uppers;
  r.formula = formula;
  r.oracle = detail::oracle_dim(c.graph(), limits);
  detail::settle_equality(r);
  return r;
}

/// Block graphs: dim(G) = Σ_{|A_i| < r_i} (r_i - |A_i| - 1). Every component
/// must be complete.
inline VerificationReport block_formula_report(const Composition& c, const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "block";
  bool no_end_k2 = true;
  long long formula = 0;
  for (std::size_t i = 0; i < c.component_count(); ++i) {
    const Graph& k = c.component(i);
    if (!is_complete(k))
      throw InvalidArgument("block formula: component " + std::to_string(i) + " is not complete");
    const auto& p = c.profile(i);
    if (p.is_end() && k.order() == 2) no_end_k2 = false;
    if (p.attachment.size() < k.order())
      formula += static_cast<long long>(k.order() - p.attachment.size()) - 1;
  }
  r.hypotheses = {{"k>=3", c.component_count() >= 3},
                  {"no-end-K2", no_end_k2},
                  {"end-attachments-disjoint", detail::end_attachments_disjoint(c)}};
  r.formula = formula;
  r.oracle = detail::oracle_dim(c.graph(), limits);
  detail::settle_equality(r);
  return r;
}

/// dim(G(H)) = Σ_{root in no basis} dim(H_i) + Σ_{root in a basis} (dim(H_i) - 1).
inline VerificationReport rooted_family_report(const Graph& g, const std::vector<RootedGraph>& rooted,
                                               const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "rooted-family";
  const Composition c = rooted_product_family(g, rooted);
  bool p2 = true;
  std::vector<long long> dims, member;
  long long formula = 0;
  for (const auto& h : rooted) {
    p2 = p2 && satisfies_p2(h.graph, VertexSet{h.root});
    const Resolver res(h.graph, limits);
    const bool in_basis = res.basis_membership(h.root);
    const long long d = static_cast<long long>(res.dim());
    dims.push_back(d);
    member.push_back(in_basis ? 1 : 0);
    formula += in_basis ? d - 1 : d;
  }
  r.hypotheses = {{"rooted-satisfy-P2", p2}};
  r.details["dim_h"] = dims;
  r.details["root_in_basis"] = member;
  r.formula = formula;
  r.oracle = detail::oracle_dim(c.graph(), limits);
  detail::settle_equality(r);
  return r;
}

inline VerificationReport rooted_uniform_report(const Graph& g, const Graph& h, Vertex root,
                                                const Limits& limits = {}) {
  return rooted_family_report(g, std::vector<RootedGraph>(g.order(), RootedGraph{h, root}), limits);
}

/// Path P of order p_len rooted at a leaf: dim(g) <= dim(g ∘_v P) and
/// 2·dim(g ∘_v P) <= dim(g) + n - I(g), with equality dim(g ∘_v P) = dim(g)
/// when I(g) = n - dim(g). Also checks the constructive generator.
inline VerificationReport cota_bounds_report(const Graph& g, std::size_t p_len,
                                             const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "cota";
  r.hypotheses = {{"path-order>=2", p_len >= 2}};
  if (p_len < 2) {
    r.verdict = Verdict::kHypothesesUnmet;
    return r;
  }
  const Resolver res(g, limits);
  const long long n = static_cast<long long>(g.order());
  const long long dim_g = static_cast<long long>(res.dim());
  const long long iso = static_cast<long long>(res.isolation_index());
  const long long doubled_upper = dim_g + n - iso;
  const CotaGenerator gen = cota_generator(g, p_len, limits);
  const long long gen_size = static_cast<long long>(gen.generator.size());

  r.formula = doubled_upper / 2;
  r.oracle = detail::oracle_dim(gen.product.graph(), limits);
  r.details["dim_g"] = {dim_g};
  r.details["order_g"] = {n};
  r.details["isolation_index"] = {iso};
  r.details["upper_bound_doubled"] = {doubled_upper};
  r.details["generator_size"] = {gen_size};
  r.details["generator"] = std::vector<long long>(gen.generator.begin(), gen.generator.end());

  if (!r.oracle) {
    r.verdict = Verdict::kUnverified;
    return r;
  }
  const long long dp = *r.oracle;
  bool ok = dim_g <= dp && 2 * dp <= doubled_upper && 2 * gen_size <= doubled_upper;
  if (iso == n - dim_g) ok = ok && dp == dim_g;
  r.details["equality_case"] = {iso == n - dim_g ? 1LL : 0LL};
  r.verdict = ok ? Verdict::kBoundHolds : Verdict::kRefuted;
  return r;
}

/// dim(T) = n1(T) - ex(T) for trees that are not paths.
inline VerificationReport tree_dim_report(const Graph& t, const Limits& limits = {}) {
  if (!is_tree(t)) throw InvalidArgument("tree formula: input is not a tree");
  if (is_path(t)) throw InvalidArgument("tree formula: input is a path (dim = 1)");
  VerificationReport r;
  r.statement = "tree";
  const TreeProfile p = tree_profile(t);
  r.hypotheses = {{"tree-not-path", true}};
  r.details["leaves"] = {static_cast<long long>(p.leaf_count)};
  r.details["exterior_major"] = {static_cast<long long>(p.exterior_count())};
  r.formula = static_cast<long long>(p.leaf_count) - static_cast<long long>(p.exterior_count());
  r.oracle = detail::oracle_dim(t, limits);
  detail::settle_equality(r);
  return r;
}

/// dim(G ⊙ H) = Σ_{K1 in no basis of K1+H_i} dim(K1+H_i)
///            + Σ_{K1 in a basis} (dim(K1+H_i) - 1).
inline VerificationReport corona_report(const Graph& g, const std::vector<Graph>& family,
                                        const Limits& limits = {}) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].order() < 2)
      throw InvalidArgument("corona formula: H_" + std::to_string(i) + " is trivial");
  }
  VerificationReport r;
  r.statement = "corona";
  const Composition c = corona(g, family);
  std::vector<long long> dims, member;
  long long formula = 0;
  for (const auto& h : family) {
    const Resolver res(join_with_k1(h), limits);
    const bool in_basis = res.basis_membership(h.order());
    const long long d = static_cast<long long>(res.dim());
    dims.push_back(d);
    member.push_back(in_basis ? 1 : 0);
    formula += in_basis ? d - 1 : d;
  }
  r.details["dim_join"] = dims;
  r.details["k1_in_basis"] = member;
  const bool uniform =
      std::all_of(family.begin(), family.end(), [&](const Graph& h) { return h == family.front(); });
  if (uniform && !family.empty()) {
    const long long n = static_cast<long long>(g.order());
    r.details["uniform_formula"] = {member.front() ? n * (dims.front() - 1) : n * dims.front()};
  }
  r.formula = formula;
  r.oracle = detail::oracle_dim(c.graph(), limits);
  detail::settle_equality(r);
  return r;
}

inline VerificationReport corona_uniform_report(const Graph& g, const Graph& h,
                                                const Limits& limits = {}) {
  return corona_report(g, std::vector<Graph>(g.order(), h), limits);
}

/// If r(H) >= 4 or dim(K1+H) > Δ(H)+1, the K1 vertex lies in no metric basis
/// of K1+H. The converse is false, so a failed antecedent is inconclusive.
inline VerificationReport k1_lemma_check(const Graph& h, const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "k1-lemma";
  const MetricProfile prof = metric_profile(h);
  const Resolver res(join_with_k1(h), limits);
  const long long d = static_cast<long long>(res.dim());
  const bool member = res.basis_membership(h.order());
  const bool antecedent =
      prof.radius >= 4 || d > static_cast<long long>(prof.max_degree) + 1;
  r.hypotheses = {{"radius>=4 or dim(K1+H)>Delta(H)+1", antecedent}};
  r.details["radius"] = {prof.radius};
  r.details["max_degree"] = {static_cast<long long>(prof.max_degree)};
  r.details["dim_join"] = {d};
  r.details["k1_in_basis"] = {member ? 1LL : 0LL};
  r.formula = 0;  // predicted membership
  r.oracle = member ? 1 : 0;
  detail::settle_equality(r);
  return r;
}

/// Chains: dim(G) = Σ dim*(G_i) when G_1, G_k satisfy P2 and each internal
/// link's x_i, y_i are diametral.
inline VerificationReport chain_report(const Composition& c, const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "chain";
  const std::size_t k = c.component_count();
  const auto& steps = c.steps();

  bool shaped = true;
  // y[j]: vertex of component j identified with the next component.
  std::vector<std::optional<Vertex>> y(k);
  for (std::size_t j = 0; j < steps.size() && shaped; ++j) {
    const auto& prov = c.provenance(j);
    auto it = std::find(prov.begin(), prov.end(), steps[j].host);
    if (it == prov.end()) shaped = false;
    else y[j] = static_cast<Vertex>(it - prov.begin());
  }
  bool diametral = shaped;
  for (std::size_t i = 1; i + 1 < k && shaped; ++i) {
    const Vertex x = steps[i - 1].vertex;
    if (x == *y[i]) {
      shaped = false;
      diametral = false;
      break;
    }
    const DistMatrix d = connected_distances(c.component(i));
    if (d(x, *y[i]) != diameter(c.component(i))) diametral = false;
  }
  r.hypotheses = {{"chain-shaped", shaped},
                  {"k>=3", k >= 3},
                  {"ends-satisfy-P2", c.profile(0).p2 && c.profile(k - 1).p2},
                  {"internal-diametral", diametral}};
  const auto nums = detail::component_numbers(c, limits);
  r.details["dim_star"] = nums.dim_star;
  r.formula = detail::sum(nums.dim_star);
  r.oracle = detail::oracle_dim(c.graph(), limits);
  detail::settle_equality(r);
  return r;
}

/// Closed-form dim* for paths, cycles and complete graphs with a nonempty
/// attachment set.
inline std::size_t closed_form_dim_star(StandardKind kind, std::size_t size, const VertexSet& a) {
  const Graph g = make_standard(kind, size);
  const VertexSet att = normalized(a);
  check_vertices(g, att);
  if (att.empty()) throw InvalidArgument("closed-form dim* needs a nonempty attachment set");
  switch (kind) {
    case StandardKind::kPath:
      return att.size() == 1 && g.degree(att.front()) == 2 ? 1 : 0;
    case StandardKind::kCycle:
      if (att.size() == 1) return 1;
      if (att.size() == 2 && size % 2 == 0 && att[1] - att[0] == size / 2) return 1;
      return 0;
    case StandardKind::kComplete:
      // A = V already resolves K_n.
      return att.size() < size ? size - att.size() - 1 : 0;
    case StandardKind::kStar:
      break;
  }
  throw InvalidArgument("closed-form dim* covers paths, cycles and complete graphs only");
}

/// T(a,b,n): dim(T) = a and dim(T ∘_v P_2) = b.
inline VerificationReport tree_T_report(std::size_t a, std::size_t b, std::size_t n,
                                        const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "treeT";
  const bool feasible = a >= 2 && a < b && 2 * b <= a + n;
  r.hypotheses = {{"2<=a<b<=(a+n)/2", feasible}};
  if (!feasible) {
    r.verdict = Verdict::kHypothesesUnmet;
    return r;
  }
  const Graph t = build_tree_T(a, b, n);
  const TreeProfile p = tree_profile(t);
  const Composition prod = rooted_product_uniform(t, path_graph(2), 0);
  r.formula = static_cast<long long>(a);
  r.oracle = detail::oracle_dim(t, limits);
  const auto prod_dim = detail::oracle_dim(prod.graph(), limits);
  r.details["leaves"] = {static_cast<long long>(p.leaf_count)};
  r.details["exterior_major"] = {static_cast<long long>(p.exterior_count())};
  r.details["product_formula"] = {static_cast<long long>(b)};
  if (prod_dim) r.details["product_oracle"] = {*prod_dim};
  if (!r.oracle || !prod_dim) {
    r.verdict = Verdict::kUnverified;
  } else {
    r.verdict = *r.oracle == static_cast<long long>(a) && *prod_dim == static_cast<long long>(b)
                    ? Verdict::kFormulaMatches
                    : Verdict::kRefuted;
  }
  return r;
}

/// G_t of family F: dim = t with basis {x_1..x_t}, I(G_t) = t+1 = n - dim,
/// and dim(G_t ∘_v P) = t.
inline VerificationReport family_F_report(std::size_t t, std::size_t p_len = 3,
                                          const Limits& limits = {}) {
  VerificationReport r;
  r.statement = "familyF";
  r.hypotheses = {{"t>=3", t >= 3}, {"path-order>=2", p_len >= 2}};
  if (t < 3 || p_len < 2) {
    r.verdict = Verdict::kHypothesesUnmet;
    return r;
  }
  const Graph g = build_family_F(t);
  const Resolver res(g, limits);
  VertexSet x;
  for (Vertex i = 1; i <= t; ++i) x.push_back(i);
  const bool x_basis = x.size() == res.dim() && res.is_resolving(x);
  const long long iso = static_cast<long long>(res.isolation_index());
  const Composition prod = rooted_product_uniform(g, path_graph(p_len), 0);
  const auto prod_dim = detail::oracle_dim(prod.graph(), limits);
  const long long tt = static_cast<long long>(t);
  r.formula = tt;
  r.oracle = static_cast<long long>(res.dim());
  r.details["isolation_index"] = {iso};
  r.details["x_is_basis"] = {x_basis ? 1LL : 0LL};
  if (prod_dim) r.details["product_dim"] = {*prod_dim};
  if (!prod_dim) {
    r.verdict = Verdict::kUnverified;
  } else {
    r.verdict = *r.oracle == tt && iso == tt + 1 && x_basis && *prod_dim == tt
                    ? Verdict::kFormulaMatches
                    : Verdict::kRefuted;
  }
  return r;
}

}  // namespace metdim

#endif  // METDIM_THEOREMS_HPP_
