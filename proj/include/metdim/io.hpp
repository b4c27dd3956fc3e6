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

// JSON formats:
//   graph   {"n": 3, "edges": [[0,1],[1,2]]}   (also {"familyF": t}, {"treeT": [a,b,n]})
//   recipe  {"components": [graph...], "attach": [{"host":v,"component":i,"vertex":u}...]}
//           {"chain": [{"graph": g, "x": u, "y": v}...]}
//           {"block": {"cliques": [r...], "attach": [...]}}
//           {"rooted": {"graph": g, "family": [{"graph": h, "root": r}...]}}
//           {"rooted": {"graph": g, "h": h, "root": r}}
//           {"corona": {"graph": g, "family": [h...]}}
//           {"corona": {"graph": g, "h": h}}

#ifndef METDIM_IO_HPP_
#define METDIM_IO_HPP_

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "metdim/composer.hpp"
#include "metdim/error.hpp"
#include "metdim/graph.hpp"
#include "metdim/resolver.hpp"
#include "metdim/theorems.hpp"

namespace metdim::io {

using json = nlohmann::json;

namespace detail {

inline std::size_t to_count(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected a non-negative integer");
  const auto v = j.get<long long>();
  if (v < 0) throw ParseError(where + ": expected a non-negative integer, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

inline const json& array_field(const json& j, const char* key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array()) throw ParseError(where + "." + key + ": expected an array");
  return a;
}

}  // namespace detail

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

/// Parses a graph object. `where` prefixes error messages.
inline Graph graph_from_json(const json& j, const std::string& where = "graph") {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  if (j.contains("familyF")) {
    try {
      return build_family_F(detail::to_count(j["familyF"], where + ".familyF"));
    } catch (const InvalidArgument& e) {
      throw ParseError(where + ".familyF: " + e.what());
    }
  }
  if (j.contains("treeT")) {
    const json& t = j["treeT"];
    if (!t.is_array() || t.size() != 3) throw ParseError(where + ".treeT: expected [a,b,n]");
    try {
      return build_tree_T(detail::to_count(t[0], where + ".treeT[0]"),
                          detail::to_count(t[1], where + ".treeT[1]"),
                          detail::to_count(t[2], where + ".treeT[2]"));
    } catch (const InvalidArgument& e) {
      throw ParseError(where + ".treeT: " + e.what());
    }
  }
  const std::size_t n = detail::to_count(detail::field(j, "n", where), where + ".n");
  if (n == 0) throw ParseError(where + ".n: order must be at least 1");
  const json& es = detail::array_field(j, "edges", where);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    if (!es[i].is_array() || es[i].size() != 2) throw ParseError(at + ": expected [u,v]");
    edges.emplace_back(detail::to_count(es[i][0], at), detail::to_count(es[i][1], at));
  }
  try {
    return Graph(n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

struct RootedRecipe {
  Graph graph;
  std::vector<RootedGraph> family;
};

struct CoronaRecipe {
  Graph graph;
  std::vector<Graph> family;
};

inline RootedRecipe rooted_from_json(const json& r, const std::string& where = "rooted") {
  Graph g = graph_from_json(detail::field(r, "graph", where), where + ".graph");
  std::vector<RootedGraph> family;
  if (r.contains("family")) {
    const json& fam = detail::array_field(r, "family", where);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const std::string at = where + ".family[" + std::to_string(i) + "]";
      family.push_back({graph_from_json(detail::field(fam[i], "graph", at), at + ".graph"),
                        detail::to_count(detail::field(fam[i], "root", at), at + ".root")});
    }
  } else {
    Graph h = graph_from_json(detail::field(r, "h", where), where + ".h");
    const Vertex root = detail::to_count(detail::field(r, "root", where), where + ".root");
    family.assign(g.order(), RootedGraph{h, root});
  }
  return {std::move(g), std::move(family)};
}

inline CoronaRecipe corona_from_json(const json& r, const std::string& where = "corona") {
  Graph g = graph_from_json(detail::field(r, "graph", where), where + ".graph");
  std::vector<Graph> family;
  if (r.contains("family")) {
    const json& fam = detail::array_field(r, "family", where);
    for (std::size_t i = 0; i < fam.size(); ++i)
      family.push_back(graph_from_json(fam[i], where + ".family[" + std::to_string(i) + "]"));
  } else {
    family.assign(g.order(), graph_from_json(detail::field(r, "h", where), where + ".h"));
  }
  return {std::move(g), std::move(family)};
}

inline std::vector<AttachStep> steps_from_json(const json& a, const std::string& where) {
  if (!a.is_array()) throw ParseError(where + ": expected an array");
  std::vector<AttachStep> steps;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    steps.push_back({detail::to_count(detail::field(a[i], "host", at), at + ".host"),
                     detail::to_count(detail::field(a[i], "component", at), at + ".component"),
                     detail::to_count(detail::field(a[i], "vertex", at), at + ".vertex")});
  }
  return steps;
}

/// Any recipe form; construction errors are reported as ParseError.
inline Composition composition_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("recipe: expected an object");
  try {
    if (j.contains("chain")) {
      const json& parts = j["chain"];
      if (!parts.is_array()) throw ParseError("recipe.chain: expected an array");
      std::vector<ChainPart> chain_parts;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string at = "recipe.chain[" + std::to_string(i) + "]";
        ChainPart p{graph_from_json(detail::field(parts[i], "graph", at), at + ".graph"), 0, 0};
        if (i > 0) p.x = detail::to_count(detail::field(parts[i], "x", at), at + ".x");
        if (i + 1 < parts.size()) p.y = detail::to_count(detail::field(parts[i], "y", at), at + ".y");
        chain_parts.push_back(std::move(p));
      }
      return chain(chain_parts);
    }
    if (j.contains("block")) {
      const json& b = j["block"];
      const json& cl = detail::array_field(b, "cliques", "recipe.block");
      std::vector<std::size_t> sizes;
      for (std::size_t i = 0; i < cl.size(); ++i)
        sizes.push_back(detail::to_count(cl[i], "recipe.block.cliques[" + std::to_string(i) + "]"));
      return block_graph(sizes, steps_from_json(detail::field(b, "attach", "recipe.block"),
                                                "recipe.block.attach"));
    }
    if (j.contains("rooted")) {
      RootedRecipe r = rooted_from_json(j["rooted"], "recipe.rooted");
      return rooted_product_family(r.graph, r.family);
    }
    if (j.contains("corona")) {
      CoronaRecipe r = corona_from_json(j["corona"], "recipe.corona");
      return corona(r.graph, r.family);
    }
    const json& comps = detail::array_field(j, "components", "recipe");
    std::vector<Graph> components;
    for (std::size_t i = 0; i < comps.size(); ++i)
      components.push_back(graph_from_json(comps[i], "recipe.components[" + std::to_string(i) + "]"));
    return compose(components, steps_from_json(detail::field(j, "attach", "recipe"), "recipe.attach"));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("recipe: ") + e.what());
  }
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Graph load_graph(const std::string& path) { return graph_from_json(load_json(path), path); }

inline Composition load_recipe(const std::string& path) {
  return composition_from_json(load_json(path));
}

inline json to_json(const VertexSet& vs) { return json(std::vector<std::size_t>(vs.begin(), vs.end())); }

inline json to_json(const Composition& c) {
  json comps = json::array();
  for (const auto& p : c.profiles()) {
    comps.push_back({{"index", p.component},
                     {"order", c.component(p.component).order()},
                     {"attachment", to_json(p.attachment)},
                     {"class", p.is_end() ? "end" : "internal"},
                     {"P1", p.p1},
                     {"P2", p.p2},
                     {"provenance", c.provenance(p.component)}});
  }
  return {{"graph", to_json(c.graph())},
          {"attachment", to_json(c.attachment_vertices())},
          {"profiles", std::move(comps)}};
}

inline json to_json(const ResolveReport& r) {
  json bases = json::array();
  for (const auto& b : r.bases) bases.push_back(to_json(b));
  json out = {{"dim", r.dim},
              {"bases", std::move(bases)},
              {"truncated", r.truncated},
              {"membership", r.membership}};
  out["upper_dim"] = r.upper_dim ? json(*r.upper_dim) : json(nullptr);
  out["isolation_index"] = r.isolation_index ? json(*r.isolation_index) : json(nullptr);
  return out;
}

inline json to_json(const VerificationReport& r) {
  json hyps = json::object();
  for (const auto& h : r.hypotheses) hyps[h.name] = h.holds;
  json out = {{"statement", r.statement},
              {"hypotheses", std::move(hyps)},
              {"verdict", std::string(to_string(r.verdict))}};
  out["formula"] = r.formula ? json(*r.formula) : json(nullptr);
  out["oracle"] = r.oracle ? json(*r.oracle) : json("not computed");
  json details = json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  out["details"] = std::move(details);
  return out;
}

}  // namespace metdim::io

#endif  // METDIM_IO_HPP_
