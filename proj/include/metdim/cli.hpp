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

#ifndef METDIM_CLI_HPP_
#define METDIM_CLI_HPP_

#include <cstddef>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metdim/io.hpp"
#include "metdim/metdim.hpp"

namespace metdim::cli {

enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kInputError = 2 };

inline VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string tok = text.substr(pos, comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--attach: bad vertex \"" + tok + "\"");
    out.push_back(std::stoul(tok));
    pos = comma + 1;
  }
  return normalized(std::move(out));
}

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric dimension of point-attaching graphs"};
  app.name("metdim");
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool strict = false;
  std::size_t max_n = Limits{}.max_enumeration_order;
  std::size_t max_bases = Limits{}.max_bases;
  std::string out_path;
  app.add_flag("--strict", strict, "exit 1 when hypotheses are unmet");
  app.add_option("--max-n", max_n, "largest order for enumeration queries")->check(CLI::PositiveNumber);
  app.add_option("--max-bases", max_bases, "basis enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write JSON here instead of stdout");

  std::string input, statement, kind, attach;
  std::size_t p_len = 2;

  std::function<io::json(const Limits&)> action;

  auto* dim = app.add_subcommand("dim", "metric dimension and lexicographically least basis");
  dim->add_option("graph", input)->required();
  dim->callback([&] {
    action = [&](const Limits& lim) {
      const MinimumSet m = Resolver(io::load_graph(input), lim).metric_dimension();
      return io::json{{"dim", m.size}, {"basis", io::to_json(m.witness)}};
    };
  });

  auto* bases = app.add_subcommand("bases", "all metric bases");
  bases->add_option("graph", input)->required();
  bases->callback([&] {
    action = [&](const Limits& lim) {
      return io::to_json(Resolver(io::load_graph(input), lim).enumerate_bases());
    };
  });

  auto* updim = app.add_subcommand("updim", "upper metric dimension");
  updim->add_option("graph", input)->required();
  updim->callback([&] {
    action = [&](const Limits& lim) {
      const Resolver r(io::load_graph(input), lim);
      return io::json{{"dim", r.dim()}, {"upper_dim", r.upper_dimension()}};
    };
  });

  auto* attdim = app.add_subcommand("attdim", "attaching metric dimension");
  attdim->add_option("graph", input)->required();
  attdim->add_option("--attach", attach, "comma-separated attachment vertices")->required();
  attdim->callback([&] {
    action = [&](const Limits& lim) {
      const VertexSet a = parse_vertex_list(attach);
      const MinimumSet m = Resolver(io::load_graph(input), lim).attaching_dimension(a);
      return io::json{{"attach", io::to_json(a)}, {"dim_star", m.size}, {"witness", io::to_json(m.witness)}};
    };
  });

  auto* iso = app.add_subcommand("iso-index", "largest isolation over metric bases");
  iso->add_option("graph", input)->required();
  iso->callback([&] {
    action = [&](const Limits& lim) {
      const auto [basis, value] = Resolver(io::load_graph(input), lim).max_isolation_basis();
      return io::json{{"isolation_index", value}, {"basis", io::to_json(basis)}};
    };
  });

  auto* comp = app.add_subcommand("compose", "build a point-attaching graph from a recipe");
  comp->add_option("recipe", input)->required();
  comp->callback([&] {
    action = [&](const Limits&) { return io::to_json(io::load_recipe(input)); };
  });

  auto* product = app.add_subcommand("product", "rooted or corona product");
  product->add_option("kind", kind)->required()->check(CLI::IsMember({"rooted", "corona"}));
  product->add_option("recipe", input)->required();
  product->callback([&] {
    action = [&](const Limits&) {
      io::json j = io::load_json(input);
      if (j.is_object() && j.contains(kind)) j = j[kind];
      if (kind == "rooted") {
        const io::RootedRecipe r = io::rooted_from_json(j);
        return io::to_json(rooted_product_family(r.graph, r.family));
      }
      const io::CoronaRecipe r = io::corona_from_json(j);
      return io::to_json(corona(r.graph, r.family));
    };
  });

  auto* verify = app.add_subcommand("verify", "check a formula against the exact oracle");
  verify->add_option("statement", statement)
      ->required()
      ->check(CLI::IsMember({"lower-bound", "equality", "extremal", "block", "rooted", "corona", "tree",
                             "chain", "cota", "k1-lemma", "treeT", "familyF"}));
  verify->add_option("input", input, "recipe or graph file")->required();
  verify->add_option("--plen", p_len, "path order for cota and familyF")->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&](const Limits& lim) {
      const io::json j = io::load_json(input);
      VerificationReport r;
      if (statement == "lower-bound") {
        r = lower_bound_report(io::composition_from_json(j), lim);
      } else if (statement == "equality") {
        r = main_equality_report(io::composition_from_json(j), lim);
      } else if (statement == "extremal") {
        r = extremal_report(io::composition_from_json(j), lim);
      } else if (statement == "block") {
        r = block_formula_report(io::composition_from_json(j), lim);
      } else if (statement == "chain") {
        r = chain_report(io::composition_from_json(j), lim);
      } else if (statement == "rooted") {
        const io::RootedRecipe rr = io::rooted_from_json(j.contains("rooted") ? j["rooted"] : j);
        r = rooted_family_report(rr.graph, rr.family, lim);
      } else if (statement == "corona") {
        const io::CoronaRecipe cr = io::corona_from_json(j.contains("corona") ? j["corona"] : j);
        r = corona_report(cr.graph, cr.family, lim);
      } else if (statement == "tree") {
        r = tree_dim_report(io::graph_from_json(j, input), lim);
      } else if (statement == "cota") {
        r = cota_bounds_report(io::graph_from_json(j, input), p_len, lim);
      } else if (statement == "k1-lemma") {
        r = k1_lemma_check(io::graph_from_json(j, input), lim);
      } else if (statement == "treeT") {
        const io::json& t = io::detail::field(j, "treeT", input);
        if (!t.is_array() || t.size() != 3) throw ParseError(input + ".treeT: expected [a,b,n]");
        r = tree_T_report(io::detail::to_count(t[0], input + ".treeT[0]"),
                          io::detail::to_count(t[1], input + ".treeT[1]"),
                          io::detail::to_count(t[2], input + ".treeT[2]"), lim);
      } else {
        r = family_F_report(io::detail::to_count(io::detail::field(j, "familyF", input), input + ".familyF"),
                            p_len, lim);
      }
      return io::to_json(r);
    };
  });

  std::vector<std::string> argv_store{"metdim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "metdim: " << e.what() << "\n";
    return kInputError;
  }

  Limits lim;
  lim.max_enumeration_order = max_n;
  lim.max_bases = max_bases;
  io::json result;
  try {
    result = action(lim);
  } catch (const Error& e) {
    err << "metdim: " << e.what() << "\n";
    return kInputError;
  } catch (const io::json::exception& e) {
    err << "metdim: " << e.what() << "\n";
    return kInputError;
  }

  int code = kOk;
  if (result.contains("verdict")) {
    const std::string v = result["verdict"];
    if (v == "refuted" || (strict && v == "hypotheses-unmet")) code = kVerdictFailed;
  }
  if (out_path.empty()) {
    out << result.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "metdim: cannot write " << out_path << "\n";
      return kInputError;
    }
    f << result.dump(2) << "\n";
  }
  return code;
}

}  // namespace metdim::cli

#endif  // METDIM_CLI_HPP_
