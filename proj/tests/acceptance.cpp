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


// Acceptance runner. `acceptance` runs every criterion; `acceptance 3 7` runs
// the listed ones. One PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "metdim/metdim.hpp"
#include "oracle.hpp"

namespace {

using namespace metdim;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks";
    for (const auto& n : notes_) s << "; " << n;
    if (failures_ > 0) {
      s << "; " << failures_ << " failed";
      for (const auto& m : messages_) s << " [" << m << "]";
    }
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

std::string name_of(const Graph& g) {
  return "order " + std::to_string(g.order()) + " size " + std::to_string(g.size());
}

std::vector<VertexSet> nonempty_subsets(std::size_t n) {
  std::vector<VertexSet> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) out.push_back(oracle::members(m));
  return out;
}

std::string join(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void named_families(Check& c) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Resolver r(complete_graph(n));
    c.equal(r.dim(), n - 1, "dim K" + std::to_string(n));
    c.equal(r.upper_dimension(), n - 1, "dim+ K" + std::to_string(n));
  }
  for (std::size_t r = 2; r <= 7; ++r) c.equal(Resolver(star_graph(r)).dim(), r - 1, "dim K1," + std::to_string(r));
  for (std::size_t n = 3; n <= 10; ++n) {
    const Resolver cyc(cycle_graph(n));
    c.equal(cyc.dim(), 2u, "dim C" + std::to_string(n));
    c.equal(cyc.upper_dimension(), 2u, "dim+ C" + std::to_string(n));
    const Resolver path(path_graph(n));
    c.equal(path.dim(), 1u, "dim P" + std::to_string(n));
    c.equal(path.upper_dimension(), 2u, "dim+ P" + std::to_string(n));
  }
}

void closed_forms(Check& c) {
  const auto run = [&](StandardKind kind, std::size_t lo, std::size_t hi, const char* tag) {
    for (std::size_t n = lo; n <= hi; ++n) {
      const Graph g = make_standard(kind, n);
      const Resolver r(g);
      for (const auto& a : nonempty_subsets(g.order())) {
        std::ostringstream what;
        what << tag << n << " A=" << join(std::vector<long long>(a.begin(), a.end()));
        c.equal(r.attaching_dimension(a).size, closed_form_dim_star(kind, n, a), what.str());
      }
    }
  };
  run(StandardKind::kPath, 2, 8, "P");
  run(StandardKind::kCycle, 3, 8, "C");
  run(StandardKind::kComplete, 2, 7, "K");
}

void extremal_fixture(Check& c) {
  const Composition sample = fixtures::sample_extremal();
  c.equal(Resolver(sample.graph()).dim(), 6u, "dim");
  const VerificationReport r = extremal_report(sample);
  c.equal(join(r.details.at("tau")), std::string("(1,2,1,2,1,1)"), "tau");
  c.equal(to_string(r.verdict), std::string_view("formula-matches"), "extremal verdict");
}

void chain_fixture(Check& c) {
  const Composition sample = fixtures::sample_chain();
  c.equal(Resolver(sample.graph()).dim(), 4u, "dim");
  const VerificationReport ch = chain_report(sample);
  c.equal(join(ch.details.at("dim_star")), std::string("(2,1,0,1)"), "dim*");
  c.equal(to_string(ch.verdict), std::string_view("formula-matches"), "chain verdict");
  c.equal(to_string(main_equality_report(sample).verdict), std::string_view("formula-matches"),
          "main-equality verdict");
}

void family_f(Check& c) {
  for (std::size_t t = 3; t <= 5; ++t) {
    const std::string tag = "t=" + std::to_string(t);
    const Graph g = build_family_F(t);
    const Resolver r(g);
    c.equal(r.dim(), t, tag + " dim");
    c.equal(r.isolation_index(), t + 1, tag + " I");
    VertexSet x;
    for (Vertex i = 1; i <= t; ++i) x.push_back(i);
    c.expect(r.is_resolving(x) && x.size() == r.dim(), tag + " {x_1..x_t} is a basis");
    const VerificationReport cota = cota_bounds_report(g, 3);
    c.expect(cota.oracle.has_value(), tag + " product oracle computed");
    if (cota.oracle) c.equal(*cota.oracle, static_cast<long long>(t), tag + " product dim");
  }
}

void corona_fixtures(Check& c) {
  const Graph h = fixtures::apex_member_h();
  for (const Graph& g : {path_graph(2), path_graph(3), cycle_graph(3)}) {
    const std::string tag = "G " + name_of(g);
    const Composition prod = corona_uniform(g, h);
    c.equal(oracle::dim(prod.graph()), 2 * g.order(), tag + " dim");
    const VerificationReport r = corona_uniform_report(g, h);
    c.equal(to_string(r.verdict), std::string_view("formula-matches"), tag + " corona verdict");
  }
  const Graph sample = fixtures::radius_three_h();
  const Resolver join(join_with_k1(sample));
  c.equal(join.dim(), 4u, "dim(K1+H) for the radius-3 H");
  c.equal(join.basis_membership(sample.order()), false, "K1 vertex membership");
}

void tree_suite(Check& c) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(4, 16);
  std::size_t trees = 0;
  while (trees < 200) {
    const Graph t = oracle::random_tree(pick(rng), rng);
    if (is_path(t)) continue;
    ++trees;
    const VerificationReport r = tree_dim_report(t);
    c.expect(r.verdict == Verdict::kFormulaMatches, "tree " + name_of(t) + " formula " +
                                                        std::to_string(*r.formula) + " vs oracle " +
                                                        std::to_string(*r.oracle));
  }
  std::size_t triples = 0;
  for (std::size_t n = 4; n <= 12; ++n)
    for (std::size_t a = 2; a <= n; ++a)
      for (std::size_t b = a + 1; 2 * b <= a + n; ++b) {
        ++triples;
        const VerificationReport r = tree_T_report(a, b, n);
        c.expect(r.verdict == Verdict::kFormulaMatches,
                 "T(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + ")");
      }
  c.note(std::to_string(triples) + " feasible T(a,b,n)");
}

void composition_suite(Check& c) {
  std::mt19937 rng(808);
  const std::vector<Graph> pool{complete_graph(3), complete_graph(4), cycle_graph(4),
                                cycle_graph(6), star_graph(3), path_graph(4)};
  std::uniform_int_distribution<std::size_t> parts(2, 7);
  std::size_t equality_cases = 0;
  for (int i = 0; i < 100; ++i) {
    const Composition comp = fixtures::random_composition(pool, 20, parts(rng), rng);
    const VerificationReport lb = lower_bound_report(comp);
    c.expect(lb.verdict == Verdict::kBoundHolds, "lower bound on " + name_of(comp.graph()));
    const VerificationReport eq = main_equality_report(comp);
    if (eq.hypotheses_hold()) {
      ++equality_cases;
      c.expect(eq.verdict == Verdict::kFormulaMatches, "main equality on " + name_of(comp.graph()));
    }
  }
  c.note(std::to_string(equality_cases) + " compositions met the equality hypotheses");
}

void rooted_suite(Check& c) {
  const Composition left = rooted_product_uniform(path_graph(4), cycle_graph(3), 0);
  c.equal(left.graph().order(), 12u, "P4 o C3 order");
  c.equal(to_string(rooted_uniform_report(path_graph(4), cycle_graph(3), 0).verdict),
          std::string_view("formula-matches"), "P4 o C3 verdict");
  const VerificationReport right = rooted_uniform_report(cycle_graph(3), path_graph(4), 1);
  c.equal(right.oracle.value_or(-1), 3LL, "C3 o_v P4 dim");
  c.equal(to_string(right.verdict), std::string_view("formula-matches"), "C3 o_v P4 verdict");

  std::mt19937 rng(4242);
  const std::vector<Graph> hs{path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5),
                              complete_graph(3), complete_graph(4), star_graph(3), build_family_F(3),
                              fixtures::apex_member_h()};
  std::uniform_int_distribution<std::size_t> pick_h(0, hs.size() - 1), pick_n(2, 6);
  std::size_t accepted = 0, rejected = 0;
  while (accepted < 50) {
    const Graph& h = hs[pick_h(rng)];
    const std::size_t n = pick_n(rng);
    if (n * h.order() > 24) continue;
    const Graph g = oracle::random_connected(n, 0.4, rng);
    std::uniform_int_distribution<Vertex> pick_root(0, h.order() - 1);
    const Vertex root = pick_root(rng);
    const VerificationReport r = rooted_uniform_report(g, h, root);
    if (!r.hypotheses_hold()) {
      ++rejected;
      continue;
    }
    ++accepted;
    c.expect(r.verdict == Verdict::kFormulaMatches, "rooted product G " + name_of(g) + " H " + name_of(h) +
                                                        " root " + std::to_string(root));
  }
  c.note(std::to_string(rejected) + " draws skipped by the rooted-P2 hypothesis");

  // dim(G o_v H) = n iff H is a path rooted at a non-leaf, among roots in no basis of H.
  const std::vector<Graph> gs{path_graph(3), cycle_graph(4), star_graph(3), complete_graph(4)};
  const std::vector<Graph> cand{path_graph(3), path_graph(4), path_graph(5), cycle_graph(4), complete_graph(3)};
  std::size_t checked = 0, excluded = 0;
  for (const Graph& h : cand) {
    const Resolver rh(h);
    for (Vertex v = 0; v < h.order(); ++v) {
      if (rh.basis_membership(v)) {
        ++excluded;
        continue;
      }
      for (const Graph& g : gs) {
        ++checked;
        const std::size_t d = Resolver(rooted_product_uniform(g, h, v).graph()).dim();
        const bool predicted = is_path(h) && h.degree(v) != 1;
        c.expect((d == g.order()) == predicted, "path-iff on H " + name_of(h) + " root " + std::to_string(v));
      }
    }
  }
  c.note(std::to_string(checked) + " path-iff cases, " + std::to_string(excluded) +
         " (H, root) pairs excluded with root in a basis");
}

void cota_suite(Check& c) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick_n(2, 9);
  std::uniform_real_distribution<double> pick_p(0.1, 0.7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_connected(pick_n(rng), pick_p(rng), rng);
    for (std::size_t p_len : {2u, 3u}) {
      const std::string tag = name_of(g) + " plen " + std::to_string(p_len);
      const VerificationReport r = cota_bounds_report(g, p_len);
      c.expect(r.verdict == Verdict::kBoundHolds, "bounds on " + tag);
      const CotaGenerator gen = cota_generator(g, p_len);
      c.expect(is_resolving(gen.product.graph(), gen.generator), "generator resolves " + tag);
      c.expect(2 * static_cast<long long>(gen.generator.size()) <= r.details.at("upper_bound_doubled").front(),
               "generator size " + tag);
    }
  }
}

void ore_suite(Check& c) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick_n(2, 9);
  std::uniform_real_distribution<double> pick_p(0.0, 0.6);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_connected(pick_n(rng), pick_p(rng), rng);
    const DominatingSet d = domination_number(g);
    c.expect(2 * d.size <= g.order(), "Ore bound on " + name_of(g));
    c.equal(d.size, oracle::domination(g), "gamma on " + name_of(g));
    bool dominates = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      bool hit = contains(d.witness, v);
      for (Vertex w : g.neighbors(v)) hit = hit || contains(d.witness, w);
      dominates = dominates && hit;
    }
    c.expect(dominates, "witness dominates " + name_of(g));
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "named-family dimensions", named_families},
      {2, "attaching dimension closed forms", closed_forms},
      {3, "extremal sample composition", extremal_fixture},
      {4, "chain sample composition", chain_fixture},
      {5, "family F", family_f},
      {6, "corona fixtures", corona_fixtures},
      {7, "tree formula and T(a,b,n)", tree_suite},
      {8, "random point-attaching compositions", composition_suite},
      {9, "rooted products", rooted_suite},
      {10, "path-rooted product bounds", cota_suite},
      {11, "domination and Ore bound", ore_suite},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  bool ok = true;
  for (const auto& crit : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), crit.id) == wanted.end()) continue;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && c.passed();
    std::cout << (c.passed() ? "PASS" : "FAIL") << " " << crit.id << " " << crit.title << " ("
              << c.summary() << "; " << secs << " s)" << std::endl;
  }
  return ok ? 0 : 1;
}
