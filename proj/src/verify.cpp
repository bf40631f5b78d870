#include "dpcolor/verify.hpp"

#include <chrono>
#include <sstream>

namespace dpcolor {

namespace {

template <typename Body>
CheckReport timed(std::string name, std::string params, Body&& body) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.observed = std::string("error: ") + ex.what();
    if (r.expected.empty()) r.expected = "check to complete";
  }
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string join_counts(const std::vector<Int>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i].get_str();
  return os.str();
}

// proper colorings of g bucketed by the colors of u and v
std::vector<std::vector<Int>> color_class_counts(const Graph& g, int m, int u, int v) {
  const int n = g.vertex_count();
  if (int_pow(Int(m), static_cast<unsigned long>(n)) > 10'000'000)
    throw std::invalid_argument("color_class_counts: enumeration too large");
  std::vector<std::vector<Int>> bucket(m, std::vector<Int>(m, Int(0)));
  std::vector<int> color(n, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      ++bucket[color[u]][color[v]];
      return;
    }
    for (int c = 0; c < m; ++c) {
      bool ok = true;
      for (int w : g.neighbors(i))
        if (w < i && color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[i] = c;
      self(self, i + 1);
    }
    color[i] = -1;
  };
  rec(rec, 0);
  return bucket;
}

int girth_of(const Graph& g) {
  const auto gi = girth_and_count(g);
  if (!gi.girth) throw std::invalid_argument("graph is a forest");
  return *gi.girth;
}

}  // namespace

CheckReport check_chordal_equality(const Graph& g, int m_max, std::uint64_t budget) {
  return timed("chordal", "m<=" + std::to_string(m_max), [&](CheckReport& r) {
    const auto peo = chordal_peo(g);
    if (!peo) throw std::invalid_argument("graph is not chordal");
    const IntPolynomial prod = chordal_product_poly(*peo);
    std::vector<Int> want, got;
    for (int m = 1; m <= m_max; ++m) {
      want.push_back(prod.eval(m));
      got.push_back(dp_exact(g, m, budget).minimum);
    }
    r.expected = join_counts(want);
    r.observed = join_counts(got);
    r.pass = want == got;
  });
}

CheckReport check_unicyclic(const Graph& g, int m, std::uint64_t budget) {
  return timed("unicyclic", "m=" + std::to_string(m), [&](CheckReport& r) {
    if (!g.connected() || g.edge_count() != g.vertex_count())
      throw std::invalid_argument("graph is not unicyclic");
    const int n = g.vertex_count();
    const int c = girth_of(g);  // the unique cycle's length
    const Int base = Int(m) - 1;
    Int want;
    if (c % 2 == 1) {
      want = int_pow(base, n) - int_pow(base, n - c + 1);
    } else {
      if (m < 2) throw std::invalid_argument("even-cycle formula requires m >= 2");
      want = int_pow(base, n) - int_pow(base, n - c);
    }
    const Int got = dp_exact(g, m, budget).minimum;
    r.expected = want.get_str();
    r.observed = got.get_str();
    r.pass = want == got;
  });
}

CheckReport check_theta(int a, int b, int m, std::uint64_t budget) {
  return timed("theta",
               std::to_string(a) + "," + std::to_string(b) + ",m=" + std::to_string(m),
               [&](CheckReport& r) {
                 const Graph g = Graph::theta(a, b);
                 const DpFormula f = dp_formula(g, m);
                 if (!f.value) throw std::invalid_argument(f.note);
                 const Int got = dp_exact(g, m, budget).minimum;
                 r.expected = f.value->get_str() + " (" + f.provenance + ")";
                 r.observed = got.get_str();
                 r.pass = *f.value == got;
               });
}

CheckReport check_lemma_ends(const Graph& g, Edge e, int m) {
  return timed("ends", to_string(e) + ",m=" + std::to_string(m), [&](CheckReport& r) {
    if (m < 2) throw std::invalid_argument("needs m >= 2");
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("no such edge");
    const Graph gd = delete_edge(g, e.u, e.v);
    const auto bucket = color_class_counts(gd, m, e.u, e.v);
    const Int rr = bucket[0][0], tt = bucket[0][1];
    bool uniform = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) uniform = uniform && bucket[i][j] == (i == j ? rr : tt);
    const Int p = chromatic_polynomial(g).eval(m);
    const Int pd = chromatic_polynomial(gd).eval(m);
    r.expected = "uniform classes, m*r = P(G-e)-P(G) = " + Int(pd - p).get_str() +
                 ", m*(m-1)*t = P(G) = " + p.get_str();
    r.observed = "r=" + rr.get_str() + ", t=" + tt.get_str() + (uniform ? "" : ", not uniform");
    r.pass = uniform && Int(m) * rr == pd - p && Int(m) * (m - 1) * tt == p;
  });
}

CheckReport check_broken_circuit(const Graph& g) {
  return timed("broken_circuit", "", [&](CheckReport& r) {
    const auto gi = girth_and_count(g);
    if (!gi.girth) throw std::invalid_argument("graph is a forest");
    const IntPolynomial p = chromatic_polynomial(g);
    const int n = g.vertex_count(), girth = *gi.girth;
    const auto want = broken_circuit_coeffs(g.edge_count(), girth, gi.cycle_count);
    std::vector<Int> got;
    for (int i = 0; i < girth; ++i) {
      const Int sign = i % 2 == 0 ? 1 : -1;
      got.push_back(sign * p.coeff(n - i));
    }
    r.expected = join_counts(want);
    r.observed = join_counts(got);
    r.pass = want == got;
  });
}

CheckReport check_path_delete(const Graph& g, int a1, int a2, int a3, int m,
                              std::uint64_t budget) {
  return timed("path_delete",
               "path=" + std::to_string(a1) + "-" + std::to_string(a2) + "-" +
                   std::to_string(a3) + ",m=" + std::to_string(m),
               [&](CheckReport& r) {
                 const auto rep = path_delete_quantities(g, m, a1, a2, a3);
                 std::vector<Int> want(rep.predicted_counts.begin(), rep.predicted_counts.end());
                 std::vector<Int> got;
                 for (int cs = 1; cs <= 5; ++cs)
                   got.push_back(count_colorings(path_case_cover(g, m, a1, a2, a3, cs)));
                 bool ok = want == got;

                 const Graph g0 = delete_edge(delete_edge(g, a1, a2), a2, a3);
                 const bool forest =
                     g0.edge_count() ==
                     g0.vertex_count() - static_cast<int>(g0.components().size());
                 r.expected = join_counts(want);
                 r.observed = join_counts(got);
                 if (forest) {
                   const Int want_min = rep.predicted_counts[rep.max_index - 1];
                   const Int got_min = dp_exact(g, m, budget).minimum;
                   r.expected += "; min=" + want_min.get_str();
                   r.observed += "; min=" + got_min.get_str();
                   ok = ok && want_min == got_min;
                 }
                 r.pass = ok;
               });
}

CheckReport check_join_bound(const Graph& g, int m, long samples, std::uint64_t seed,
                             std::uint64_t budget) {
  return timed("join_bound",
               "m=" + std::to_string(m) + ",samples=" + std::to_string(samples),
               [&](CheckReport& r) {
                 const Int bound = join_lower_bound(g, 1, m, budget);
                 const Graph joined = join_with_complete(g, 1);
                 Rng rng(seed);
                 Int minv;
                 for (long i = 0; i < samples; ++i) {
                   const Int c = count_colorings(random_cover(joined, m, rng));
                   if (i == 0 || c < minv) minv = c;
                 }
                 r.expected = "all sampled counts >= " + bound.get_str();
                 r.observed = "min sampled = " + minv.get_str();
                 r.pass = minv >= bound;
               });
}

CheckReport check_edge_delete_extremal(const Graph& g, int m) {
  return timed("edge_delete", "m=" + std::to_string(m), [&](CheckReport& r) {
    std::vector<Int> want, got;
    for (const Edge& e : g.edges()) {
      want.push_back(edge_delete_extremal_value(g, m, e));
      got.push_back(count_colorings(extremal_edge_cover(g, m, e)));
    }
    r.expected = join_counts(want);
    r.observed = join_counts(got);
    r.pass = want == got;
  });
}

CheckReport check_strict_gap(const Graph& g, int m, bool expect_witness) {
  return timed("strict_gap", "m=" + std::to_string(m), [&](CheckReport& r) {
    const auto w = strict_gap_witness(g, m);
    r.expected = expect_witness ? "witness strictly below P(G,m)" : "no witness";
    if (!w) {
      r.observed = "no witness";
      r.pass = !expect_witness;
      return;
    }
    const Int p = chromatic_polynomial(g).eval(m);
    const Int cnt = count_colorings(twisted_edge_cover(g, m, w->edge));
    r.observed = "edge " + to_string(w->edge) + " value " + w->value.get_str() + " (P=" +
                 p.get_str() + ", twist count " + cnt.get_str() + ")";
    r.pass = expect_witness && w->value < p && cnt == w->value;
  });
}

CheckReport check_monte_carlo(const Graph& g, int m, long samples, std::uint64_t seed) {
  return timed("genupper",
               "m=" + std::to_string(m) + ",samples=" + std::to_string(samples) +
                   ",seed=" + std::to_string(seed),
               [&](CheckReport& r) {
                 const BoundReport rep = monte_carlo_bound(g, m, samples, seed);
                 // (mean - expected)^2 N <= 9 s^2, entirely in exact rationals
                 const Rat dev = rep.monte_carlo_mean - rep.expected_mean;
                 const Rat lhs = dev * dev * Rat(samples);
                 const Rat rhs = Rat(9) * rep.sample_variance;
                 r.expected = "mean within 3 standard errors of " + to_decimal(rep.expected_mean);
                 r.observed = "mean = " + to_decimal(rep.monte_carlo_mean) +
                              ", min sampled = " + rep.min_sampled.get_str();
                 r.pass = lhs <= rhs;
               });
}

CheckReport check_sandwich(const Graph& g, int m, std::uint64_t budget) {
  return timed("sandwich", "m=" + std::to_string(m), [&](CheckReport& r) {
    const Int dp = dp_exact(g, m, budget).minimum;
    const Int upper = count_colorings(identity_cover(g, m));
    std::optional<Int> lower;
    const auto ord = degeneracy_ordering(g);
    if (m > ord.coloring_number - 1) lower = greedy_lower_bound(g, m);
    r.expected = "greedy <= dp <= identity count";
    r.observed = (lower ? lower->get_str() : std::string("-")) + " <= " + dp.get_str() +
                 " <= " + upper.get_str();
    r.pass = dp <= upper && (!lower || *lower <= dp);
  });
}

CheckReport check_asymptotic_gap(const Graph& g, int m_lo, int m_hi) {
  return timed("asymptotic_gap",
               "m=" + std::to_string(m_lo) + ".." + std::to_string(m_hi),
               [&](CheckReport& r) {
                 const IntPolynomial p = chromatic_polynomial(g);
                 const int n = g.vertex_count();
                 std::vector<Int> gaps;
                 bool ok = true;
                 for (int m = m_lo; m <= m_hi; ++m) {
                   const DpFormula f = dp_formula(g, m);
                   if (!f.value) throw std::invalid_argument("no closed form at m=" + std::to_string(m));
                   const Int gap = p.eval(m) - *f.value;
                   gaps.push_back(gap);
                   ok = ok && gap >= 0 && gap <= int_pow(Int(m), static_cast<unsigned long>(n - 2));
                 }
                 r.expected = "0 <= P - P_DP <= m^(n-2) across the range";
                 r.observed = "gaps " + join_counts(gaps);
                 r.pass = ok;
               });
}

CheckReport check_natural_bijection(const Graph& g, int m) {
  return timed("natural_bijection", "m=" + std::to_string(m), [&](CheckReport& r) {
    const Int want = chromatic_polynomial(g).eval(m);
    const Int got = count_colorings(identity_cover(g, m));
    r.expected = want.get_str();
    r.observed = got.get_str();
    r.pass = want == got;
  });
}

std::vector<std::pair<std::string, Graph>> standard_battery() {
  std::vector<std::pair<std::string, Graph>> b;
  for (int n = 2; n <= 6; ++n) b.emplace_back("path:" + std::to_string(n), Graph::path(n));
  b.emplace_back("tree:spider5", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}));
  for (int n = 3; n <= 7; ++n) b.emplace_back("cycle:" + std::to_string(n), Graph::cycle(n));
  for (int n = 3; n <= 5; ++n) b.emplace_back("complete:" + std::to_string(n), Graph::complete(n));
  b.emplace_back("theta:3,3", Graph::theta(3, 3));
  b.emplace_back("theta:3,4", Graph::theta(3, 4));
  b.emplace_back("theta:4,4", Graph::theta(4, 4));
  b.emplace_back("theta:3,5", Graph::theta(3, 5));
  b.emplace_back("unicyclic:4,1", Graph::unicyclic(4, 1));
  b.emplace_back("unicyclic:5,1", Graph::unicyclic(5, 1));
  b.emplace_back("join:K1,cycle:4", join_with_complete(Graph::cycle(4), 1));
  b.emplace_back("chordal:bull", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}));
  b.emplace_back("chordal:gem", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  return b;
}

std::vector<CheckReport> run_all(std::uint64_t budget, std::uint64_t seed) {
  std::vector<CheckReport> out;
  const auto battery = standard_battery();
  auto graph_of = [&](const std::string& name) -> const Graph& {
    for (const auto& [n, g] : battery)
      if (n == name) return g;
    throw std::logic_error("run_all: unknown battery graph " + name);
  };
  auto add = [&](CheckReport r, const std::string& gname) {
    r.params = r.params.empty() ? gname : gname + "," + r.params;
    out.push_back(std::move(r));
  };

  for (const auto& [name, g] : battery)
    for (int m = 1; m <= 4; ++m) add(check_natural_bijection(g, m), name);

  const std::vector<std::pair<std::string, int>> chordal_cases = {
      {"path:2", 4},     {"path:3", 4},     {"path:4", 4},    {"path:5", 4},
      {"path:6", 4},     {"tree:spider5", 4}, {"complete:3", 4}, {"complete:4", 4},
      {"complete:5", 3}, {"theta:3,3", 4},  {"chordal:bull", 4}, {"chordal:gem", 4}};
  for (const auto& [name, mmax] : chordal_cases)
    add(check_chordal_equality(graph_of(name), mmax, budget), name);

  for (const std::string name :
       {"cycle:3", "cycle:4", "cycle:5", "cycle:6", "cycle:7", "unicyclic:4,1", "unicyclic:5,1"})
    for (int m = 2; m <= 3; ++m) add(check_unicyclic(graph_of(name), m, budget), name);

  out.push_back(check_theta(3, 3, 3, budget));
  out.push_back(check_theta(3, 3, 4, budget));
  out.push_back(check_theta(3, 4, 3, budget));
  out.push_back(check_theta(3, 4, 4, budget));
  out.push_back(check_theta(4, 4, 3, budget));
  out.push_back(check_theta(3, 5, 3, budget));

  add(check_lemma_ends(graph_of("path:2"), {0, 1}, 2), "path:2");
  add(check_lemma_ends(graph_of("cycle:3"), {0, 1}, 3), "cycle:3");
  add(check_lemma_ends(graph_of("cycle:4"), {0, 1}, 2), "cycle:4");
  add(check_lemma_ends(graph_of("cycle:4"), {0, 1}, 3), "cycle:4");
  add(check_lemma_ends(graph_of("cycle:5"), {0, 1}, 3), "cycle:5");
  add(check_lemma_ends(graph_of("complete:4"), {0, 1}, 3), "complete:4");
  add(check_lemma_ends(graph_of("theta:3,4"), {0, 1}, 3), "theta:3,4");
  add(check_lemma_ends(graph_of("unicyclic:4,1"), {0, 1}, 3), "unicyclic:4,1");

  for (const std::string name : {"cycle:3", "cycle:4", "cycle:5", "cycle:6", "cycle:7",
                                 "complete:3", "complete:4", "complete:5", "theta:3,3",
                                 "theta:3,4", "theta:4,4", "theta:3,5", "unicyclic:4,1",
                                 "unicyclic:5,1", "join:K1,cycle:4"})
    add(check_broken_circuit(graph_of(name)), name);

  add(check_path_delete(graph_of("theta:3,4"), 0, 1, 3, 3, budget), "theta:3,4");
  add(check_path_delete(graph_of("theta:3,4"), 0, 1, 3, 4, budget), "theta:3,4");
  add(check_path_delete(graph_of("theta:4,4"), 0, 1, 2, 3, budget), "theta:4,4");
  add(check_path_delete(graph_of("cycle:4"), 0, 1, 2, 3, budget), "cycle:4");

  add(check_edge_delete_extremal(graph_of("cycle:3"), 3), "cycle:3");
  add(check_edge_delete_extremal(graph_of("cycle:4"), 3), "cycle:4");
  add(check_edge_delete_extremal(graph_of("cycle:5"), 3), "cycle:5");
  add(check_edge_delete_extremal(graph_of("cycle:6"), 3), "cycle:6");
  add(check_edge_delete_extremal(graph_of("cycle:5"), 2), "cycle:5");
  add(check_edge_delete_extremal(graph_of("theta:3,4"), 3), "theta:3,4");

  add(check_strict_gap(graph_of("cycle:4"), 3, true), "cycle:4");
  add(check_strict_gap(graph_of("cycle:6"), 3, true), "cycle:6");
  add(check_strict_gap(graph_of("theta:3,4"), 3, true), "theta:3,4");
  add(check_strict_gap(graph_of("cycle:5"), 3, false), "cycle:5");
  add(check_strict_gap(graph_of("theta:3,3"), 3, false), "theta:3,3");
  add(check_strict_gap(graph_of("path:4"), 3, false), "path:4");
  add(check_strict_gap(graph_of("complete:4"), 4, false), "complete:4");

  add(check_monte_carlo(graph_of("cycle:4"), 3, 10000, seed), "cycle:4");
  add(check_monte_carlo(graph_of("path:2"), 2, 200, seed + 1), "path:2");
  add(check_monte_carlo(graph_of("cycle:5"), 3, 2000, seed + 2), "cycle:5");

  for (const auto& [name, g] : battery)
    for (int m = 2; m <= 3; ++m) add(check_sandwich(g, m, budget), name);

  add(check_join_bound(graph_of("cycle:4"), 6, 1000, seed + 3, budget), "cycle:4");
  add(check_join_bound(graph_of("cycle:4"), 7, 300, seed + 4, budget), "cycle:4");

  add(check_asymptotic_gap(graph_of("cycle:4"), 3, 8), "cycle:4");

  return out;
}

}  // namespace dpcolor
