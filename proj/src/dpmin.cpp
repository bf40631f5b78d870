#include "dpcolor/dpmin.hpp"

#include <algorithm>
#include <queue>
#include <thread>

namespace dpcolor {

namespace {

std::vector<int> identity_perm(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return p;
}

// permutation of {0..m-1} with the given lexicographic rank (factorial
// number system, most significant digit first)
void decode_lex_rank(std::uint64_t rank, int m, const std::vector<std::uint64_t>& fact,
                     std::vector<int>& out, std::vector<int>& avail) {
  avail.resize(m);
  for (int i = 0; i < m; ++i) avail[i] = i;
  for (int i = 0; i < m; ++i) {
    const std::uint64_t f = fact[m - 1 - i];
    const auto d = static_cast<long>(rank / f);
    rank %= f;
    out[i] = avail[d];
    avail.erase(avail.begin() + d);
  }
}

// length of the single cycle of a connected graph with |E| == |V|
int unique_cycle_length(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) q.push(v);
  }
  int removed = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    gone[v] = 1;
    ++removed;
    for (int w : g.neighbors(v))
      if (!gone[w] && --deg[w] == 1) q.push(w);
  }
  return n - removed;
}

struct ThetaShape {
  int small = 0, large = 0;  // the two cycle lengths through the shared edge
};

// two cycles sharing exactly one edge: connected, |E| = |V|+1, exactly two
// adjacent degree-3 vertices, all else degree 2, and removing the shared
// edge leaves a single cycle (rules out two cycles joined by a bridge)
std::optional<ThetaShape> detect_theta(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 4 || g.edge_count() != n + 1 || !g.connected()) return std::nullopt;
  std::vector<int> hubs;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 3)
      hubs.push_back(v);
    else if (g.degree(v) != 2)
      return std::nullopt;
  }
  if (hubs.size() != 2 || !g.has_edge(hubs[0], hubs[1])) return std::nullopt;
  const int x = hubs[0], y = hubs[1];

  // walk one arc of G - xy from x; all internal vertices have degree 2
  int prev = x, curr = -1;
  for (int w : g.neighbors(x))
    if (w != y) {
      curr = w;
      break;
    }
  int steps = 1;
  std::vector<char> seen(n, 0);
  seen[x] = 1;
  while (curr != y) {
    if (seen[curr] || g.degree(curr) != 2) return std::nullopt;
    seen[curr] = 1;
    for (int w : g.neighbors(curr))
      if (w != prev) {
        prev = curr;
        curr = w;
        break;
      }
    ++steps;
  }
  const int arc1 = steps, arc2 = n - steps;
  if (arc1 < 2 || arc2 < 2) return std::nullopt;
  return ThetaShape{std::min(arc1, arc2) + 1, std::max(arc1, arc2) + 1};
}

Int chromatic_at(const Graph& g, int m) { return chromatic_polynomial(g).eval(m); }

}  // namespace

BudgetExceeded::BudgetExceeded(Int required_, std::uint64_t budget_)
    : std::runtime_error("configuration budget exceeded: sweep requires " + required_.get_str() +
                         " configurations, budget is " + std::to_string(budget_)),
      required(std::move(required_)),
      budget(budget_) {}

DpMinResult dp_exact(const Graph& g, int m, std::uint64_t budget, int threads) {
  if (g.vertex_count() < 1) throw std::invalid_argument("dp_exact: need a nonempty graph");
  if (m < 1) throw std::invalid_argument("dp_exact: need m >= 1");
  if (!g.connected()) throw std::invalid_argument("dp_exact: graph must be connected");

  const SpanningTree st = canonical_spanning_tree(g);
  const int k = static_cast<int>(st.non_tree_edges.size());
  const Int mfact = factorial(static_cast<unsigned long>(m));
  const Int required = int_pow(mfact, static_cast<unsigned long>(k));
  if (required > budget) throw BudgetExceeded(required, budget);
  const std::uint64_t total = required.get_ui();

  std::uint64_t mf = 1;
  std::vector<std::uint64_t> fact;
  if (k > 0) {
    mf = mfact.get_ui();  // mf <= total <= budget, so it fits
    fact.resize(m);
    fact[0] = 1;
    for (int i = 1; i < m; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  }

  const TransversalCounter counter(g, m);
  const std::vector<int> ident = identity_perm(m);

  struct Best {
    Int count;
    std::uint64_t index = 0;
    bool valid = false;
  };

  auto sweep = [&](std::uint64_t lo, std::uint64_t hi, Best& out) {
    std::vector<std::vector<int>> cur(k, std::vector<int>(m)), inv(k, std::vector<int>(m));
    std::vector<const int*> sig(g.edge_count(), ident.data());
    std::vector<const int*> sig_inv(g.edge_count(), ident.data());
    for (int i = 0; i < k; ++i) {
      sig[st.non_tree_edges[i]] = cur[i].data();
      sig_inv[st.non_tree_edges[i]] = inv[i].data();
    }
    std::vector<std::uint64_t> digits(k);
    std::vector<int> avail;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rem = idx;
      for (int i = k - 1; i >= 0; --i) {
        digits[i] = rem % mf;
        rem /= mf;
      }
      for (int i = 0; i < k; ++i) {
        decode_lex_rank(digits[i], m, fact, cur[i], avail);
        for (int x = 0; x < m; ++x) inv[i][cur[i][x]] = x;
      }
      Int c = counter.count(sig, sig_inv);
      if (!out.valid || c < out.count) {
        out.count = std::move(c);
        out.index = idx;
        out.valid = true;
      }
    }
  };

  int nthreads = std::clamp(threads, 1, 256);
  if (static_cast<std::uint64_t>(nthreads) > total) nthreads = static_cast<int>(total);

  Best best;
  if (nthreads <= 1) {
    sweep(0, total, best);
  } else {
    std::vector<Best> partial(nthreads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / nthreads, extra = total % nthreads;
    std::uint64_t lo = 0;
    for (int t = 0; t < nthreads; ++t) {
      const std::uint64_t len = chunk + (t < static_cast<int>(extra) ? 1 : 0);
      pool.emplace_back(sweep, lo, lo + len, std::ref(partial[t]));
      lo += len;
    }
    for (auto& th : pool) th.join();
    // smallest count, ties to the smallest configuration index: identical to
    // a serial sweep regardless of how the range was split
    for (Best& b : partial) {
      if (!b.valid) continue;
      if (!best.valid || b.count < best.count ||
          (b.count == best.count && b.index < best.index))
        best = std::move(b);
    }
  }

  std::vector<std::vector<int>> wperms(g.edge_count(), ident);
  if (k > 0) {
    std::uint64_t rem = best.index;
    std::vector<std::uint64_t> digits(k);
    for (int i = k - 1; i >= 0; --i) {
      digits[i] = rem % mf;
      rem /= mf;
    }
    std::vector<int> avail;
    for (int i = 0; i < k; ++i)
      decode_lex_rank(digits[i], m, fact, wperms[st.non_tree_edges[i]], avail);
  }
  Cover witness(g, m, std::move(wperms));
  if (count_colorings(witness) != best.count)
    throw std::logic_error("dp_exact: witness recount mismatch");
  return {std::move(best.count), std::move(witness), total, true};
}

DpFormula dp_formula(const Graph& g, int m) {
  if (g.vertex_count() < 1) throw std::invalid_argument("dp_formula: need a nonempty graph");
  if (m < 1) throw std::invalid_argument("dp_formula: need m >= 1");
  if (!g.connected()) throw std::invalid_argument("dp_formula: graph must be connected");

  if (const auto peo = chordal_peo(g)) {
    Int v = 1;
    for (int a : peo->alphas) v *= Int(m) - a;
    return {v, "chordal", ""};
  }

  const int n = g.vertex_count();
  if (g.edge_count() == n) {
    const int c = unique_cycle_length(g);
    const Int base = Int(m) - 1;
    if (c % 2 == 1)
      return {int_pow(base, n) - int_pow(base, n - c + 1), "onecycle(i)", ""};
    if (m >= 2)
      return {int_pow(base, n) - int_pow(base, n - c), "onecycle(ii)", ""};
    return {std::nullopt, "onecycle(ii)", "onecycle(ii) requires m >= 2"};
  }

  if (const auto th = detect_theta(g)) {
    const int a = th->small, b = th->large;
    const Int base = Int(m) - 1;
    const bool a_odd = a % 2 == 1, b_odd = b % 2 == 1;
    if (a_odd && b_odd) return {chromatic_at(g, m), "cyclepluschord(i)", ""};
    if (!a_odd && !b_odd) {
      if (m >= 3) {
        const Int num =
            int_pow(base, a + b - 1) - int_pow(base, a - 1) - int_pow(base, b - 1) - m - 1;
        return {exact_div(num, m), "cyclepluschord(ii)", ""};
      }
      return {std::nullopt, "cyclepluschord(ii)", "cyclepluschord(ii) requires m >= 3"};
    }
    const int odd = a_odd ? a : b, even = a_odd ? b : a;
    if (m >= 2) {
      const Int num =
          int_pow(base, a + b - 1) - int_pow(base, odd - 1) - int_pow(base, even) + 1;
      return {exact_div(num, m), "cyclepluschord(iii)", ""};
    }
    return {std::nullopt, "cyclepluschord(iii)", "cyclepluschord(iii) requires m >= 2"};
  }

  return {std::nullopt, "", "no closed form for this graph"};
}

ColoringCount greedy_lower_bound(const Graph& g, int m) {
  const auto ord = degeneracy_ordering(g);
  const int maxb = ord.coloring_number - 1;
  if (m <= maxb)
    throw std::invalid_argument("greedy_lower_bound: requires m > max back degree, which is " +
                                std::to_string(maxb));
  Int v = 1;
  for (int b : ord.back_degrees) v *= Int(m) - b;
  return v;
}

BoundReport monte_carlo_bound(const Graph& g, int m, long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_bound: need samples >= 1");
  if (m < 1) throw std::invalid_argument("monte_carlo_bound: need m >= 1");
  BoundReport r;
  r.samples = samples;
  r.seed = seed;
  const auto ord = degeneracy_ordering(g);
  if (m > ord.coloring_number - 1) r.greedy_lower = greedy_lower_bound(g, m);
  r.chromatic_upper = count_colorings(identity_cover(g, m));
  const auto n = static_cast<unsigned long>(g.vertex_count());
  const auto e = static_cast<unsigned long>(g.edge_count());
  r.expected_mean = make_rat(int_pow(Int(m), n) * int_pow(Int(m) - 1, e), int_pow(Int(m), e));

  Rng rng(seed);
  Int sum = 0, sumsq = 0, minv;
  for (long i = 0; i < samples; ++i) {
    const Int c = count_colorings(random_cover(g, m, rng));
    sum += c;
    sumsq += c * c;
    if (i == 0 || c < minv) minv = c;
  }
  r.monte_carlo_mean = make_rat(sum, samples);
  r.sample_variance = samples == 1
                          ? Rat(0)
                          : make_rat(Int(samples) * sumsq - sum * sum,
                                     Int(samples) * (samples - 1));
  r.min_sampled = minv;
  return r;
}

ColoringCount edge_delete_extremal_value(const Graph& g, int m, Edge e) {
  if (m < 2) throw std::invalid_argument("edge_delete_extremal_value: need m >= 2");
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge_delete_extremal_value: no such edge");
  const Int p = chromatic_at(g, m);
  const Int pd = chromatic_at(delete_edge(g, e.u, e.v), m);
  // identity loses P(G-e)-P(G); the cyclic twist loses P(G)/(m-1)
  if (pd * (m - 1) >= p * m) return p;
  return pd - exact_div(p, Int(m) - 1);
}

Cover extremal_edge_cover(const Graph& g, int m, Edge e) {
  if (m < 2) throw std::invalid_argument("extremal_edge_cover: need m >= 2");
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("extremal_edge_cover: no such edge");
  const Int p = chromatic_at(g, m);
  const Int pd = chromatic_at(delete_edge(g, e.u, e.v), m);
  if (pd * (m - 1) >= p * m) return identity_cover(g, m);
  return twisted_edge_cover(g, m, e);
}

std::optional<GapWitness> strict_gap_witness(const Graph& g, int m) {
  if (m < 2) throw std::invalid_argument("strict_gap_witness: need m >= 2");
  const Int p = chromatic_at(g, m);
  for (const Edge& e : g.edges()) {
    const Int pd = chromatic_at(delete_edge(g, e.u, e.v), m);
    if (pd * (m - 1) < p * m) return GapWitness{e, pd - exact_div(p, Int(m) - 1)};
  }
  return std::nullopt;
}

PathDeleteReport path_delete_quantities(const Graph& g, int m, int a1, int a2, int a3) {
  if (m < 3) throw std::invalid_argument("path_delete_quantities: need m >= 3");
  if (a1 == a2 || a2 == a3 || a1 == a3)
    throw std::invalid_argument("path_delete_quantities: path vertices must be distinct");
  if (!g.has_edge(a1, a2) || !g.has_edge(a2, a3))
    throw std::invalid_argument("path_delete_quantities: path edges missing");
  if (g.has_edge(a1, a3))
    throw std::invalid_argument("path_delete_quantities: path endpoints must be non-adjacent");

  const Graph g1 = delete_edge(g, a1, a2);
  const Graph g2 = delete_edge(g, a2, a3);
  const Graph g0 = delete_edge(g1, a2, a3);
  const Graph gs = add_edge(g, a1, a3);
  const Rat p = Rat(chromatic_at(g, m));
  const Rat p0 = Rat(chromatic_at(g0, m));
  const Rat p1 = Rat(chromatic_at(g1, m));
  const Rat p2 = Rat(chromatic_at(g2, m));
  const Rat ps = Rat(chromatic_at(gs, m));
  const Rat m1 = Rat(m - 1), m2 = Rat(m - 2);

  PathDeleteReport r;
  r.quantities[0] = p0 - p;
  r.quantities[1] = p0 - p2 + p / m1;
  r.quantities[2] = p0 - p1 + p / m1;
  r.quantities[3] = (p1 + p2 + ps - p) / m1;
  r.quantities[4] = (p1 + p2 - ps / m2) / m1;
  r.base = to_integer(p0);
  r.max_index = 1;
  for (int i = 1; i < 5; ++i)
    if (r.quantities[i] > r.quantities[r.max_index - 1]) r.max_index = i + 1;
  for (int i = 0; i < 5; ++i) r.predicted_counts[i] = to_integer(p0 - r.quantities[i]);
  return r;
}

ColoringCount join_lower_bound(const Graph& g, int p, int m, std::uint64_t budget) {
  if (p < 1) throw std::invalid_argument("join_lower_bound: need p >= 1");
  const int n = g.vertex_count();
  const int col = degeneracy_ordering(g).coloring_number;
  if (col < 3)
    throw std::invalid_argument("join_lower_bound: requires coloring number >= 3, got " +
                                std::to_string(col));
  if (m < col + 2 + p)
    throw std::invalid_argument("join_lower_bound: requires m >= col + 2 + p = " +
                                std::to_string(col + 2 + p));

  Int dp_base;
  const DpFormula f = dp_formula(g, m - p);
  if (f.value)
    dp_base = *f.value;
  else
    dp_base = dp_exact(g, m - p, budget).minimum;

  Int rem = 2 * int_pow(Int(m - p + 1 - col - 2), static_cast<unsigned long>(n - 2));
  for (int i = 2; i <= p; ++i) {
    const int coli = degeneracy_ordering(join_with_complete(g, i - 1)).coloring_number;
    const int fold = m - p + i;
    rem = fold * rem + 2 * int_pow(Int(fold - coli - 2), static_cast<unsigned long>(n + i - 3));
  }
  const Int shared = falling_factorial_at(Int(m), static_cast<unsigned long>(p));
  const Int via_join = shared * chromatic_at(g, m - p);
  const Int via_dp = shared * dp_base + rem;
  return std::min(via_join, via_dp);
}

}  // namespace dpcolor
