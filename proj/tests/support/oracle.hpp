#pragma once

// Brute-force reference implementations. They only read adjacency from the
// library's Graph and share no code with the solvers they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "eternal/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Adj {
  int n = 0;
  std::vector<Mask> open;    // N(v)
  std::vector<Mask> closed;  // N[v]
};

inline Adj adj_of(const eternal::Graph& g) {
  Adj a;
  a.n = g.order();
  a.open.assign(a.n, 0);
  a.closed.assign(a.n, 0);
  for (int u = 0; u < a.n; ++u) {
    a.closed[u] |= Mask{1} << u;
    for (int v = 0; v < a.n; ++v) {
      if (u != v && g.adjacent(u, v)) {
        a.open[u] |= Mask{1} << v;
        a.closed[u] |= Mask{1} << v;
      }
    }
  }
  return a;
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v) {
    if (m >> v & 1) out.push_back(v);
  }
  return out;
}

// Lexicographic order on sorted member lists.
inline bool lex_before(Mask a, Mask b) { return members(a) < members(b); }

inline Mask closed_nbhd(const Adj& a, Mask s) {
  Mask out = 0;
  for (int v : members(s)) out |= a.closed[v];
  return out;
}

inline bool dominating(const Adj& a, Mask s) { return closed_nbhd(a, s) == full(a.n); }

inline bool independent(const Adj& a, Mask s) {
  for (int v : members(s)) {
    if (a.open[v] & s) return false;
  }
  return true;
}

inline bool clique(const Adj& a, Mask s) {
  for (int v : members(s)) {
    if ((s & ~(Mask{1} << v) & ~a.open[v]) != 0) return false;
  }
  return true;
}

inline bool connected(const Adj& a, Mask s) {
  if (s == 0) return true;
  Mask seen = s & -s;
  for (Mask frontier = seen; frontier;) {
    Mask next = 0;
    for (int v : members(frontier)) next |= a.open[v] & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

struct Best {
  int value = -1;
  Mask witness = 0;  // lexicographically smallest optimum
};

// Smallest (or largest) |S| satisfying pred; ties broken lexicographically.
inline Best extremal_subset(int n, bool minimize, const std::function<bool(Mask)>& pred) {
  Best b;
  for (Mask s = 0; s <= full(n); ++s) {
    if (!pred(s)) continue;
    const int size = popcount(s);
    const bool better = b.value < 0 || (minimize ? size < b.value : size > b.value) ||
                        (size == b.value && lex_before(s, b.witness));
    if (better) b = {size, s};
    if (s == full(n)) break;
  }
  return b;
}

inline Best gamma(const Adj& a) {
  return extremal_subset(a.n, true, [&](Mask s) { return dominating(a, s); });
}
inline Best alpha(const Adj& a) {
  return extremal_subset(a.n, false, [&](Mask s) { return independent(a, s); });
}
inline Best gamma_c(const Adj& a) {
  return extremal_subset(a.n, true, [&](Mask s) { return s != 0 && dominating(a, s) && connected(a, s); });
}
inline Best tau(const Adj& a) {
  return extremal_subset(a.n, true, [&](Mask s) {
    for (int v = 0; v < a.n; ++v) {
      if (!(s >> v & 1) && (a.open[v] & ~s)) return false;
    }
    return true;
  });
}

// Minimum number of parts in a partition of `rest` into sets accepted by `part_ok`,
// with part weights from `weight`.
inline int min_partition(Mask all, const std::function<bool(Mask)>& part_ok, const std::function<int(Mask)>& weight) {
  std::vector<int> best(std::size_t{1} << popcount(all), 0);
  // Index subsets of `all` compactly.
  const std::vector<int> verts = members(all);
  auto expand = [&](std::size_t idx) {
    Mask m = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (idx >> i & 1) m |= Mask{1} << verts[i];
    }
    return m;
  };
  for (std::size_t idx = 1; idx < best.size(); ++idx) {
    const std::size_t low = idx & -idx;
    int b = 1 << 20;
    for (std::size_t sub = idx; sub; sub = (sub - 1) & idx) {
      if (!(sub & low)) continue;
      const Mask part = expand(sub);
      if (!part_ok(part)) continue;
      b = std::min(b, weight(part) + best[idx & ~sub]);
    }
    best[idx] = b;
  }
  return best.back();
}

inline int theta(const Adj& a) {
  return min_partition(full(a.n), [&](Mask s) { return clique(a, s); }, [](Mask) { return 1; });
}

inline Adj induced(const Adj& a, Mask s) {
  const std::vector<int> vs = members(s);
  Adj out;
  out.n = static_cast<int>(vs.size());
  out.open.assign(out.n, 0);
  out.closed.assign(out.n, 0);
  for (int i = 0; i < out.n; ++i) {
    out.closed[i] |= Mask{1} << i;
    for (int j = 0; j < out.n; ++j) {
      if (i != j && (a.open[vs[i]] >> vs[j] & 1)) {
        out.open[i] |= Mask{1} << j;
        out.closed[i] |= Mask{1} << j;
      }
    }
  }
  return out;
}

inline int part_weight(const Adj& a, Mask s) { return clique(a, s) ? 1 : 1 + gamma_c(induced(a, s)).value; }

inline int theta_c(const Adj& a) {
  return min_partition(full(a.n), [&](Mask s) { return connected(a, s); }, [&](Mask s) { return part_weight(a, s); });
}

inline int matching(const Adj& a, Mask alive) {
  if (alive == 0) return 0;
  const int v = __builtin_ctzll(alive);
  const Mask rest = alive & ~(Mask{1} << v);
  int best = matching(a, rest);
  for (int u : members(a.open[v] & rest)) best = std::max(best, 1 + matching(a, rest & ~(Mask{1} << u)));
  return best;
}
inline int matching(const Adj& a) { return matching(a, full(a.n)); }

// Every configuration reachable by moving all guards at once along closed
// neighbourhoods, guards ending on distinct vertices.
inline std::set<Mask> all_guard_moves(const Adj& a, Mask config) {
  std::set<Mask> out;
  const std::vector<int> guards = members(config);
  std::function<void(std::size_t, Mask)> go = [&](std::size_t i, Mask used) {
    if (i == guards.size()) {
      out.insert(used);
      return;
    }
    for (int t : members(a.closed[guards[i]])) {
      if (!(used >> t & 1)) go(i + 1, used | Mask{1} << t);
    }
  };
  go(0, 0);
  return out;
}

// Greatest fixed point by naive repeated filtering.
inline std::set<Mask> safe_family(const Adj& a, int k, bool all_guards) {
  std::set<Mask> alive;
  for (Mask s = 0; s <= full(a.n); ++s) {
    if (popcount(s) == k && dominating(a, s)) alive.insert(s);
    if (s == full(a.n)) break;
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::set<Mask> next;
    for (Mask d : alive) {
      bool ok = true;
      const std::set<Mask> moves = all_guards ? all_guard_moves(a, d) : std::set<Mask>{};
      for (int r = 0; r < a.n && ok; ++r) {
        if (d >> r & 1) continue;
        bool answered = false;
        if (all_guards) {
          for (Mask m : moves) {
            if ((m >> r & 1) && alive.count(m)) {
              answered = true;
              break;
            }
          }
        } else {
          for (int u : members(d & a.open[r])) {
            if (alive.count((d & ~(Mask{1} << u)) | Mask{1} << r)) {
              answered = true;
              break;
            }
          }
        }
        ok = answered;
      }
      if (ok) next.insert(d);
    }
    changed = next.size() != alive.size();
    alive = std::move(next);
  }
  return alive;
}

inline int eternal(const Adj& a, bool all_guards) {
  for (int k = 1; k <= a.n; ++k) {
    if (!safe_family(a, k, all_guards).empty()) return k;
  }
  return a.n;
}

// Number of unlabelled graphs on n vertices by Burnside over S_n acting on pairs.
inline std::uint64_t polya_graph_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0, group = 0;
  do {
    ++group;
    std::set<std::pair<int, int>> seen;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (seen.count({i, j})) continue;
        ++cycles;
        int x = i, y = j;
        do {
          seen.insert({std::min(x, y), std::max(x, y)});
          x = perm[x];
          y = perm[y];
        } while (!(std::min(x, y) == i && std::max(x, y) == j));
      }
    }
    total += std::uint64_t{1} << cycles;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / group;
}

// Unlabelled trees via Otter's formula from rooted-tree counts.
inline std::uint64_t otter_tree_count(int n) {
  std::vector<std::uint64_t> r(n + 1, 0);
  r[1] = 1;
  for (int m = 1; m < n; ++m) {
    std::uint64_t s = 0;
    for (int k = 1; k <= m; ++k) {
      std::uint64_t d_sum = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) d_sum += static_cast<std::uint64_t>(d) * r[d];
      }
      s += d_sum * r[m - k + 1];
    }
    r[m + 1] = s / m;
  }
  // t(n) = r(n) - (sum_{i+j=n} r(i) r(j) - [n even] r(n/2)) / 2
  std::uint64_t pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  if (n % 2 == 0) pairs -= r[n / 2];
  return r[n] - pairs / 2;
}

inline bool isomorphic(const Adj& a, const Adj& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u) {
      for (int v = u + 1; v < a.n && ok; ++v) {
        ok = ((a.open[u] >> v) & 1) == ((b.open[perm[u]] >> perm[v]) & 1);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline eternal::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<eternal::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return eternal::Graph::from_edge_list(n, edges);
}

inline eternal::Graph relabel(const eternal::Graph& g, const std::vector<int>& perm) {
  std::vector<eternal::Edge> edges;
  for (const eternal::Edge& e : g.edges()) {
    edges.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
  }
  return eternal::Graph::from_edge_list(g.order(), edges);
}

}  // namespace oracle
