#pragma once

// Depth-by-depth enumeration of principal graph pair extensions with the
// pruning filters: index bound, loop-count matching, odd-depth duality
// pairing, self-dual counts past the branch, stability/cylinder promotion,
// the intermediate-subfactor filter, and a literature exclusion table.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bgpa/bigraph.hpp"
#include "bgpa/spectral.hpp"

namespace bgpa {

// Number of length-2 paths between two depth-2 vertices (through depth 1 or
// depth 3).
inline int thickness(const Bigraph& g, int v, int w) {
  int t = g.blocks[1][v][0] * g.blocks[1][w][0];
  if (g.max_depth() >= 3)
    for (const auto& row : g.blocks[2]) t += row[v] * row[w];
  return t;
}

namespace detail {

// A central depth-2 vertex with more than one edge in total and thickness 1
// to every other depth-2 vertex forces a biprojection. So does a central
// depth-2 vertex with no further edges at all: its dimension is forced to be
// exactly 1, making it an invertible object which normalizes the inclusion.
inline bool has_intermediate_witness(const Bigraph& g) {
  if (g.max_depth() < 3) return false;
  if (g.vertex_count(1) != 1) return false;
  int n2 = g.vertex_count(2);
  for (int p = 0; p < n2; ++p) {
    if (g.blocks[1][p][0] != 1) continue;  // central: one simple edge down
    if (vertex_degree(g, 2, p) < 2) return true;  // dimension exactly 1: invertible
    bool ok = true;
    for (int q = 0; q < n2 && ok; ++q) {
      if (q == p) continue;
      if (thickness(g, p, q) != 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

// True iff the pair is excluded from the no-intermediate classification.
inline bool intermediate_filter(const BigraphPair& p, bool either_side = true) {
  if (detail::has_intermediate_witness(p.plus)) return true;
  return either_side && detail::has_intermediate_witness(p.minus);
}

// Stability between depths n and n+1: at most one new neighbor per vertex,
// no shared new vertices, all edges simple.
inline bool is_stable_at_depth(const Bigraph& g, int n) {
  if (n >= g.max_depth()) return true;
  const auto& block = g.blocks[n];
  int prev = g.vertex_count(n);
  std::vector<int> colsum(prev, 0);
  for (const auto& row : block) {
    int rowsum = 0;
    for (int u = 0; u < prev; ++u) {
      if (row[u] > 1) return false;
      rowsum += row[u];
      colsum[u] += row[u];
    }
    if (rowsum > 1) return false;
  }
  for (int s : colsum)
    if (s > 1) return false;
  return true;
}

enum class PairClass { Weed, Cylinder, Dead };

inline PairClass classify_pair(const BigraphPair& p, const Rat& index_max) {
  int d = std::max(p.plus.max_depth(), p.minus.max_depth());
  if (exceeds_index(p.plus, index_max) || exceeds_index(p.minus, index_max))
    return PairClass::Dead;
  if (d >= 2 && is_stable_at_depth(p.plus, d - 1) && is_stable_at_depth(p.minus, d - 1))
    return PairClass::Cylinder;
  return PairClass::Weed;
}

// ---- extension --------------------------------------------------------------

enum class RunRestriction { None, DartTwoEdges, DartBranchVertex, DartTwoEdgesWhenUntouched };

namespace detail {

// Walk counts from the root: w[d][v] = number of length-d walks root -> v
// where v runs over the vertices at every depth (flat per-depth vectors).
struct WalkCounts {
  // walks[k]: vector over all vertices (depth-major) of length-k walk counts
  std::vector<std::vector<Int>> per_depth;  // per_depth[d][v]: walks of length = chosen k to (d,v)

  static std::vector<std::vector<Int>> step(const Bigraph& g,
                                            const std::vector<std::vector<Int>>& w) {
    std::vector<std::vector<Int>> nw(g.max_depth() + 1);
    for (int d = 0; d <= g.max_depth(); ++d) nw[d].assign(g.vertex_count(d), Int(0));
    for (int d = 0; d < g.max_depth(); ++d) {
      for (int hi = 0; hi < g.vertex_count(d + 1); ++hi) {
        for (int lo = 0; lo < g.vertex_count(d); ++lo) {
          Int m = g.blocks[d][hi][lo];
          if (m == 0) continue;
          nw[d + 1][hi] += m * w[d][lo];
          nw[d][lo] += m * w[d + 1][hi];
        }
      }
    }
    return nw;
  }

  // Walk vector of length k.
  static std::vector<std::vector<Int>> of_length(const Bigraph& g, int k) {
    std::vector<std::vector<Int>> w(g.max_depth() + 1);
    for (int d = 0; d <= g.max_depth(); ++d) w[d].assign(g.vertex_count(d), Int(0));
    w[0][0] = 1;
    for (int i = 0; i < k; ++i) w = step(g, w);
    return w;
  }
};

inline Int loop_count(const Bigraph& g, int k) {
  // closed walks of length 2k at the root = sum of squares of length-k walks
  auto w = WalkCounts::of_length(g, k);
  Int s = 0;
  for (const auto& blk : w)
    for (const auto& v : blk) s += v * v;
  return s;
}

// Associativity of the four-partite fusion data: counting a simple object u
// in X (x) z (x) Xbar via the two bracketings forces, over the shared odd
// index set, sum_w A-(dual z, w) A+(u, w) = sum_w A-(z, w) A+(dual u, w) for
// all even u of G+ and even z of G- whose edge rows are complete in the
// truncation.
inline bool associativity_ok(const BigraphPair& p) {
  int D = std::max(p.plus.max_depth(), p.minus.max_depth());
  ParityIndex ip(p.plus), im(p.minus);
  auto Ap = incidence_matrix(p.plus, ip);
  auto Am = incidence_matrix(p.minus, im);
  int dmin = std::min(p.plus.max_depth(), p.minus.max_depth());
  std::vector<std::pair<int, int>> shared;
  for (int d = 1; d <= dmin; d += 2)
    for (int v = 0; v < p.plus.vertex_count(d); ++v) shared.push_back({d, v});
  for (size_t eu = 0; eu < ip.evens.size(); ++eu) {
    auto [du, vu] = ip.evens[eu];
    if (du > D - 1) continue;  // edges to the next depth not yet known
    if (!p.plus.with_duals) continue;
    int vub = p.plus.even_duals[du / 2][vu];
    for (size_t ez = 0; ez < im.evens.size(); ++ez) {
      auto [dz, vz] = im.evens[ez];
      if (dz > D - 1) continue;
      if (!p.minus.with_duals) continue;
      int vzb = p.minus.even_duals[dz / 2][vz];
      Int lhs = 0, rhs = 0;
      for (auto [dw, vw] : shared) {
        int os_p = ip.odd_of.at({dw, vw}), os_m = im.odd_of.at({dw, vw});
        lhs += Ap[ip.even_of.at({du, vu})][os_p] * Am[im.even_of.at({dz, vzb})][os_m];
        rhs += Ap[ip.even_of.at({du, vub})][os_p] * Am[im.even_of.at({dz, vz})][os_m];
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// Dimensions at a formal modulus delta = q + 1/q, as far as the interior
// eigen-relations determine them, must agree on dual pairs: cross-paired odd
// vertices and even dual pairs get equal dimension functions. Checked by
// exact rational evaluation at fixed sample points; a reported violation is
// always a genuine functional difference, so no valid pair is ever killed.
namespace symdim {

struct RatF {
  Rat v;
  bool is_zero() const { return v == 0; }
  RatF operator+(const RatF& o) const { return {v + o.v}; }
  RatF operator-(const RatF& o) const { return {v - o.v}; }
  RatF operator*(const RatF& o) const { return {v * o.v}; }
  RatF operator/(const RatF& o) const { return {v / o.v}; }
};

// Determined dimension values at modulus q + 1/q; nullopt where the interior
// equations leave the dimension free.
inline std::vector<std::optional<Rat>> dims_at(const Bigraph& g, const Rat& q) {
  Rat delta = q + Rat(rat_den(q), rat_num(q));
  std::vector<std::pair<int, int>> verts;
  std::map<std::pair<int, int>, int> slot;
  for (int d = 0; d <= g.max_depth(); ++d)
    for (int v = 0; v < g.vertex_count(d); ++v) {
      slot[{d, v}] = static_cast<int>(verts.size());
      verts.push_back({d, v});
    }
  size_t n = verts.size();
  std::vector<std::vector<RatF>> M;
  std::vector<RatF> rhs;
  {
    std::vector<RatF> row(n, RatF{0});
    row[slot.at({0, 0})] = RatF{1};
    M.push_back(row);
    rhs.push_back(RatF{1});
  }
  for (int d = 0; d < g.max_depth(); ++d) {
    for (int u = 0; u < g.vertex_count(d); ++u) {
      std::vector<RatF> row(n, RatF{0});
      row[slot.at({d, u})] = RatF{delta};
      if (d >= 1)
        for (int w = 0; w < g.vertex_count(d - 1); ++w)
          row[slot.at({d - 1, w})].v -= g.blocks[d - 1][u][w];
      for (int w = 0; w < g.vertex_count(d + 1); ++w)
        row[slot.at({d + 1, w})].v -= g.blocks[d][w][u];
      M.push_back(row);
      rhs.push_back(RatF{0});
    }
  }
  LinearSolver<RatF> solver(RatF{0});
  auto sol = solver.solve_partial(std::move(M), std::move(rhs));
  std::vector<std::optional<Rat>> out(n);
  for (size_t i = 0; i < n; ++i)
    if (sol[i]) out[i] = sol[i]->v;
  return out;
}

}  // namespace symdim

// Joint dimension system for the pair at formal modulus q + 1/q: interior
// eigen-relations of both graphs, dim(root) = 1 on both sides, equal
// dimensions on cross-paired odd vertices and on even dual pairs. The pair
// dies if the system is inconsistent or forces some vertex dimension to be
// identically zero (evaluated at several exact rational sample points).
inline bool symbolic_dual_dims_ok(const BigraphPair& p) {
  using symdim::RatF;
  static const Rat samples[] = {Rat(7, 3), Rat(13, 5), Rat(23, 11), Rat(37, 13)};

  std::map<std::pair<int, std::pair<int, int>>, int> slot;  // (side,(d,v)) -> var
  int nvars = 0;
  for (int side = 0; side < 2; ++side) {
    const Bigraph& g = side == 0 ? p.plus : p.minus;
    for (int d = 0; d <= g.max_depth(); ++d)
      for (int v = 0; v < g.vertex_count(d); ++v) slot[{side, {d, v}}] = nvars++;
  }

  int zero_hits = 0;
  for (const Rat& q : samples) {
    Rat delta = q + Rat(rat_den(q), rat_num(q));
    std::vector<std::vector<RatF>> M;
    std::vector<RatF> rhs;
    auto add_row = [&](std::vector<RatF> row, Rat b) {
      M.push_back(std::move(row));
      rhs.push_back(RatF{b});
    };
    for (int side = 0; side < 2; ++side) {
      const Bigraph& g = side == 0 ? p.plus : p.minus;
      {
        std::vector<RatF> row(nvars, RatF{0});
        row[slot.at({side, {0, 0}})] = RatF{1};
        add_row(std::move(row), 1);
      }
      for (int d = 0; d < g.max_depth(); ++d)
        for (int u = 0; u < g.vertex_count(d); ++u) {
          std::vector<RatF> row(nvars, RatF{0});
          row[slot.at({side, {d, u}})] = RatF{delta};
          if (d >= 1)
            for (int w = 0; w < g.vertex_count(d - 1); ++w)
              row[slot.at({side, {d - 1, w}})].v -= g.blocks[d - 1][u][w];
          for (int w = 0; w < g.vertex_count(d + 1); ++w)
            row[slot.at({side, {d + 1, w}})].v -= g.blocks[d][w][u];
          add_row(std::move(row), 0);
        }
      if (g.with_duals)
        for (size_t k = 0; k < g.even_duals.size(); ++k)
          for (size_t v = 0; v < g.even_duals[k].size(); ++v) {
            int w = g.even_duals[k][v];
            if (w <= static_cast<int>(v)) continue;
            std::vector<RatF> row(nvars, RatF{0});
            row[slot.at({side, {2 * (int)k, (int)v}})] = RatF{1};
            row[slot.at({side, {2 * (int)k, w}})] = RatF{-1};
            add_row(std::move(row), 0);
          }
    }
    int dmin = std::min(p.plus.max_depth(), p.minus.max_depth());
    for (int d = 1; d <= dmin; d += 2)
      for (int v = 0; v < p.plus.vertex_count(d); ++v) {
        std::vector<RatF> row(nvars, RatF{0});
        row[slot.at({0, {d, v}})] = RatF{1};
        row[slot.at({1, {d, v}})].v -= 1;
        add_row(std::move(row), 0);
      }

    LinearSolver<RatF> solver(RatF{0});
    std::vector<std::optional<RatF>> sol;
    try {
      sol = solver.solve_partial(std::move(M), std::move(rhs));
    } catch (const std::domain_error&) {
      return false;  // inconsistent dual/dimension data
    }
    bool zero_here = false;
    for (const auto& s : sol)
      if (s && s->v == 0) zero_here = true;
    if (zero_here) ++zero_hits;
  }
  // A dimension forced to vanish at every sample point vanishes identically.
  return zero_hits < static_cast<int>(std::size(samples));
}

// Every vertex of a principal graph has dimension >= 1, and the modulus is
// capped by the index bound, so a candidate whose forced dimensions stay
// below 1 across the whole remaining window is dead. Checked on an exact
// rational grid over q; a pair is killed only when no grid point admits all
// determined dimensions >= 1.
inline bool window_dims_feasible(const BigraphPair& p, const Rat& index_max) {
  using symdim::RatF;
  std::map<std::pair<int, std::pair<int, int>>, int> slot;
  int nvars = 0;
  for (int side = 0; side < 2; ++side) {
    const Bigraph& g = side == 0 ? p.plus : p.minus;
    for (int d = 0; d <= g.max_depth(); ++d)
      for (int v = 0; v < g.vertex_count(d); ++v) slot[{side, {d, v}}] = nvars++;
  }
  double n2 = std::max(norm_squared_double(p.plus), norm_squared_double(p.minus));
  double qlo = index_to_q(std::max(4.0, n2 - 1e-9));
  double qhi = index_to_q(static_cast<double>(index_max));
  if (qlo > qhi) qlo = qhi;
  std::vector<Rat> grid;
  const int kGrid = 24;
  for (int i = 0; i <= kGrid; ++i) {
    double q = qlo + (qhi - qlo) * i / kGrid;
    grid.push_back(Rat((long)std::llround(q * 1000000.0), 1000000L));
  }

  for (const Rat& q : grid) {
    Rat delta = q + Rat(rat_den(q), rat_num(q));
    std::vector<std::vector<RatF>> M;
    std::vector<RatF> rhs;
    for (int side = 0; side < 2; ++side) {
      const Bigraph& g = side == 0 ? p.plus : p.minus;
      {
        std::vector<RatF> row(nvars, RatF{0});
        row[slot.at({side, {0, 0}})] = RatF{1};
        M.push_back(std::move(row));
        rhs.push_back(RatF{1});
      }
      for (int d = 0; d < g.max_depth(); ++d)
        for (int u = 0; u < g.vertex_count(d); ++u) {
          std::vector<RatF> row(nvars, RatF{0});
          row[slot.at({side, {d, u}})] = RatF{delta};
          if (d >= 1)
            for (int w = 0; w < g.vertex_count(d - 1); ++w)
              row[slot.at({side, {d - 1, w}})].v -= g.blocks[d - 1][u][w];
          for (int w = 0; w < g.vertex_count(d + 1); ++w)
            row[slot.at({side, {d + 1, w}})].v -= g.blocks[d][w][u];
          M.push_back(std::move(row));
          rhs.push_back(RatF{0});
        }
      if (g.with_duals)
        for (size_t k = 0; k < g.even_duals.size(); ++k)
          for (size_t v = 0; v < g.even_duals[k].size(); ++v) {
            int w = g.even_duals[k][v];
            if (w <= static_cast<int>(v)) continue;
            std::vector<RatF> row(nvars, RatF{0});
            row[slot.at({side, {2 * (int)k, (int)v}})] = RatF{1};
            row[slot.at({side, {2 * (int)k, w}})] = RatF{-1};
            M.push_back(std::move(row));
            rhs.push_back(RatF{0});
          }
    }
    int dmin = std::min(p.plus.max_depth(), p.minus.max_depth());
    for (int d = 1; d <= dmin; d += 2)
      for (int v = 0; v < p.plus.vertex_count(d); ++v) {
        std::vector<RatF> row(nvars, RatF{0});
        row[slot.at({0, {d, v}})] = RatF{1};
        row[slot.at({1, {d, v}})].v -= 1;
        M.push_back(std::move(row));
        rhs.push_back(RatF{0});
      }
    LinearSolver<RatF> solver(RatF{0});
    std::vector<std::optional<RatF>> sol;
    try {
      sol = solver.solve_partial(std::move(M), std::move(rhs));
    } catch (const std::domain_error&) {
      continue;  // inconsistent at this q; other grid points may differ
    }
    bool ok = true;
    for (const auto& s : sol)
      if (s && s->v < 1) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// Dual vertices must receive equal walk counts from the root at every length
// the truncation already determines: a length-k walk ending at depth e stays
// inside depth (k+e)/2, so counts are final whenever k + e <= 2*maxdepth.
// Even duals act within each graph; odd vertices pair across the two graphs
// in listed order.
inline bool dual_walk_counts_ok(const BigraphPair& p) {
  int D = std::max(p.plus.max_depth(), p.minus.max_depth());
  std::vector<std::vector<std::vector<Int>>> wplus, wminus;  // [k][depth][v]
  wplus.push_back(WalkCounts::of_length(p.plus, 0));
  wminus.push_back(WalkCounts::of_length(p.minus, 0));
  for (int k = 1; k <= 2 * D; ++k) {
    wplus.push_back(WalkCounts::step(p.plus, wplus.back()));
    wminus.push_back(WalkCounts::step(p.minus, wminus.back()));
  }
  for (const Bigraph* g : {&p.plus, &p.minus}) {
    const auto& w = (g == &p.plus) ? wplus : wminus;
    if (!g->with_duals) continue;
    for (size_t j = 0; j < g->even_duals.size(); ++j) {
      int depth = 2 * static_cast<int>(j);
      const auto& sigma = g->even_duals[j];
      for (size_t v = 0; v < sigma.size(); ++v) {
        if (sigma[v] == static_cast<int>(v)) continue;
        for (int k = depth; k + depth <= 2 * g->max_depth(); k += 2)
          if (w[k][depth][v] != w[k][depth][sigma[v]]) return false;
      }
    }
  }
  int dmin = std::min(p.plus.max_depth(), p.minus.max_depth());
  for (int depth = 1; depth <= dmin; depth += 2) {
    for (int v = 0; v < p.plus.vertex_count(depth); ++v) {
      for (int k = depth; k + depth <= 2 * dmin; k += 2)
        if (wplus[k][depth][v] != wminus[k][depth][v]) return false;
    }
  }
  return true;
}

struct BlockCandidate {
  Bigraph::Block rows;          // sorted descending
  std::vector<Int> walk_counts; // per new vertex, walks of length (depth)
};

// All candidate new blocks (including the empty one) for a single graph,
// respecting the index bound via a cheap float norm with exact fallback.
inline std::vector<BlockCandidate> enumerate_blocks(const Bigraph& g, int new_depth,
                                                    const Rat& index_max, int max_new_vertices) {
  std::vector<BlockCandidate> out;
  out.push_back({});  // graph stops
  if (g.max_depth() != new_depth - 1) return out;  // already stopped earlier
  int prev = g.vertex_count(new_depth - 1);
  double cap = static_cast<double>(index_max);

  // Candidate rows, nonzero, entries small, sorted descending for multisets.
  std::vector<Bigraph::Row> rows;
  Bigraph::Row r(prev, 0);
  std::function<void(int, int)> gen = [&](int i, int sumsq) {
    if (i == prev) {
      if (sumsq > 0) rows.push_back(r);
      return;
    }
    for (int m = 0; m * m + sumsq <= static_cast<int>(cap); ++m) {
      r[i] = m;
      gen(i + 1, sumsq + m * m);
    }
    r[i] = 0;
  };
  gen(0, 0);
  std::sort(rows.begin(), rows.end(), std::greater<>());

  auto walks_prev = WalkCounts::of_length(g, new_depth - 1);
  const auto& wprev = walks_prev[new_depth - 1];

  Bigraph work = g;
  work.blocks.push_back({});
  std::function<void(size_t)> rec = [&](size_t start) {
    if (!work.blocks.back().empty()) {
      bool ok = !exceeds_index(work, index_max);
      if (ok) {
        BlockCandidate cand;
        cand.rows = work.blocks.back();
        for (const auto& row : cand.rows) {
          Int w = 0;
          for (int u = 0; u < prev; ++u) w += Int(row[u]) * wprev[u];
          cand.walk_counts.push_back(w);
        }
        out.push_back(cand);
      } else {
        return;  // adding more vertices cannot shrink the norm
      }
    }
    if (static_cast<int>(work.blocks.back().size()) >= max_new_vertices) return;
    for (size_t i = start; i < rows.size(); ++i) {
      work.blocks.back().push_back(rows[i]);
      rec(i);  // multisets: nonincreasing row sequences
      work.blocks.back().pop_back();
    }
  };
  rec(0);
  return out;
}

// Orbit partition of the vertices of a prospective new block under
// depth-preserving automorphisms of (parent graph + new block) that fix the
// parent's dual data. Dual data may only pair vertices in a common orbit.
inline std::vector<int> new_block_orbits(const Bigraph& parent, const Bigraph::Block& block) {
  Bigraph g = parent;
  g.blocks.push_back(block);
  int D = g.max_depth();
  std::vector<std::vector<std::vector<int>>> perms_by_depth(D + 1);
  perms_by_depth[0] = {{0}};
  // candidate permutations per depth: those mapping rows onto equal rows,
  // refined against the previous depth's choice during the DFS
  std::vector<int> orbit(block.size());
  for (size_t i = 0; i < block.size(); ++i) orbit[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return orbit[x] == x ? x : orbit[x] = find(orbit[x]); };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) orbit[std::max(a, b)] = std::min(a, b);
  };

  std::vector<std::vector<int>> chosen(D + 1);
  chosen[0] = {0};
  std::function<void(int)> dfs = [&](int d) {
    if (d > D) {
      // verify the parent's even duals are preserved
      for (size_t k = 0; 2 * k <= static_cast<size_t>(parent.max_depth()) &&
                         k < parent.even_duals.size();
           ++k) {
        const auto& sigma = parent.even_duals[k];
        const auto& pi = chosen[2 * k];
        for (size_t v = 0; v < sigma.size(); ++v)
          if (sigma[pi[v]] != pi[sigma[v]]) return;
      }
      const auto& pi = chosen[D];
      for (size_t v = 0; v < pi.size(); ++v) unite(static_cast<int>(v), pi[v]);
      return;
    }
    int n = g.vertex_count(d);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      const auto& prev = chosen[d - 1];
      for (int v = 0; v < n && ok; ++v) {
        const auto& rv = g.blocks[d - 1][perm[v]];
        const auto& ov = g.blocks[d - 1][v];
        // require row(perm(v)) with columns permuted by prev == row(v)... we
        // need pi to be a graph map: row_{pi(v)}[prev(u)] == row_v[u]
        for (size_t u = 0; u < ov.size(); ++u)
          if (rv[prev[u]] != ov[u]) {
            ok = false;
            break;
          }
      }
      if (!ok) continue;
      chosen[d] = perm;
      dfs(d + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  if (D >= 1) dfs(1);
  for (size_t i = 0; i < block.size(); ++i) find(static_cast<int>(i));
  return orbit;
}

inline std::vector<std::vector<int>> brute_involutions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::sort(base.begin(), base.end());
  do {
    bool inv = true;
    for (int i = 0; i < n; ++i)
      if (base[base[i]] != i) {
        inv = false;
        break;
      }
    if (inv) out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Is some side of the pair, truncated to depth 3, the branching graph with
// depth-3 rows {10, 11, 01}? Returns the index of its bivalent depth-3
// vertex, or -1.
inline int dart_branch_vertex(const Bigraph& g) {
  if (g.max_depth() < 3) return -1;
  if (g.vertex_count(1) != 1 || g.vertex_count(2) != 2 || g.vertex_count(3) != 3) return -1;
  if (g.blocks[0][0][0] != 1) return -1;
  if (g.blocks[1][0][0] != 1 || g.blocks[1][1][0] != 1) return -1;
  int bivalent = -1, col0 = 0, col1 = 0;
  for (int v = 0; v < 3; ++v) {
    int s = g.blocks[2][v][0] + g.blocks[2][v][1];
    if (g.blocks[2][v][0] > 1 || g.blocks[2][v][1] > 1) return -1;
    if (s == 2) {
      if (bivalent >= 0) return -1;
      bivalent = v;
    } else if (s != 1) {
      return -1;
    }
    col0 += g.blocks[2][v][0];
    col1 += g.blocks[2][v][1];
  }
  if (bivalent < 0 || col0 != 2 || col1 != 2) return -1;
  return bivalent;
}

inline bool restriction_allows(const BigraphPair& p, RunRestriction r) {
  if (r == RunRestriction::None) return true;
  bool any_dart = false;
  for (const Bigraph* g : {&p.plus, &p.minus}) {
    int rv = dart_branch_vertex(*g);
    if (rv < 0) continue;
    any_dart = true;
    if (g->max_depth() < 4) return false;  // restrictions concern depth-4 structure
    int edges = 0, on_branch = 0;
    for (const auto& row : g->blocks[3]) {
      for (int u = 0; u < 3; ++u) edges += row[u];
      on_branch += row[rv];
    }
    switch (r) {
      case RunRestriction::DartTwoEdges:
        if (on_branch != 0 || edges != 2) return false;
        break;
      case RunRestriction::DartBranchVertex:
        if (on_branch == 0) return false;
        break;
      case RunRestriction::DartTwoEdgesWhenUntouched:
        if (on_branch == 0 && edges != 2) return false;
        break;
      case RunRestriction::None:
        break;
    }
  }
  return any_dart;
}

}  // namespace detail

struct ExtendOptions {
  Rat index_max = Rat(31, 5);
  int fixed_supertransitivity = 1;
  int max_new_vertices = 6;
  RunRestriction restriction = RunRestriction::None;
  bool walk_count_filter = true;
  bool associativity_filter = true;
  bool symbolic_dim_filter = false;
  bool window_dim_filter = false;
  bool twisted_gram_filter = false;
  bool self_dual_count_rule = true;
};

// All inequivalent one-depth extensions (not including the termination);
// deduplicated up to simultaneous relabeling and swapping the two graphs,
// sorted by canonical key.
inline std::vector<BigraphPair> extend_one_depth(const BigraphPair& p, const ExtendOptions& opt) {
  int d = std::max(p.plus.max_depth(), p.minus.max_depth());
  int new_depth = d + 1;
  auto blocks_plus = detail::enumerate_blocks(p.plus, new_depth, opt.index_max, opt.max_new_vertices);
  auto blocks_minus =
      detail::enumerate_blocks(p.minus, new_depth, opt.index_max, opt.max_new_vertices);

  std::map<std::string, BigraphPair> dedup;

  auto consider = [&](const Bigraph& gp, const Bigraph& gm) {
    BigraphPair child{gp, gm};
    if (std::abs(child.plus.max_depth() - child.minus.max_depth()) > 1) return;
    // loop-count match at the new depth (dim P_{n,+} = dim P_{n,-})
    if (detail::loop_count(child.plus, new_depth) != detail::loop_count(child.minus, new_depth))
      return;
    if (opt.walk_count_filter && !detail::dual_walk_counts_ok(child)) return;
    if (opt.associativity_filter && !detail::associativity_ok(child)) return;
    if (opt.symbolic_dim_filter && !detail::symbolic_dual_dims_ok(child)) return;
    if (opt.window_dim_filter && !detail::window_dims_feasible(child, opt.index_max)) return;
    if (supertransitivity(child) != opt.fixed_supertransitivity) return;
    if (!detail::restriction_allows(child, opt.restriction)) return;
    std::string key = canonical_key_unordered(child);
    dedup.emplace(key, child);
  };

  for (const auto& bp : blocks_plus) {
    for (const auto& bm : blocks_minus) {
      if (bp.rows.empty() && bm.rows.empty()) continue;  // termination, not an extension
      if (new_depth % 2 == 1) {
        // Odd depth: counts equal and order pairing must match walk counts.
        if (bp.rows.size() != bm.rows.size()) continue;
        {
          // quick multiset check on walk counts before trying orderings
          auto wp = bp.walk_counts, wm = bm.walk_counts;
          std::sort(wp.begin(), wp.end());
          std::sort(wm.begin(), wm.end());
          if (wp != wm) continue;
        }
        // Enumerate distinct orderings of the minus block against the listed
        // plus block (rows and walk counts move together).
        std::vector<std::pair<Bigraph::Row, Int>> perm(bm.rows.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = {bm.rows[i], bm.walk_counts[i]};
        std::sort(perm.begin(), perm.end());
        do {
          bool ok = true;
          for (size_t i = 0; i < perm.size() && ok; ++i)
            if (bp.walk_counts[i] != perm[i].second) ok = false;
          if (!ok) continue;
          Bigraph::Block bm_ord;
          for (auto& [row, w] : perm) bm_ord.push_back(row);
          Bigraph gp = p.plus, gm = p.minus;
          if (!bp.rows.empty()) gp.blocks.push_back(bp.rows);
          if (!bm_ord.empty()) gm.blocks.push_back(bm_ord);
          consider(gp, gm);
        } while (std::next_permutation(perm.begin(), perm.end()));
      } else {
        // Even depth: enumerate dual involutions on each side preserving walk
        // counts; apply the self-dual count rule at the first depth past the
        // branch when every new edge is simple.
        auto duals_for = [&](const Bigraph& parent, const detail::BlockCandidate& b) {
          std::vector<std::vector<int>> out;
          if (b.rows.empty()) {
            out.push_back({});
            return out;
          }
          for (const auto& sigma : detail::brute_involutions(static_cast<int>(b.rows.size()))) {
            bool ok = true;
            for (size_t i = 0; i < sigma.size() && ok; ++i)
              if (b.walk_counts[i] != b.walk_counts[sigma[i]]) ok = false;
            if (ok) out.push_back(sigma);
          }
          return out;
        };

        // sigma-twisted Gram of the new block over the previous odd depth:
        // sum over new vertices of m(v, i) * m(sigma v, j). The two sides
        // must agree, tying the new dual data to the odd pairing.
        auto twisted_gram = [&](const detail::BlockCandidate& b, const std::vector<int>& sigma) {
          size_t prev = b.rows.empty() ? 0 : b.rows[0].size();
          std::vector<std::vector<int>> D(prev, std::vector<int>(prev, 0));
          for (size_t v = 0; v < b.rows.size(); ++v)
            for (size_t i = 0; i < prev; ++i)
              for (size_t j = 0; j < prev; ++j)
                D[i][j] += b.rows[v][i] * b.rows[sigma[v]][j];
          return D;
        };
        auto all_simple = [](const detail::BlockCandidate& b) {
          for (const auto& row : b.rows)
            for (int m : row)
              if (m > 1) return false;
          return true;
        };
        bool apply_sd_rule = opt.self_dual_count_rule &&
                             (new_depth == opt.fixed_supertransitivity + 1) &&
                             all_simple(bp) && all_simple(bm);
        auto dp = duals_for(p.plus, bp);
        auto dm = duals_for(p.minus, bm);
        for (const auto& sp : dp) {
          int fixed_p = 0;
          for (size_t i = 0; i < sp.size(); ++i)
            if (sp[i] == static_cast<int>(i)) ++fixed_p;
          auto tg_p = twisted_gram(bp, sp);
          for (const auto& sm : dm) {
            if (apply_sd_rule) {
              int fixed_m = 0;
              for (size_t i = 0; i < sm.size(); ++i)
                if (sm[i] == static_cast<int>(i)) ++fixed_m;
              if (fixed_p != fixed_m) continue;
            }
            if (opt.twisted_gram_filter && twisted_gram(bm, sm) != tg_p) continue;
            Bigraph gp = p.plus, gm = p.minus;
            if (!bp.rows.empty()) {
              gp.blocks.push_back(bp.rows);
              gp.even_duals.push_back(sp);
            }
            if (!bm.rows.empty()) {
              gm.blocks.push_back(bm.rows);
              gm.even_duals.push_back(sm);
            }
            consider(gp, gm);
          }
        }
      }
    }
  }

  std::vector<BigraphPair> out;
  out.reserve(dedup.size());
  for (auto& [k, v] : dedup) out.push_back(v);
  return out;
}

// ---- classification run -------------------------------------------------------

struct ExclusionRule {
  std::string pair;      // codec string "plus,minus"
  std::string reason;
  std::string citation;
  std::string canon;     // canonical unordered key, filled on load
};

struct ClassificationNode {
  int depth = 0;
  BigraphPair pair;
  std::string canon;
  std::string status;    // weed-active | weed-ignored | cylinder | vine | excluded
  std::string reason;
  std::string citation;
  std::string parent;    // canonical key of the parent weed
};

struct RunConfig {
  BigraphPair seed;
  int max_depth = 5;
  Rat index_max = Rat(31, 5);
  std::vector<ExclusionRule> rules;
  std::set<std::string> ignore;  // canonical unordered keys
  RunRestriction restriction = RunRestriction::None;
  bool intermediate_filter_both_sides = true;
  int max_new_vertices = 6;
};

struct DepthSummary {
  int depth = 0;
  int weeds = 0;          // structurally valid, rule-surviving pairs
  int intermediates = 0;  // of those, flagged by the intermediate filter
  int cylinders = 0;
  int ignored = 0;
  int active = 0;         // weeds that keep growing
};

struct ClassificationTree {
  std::vector<ClassificationNode> nodes;
  std::vector<DepthSummary> summaries;
  int vine_count = 0;      // terminations collected (vine records)
  int cylinder_count = 0;
  int remaining_weeds = 0; // non-ignored weeds never resolved

  std::vector<const ClassificationNode*> by_status(const std::string& s) const {
    std::vector<const ClassificationNode*> out;
    for (const auto& n : nodes)
      if (n.status == s) out.push_back(&n);
    return out;
  }
};

inline ClassificationTree run_odometer(const RunConfig& cfg) {
  ClassificationTree tree;
  ExtendOptions opt;
  opt.index_max = cfg.index_max;
  opt.fixed_supertransitivity = supertransitivity(cfg.seed);
  opt.restriction = cfg.restriction;
  opt.max_new_vertices = cfg.max_new_vertices;

  auto rule_match = [&](const std::string& canon) -> const ExclusionRule* {
    for (const auto& r : cfg.rules)
      if (r.canon == canon) return &r;
    return nullptr;
  };

  struct Active {
    BigraphPair pair;
    std::string canon;
  };
  std::vector<Active> active;

  std::string seed_canon = canonical_key_unordered(cfg.seed);
  tree.nodes.push_back({std::max(cfg.seed.plus.max_depth(), cfg.seed.minus.max_depth()), cfg.seed,
                        seed_canon, "weed-active", "", "", ""});
  active.push_back({cfg.seed, seed_canon});

  int seed_depth = std::max(cfg.seed.plus.max_depth(), cfg.seed.minus.max_depth());
  for (int depth = seed_depth + 1; depth <= cfg.max_depth; ++depth) {
    DepthSummary summary;
    summary.depth = depth;
    std::vector<Active> next;
    for (const auto& weed : active) {
      // The weed's own termination is a vine candidate.
      tree.nodes.push_back({depth - 1, weed.pair, weed.canon, "vine", "", "", weed.canon});
      ++tree.vine_count;
      for (const auto& child : extend_one_depth(weed.pair, opt)) {
        std::string canon = canonical_key_unordered(child);
        ClassificationNode node{depth, child, canon, "", "", "", weed.canon};
        if (const ExclusionRule* r = rule_match(canon)) {
          node.status = "excluded";
          node.reason = r->reason;
          node.citation = r->citation;
          tree.nodes.push_back(node);
          continue;
        }
        ++summary.weeds;
        if (depth >= 3 && intermediate_filter(child, cfg.intermediate_filter_both_sides)) {
          node.status = "excluded";
          node.reason = "intermediate";
          node.citation = "virtual-normalizer criterion";
          ++summary.intermediates;
          tree.nodes.push_back(node);
          continue;
        }
        if (cfg.ignore.count(canon)) {
          node.status = "weed-ignored";
          ++summary.ignored;
          tree.nodes.push_back(node);
          continue;
        }
        PairClass cls = classify_pair(child, cfg.index_max);
        if (cls == PairClass::Dead) continue;  // generation should prevent this
        if (cls == PairClass::Cylinder) {
          node.status = "cylinder";
          ++summary.cylinders;
          ++tree.cylinder_count;
          tree.nodes.push_back(node);
          continue;
        }
        node.status = "weed-active";
        tree.nodes.push_back(node);
        ++summary.active;
        next.push_back({child, canon});
      }
    }
    tree.summaries.push_back(summary);
    active = std::move(next);
    if (active.empty()) break;
  }
  tree.remaining_weeds = static_cast<int>(active.size());
  return tree;
}

}  // namespace bgpa
