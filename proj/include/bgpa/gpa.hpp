#pragma once

// The bipartite graph planar algebra in the loop basis, generic over a
// graph-with-dimensions context. Elements are finitely supported complex
// coefficient maps on closed alternating loops; multiplication, rotation,
// caps, coproduct and trace carry the spin factors sqrt(dim) fixed by the
// calibration suite (Temperley-Lieb relations, Jones projection anchors,
// trace(1_n) = delta^n).

#include <cmath>
#include <functional>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgpa {

using Cplx = std::complex<double>;
using Loop = std::vector<uint8_t>;

struct GraphContext {
  int nvertices = 0;
  std::vector<std::vector<uint8_t>> nbrs;  // simply laced adjacency
  std::vector<int> parity;                 // 0 even, 1 odd
  std::vector<double> dim;                 // Perron-Frobenius weights
  double delta = 0;

  bool adjacent(int a, int b) const {
    for (uint8_t x : nbrs[a])
      if (x == b) return true;
    return false;
  }

  // The 4-sunlet: an inner 4-cycle 7-4-5-6 with a pendant tip on each inner
  // vertex (tips 0,1,2,3). Tips have dimension 1, inner vertices 1+sqrt2,
  // modulus delta = 1+sqrt2. Even vertices: 0,2,4,6.
  static GraphContext sunlet4() {
    GraphContext g;
    g.nvertices = 8;
    g.nbrs.assign(8, {});
    auto edge = [&](int a, int b) {
      g.nbrs[a].push_back(static_cast<uint8_t>(b));
      g.nbrs[b].push_back(static_cast<uint8_t>(a));
    };
    edge(0, 7);
    edge(7, 4);
    edge(7, 6);
    edge(4, 3);
    edge(4, 5);
    edge(5, 6);
    edge(6, 1);
    edge(5, 2);
    g.parity = {0, 1, 0, 1, 0, 1, 0, 1};
    double d = 1 + std::sqrt(2.0);
    g.delta = d;
    g.dim = {1, 1, 1, 1, d, d, d, d};
    return g;
  }
};

struct GpaElement {
  const GraphContext* ctx = nullptr;
  int grade = 0;
  int shading = 0;  // parity of the base vertex
  std::map<Loop, Cplx> coeff;

  GpaElement() = default;
  GpaElement(const GraphContext* c, int n, int sh) : ctx(c), grade(n), shading(sh) {}

  void add(const Loop& l, Cplx v) {
    auto it = coeff.find(l);
    if (it == coeff.end())
      coeff.emplace(l, v);
    else
      it->second += v;
  }
  void prune(double tol = 1e-14) {
    for (auto it = coeff.begin(); it != coeff.end();) {
      if (std::abs(it->second) <= tol)
        it = coeff.erase(it);
      else
        ++it;
    }
  }
  Cplx at(const Loop& l) const {
    auto it = coeff.find(l);
    return it == coeff.end() ? Cplx(0) : it->second;
  }
  double norm_inf() const {
    double m = 0;
    for (const auto& [l, v] : coeff) m = std::max(m, std::abs(v));
    return m;
  }

  GpaElement operator+(const GpaElement& o) const {
    check_same(o);
    GpaElement r = *this;
    for (const auto& [l, v] : o.coeff) r.add(l, v);
    r.prune();
    return r;
  }
  GpaElement operator-(const GpaElement& o) const {
    check_same(o);
    GpaElement r = *this;
    for (const auto& [l, v] : o.coeff) r.add(l, -v);
    r.prune();
    return r;
  }
  GpaElement operator*(Cplx s) const {
    GpaElement r = *this;
    for (auto& [l, v] : r.coeff) v *= s;
    return r;
  }

  void check_same(const GpaElement& o) const {
    if (grade != o.grade || shading != o.shading)
      throw std::invalid_argument("GpaElement: grade/shading mismatch");
  }
};

namespace gpa {

inline std::string loop_str(const Loop& l) {
  std::string s;
  for (uint8_t v : l) s += std::to_string(int(v));
  return s;
}

// All closed alternating loops of length 2n based at vertices of the given
// parity, in lexicographic order.
inline std::vector<Loop> loops(const GraphContext& ctx, int n, int shading) {
  std::vector<Loop> out;
  Loop cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == 2 * n) {
      if (ctx.adjacent(cur.back(), cur.front())) out.push_back(cur);
      return;
    }
    for (uint8_t w : ctx.nbrs[cur.back()]) {
      cur.push_back(w);
      rec(depth + 1);
      cur.pop_back();
    }
  };
  for (int v = 0; v < ctx.nvertices; ++v) {
    if (ctx.parity[v] != shading) continue;
    cur.assign(1, static_cast<uint8_t>(v));
    if (n == 0) {
      out.push_back(cur);
      continue;
    }
    rec(1);
  }
  return out;
}

// Identity: doubled paths with coefficient 1.
inline GpaElement identity(const GraphContext& ctx, int n, int shading) {
  GpaElement r(&ctx, n, shading);
  for (const Loop& l : loops(ctx, n, shading)) {
    bool doubled = true;
    for (int i = 1; i < n; ++i)
      if (l[n + i] != l[n - i]) {
        doubled = false;
        break;
      }
    if (doubled) r.add(l, 1);
  }
  return r;
}

// Split a loop into the outgoing path and the reversed return path, both
// running base -> midpoint.
inline void split_loop(const Loop& l, int n, Loop& p, Loop& q) {
  p.assign(l.begin(), l.begin() + n + 1);
  q.resize(n + 1);
  q[0] = l[0];
  for (int i = 1; i <= n; ++i) q[i] = l[2 * n - i >= 2 * n ? 0 : 2 * n - i];
  q[n] = l[n];
}

inline Loop join_paths(const Loop& p, const Loop& q) {
  int n = static_cast<int>(p.size()) - 1;
  Loop l(p);
  for (int i = n - 1; i >= 1; --i) l.push_back(q[i]);
  return l;
}

// (x y)(P * rev Q) = sum_R x(P * rev R) y(R * rev Q)
inline GpaElement multiply(const GpaElement& x, const GpaElement& y) {
  x.check_same(y);
  GpaElement r(x.ctx, x.grade, x.shading);
  int n = x.grade;
  using Key = std::pair<uint8_t, uint8_t>;
  std::map<Key, std::map<Loop, std::vector<std::pair<Loop, Cplx>>>> xid;  // key -> R -> (P,c)
  std::map<Key, std::map<Loop, std::vector<std::pair<Loop, Cplx>>>> yid;  // key -> R -> (Q,c)
  Loop p, q;
  for (const auto& [l, c] : x.coeff) {
    split_loop(l, n, p, q);
    xid[{p[0], p[n]}][q].push_back({p, c});
  }
  for (const auto& [l, c] : y.coeff) {
    split_loop(l, n, p, q);
    yid[{p[0], p[n]}][p].push_back({q, c});
  }
  for (auto& [key, xr] : xid) {
    auto yit = yid.find(key);
    if (yit == yid.end()) continue;
    for (auto& [R, xs] : xr) {
      auto ys = yit->second.find(R);
      if (ys == yit->second.end()) continue;
      for (auto& [P, cx] : xs)
        for (auto& [Q, cy] : ys->second) r.add(join_paths(P, Q), cx * cy);
    }
  }
  r.prune();
  return r;
}

inline GpaElement adjoint(const GpaElement& x) {
  GpaElement r(x.ctx, x.grade, x.shading);
  for (const auto& [l, c] : x.coeff) {
    Loop rev(l.size());
    rev[0] = l[0];
    for (size_t i = 1; i < l.size(); ++i) rev[i] = l[l.size() - i];
    r.add(rev, std::conj(c));
  }
  return r;
}

// One-click rotation: base moves one step along the loop, with spin factors
// from the two bent strands.
inline GpaElement rotate(const GpaElement& x) {
  GpaElement r(x.ctx, x.grade, 1 - x.shading);
  int n = x.grade;
  const auto& d = x.ctx->dim;
  for (const auto& [l, c] : x.coeff) {
    Loop s(l.begin() + 1, l.end());
    s.push_back(l[0]);
    double f = std::sqrt((d[l[n]] / d[l[(n + 1) % (2 * n)]]) * (d[l[0]] / d[l[1]]));
    r.add(s, c * f);
  }
  return r;
}

inline GpaElement rotate_inverse(const GpaElement& x) {
  GpaElement r(x.ctx, x.grade, 1 - x.shading);
  int n = x.grade;
  const auto& d = x.ctx->dim;
  for (const auto& [l, c] : x.coeff) {
    // l = rotate(s): recover s = rightshift(l), divide the factor of s
    Loop s(l.size());
    s[0] = l.back();
    for (size_t i = 1; i < l.size(); ++i) s[i] = l[i - 1];
    double f = std::sqrt((d[s[n]] / d[s[(n + 1) % (2 * n)]]) * (d[s[0]] / d[s[1]]));
    r.add(s, c / f);
  }
  return r;
}

inline GpaElement rotate_by(const GpaElement& x, int clicks) {
  GpaElement r = x;
  int k = clicks % (2 * x.grade);
  if (k < 0) k += 2 * x.grade;
  for (int i = 0; i < k; ++i) r = rotate(r);
  return r;
}

// Partial trace over the last strand: grade n -> n-1.
inline GpaElement cap_right(const GpaElement& x) {
  if (x.grade < 2) throw std::invalid_argument("cap_right: grade must be >= 2");
  int n = x.grade;
  const auto& d = x.ctx->dim;
  GpaElement r(x.ctx, n - 1, x.shading);
  for (const auto& [l, c] : x.coeff) {
    if (l[n + 1] != l[n - 1]) continue;
    Loop u;
    u.insert(u.end(), l.begin(), l.begin() + n);
    u.insert(u.end(), l.begin() + n + 2, l.end());
    r.add(u, c * d[l[n]] / d[l[n - 1]]);
  }
  r.prune();
  return r;
}

// The four partial closures of a 2-box: position k joins boundary points
// (k, k+1) in reading order; implemented as a rotation into the standard
// right-cap position.
inline GpaElement cap(const GpaElement& x, int position) {
  if (x.grade != 2) throw std::invalid_argument("cap: grade-2 elements only");
  int clicks = (position + 2) % 4;  // position 2 is the right cap
  return cap_right(rotate_by(x, clicks));
}

inline bool is_uncappable(const GpaElement& x, double tol = 1e-10) {
  for (int k = 1; k <= 4; ++k)
    if (cap(x, k).norm_inf() > tol) return false;
  return true;
}

// Coproduct of 2-boxes: side-by-side composition with the middle strands
// joined; the enclosed region is summed with spin factors.
inline GpaElement coproduct(const GpaElement& x, const GpaElement& y) {
  if (x.grade != 2 || y.grade != 2) throw std::invalid_argument("coproduct: grade-2 only");
  if (x.shading != y.shading) throw std::invalid_argument("coproduct: shading mismatch");
  const auto& d = x.ctx->dim;
  GpaElement r(x.ctx, 2, x.shading);
  // index x by (v1, v3): (v0, s); y by (v1, v3): (s, v2)
  std::map<std::pair<uint8_t, uint8_t>, std::vector<std::pair<std::pair<uint8_t, uint8_t>, Cplx>>>
      xid, yid;
  for (const auto& [l, c] : x.coeff) xid[{l[1], l[3]}].push_back({{l[0], l[2]}, c});
  for (const auto& [l, c] : y.coeff) yid[{l[1], l[3]}].push_back({{l[0], l[2]}, c});
  for (auto& [key, xs] : xid) {
    auto yit = yid.find(key);
    if (yit == yid.end()) continue;
    double denom = std::sqrt(d[key.first] * d[key.second]);
    for (auto& [pv, cx] : xs)
      for (auto& [qv, cy] : yit->second) {
        if (pv.second != qv.first) continue;  // shared internal region
        Loop out{pv.first, key.first, qv.second, key.second};
        r.add(out, cx * cy * d[pv.second] / denom);
      }
  }
  r.prune();
  return r;
}

// Markov trace with trace(1_{n,±}) = delta^n: per base vertex, close all
// strands around; average over base vertices with squared-dimension weights.
inline Cplx trace_close(const GpaElement& x) {
  const auto& d = x.ctx->dim;
  int n = x.grade;
  std::map<uint8_t, Cplx> per_base;
  for (const auto& [l, c] : x.coeff) {
    bool doubled = true;
    for (int i = 1; i < n; ++i)
      if (l[n + i] != l[n - i]) {
        doubled = false;
        break;
      }
    if (!doubled) continue;
    per_base[l[0]] += c * d[l[n]] / d[l[0]];
  }
  double wsum = 0;
  Cplx acc = 0;
  for (int v = 0; v < x.ctx->nvertices; ++v) {
    if (x.ctx->parity[v] != x.shading) continue;
    double w = d[v] * d[v];
    wsum += w;
    auto it = per_base.find(static_cast<uint8_t>(v));
    if (it != per_base.end()) acc += w * it->second;
  }
  return acc / wsum;
}

// Per-base-vertex trace values (diagnostic: constant on elements of an
// embedded subfactor planar algebra).
inline std::map<int, Cplx> trace_by_vertex(const GpaElement& x) {
  const auto& d = x.ctx->dim;
  int n = x.grade;
  std::map<int, Cplx> out;
  for (int v = 0; v < x.ctx->nvertices; ++v)
    if (x.ctx->parity[v] == x.shading) out[v] = 0;
  for (const auto& [l, c] : x.coeff) {
    bool doubled = true;
    for (int i = 1; i < n; ++i)
      if (l[n + i] != l[n - i]) {
        doubled = false;
        break;
      }
    if (!doubled) continue;
    out[l[0]] += c * d[l[n]] / d[l[0]];
  }
  return out;
}

// Jones projection e_i in grade n.
inline GpaElement jones_projection(const GraphContext& ctx, int i, int n, int shading) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("jones_projection: index out of range");
  GpaElement r(&ctx, n, shading);
  const auto& d = ctx.dim;
  for (const Loop& l : loops(ctx, n, shading)) {
    Loop p, q;
    split_loop(l, n, p, q);
    bool ok = true;
    for (int j = 0; j <= n && ok; ++j)
      if (j != i && p[j] != q[j]) ok = false;
    if (!ok) continue;
    if (p[i - 1] != p[i + 1]) continue;
    r.add(l, std::sqrt(d[p[i]] * d[q[i]]) / d[p[i - 1]] / ctx.delta);
  }
  return r;
}

inline GpaElement jones_wenzl2(const GraphContext& ctx, int shading) {
  return identity(ctx, 2, shading) - jones_projection(ctx, 1, 2, shading);
}

// A grade-2 element placed as a brick on strands (i, i+1) of n parallel
// strands; all other strands pass straight through.
inline GpaElement brick(const GpaElement& g, int i, int n, int shading) {
  if (g.grade != 2) throw std::invalid_argument("brick: generator must be grade 2");
  GpaElement r(g.ctx, n, shading);
  const GraphContext& ctx = *g.ctx;
  // enumerate paths p of length n from suitable bases, then q_i choices
  std::vector<Loop> paths;
  Loop cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      paths.push_back(cur);
      return;
    }
    for (uint8_t w : ctx.nbrs[cur.back()]) {
      cur.push_back(w);
      rec(depth + 1);
      cur.pop_back();
    }
  };
  for (int v = 0; v < ctx.nvertices; ++v) {
    if (ctx.parity[v] != shading) continue;
    cur.assign(1, static_cast<uint8_t>(v));
    rec(1);
  }
  for (const Loop& p : paths) {
    for (uint8_t qi : ctx.nbrs[p[i - 1]]) {
      if (!ctx.adjacent(qi, p[i + 1])) continue;
      Loop gl{p[i - 1], p[i], p[i + 1], qi};
      Cplx c = g.at(gl);
      if (c == Cplx(0)) continue;
      Loop q = p;
      q[i] = qi;
      r.add(join_paths(p, q), c);
    }
  }
  r.prune();
  return r;
}

}  // namespace gpa

}  // namespace bgpa
