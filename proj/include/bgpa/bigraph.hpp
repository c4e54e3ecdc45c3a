#pragma once

// Depth-stratified bipartite graphs with dual data (the combinatorial model
// of a principal graph), their text codec, validation, truncation,
// supertransitivity, and canonical forms for pairs.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace bgpa {

// blocks[d-1] holds the vertices at depth d (the root at depth 0 is
// implicit); each vertex is its row of edge multiplicities to the previous
// depth. even_duals[k] is the involution on the vertices at depth 2k
// (index 0, for the root, is always the identity).
struct Bigraph {
  using Row = std::vector<int>;
  using Block = std::vector<Row>;
  using Perm = std::vector<int>;

  std::vector<Block> blocks;
  std::vector<Perm> even_duals;
  bool with_duals = true;

  int max_depth() const { return static_cast<int>(blocks.size()); }
  int vertex_count(int depth) const {
    if (depth == 0) return 1;
    if (depth < 0 || depth > max_depth()) return 0;
    return static_cast<int>(blocks[depth - 1].size());
  }
  int total_vertices() const {
    int n = 1;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }

  bool operator==(const Bigraph& o) const {
    return blocks == o.blocks && even_duals == o.even_duals && with_duals == o.with_duals;
  }
};

struct BigraphPair {
  Bigraph plus, minus;
  bool operator==(const BigraphPair& o) const { return plus == o.plus && minus == o.minus; }
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- codec -----------------------------------------------------------------
//
// "bwd" <blocks> "duals" <perms>   or   "gbg" <blocks>
// blocks: depth blocks separated by 'v'; vertices within a block by 'p';
// adjacency entries within a vertex by 'x'. perms: one per even depth
// (starting at depth 0), separated by 'v', entries by 'x', 1-based.

inline Bigraph parse_bigraph(const std::string& s) {
  Bigraph g;
  size_t pos = 0;
  if (s.rfind("bwd", 0) == 0) {
    g.with_duals = true;
    pos = 3;
  } else if (s.rfind("gbg", 0) == 0) {
    g.with_duals = false;
    pos = 3;
  } else {
    throw ParseError("graph string must start with 'bwd' or 'gbg': " + s);
  }
  size_t duals_at = s.find("duals", pos);
  std::string body = s.substr(pos, (duals_at == std::string::npos ? s.size() : duals_at) - pos);
  if (g.with_duals && duals_at == std::string::npos)
    throw ParseError("'bwd' string missing duals section: " + s);

  auto split = [](const std::string& str, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : str) {
      if (c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto parse_int = [&s](const std::string& tok, int depth) {
    if (tok.empty()) throw ParseError("empty token at depth " + std::to_string(depth) + " in " + s);
    for (char c : tok)
      if (!isdigit(static_cast<unsigned char>(c)))
        throw ParseError("malformed token '" + tok + "' at depth " + std::to_string(depth) +
                         " in " + s);
    return std::stoi(tok);
  };

  int depth = 0;
  for (const auto& blk : split(body, 'v')) {
    ++depth;
    Bigraph::Block block;
    for (const auto& vert : split(blk, 'p')) {
      Bigraph::Row row;
      for (const auto& ent : split(vert, 'x')) row.push_back(parse_int(ent, depth));
      block.push_back(row);
    }
    int prev = depth == 1 ? 1 : static_cast<int>(g.blocks.back().size());
    for (const auto& row : block) {
      if (static_cast<int>(row.size()) != prev)
        throw ParseError("row length mismatch at depth " + std::to_string(depth) + " in " + s);
      bool connected = false;
      for (int m : row) {
        if (m < 0) throw ParseError("negative multiplicity at depth " + std::to_string(depth));
        if (m > 0) connected = true;
      }
      if (!connected)
        throw ParseError("disconnected vertex at depth " + std::to_string(depth) + " in " + s);
    }
    g.blocks.push_back(block);
  }

  if (g.with_duals) {
    std::string dsec = s.substr(duals_at + 5);
    int k = 0;
    for (const auto& blk : split(dsec, 'v')) {
      int d = 2 * k;
      Bigraph::Perm perm;
      for (const auto& ent : split(blk, 'x')) perm.push_back(parse_int(ent, d) - 1);
      int n = g.vertex_count(d);
      if (static_cast<int>(perm.size()) != n)
        throw ParseError("duals size mismatch at depth " + std::to_string(d) + " in " + s);
      std::vector<bool> seen(n, false);
      for (int v : perm) {
        if (v < 0 || v >= n || seen[v])
          throw ParseError("duals not a permutation at depth " + std::to_string(d) + " in " + s);
        seen[v] = true;
      }
      for (int i = 0; i < n; ++i)
        if (perm[perm[i]] != i)
          throw ParseError("duals not an involution at depth " + std::to_string(d) + " in " + s);
      g.even_duals.push_back(perm);
      ++k;
    }
    int expected = g.max_depth() / 2 + 1;
    if (static_cast<int>(g.even_duals.size()) != expected)
      throw ParseError("wrong number of duals blocks in " + s);
  }
  return g;
}

inline std::string render_bigraph(const Bigraph& g) {
  std::string s = g.with_duals ? "bwd" : "gbg";
  for (size_t d = 0; d < g.blocks.size(); ++d) {
    if (d > 0) s += 'v';
    for (size_t v = 0; v < g.blocks[d].size(); ++v) {
      if (v > 0) s += 'p';
      for (size_t e = 0; e < g.blocks[d][v].size(); ++e) {
        if (e > 0) s += 'x';
        s += std::to_string(g.blocks[d][v][e]);
      }
    }
  }
  if (g.with_duals) {
    s += "duals";
    for (size_t k = 0; k < g.even_duals.size(); ++k) {
      if (k > 0) s += 'v';
      for (size_t i = 0; i < g.even_duals[k].size(); ++i) {
        if (i > 0) s += 'x';
        s += std::to_string(g.even_duals[k][i] + 1);
      }
    }
  }
  return s;
}

inline BigraphPair parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) {
    Bigraph g = parse_bigraph(s);
    return {g, g};
  }
  return {parse_bigraph(s.substr(0, comma)), parse_bigraph(s.substr(comma + 1))};
}

inline std::string render_pair(const BigraphPair& p) {
  return render_bigraph(p.plus) + "," + render_bigraph(p.minus);
}

// ---- validation -------------------------------------------------------------

inline std::vector<std::string> validate_pair(const BigraphPair& p) {
  std::vector<std::string> violations;
  int dmax = std::max(p.plus.max_depth(), p.minus.max_depth());
  if (std::abs(p.plus.max_depth() - p.minus.max_depth()) > 1)
    violations.push_back("depth profiles differ by more than one");
  for (int d = 1; d <= dmax; d += 2) {
    if (p.plus.vertex_count(d) != p.minus.vertex_count(d))
      violations.push_back("odd vertex count mismatch at depth " + std::to_string(d));
  }
  for (const Bigraph* g : {&p.plus, &p.minus}) {
    if (!g->with_duals) continue;
    for (size_t k = 0; k < g->even_duals.size(); ++k) {
      const auto& perm = g->even_duals[k];
      for (size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) ||
            perm[perm[i]] != static_cast<int>(i)) {
          violations.push_back("non-involution duals at depth " + std::to_string(2 * k));
          break;
        }
      }
    }
  }
  return violations;
}

// ---- truncation and supertransitivity ---------------------------------------

inline Bigraph truncate_graph(const Bigraph& g, int n) {
  Bigraph r = g;
  if (n < r.max_depth()) {
    r.blocks.resize(n);
    if (r.with_duals) r.even_duals.resize(n / 2 + 1);
  }
  return r;
}

inline BigraphPair truncate_pair(const BigraphPair& p, int n) {
  return {truncate_graph(p.plus, n), truncate_graph(p.minus, n)};
}

// Largest k such that the truncation to depth k is the path A_{k+1}.
inline int supertransitivity(const Bigraph& g) {
  int k = 0;
  for (const auto& block : g.blocks) {
    if (block.size() == 1 && block[0].size() == 1 && block[0][0] == 1)
      ++k;
    else
      break;
  }
  return k;
}

inline int supertransitivity(const BigraphPair& p) { return supertransitivity(p.plus); }

// ---- canonical form ----------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Relabel: perms[d] permutes the vertices at depth d (perms[d][new] = old).
inline Bigraph relabel(const Bigraph& g, const std::vector<std::vector<int>>& perms) {
  Bigraph r = g;
  for (int d = 1; d <= g.max_depth(); ++d) {
    const auto& pd = perms[d];
    const auto& prev = perms[d - 1];
    Bigraph::Block nb(pd.size());
    for (size_t v = 0; v < pd.size(); ++v) {
      const auto& oldrow = g.blocks[d - 1][pd[v]];
      Bigraph::Row row(oldrow.size());
      for (size_t e = 0; e < oldrow.size(); ++e) row[e] = oldrow[prev[e]];
      nb[v] = row;
    }
    r.blocks[d - 1] = nb;
    if (g.with_duals && d % 2 == 0) {
      const auto& sigma = g.even_duals[d / 2];
      std::vector<int> inv(pd.size());
      for (size_t i = 0; i < pd.size(); ++i) inv[pd[i]] = static_cast<int>(i);
      Bigraph::Perm ns(pd.size());
      for (size_t i = 0; i < pd.size(); ++i) ns[i] = inv[sigma[pd[i]]];
      r.even_duals[d / 2] = ns;
    }
  }
  return r;
}

}  // namespace detail

namespace detail {

// State of a partially chosen relabeling of the pair: shared odd perms plus
// per-graph even perms, filled in as the refinement walks the output string
// segment by segment.
struct RelabelChoice {
  std::vector<std::vector<int>> odd;         // by odd-depth index
  std::vector<std::vector<int>> even_plus;   // by even-depth index (depth 2,4,..)
  std::vector<std::vector<int>> even_minus;
};

inline std::string render_block(const Bigraph& g, int d, const std::vector<int>& perm_d,
                                const std::vector<int>& perm_prev) {
  std::string s;
  for (size_t v = 0; v < perm_d.size(); ++v) {
    if (v > 0) s += 'p';
    const auto& row = g.blocks[d - 1][perm_d[v]];
    for (size_t e = 0; e < row.size(); ++e) {
      if (e > 0) s += 'x';
      s += std::to_string(row[perm_prev[e]]);
    }
  }
  return s;
}

inline std::string render_duals(const Bigraph& g, int k, const std::vector<int>& perm) {
  const auto& sigma = g.even_duals[k];
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  std::string s;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (i > 0) s += 'x';
    s += std::to_string(inv[sigma[perm[i]]] + 1);
  }
  return s;
}

}  // namespace detail

// Lexicographically least render over depth-preserving relabelings.
// Odd-depth permutations are shared between the two graphs (they must
// preserve the listed-order duality pairing); even-depth permutations act
// per graph. The two graphs stay in their given order. Minimization walks
// the output string segment by segment, keeping only tied candidates, so
// only genuine symmetries branch.
inline std::string canonicalize(const BigraphPair& p) {
  int dmax = std::max(p.plus.max_depth(), p.minus.max_depth());
  std::vector<detail::RelabelChoice> cands(1);
  cands[0].odd.resize(dmax / 2 + 1);
  cands[0].even_plus.resize(dmax / 2 + 1);
  cands[0].even_minus.resize(dmax / 2 + 1);

  // Refine the candidate set by one string segment. `options` lists, per
  // candidate, the admissible (perm, segment) extensions.
  auto refine = [&](auto&& segment_of, auto&& choices_of, auto&& store) {
    std::string best;
    std::vector<detail::RelabelChoice> next;
    for (const auto& cand : cands) {
      for (const auto& perm : choices_of(cand)) {
        std::string seg = segment_of(cand, perm);
        if (next.empty() || seg < best) {
          best = seg;
          next.clear();
        }
        if (seg == best) {
          detail::RelabelChoice c = cand;
          store(c, perm);
          next.push_back(std::move(c));
        }
      }
    }
    cands = std::move(next);
    return best;
  };

  auto perms_cached = [cache = std::map<int, std::vector<std::vector<int>>>{}](int n) mutable
      -> const std::vector<std::vector<int>>& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, detail::all_perms(n)).first;
    return it->second;
  };

  auto run_graph = [&](const Bigraph& g, bool is_plus) {
    std::string out;
    // blocks
    for (int d = 1; d <= g.max_depth(); ++d) {
      bool is_odd = d % 2 == 1;
      std::string seg = refine(
          [&](const detail::RelabelChoice& c, const std::vector<int>& perm) {
            const std::vector<int>* prev;
            std::vector<int> root{0};
            if (d == 1)
              prev = &root;
            else if ((d - 1) % 2 == 1)
              prev = &c.odd[(d - 1) / 2];
            else
              prev = is_plus ? &c.even_plus[(d - 1) / 2] : &c.even_minus[(d - 1) / 2];
            return detail::render_block(g, d, perm, *prev);
          },
          [&](const detail::RelabelChoice& c) -> const std::vector<std::vector<int>>& {
            if (is_odd && !c.odd[d / 2].empty()) {
              // shared odd perm already fixed by the plus graph
              static thread_local std::vector<std::vector<int>> one;
              one.assign(1, c.odd[d / 2]);
              return one;
            }
            return perms_cached(g.vertex_count(d));
          },
          [&](detail::RelabelChoice& c, const std::vector<int>& perm) {
            if (is_odd)
              c.odd[d / 2] = perm;
            else if (is_plus)
              c.even_plus[d / 2] = perm;
            else
              c.even_minus[d / 2] = perm;
          });
      out += (d > 1 ? "v" : "") + seg;
    }
    // duals
    if (g.with_duals) {
      out += "duals";
      for (size_t k = 0; k < g.even_duals.size(); ++k) {
        std::string seg = refine(
            [&](const detail::RelabelChoice& c, const std::vector<int>& perm) {
              return detail::render_duals(g, static_cast<int>(k), perm);
            },
            [&](const detail::RelabelChoice& c) {
              // even perm at this depth is already pinned (possibly tied)
              std::vector<std::vector<int>> one;
              if (k == 0)
                one.push_back({0});
              else
                one.push_back(is_plus ? c.even_plus[k] : c.even_minus[k]);
              return one;
            },
            [&](detail::RelabelChoice&, const std::vector<int>&) {});
        out += (k > 0 ? "v" : "") + seg;
      }
    }
    return out;
  };

  std::string result = (p.plus.with_duals ? "bwd" : "gbg") + run_graph(p.plus, true);
  result += ",";
  result += (p.minus.with_duals ? "bwd" : "gbg") + run_graph(p.minus, false);
  return result;
}

// Canonical key treating (G+, G-) and (G-, G+) as the same classification
// object (a subfactor and its dual); used for run-level deduplication.
inline std::string canonical_key_unordered(const BigraphPair& p) {
  std::string a = canonicalize(p);
  std::string b = canonicalize({p.minus, p.plus});
  return a < b ? a : b;
}

}  // namespace bgpa
