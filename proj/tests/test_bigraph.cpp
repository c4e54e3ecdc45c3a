#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "bgpa/bigraph.hpp"

using namespace bgpa;

namespace {
const std::string kD = "bwd1v1p1v1x0p1x1p0x1duals1v1x2";
const std::string kDp = "bwd1v1p1v1x0p1x1p0x1duals1v2x1";
const std::string kS = "bwd1v1p1v1x0p1x1p0x1v0x1x0duals1v1x2v1";
const std::string kSp = "bwd1v1p1v1x0p1x1p0x1v0x1x0duals1v2x1v1";
const std::string kA2 = "bwd1duals1";
}  // namespace

TEST_CASE("parse the listed graphs") {
  Bigraph d = parse_bigraph(kD);
  CHECK(d.max_depth() == 3);
  CHECK(d.vertex_count(1) == 1);
  CHECK(d.vertex_count(2) == 2);
  CHECK(d.vertex_count(3) == 3);
  CHECK(d.blocks[2][0] == Bigraph::Row{1, 0});
  CHECK(d.blocks[2][1] == Bigraph::Row{1, 1});
  CHECK(d.blocks[2][2] == Bigraph::Row{0, 1});
  CHECK(d.even_duals[0] == Bigraph::Perm{0});
  CHECK(d.even_duals[1] == Bigraph::Perm{0, 1});

  Bigraph a2 = parse_bigraph(kA2);
  CHECK(a2.max_depth() == 1);
  CHECK(a2.vertex_count(1) == 1);

  Bigraph sp = parse_bigraph(kSp);
  CHECK(sp.max_depth() == 4);
  CHECK(sp.vertex_count(4) == 1);
  CHECK(sp.blocks[3][0] == Bigraph::Row{0, 1, 0});
  CHECK(sp.even_duals[1] == Bigraph::Perm{1, 0});
}

TEST_CASE("render inverts parse") {
  for (const auto& s : {kD, kDp, kS, kSp, kA2}) {
    CHECK(render_bigraph(parse_bigraph(s)) == s);
  }
}

TEST_CASE("every graph string in the regression corpus parses and round-trips") {
  std::ifstream in(std::string(BGPA_DATA_DIR) + "/graph_corpus.txt");
  REQUIRE(in.good());
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++n;
    Bigraph g;
    REQUIRE_NOTHROW(g = parse_bigraph(line));
    CHECK(render_bigraph(g) == line);
  }
  CHECK(n >= 60);
}

TEST_CASE("parse errors name the offending depth") {
  CHECK_THROWS_AS(parse_bigraph("xyz1duals1"), ParseError);
  // row length mismatch at depth 3
  CHECK_THROWS_WITH_AS(parse_bigraph("bwd1v1p1v1x0x0duals1v1x2"), doctest::Contains("depth 3"),
                       ParseError);
  // duals 3-cycle is not an involution
  CHECK_THROWS_WITH_AS(parse_bigraph("bwd1v1p1p1duals1v2x3x1"), doctest::Contains("involution"),
                       ParseError);
  // non-permutation duals
  CHECK_THROWS_AS(parse_bigraph("bwd1v1p1duals1v1x1"), ParseError);
  // disconnected vertex
  CHECK_THROWS_AS(parse_bigraph("bwd1v1p1v0x0p1x1duals1v1x2"), ParseError);
  // multi-digit multiplicities are single integers
  Bigraph g = parse_bigraph("bwd1v12duals1v1");
  CHECK(g.blocks[1][0][0] == 12);
}

TEST_CASE("validatePair") {
  BigraphPair s{parse_bigraph(kS), parse_bigraph(kS)};
  CHECK(validate_pair(s).empty());

  // odd-count mismatch at depth 3
  BigraphPair bad{parse_bigraph(kD), parse_bigraph("bwd1v1p1v1x0p1x1duals1v1x2")};
  auto v = validate_pair(bad);
  REQUIRE(!v.empty());
  CHECK(v[0].find("depth 3") != std::string::npos);
}

TEST_CASE("truncate") {
  BigraphPair s{parse_bigraph(kS), parse_bigraph(kS)};
  BigraphPair d = truncate_pair(s, 3);
  CHECK(render_pair(d) == kD + "," + kD);

  BigraphPair sp{parse_bigraph(kSp), parse_bigraph(kSp)};
  CHECK(render_pair(truncate_pair(sp, 3)) == kDp + "," + kDp);

  BigraphPair root = truncate_pair(s, 0);
  CHECK(root.plus.max_depth() == 0);
}

TEST_CASE("supertransitivity") {
  CHECK(supertransitivity(parse_bigraph(kD)) == 1);
  CHECK(supertransitivity(parse_bigraph(kS)) == 1);
  CHECK(supertransitivity(parse_bigraph(kA2)) == 1);
  CHECK(supertransitivity(parse_bigraph("bwd1v1duals1v1")) == 2);
  // A7 path: 6 depths of single simple vertices
  Bigraph a7 = parse_bigraph("bwd1v1v1v1v1v1duals1v1v1v1");
  CHECK(supertransitivity(a7) == 6);
}

TEST_CASE("canonicalize is invariant under within-depth relabeling") {
  BigraphPair d{parse_bigraph(kD), parse_bigraph(kD)};
  BigraphPair drev = d;
  // reverse both graphs' depth-3 blocks together (shared odd relabeling)
  for (Bigraph* g : {&drev.plus, &drev.minus}) {
    std::reverse(g->blocks[2].begin(), g->blocks[2].end());
  }
  CHECK(canonicalize(d) == canonicalize(drev));
}

TEST_CASE("canonicalize separates dual-data variants") {
  BigraphPair d{parse_bigraph(kD), parse_bigraph(kD)};
  BigraphPair dp{parse_bigraph(kDp), parse_bigraph(kDp)};
  CHECK(canonicalize(d) != canonicalize(dp));
  BigraphPair s{parse_bigraph(kS), parse_bigraph(kS)};
  BigraphPair sp{parse_bigraph(kSp), parse_bigraph(kSp)};
  CHECK(canonicalize(s) != canonicalize(sp));
}

TEST_CASE("canonicalize matches across random relabelings") {
  std::mt19937 rng(5);
  std::vector<std::string> pool = {kD + "," + kD, kS + "," + kS, kSp + "," + kSp,
                                   "bwd1v1p1v1x1p0x1p0x1duals1v1x2,bwd1v1p1v1x1p1x0p0x1duals1v1x2"};
  for (const auto& ps : pool) {
    BigraphPair p = parse_pair(ps);
    std::string canon = canonicalize(p);
    for (int trial = 0; trial < 50; ++trial) {
      BigraphPair r = p;
      // random shared odd perm at depth 3 and a random even swap at depth 2
      int n3 = p.plus.vertex_count(3);
      std::vector<int> perm3(n3);
      std::iota(perm3.begin(), perm3.end(), 0);
      std::shuffle(perm3.begin(), perm3.end(), rng);
      bool swap2 = rng() % 2;
      for (Bigraph* g : {&r.plus, &r.minus}) {
        Bigraph::Block nb(n3);
        for (int i = 0; i < n3; ++i) nb[i] = g->blocks[2][perm3[i]];
        g->blocks[2] = nb;
        if (g->max_depth() >= 4) {
          for (auto& row : g->blocks[3]) {
            Bigraph::Row nr(row.size());
            for (int i = 0; i < n3; ++i) nr[i] = row[perm3[i]];
            row = nr;
          }
        }
      }
      if (swap2) {
        // swap the two depth-2 vertices of the plus graph only
        Bigraph* g = &r.plus;
        std::swap(g->blocks[1][0], g->blocks[1][1]);
        for (auto& row : g->blocks[2]) std::swap(row[0], row[1]);
        auto& sigma = g->even_duals[1];
        Bigraph::Perm ns = {sigma[1] == 1 ? 0 : (sigma[1] == 0 ? 1 : sigma[1]),
                            sigma[0] == 0 ? 1 : (sigma[0] == 1 ? 0 : sigma[0])};
        sigma = ns;
      }
      CHECK(canonicalize(r) == canon);
    }
  }
}

TEST_CASE("fuzz: random valid graphs round-trip through the codec") {
  std::mt19937 rng(11);
  for (int t = 0; t < 1000; ++t) {
    Bigraph g;
    g.with_duals = true;
    int depth = 1 + int(rng() % 4);
    int prev = 1;
    for (int d = 1; d <= depth; ++d) {
      int n = 1 + int(rng() % 3);
      Bigraph::Block blk(n);
      for (auto& row : blk) {
        row.assign(prev, 0);
        row[rng() % prev] = 1 + int(rng() % 2);
        if (prev > 1 && rng() % 2) row[rng() % prev] += 1;
      }
      g.blocks.push_back(blk);
      prev = n;
    }
    for (int d = 0; d <= depth; d += 2) {
      int n = g.vertex_count(d);
      Bigraph::Perm perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int s = 0; s + 1 < n; s += 2)
        if (rng() % 2) std::swap(perm[s], perm[s + 1]);
      g.even_duals.push_back(perm);
    }
    std::string s = render_bigraph(g);
    Bigraph h = parse_bigraph(s);
    CHECK(h == g);
    CHECK(render_bigraph(h) == s);
  }
}
