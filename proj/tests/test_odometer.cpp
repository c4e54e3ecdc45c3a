#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "bgpa/odometer.hpp"

using namespace bgpa;

namespace {
const std::string kD = "bwd1v1p1v1x0p1x1p0x1duals1v1x2";
const std::string kK = "bwd1v1p1v1x1p0x1p0x1duals1v1x2";
BigraphPair seed_a2() { return parse_pair("bwd1duals1,bwd1duals1"); }
}  // namespace

TEST_CASE("thickness on the branching depth-3 graphs") {
  Bigraph d = parse_bigraph(kD);
  CHECK(thickness(d, 0, 1) == 2);
  Bigraph k = parse_bigraph(kK);
  CHECK(thickness(k, 0, 1) == 2);
  Bigraph g = parse_bigraph("bwd1v1p1v1x0p0x1duals1v1x2");
  CHECK(thickness(g, 0, 1) == 1);
}

TEST_CASE("stability") {
  Bigraph s = parse_bigraph("bwd1v1p1v1x0p1x1p0x1v0x1x0duals1v1x2v1");
  CHECK(is_stable_at_depth(s, 3));
  Bigraph d = parse_bigraph(kD);
  CHECK(!is_stable_at_depth(d, 2));
  Bigraph path = parse_bigraph("bwd1v1v1v1duals1v1v1");
  for (int n = 1; n < 4; ++n) CHECK(is_stable_at_depth(path, n));
}

TEST_CASE("classifyPair") {
  BigraphPair cyl = parse_pair("bwd1v2v1duals1v1,bwd1v2v1duals1v1");
  CHECK(classify_pair(cyl, Rat(31, 5)) == PairClass::Cylinder);
  BigraphPair d = parse_pair(kD + "," + kD);
  CHECK(classify_pair(d, Rat(31, 5)) == PairClass::Weed);
  BigraphPair s = parse_pair("bwd1v1p1v1x0p1x1p0x1v0x1x0duals1v1x2v1,bwd1v1p1v1x0p1x1p0x1v0x1x0duals1v1x2v1");
  CHECK(classify_pair(s, Rat(31, 5)) == PairClass::Cylinder);
}

TEST_CASE("depth-2 extensions of the seed: 18 pairs") {
  ExtendOptions opt;
  auto children = extend_one_depth(seed_a2(), opt);
  for (const auto& c : children) {
    INFO(render_pair(c));
    CHECK(validate_pair(c).empty());
  }
  for (const auto& c : children) std::cout << "  d2: " << render_pair(c) << "\n";
  CHECK(children.size() == 18);
}

TEST_CASE("depth-3 census: 300 weeds, 292 with intermediates") {
  RunConfig cfg;
  cfg.seed = seed_a2();
  cfg.max_depth = 3;
  auto tree = run_odometer(cfg);
  REQUIRE(tree.summaries.size() >= 2);
  const DepthSummary& d3 = tree.summaries[1];
  std::cout << "depth3: weeds=" << d3.weeds << " intermediates=" << d3.intermediates
            << " cylinders=" << d3.cylinders << " active=" << d3.active
            << " ignored=" << d3.ignored << "\n";
  CHECK(d3.weeds == 300);
  CHECK(d3.intermediates == 292);
  CHECK(d3.cylinders == 2);
}
