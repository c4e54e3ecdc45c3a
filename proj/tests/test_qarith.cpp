#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgpa/algebraic.hpp"
#include "bgpa/numfield.hpp"
#include "bgpa/poly.hpp"
#include "bgpa/qrational.hpp"

using namespace bgpa;

TEST_CASE("polynomial basics") {
  IPoly p({Int(-2), Int(0), Int(1)});  // x^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(2)) == Rat(2));
  IPoly q = p * p;
  CHECK(q.degree() == 4);
  CHECK(ipoly_squarefree(q) == p);
}

TEST_CASE("root isolation finds both roots of x^2-2") {
  IPoly p({Int(-2), Int(0), Int(1)});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  AlgebraicReal r(p, roots[1].lo, roots[1].hi);
  CHECK(r.compare(Rat(1)) == Cmp::GT);
  CHECK(r.compare(Rat(2)) == Cmp::LT);
  CHECK(r.compare(Rat(141421, 100000)) == Cmp::GT);
  CHECK(r.compare(Rat(141422, 100000)) == Cmp::LT);
}

TEST_CASE("factorization over Z") {
  // (x^2 - 2)(x^2 - 3)(x - 1)
  IPoly a({Int(-2), Int(0), Int(1)});
  IPoly b({Int(-3), Int(0), Int(1)});
  IPoly c({Int(-1), Int(1)});
  auto fs = ipoly_factor(a * b * c);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == c);
  // x^4 - 6x^2 + 1 = (x^2-2x-1)(x^2+2x-1)
  IPoly biquad({Int(1), Int(0), Int(-6), Int(0), Int(1)});
  auto fs2 = ipoly_factor(biquad);
  REQUIRE(fs2.size() == 2);
  CHECK(fs2[0].degree() == 2);
  CHECK(fs2[1].degree() == 2);
  CHECK(fs2[0] * fs2[1] == biquad);
  // irreducible cubic stays whole
  IPoly cubic({Int(-1), Int(5), Int(-6), Int(1)});  // x^3-6x^2+5x-1
  auto fs3 = ipoly_factor(cubic);
  REQUIRE(fs3.size() == 1);
  CHECK(fs3[0] == cubic);
}

TEST_CASE("exactCompare examples") {
  // norm of the A3 path is sqrt(2) < 2
  IPoly p({Int(-2), Int(0), Int(1)});
  AlgebraicReal sqrt2 = AlgebraicReal::largest_root(p);
  CHECK(sqrt2.compare(Rat(2)) == Cmp::LT);

  // 3 + 2 sqrt2, the root of x^2 - 6x + 1 in (5, 6)
  IPoly m({Int(1), Int(-6), Int(1)});
  AlgebraicReal a(m, Rat(5), Rat(6));
  CHECK(a.compare(Rat(31, 5)) == Cmp::LT);
  CHECK(a.compare(Rat(29, 5)) == Cmp::GT);
  CHECK(a.to_double() == doctest::Approx(3 + 2 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("algebraic compare vs high-precision intervals at random points") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    // random polynomial with a couple of real roots
    int deg = 2 + int(rng() % 3);
    IPoly p;
    p.c.resize(deg + 1);
    for (int i = 0; i <= deg; ++i) p.c[i] = Int((long)(rng() % 19) - 9);
    if (p.c[deg] == 0) p.c[deg] = 1;
    p.normalize();
    IPoly sf = ipoly_squarefree(p);
    if (sf.degree() < 1) continue;
    auto roots = isolate_real_roots(sf);
    if (roots.empty()) continue;
    AlgebraicReal a(sf, roots.back().lo, roots.back().hi);
    Rat r((long)(rng() % 2001) - 1000, 100);
    Cmp c = a.compare(r);
    a.refine_below(Rat(1, Int(1) << 200));  // ~60 decimal digits
    Rat mid = (a.lo() + a.hi()) / 2;
    Cmp expect = mid < r ? Cmp::LT : (mid > r ? Cmp::GT : Cmp::EQ);
    if (c != Cmp::EQ) CHECK(c == expect);
  }
}

TEST_CASE("minimal polynomials in number fields") {
  // Q[x]/(x^2-2): the generator's minimal polynomial is x^2-2
  IPoly m2({Int(-2), Int(0), Int(1)});
  auto K = NumberField::make(m2, AlgebraicReal::largest_root(m2));
  FieldElement x = FieldElement::generator(K);
  RPoly mp = x.minimal_polynomial();
  CHECK(mp.degree() == 2);
  CHECK(mp.c[0] == Rat(-2));
  CHECK(mp.c[1] == Rat(0));

  FieldElement one = FieldElement::from_rational(K, Rat(1));
  RPoly mp1 = one.minimal_polynomial();
  CHECK(mp1.degree() == 1);
  CHECK(mp1.c[0] == Rat(-1));

  // (1+sqrt5)/2 satisfies x^2 - x - 1
  IPoly m5({Int(-5), Int(0), Int(1)});
  auto K5 = NumberField::make(m5, AlgebraicReal::largest_root(m5));
  FieldElement phi = (FieldElement::generator(K5) + FieldElement::from_rational(K5, 1)) * Rat(1, 2);
  RPoly mphi = phi.minimal_polynomial();
  REQUIRE(mphi.degree() == 2);
  CHECK(mphi.c[1] == Rat(-1));
  CHECK(mphi.c[0] == Rat(-1));
  CHECK(phi.is_algebraic_integer());
  // substitution oracle: phi^2 - phi - 1 == 0
  CHECK((phi * phi - phi - FieldElement::from_rational(K5, 1)).is_zero());

  FieldElement half = FieldElement::from_rational(K5, Rat(1, 2));
  CHECK(!half.is_algebraic_integer());

  // 3 + 2 sqrt2 in Q(sqrt2): minimal polynomial x^2-6x+1 via the
  // multiplication-matrix oracle
  FieldElement s = FieldElement::generator(K);
  FieldElement e = s * Rat(2) + FieldElement::from_rational(K, 3);
  RPoly me = e.minimal_polynomial();
  REQUIRE(me.degree() == 2);
  CHECK(me.c[1] == Rat(-6));
  CHECK(me.c[0] == Rat(1));
  CHECK(e.is_algebraic_integer());
}

TEST_CASE("field elements with integer coordinates over an integral generator") {
  IPoly m({Int(1), Int(-6), Int(1)});  // x^2-6x+1, root 3+2sqrt2 (an algebraic integer)
  auto K = NumberField::make(m, AlgebraicReal::largest_root(m));
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    RPoly rep({Rat((long)(rng() % 21) - 10), Rat((long)(rng() % 21) - 10)});
    FieldElement e(K, rep);
    CHECK(e.is_algebraic_integer());
  }
}

TEST_CASE("real embedding signs") {
  IPoly m({Int(-2), Int(0), Int(1)});
  auto K = NumberField::make(m, AlgebraicReal::largest_root(m));
  FieldElement s = FieldElement::generator(K);  // sqrt 2
  CHECK(s.compare(Rat(1)) == Cmp::GT);
  CHECK(s.compare(Rat(2)) == Cmp::LT);
  CHECK((s * s).compare(Rat(2)) == Cmp::EQ);
  CHECK(s.to_double() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("algebraic sqrt") {
  IPoly m({Int(1), Int(-6), Int(1)});
  AlgebraicReal theta = AlgebraicReal::largest_root(m);  // 3+2sqrt2
  AlgebraicReal delta = algebraic_sqrt(theta);           // 1+sqrt2
  CHECK(delta.to_double() == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-12));
  AlgebraicReal six = AlgebraicReal::from_rational(Rat(6));
  CHECK(algebraic_sqrt(six).to_double() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("quantum integers") {
  CHECK(quantum_int(3, 1.0) == doctest::Approx(3.0));
  CHECK(quantum_int(2, 1.98661) == doctest::Approx(2.48998).epsilon(1e-5));
  // direct evaluation oracle for [5] at q=1.7
  double q = 1.7;
  double direct = (std::pow(q, 5) - std::pow(q, -5)) / (q - 1 / q);
  CHECK(quantum_int(5, 1.7) == doctest::Approx(direct).epsilon(1e-14));

  // index (q+1/q)^2 = 6.2 at q ~ 1.98661
  CHECK(index_to_q(4.0) == doctest::Approx(1.0));
  CHECK(index_to_q(6.2) == doctest::Approx(1.98661).epsilon(1e-5));
  CHECK(index_to_q(3 + std::sqrt(5.0)) == doctest::Approx(1.70002).epsilon(1e-5));
  CHECK_THROWS(index_to_q(3.9));
}

TEST_CASE("quantum integer recursion [k+1] = [2][k] - [k-1]") {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(1.0, 2.2);
  for (int t = 0; t < 50; ++t) {
    double q = dist(rng);
    for (int k = 1; k <= 8; ++k) {
      double lhs = quantum_int(k + 1, q);
      double rhs = quantum_int(2, q) * quantum_int(k, q) - quantum_int(k - 1, q);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
  // exact mode
  for (int k = 1; k <= 8; ++k) {
    QRational lhs = quantum_int_q(k + 1);
    QRational rhs = quantum_int_q(2) * quantum_int_q(k) - quantum_int_q(k - 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("QRational normalization and arithmetic") {
  QRational q = QRational::q();
  QRational two(2);
  QRational expr = (q * q - QRational(1)) / (q - QRational(1));
  // (q^2-1)/(q-1) = q+1 after reduction
  QRational qp1 = q + QRational(1);
  CHECK(expr == qp1);
  CHECK(expr.eval(2.0) == doctest::Approx(3.0));
  CHECK((q / q) == QRational(1));
  CHECK((q - q).is_zero());
  CHECK(quantum_int_q(2).eval(1.98661) == doctest::Approx(2.48998).epsilon(1e-5));
}
