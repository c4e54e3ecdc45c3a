#pragma once

// Exact real algebraic numbers: a squarefree integer polynomial together with
// an isolating interval holding exactly one real root. Comparisons against
// rationals and other algebraic reals are exact (Sturm counts + refinement),
// never floating point.

#include <compare>
#include <utility>

#include "bgpa/poly.hpp"

namespace bgpa {

enum class Cmp { LT, EQ, GT };

class AlgebraicReal {
 public:
  AlgebraicReal() : poly_(IPoly::x()), lo_(0), hi_(0) {}

  static AlgebraicReal from_rational(const Rat& r) {
    AlgebraicReal a;
    a.poly_ = IPoly({-rat_num(r), rat_den(r)});
    a.poly_ = ipoly_primitive(a.poly_);
    a.lo_ = a.hi_ = r;
    return a;
  }

  // The unique root of `p` in (lo, hi); p need not be squarefree.
  AlgebraicReal(IPoly p, Rat lo, Rat hi) : poly_(ipoly_squarefree(p)), lo_(lo), hi_(hi) {
    if (ipoly_sign_at(poly_, lo_) == 0) {
      hi_ = lo_;
    } else if (ipoly_sign_at(poly_, hi_) == 0) {
      lo_ = hi_;
    } else {
      SturmSequence s(poly_);
      if (s.count_roots(lo_, hi_) != 1)
        throw std::invalid_argument("AlgebraicReal: interval does not isolate one root");
      // Try to snap to a rational root inside the interval.
      Rat mid = (lo_ + hi_) / 2;
      if (ipoly_sign_at(poly_, mid) == 0) lo_ = hi_ = mid;
    }
  }

  // The largest real root of p.
  static AlgebraicReal largest_root(const IPoly& p) {
    IPoly sf = ipoly_squarefree(p);
    auto roots = isolate_real_roots(sf);
    if (roots.empty()) throw std::domain_error("largest_root: no real roots");
    const auto& r = roots.back();
    return AlgebraicReal(sf, r.lo, r.hi);
  }

  const IPoly& poly() const { return poly_; }
  Rat lo() const { return lo_; }
  Rat hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }

  void refine() const {
    if (is_rational()) return;
    Rat mid = (lo_ + hi_) / 2;
    int sm = ipoly_sign_at(poly_, mid);
    if (sm == 0) {
      lo_ = hi_ = mid;
      return;
    }
    if (sm == ipoly_sign_at(poly_, lo_))
      lo_ = mid;
    else
      hi_ = mid;
  }

  void refine_below(const Rat& width) const {
    while (!is_rational() && hi_ - lo_ > width) refine();
  }

  Cmp compare(const Rat& r) const {
    if (is_rational()) return lo_ < r ? Cmp::LT : (lo_ == r ? Cmp::EQ : Cmp::GT);
    if (r <= lo_) return Cmp::GT;
    if (r >= hi_) return Cmp::LT;
    if (ipoly_sign_at(poly_, r) == 0) return Cmp::EQ;
    SturmSequence s(poly_);
    return s.count_roots(lo_, r) == 1 ? Cmp::LT : Cmp::GT;
  }

  Cmp compare(const AlgebraicReal& o) const {
    if (o.is_rational()) return compare(o.lo_);
    if (is_rational()) {
      Cmp c = o.compare(lo_);
      return c == Cmp::LT ? Cmp::GT : (c == Cmp::GT ? Cmp::LT : Cmp::EQ);
    }
    // Equal iff a common root lies in the overlap.
    IPoly g = ipoly_gcd(poly_, o.poly_);
    if (g.degree() >= 1) {
      Rat a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
      if (a < b) {
        SturmSequence s(g);
        if (s.count_roots(a, b) >= 1) return Cmp::EQ;
      } else if (a == b && ipoly_sign_at(g, a) == 0) {
        return Cmp::EQ;
      }
    }
    while (lo_ < o.hi_ && o.lo_ < hi_) {
      refine();
      o.refine();
      if (is_rational() || o.is_rational()) return compare_resolved(o);
    }
    return hi_ <= o.lo_ ? Cmp::LT : Cmp::GT;
  }

  bool equals(const AlgebraicReal& o) const { return compare(o) == Cmp::EQ; }

  // Minimal polynomial: the irreducible factor vanishing at this root.
  IPoly minimal_polynomial() const {
    for (const auto& f : ipoly_factor(poly_)) {
      if (is_rational()) {
        if (ipoly_sign_at(f, lo_) == 0) return f;
        continue;
      }
      if (ipoly_sign_at(f, lo_) == 0 || ipoly_sign_at(f, hi_) == 0) continue;
      SturmSequence s(f);
      if (s.count_roots(lo_, hi_) == 1) return f;
    }
    throw std::logic_error("minimal_polynomial: no factor matched");
  }

  double to_double() const {
    refine_below(Rat(1, Int(1) << 60));
    return static_cast<double>(Rat((lo_ + hi_) / 2));
  }

 private:
  Cmp compare_resolved(const AlgebraicReal& o) const {
    if (o.is_rational()) return compare(o.lo_);
    Cmp c = o.compare(lo_);
    return c == Cmp::LT ? Cmp::GT : (c == Cmp::GT ? Cmp::LT : Cmp::EQ);
  }

  IPoly poly_;
  mutable Rat lo_, hi_;
};

}  // namespace bgpa
