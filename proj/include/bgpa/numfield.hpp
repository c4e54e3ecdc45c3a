#pragma once

// Number fields Q[x]/(m) with a designated real embedding, exact element
// arithmetic, minimal polynomials via multiplication matrices, and the
// algebraic-integer test.

#include <memory>
#include <vector>

#include "bgpa/algebraic.hpp"
#include "bgpa/poly.hpp"

namespace bgpa {

struct NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

struct NumberField {
  RPoly m;             // monic irreducible defining polynomial
  AlgebraicReal root;  // the real root used for embedding/comparisons

  int degree() const { return m.degree(); }

  static FieldPtr make(const IPoly& irreducible, const AlgebraicReal& root) {
    auto f = std::make_shared<NumberField>();
    RPoly mm = to_rpoly(irreducible);
    Rat lead = mm.lead();
    for (auto& v : mm.c) v /= lead;
    f->m = mm;
    f->root = root;
    return f;
  }

  // Field generated by an algebraic real (uses its minimal polynomial).
  static FieldPtr of(const AlgebraicReal& a) {
    IPoly mp = a.minimal_polynomial();
    return make(mp, AlgebraicReal(mp, a.lo(), a.hi()));
  }
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr K, RPoly rep) : K_(std::move(K)), rep_(std::move(rep)) { reduce(); }
  static FieldElement from_rational(FieldPtr K, const Rat& r) {
    return FieldElement(std::move(K), RPoly::constant(r));
  }
  static FieldElement generator(FieldPtr K) { return FieldElement(std::move(K), RPoly::x()); }

  const FieldPtr& field() const { return K_; }
  const RPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  FieldElement operator+(const FieldElement& o) const { return FieldElement(K_, rep_ + o.rep_); }
  FieldElement operator-(const FieldElement& o) const { return FieldElement(K_, rep_ - o.rep_); }
  FieldElement operator-() const { return FieldElement(K_, -rep_); }
  FieldElement operator*(const FieldElement& o) const { return FieldElement(K_, rep_ * o.rep_); }
  FieldElement operator*(const Rat& s) const { return FieldElement(K_, rep_ * s); }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  bool operator==(const FieldElement& o) const { return rep_ == o.rep_; }
  bool operator!=(const FieldElement& o) const { return rep_ != o.rep_; }

  FieldElement inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement::inverse of zero");
    // Extended Euclid: s*rep + t*m = 1.
    RPoly r0 = K_->m, r1 = rep_, s0, s1 = RPoly::constant(Rat(1));
    while (!r1.is_zero() && r1.degree() > 0) {
      auto [q, r] = poly_divmod(r0, r1);
      RPoly ns = s0 - q * s1;
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = ns;
    }
    if (r1.is_zero()) throw std::logic_error("FieldElement::inverse: not invertible (m reducible?)");
    Rat inv = Rat(1) / r1.c[0];
    return FieldElement(K_, s1 * inv);
  }

  // Exact sign under the field's real embedding.
  int sign() const {
    if (is_zero()) return 0;
    const AlgebraicReal& th = K_->root;
    if (th.is_rational()) return sign_of(rep_.eval(th.lo()));
    for (;;) {
      auto [lo, hi] = interval_eval(th.lo(), th.hi());
      if (lo > 0) return 1;
      if (hi < 0) return -1;
      th.refine();
    }
  }

  Cmp compare(const Rat& r) const {
    FieldElement d = *this - from_rational(K_, r);
    int s = d.sign();
    return s < 0 ? Cmp::LT : (s == 0 ? Cmp::EQ : Cmp::GT);
  }
  Cmp compare(const FieldElement& o) const {
    int s = (*this - o).sign();
    return s < 0 ? Cmp::LT : (s == 0 ? Cmp::EQ : Cmp::GT);
  }

  double to_double() const {
    if (is_zero()) return 0.0;
    const AlgebraicReal& th = K_->root;
    th.refine_below(Rat(1, Int(1) << 70));
    return static_cast<double>(rep_.eval(Rat((th.lo() + th.hi()) / 2)));
  }

  // Monic minimal polynomial over Q, from the multiplication matrix.
  RPoly minimal_polynomial() const {
    int n = K_->degree();
    if (n == 0) throw std::logic_error("minimal_polynomial: trivial field");
    // Multiplication-by-e matrix in the power basis.
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    RPoly pow = RPoly::constant(Rat(1));
    for (int j = 0; j < n; ++j) {
      RPoly col = reduce_mod(rep_ * pow, K_->m);
      for (int i = 0; i <= col.degree(); ++i) M[i][j] = col.c[i];
      pow = reduce_mod(pow * RPoly::x(), K_->m);
    }
    RPoly chi = charpoly(M);
    // chi = minpoly^k for a field element, so the squarefree part is it.
    RPoly g = poly_gcd(chi, chi.derivative());
    auto [mp, rem] = poly_divmod(chi, g);
    assert(rem.is_zero());
    Rat lead = mp.lead();
    for (auto& v : mp.c) v /= lead;
    return mp;
  }

  bool is_algebraic_integer() const {
    RPoly mp = minimal_polynomial();
    for (const auto& v : mp.c)
      if (rat_den(v) != 1) return false;
    return true;
  }

  static RPoly reduce_mod(const RPoly& a, const RPoly& m) { return poly_divmod(a, m).second; }

  static RPoly charpoly(const std::vector<std::vector<Rat>>& A) {
    // Faddeev-LeVerrier.
    int n = (int)A.size();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    for (int k = 1; k <= n; ++k) {
      // M = A*(M + c_{n-k+1} I)
      std::vector<std::vector<Rat>> T = M;
      for (int i = 0; i < n; ++i) T[i][i] += coeffs[n - k + 1];
      std::vector<std::vector<Rat>> AM(n, std::vector<Rat>(n, Rat(0)));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          if (A[i][l] == 0) continue;
          for (int j = 0; j < n; ++j) AM[i][j] += A[i][l] * T[l][j];
        }
      M = AM;
      Rat tr = 0;
      for (int i = 0; i < n; ++i) tr += M[i][i];
      coeffs[n - k] = -tr / k;
    }
    return RPoly(coeffs);
  }

 private:
  void reduce() {
    if (K_) rep_ = reduce_mod(rep_, K_->m);
  }

  std::pair<Rat, Rat> interval_eval(const Rat& lo, const Rat& hi) const {
    Rat alo = 0, ahi = 0;
    for (size_t i = rep_.c.size(); i-- > 0;) {
      Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
      Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
      Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
      alo = nlo + rep_.c[i];
      ahi = nhi + rep_.c[i];
    }
    return {alo, ahi};
  }

  FieldPtr K_;
  RPoly rep_;
};

// The positive square root of `a` (an AlgebraicReal > 0): its isolating data
// is found by matching root indices between m(x) and m(y^2).
inline AlgebraicReal algebraic_sqrt(const AlgebraicReal& a) {
  if (a.is_rational()) {
    // Might still be an irrational square root of a rational.
    Rat r = a.lo();
    IPoly p({-rat_num(r), Int(0), rat_den(r)});
    return AlgebraicReal::largest_root(p);
  }
  const IPoly& m = a.poly();
  IPoly msq;
  msq.c.assign(2 * m.degree() + 1, Int(0));
  for (int i = 0; i <= m.degree(); ++i) msq.c[2 * i] = m.c[i];
  msq.normalize();
  IPoly sf = ipoly_squarefree(msq);
  auto roots_m = isolate_real_roots(ipoly_squarefree(a.poly()));
  auto roots_sq = isolate_real_roots(sf);
  // Positive roots of m, in increasing order, correspond to the positive
  // roots of m(y^2) in increasing order.
  std::vector<AlgebraicReal> pos_m, pos_sq;
  for (const auto& r : roots_m) {
    AlgebraicReal x(a.poly(), r.lo, r.hi);
    if (x.compare(Rat(0)) == Cmp::GT) pos_m.push_back(x);
  }
  for (const auto& r : roots_sq) {
    AlgebraicReal x(sf, r.lo, r.hi);
    if (x.compare(Rat(0)) == Cmp::GT) pos_sq.push_back(x);
  }
  if (pos_m.size() != pos_sq.size()) throw std::logic_error("algebraic_sqrt: root mismatch");
  for (size_t i = 0; i < pos_m.size(); ++i)
    if (pos_m[i].equals(a)) return pos_sq[i];
  throw std::domain_error("algebraic_sqrt: input not positive");
}

}  // namespace bgpa
