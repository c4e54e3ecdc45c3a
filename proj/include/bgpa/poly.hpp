#pragma once

// Dense univariate polynomials over exact coefficient rings, plus the
// integer-polynomial toolkit used everywhere else: content/primitive part,
// gcd, squarefree part, Sturm sequences, real root isolation, and
// factorization over Z (Berlekamp mod p + Hensel lifting + recombination).

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bgpa {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

template <class T>
struct Poly {
  // c[i] is the coefficient of x^i; no trailing zeros.
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

  void normalize() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const T& lead() const { return c.back(); }
  T coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : T(0); }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return c != o.c; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), T(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, T(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
  }
  Poly operator*(const T& s) const {
    Poly r = *this;
    for (auto& v : r.c) v = v * s;
    r.normalize();
    return r;
  }

  template <class S>
  S eval(const S& x) const {
    S acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + S(c[i]);
    return acc;
  }

  Poly derivative() const {
    Poly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * T((long)i);
    r.normalize();
    return r;
  }

  // Multiply by x^k.
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + k, T(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }
};

using IPoly = Poly<Int>;
using RPoly = Poly<Rat>;

// ---- field-coefficient division -------------------------------------------

template <class T>
std::pair<Poly<T>, Poly<T>> poly_divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero poly");
  Poly<T> q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, T(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    T f = r.lead() / b.lead();
    int d = r.degree() - b.degree();
    q.c[d] = q.c[d] + f;
    for (int i = 0; i <= b.degree(); ++i) r.c[i + d] -= f * b.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    T l = a.lead();
    for (auto& v : a.c) v = v / l;
  }
  return a;
}

// ---- integer polynomial helpers -------------------------------------------

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Int ipoly_content(const IPoly& p) {
  Int g = 0;
  for (const auto& v : p.c) g = int_gcd(g, v);
  return g;
}

inline IPoly ipoly_primitive(const IPoly& p) {
  if (p.is_zero()) return p;
  Int g = ipoly_content(p);
  if (p.lead() < 0) g = -g;
  IPoly r = p;
  for (auto& v : r.c) v /= g;
  return r;
}

inline RPoly to_rpoly(const IPoly& p) {
  RPoly r;
  r.c.assign(p.c.begin(), p.c.end());
  return r;
}

// Scale a rational poly to a primitive integer poly with positive lead.
inline IPoly to_ipoly_primitive(const RPoly& p) {
  if (p.is_zero()) return IPoly();
  Int den = 1;
  for (const auto& v : p.c) den = den / int_gcd(den, rat_den(v)) * rat_den(v);
  IPoly r;
  r.c.resize(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    Rat s = p.c[i] * Rat(den);
    assert(rat_den(s) == 1);
    r.c[i] = rat_num(s);
  }
  return ipoly_primitive(r);
}

inline IPoly ipoly_gcd(const IPoly& a, const IPoly& b) {
  if (a.is_zero()) return ipoly_primitive(b);
  if (b.is_zero()) return ipoly_primitive(a);
  return to_ipoly_primitive(poly_gcd(to_rpoly(a), to_rpoly(b)));
}

inline IPoly ipoly_squarefree(const IPoly& p) {
  if (p.degree() <= 0) return ipoly_primitive(p);
  IPoly g = ipoly_gcd(p, p.derivative());
  if (g.degree() == 0) return ipoly_primitive(p);
  auto [q, r] = poly_divmod(to_rpoly(p), to_rpoly(g));
  assert(r.is_zero());
  return to_ipoly_primitive(q);
}

// Exact division over Z; nullopt if it does not divide.
inline std::optional<IPoly> ipoly_exact_divide(const IPoly& a, const IPoly& b) {
  auto [q, r] = poly_divmod(to_rpoly(a), to_rpoly(b));
  if (!r.is_zero()) return std::nullopt;
  for (const auto& v : q.c)
    if (rat_den(v) != 1) return std::nullopt;
  IPoly res;
  res.c.resize(q.c.size());
  for (size_t i = 0; i < q.c.size(); ++i) res.c[i] = rat_num(q.c[i]);
  return res;
}

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
inline int sign_of(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int ipoly_sign_at(const IPoly& p, const Rat& x) {
  return sign_of(to_rpoly(p).eval(x));
}

// ---- Sturm sequences and root isolation ------------------------------------

struct SturmSequence {
  std::vector<RPoly> seq;

  explicit SturmSequence(const IPoly& squarefree) {
    RPoly p0 = to_rpoly(squarefree);
    RPoly p1 = to_rpoly(squarefree.derivative());
    seq.push_back(p0);
    if (!p1.is_zero()) seq.push_back(p1);
    while (seq.back().degree() > 0) {
      auto [q, r] = poly_divmod(seq[seq.size() - 2], seq.back());
      if (r.is_zero()) break;
      seq.push_back(-r);
    }
  }

  int sign_changes_at(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : seq) {
      int s = sign_of(p.eval(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  // Number of roots in (a, b]; requires a < b.
  int count_roots(const Rat& a, const Rat& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
  }
};

inline Rat cauchy_root_bound(const IPoly& p) {
  assert(!p.is_zero());
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat v(boost::multiprecision::abs(p.c[i]), boost::multiprecision::abs(p.lead()));
    if (v > m) m = v;
  }
  return m + 1;
}

// Isolating intervals for every real root of a squarefree integer poly.
// Point roots are returned as [r, r]; otherwise open intervals (lo, hi) with
// nonvanishing endpoints, each containing exactly one root.
struct RootInterval {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
};

inline std::vector<RootInterval> isolate_real_roots(const IPoly& squarefree) {
  std::vector<RootInterval> out;
  if (squarefree.degree() <= 0) return out;
  SturmSequence sturm(squarefree);
  Rat bound = cauchy_root_bound(squarefree);

  struct Item {
    Rat a, b;
    int count;
  };
  std::vector<Item> stack;
  int total = sturm.count_roots(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 1 && ipoly_sign_at(squarefree, it.a) != 0 &&
        ipoly_sign_at(squarefree, it.b) != 0) {
      out.push_back({it.a, it.b});
      continue;
    }
    Rat mid = (it.a + it.b) / 2;
    if (ipoly_sign_at(squarefree, mid) == 0) {
      out.push_back({mid, mid});
      Rat eps = (it.b - it.a) / 1024;
      Rat ml = mid - eps, mr = mid + eps;
      while (ipoly_sign_at(squarefree, ml) == 0) ml = (it.a + ml) / 2;
      while (ipoly_sign_at(squarefree, mr) == 0) mr = (mr + it.b) / 2;
      int cl = sturm.count_roots(it.a, ml);
      int cr = sturm.count_roots(mr, it.b);
      if (cl > 0) stack.push_back({it.a, ml, cl});
      if (cr > 0) stack.push_back({mr, it.b, cr});
    } else {
      int cl = sturm.count_roots(it.a, mid);
      int cr = it.count - cl;
      if (cl > 0) stack.push_back({it.a, mid, cl});
      if (cr > 0) stack.push_back({mid, it.b, cr});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

// ---- factorization over Z ---------------------------------------------------

namespace detail {

// Polynomials over F_p, coefficients in [0, p).
using MPoly = std::vector<int64_t>;

inline void mpoly_trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline MPoly mpoly_mul(const MPoly& a, const MPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  mpoly_trim(r);
  return r;
}

inline int64_t mod_inv(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return ((t % p) + p) % p;
}

inline std::pair<MPoly, MPoly> mpoly_divmod(const MPoly& a, const MPoly& b, int64_t p) {
  MPoly r = a, q;
  mpoly_trim(r);
  int64_t inv = mod_inv(b.back(), p);
  if (r.size() >= b.size()) {
    q.assign(r.size() - b.size() + 1, 0);
    for (int d = (int)r.size() - (int)b.size(); d >= 0; --d) {
      int64_t f = r[d + b.size() - 1] * inv % p;
      q[d] = f;
      for (size_t i = 0; i < b.size(); ++i) r[d + i] = ((r[d + i] - f * b[i]) % p + p) % p;
    }
  }
  mpoly_trim(q);
  mpoly_trim(r);
  return {q, r};
}

inline MPoly mpoly_mod(const MPoly& a, const MPoly& b, int64_t p) {
  return mpoly_divmod(a, b, p).second;
}

inline MPoly mpoly_gcd(MPoly a, MPoly b, int64_t p) {
  mpoly_trim(a);
  mpoly_trim(b);
  while (!b.empty()) {
    MPoly r = mpoly_mod(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    int64_t inv = mod_inv(a.back(), p);
    for (auto& v : a) v = v * inv % p;
  }
  return a;
}

inline MPoly mpoly_powmod(MPoly base, Int e, const MPoly& mod, int64_t p) {
  MPoly result{1};
  base = mpoly_mod(base, mod, p);
  while (e > 0) {
    if ((e & 1) != 0) result = mpoly_mod(mpoly_mul(result, base, p), mod, p);
    base = mpoly_mod(mpoly_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return result;
}

// Extended Euclid over F_p[x]: returns (s, t) with s*a + t*b = 1; requires
// gcd(a, b) = 1.
inline std::pair<MPoly, MPoly> mpoly_bezout(const MPoly& a, const MPoly& b, int64_t p) {
  MPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  mpoly_trim(r0);
  mpoly_trim(r1);
  while (!r1.empty()) {
    auto [q, r] = mpoly_divmod(r0, r1, p);
    r0 = r1;
    r1 = r;
    auto upd = [&](MPoly& x0, MPoly& x1) {
      MPoly qx = mpoly_mul(q, x1, p);
      MPoly nx = x0;
      if (qx.size() > nx.size()) nx.resize(qx.size(), 0);
      for (size_t i = 0; i < qx.size(); ++i) nx[i] = ((nx[i] - qx[i]) % p + p) % p;
      mpoly_trim(nx);
      x0 = x1;
      x1 = nx;
    };
    upd(s0, s1);
    upd(t0, t1);
  }
  if (r0.size() != 1) throw std::runtime_error("mpoly_bezout: inputs not coprime");
  int64_t inv = mod_inv(r0[0], p);
  for (auto& v : s0) v = v * inv % p;
  for (auto& v : t0) v = v * inv % p;
  return {s0, t0};
}

// Berlekamp factorization of a squarefree monic poly mod p.
inline std::vector<MPoly> berlekamp(const MPoly& f, int64_t p) {
  int n = (int)f.size() - 1;
  if (n <= 1) return {f};
  std::vector<std::vector<int64_t>> Q(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    MPoly xi(i + 1, 0);
    xi.back() = 1;
    MPoly r = mpoly_powmod(xi, Int(p), f, p);
    for (size_t j = 0; j < r.size(); ++j) Q[i][j] = r[j];
  }
  // Solve v (Q - I) = 0: transpose and row reduce.
  std::vector<std::vector<int64_t>> M(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[j][i] = ((Q[i][j] - (i == j ? 1 : 0)) % p + p) % p;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int prow = -1;
    for (int r = rank; r < n; ++r)
      if (M[r][col] != 0) {
        prow = r;
        break;
      }
    if (prow < 0) continue;
    std::swap(M[rank], M[prow]);
    int64_t inv = mod_inv(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      int64_t f2 = M[r][col];
      for (int j = 0; j < n; ++j) M[r][j] = ((M[r][j] - f2 * M[rank][j]) % p + p) % p;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<MPoly> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    MPoly v(n, 0);
    v[col] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = ((-M[r][col]) % p + p) % p;
    mpoly_trim(v);
    basis.push_back(v);
  }
  size_t nfactors = basis.size();
  std::vector<MPoly> factors{f};
  if (nfactors <= 1) return factors;
  for (const auto& v : basis) {
    if (factors.size() >= nfactors) break;
    if (v.size() <= 1) continue;
    std::vector<MPoly> next;
    for (const auto& g : factors) {
      if ((int)g.size() - 1 <= 1) {
        next.push_back(g);
        continue;
      }
      std::vector<MPoly> pieces;
      MPoly rem = g;
      for (int64_t c = 0; c < p && (int)rem.size() - 1 > 0; ++c) {
        MPoly vc = v;
        vc.resize(std::max<size_t>(vc.size(), 1), 0);
        vc[0] = ((vc[0] - c) % p + p) % p;
        mpoly_trim(vc);
        if (vc.empty()) continue;
        MPoly h = mpoly_gcd(rem, vc, p);
        if ((int)h.size() - 1 > 0 && h.size() < rem.size()) {
          pieces.push_back(h);
          rem = mpoly_divmod(rem, h, p).first;
        }
      }
      if ((int)rem.size() - 1 > 0) pieces.push_back(rem);
      if (pieces.empty()) pieces.push_back(g);
      for (auto& piece : pieces) next.push_back(piece);
    }
    factors = next;
  }
  return factors;
}

inline MPoly reduce_mod_p(const IPoly& a, int64_t p) {
  MPoly r(a.is_zero() ? 0 : a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    Int v = a.c[i] % p;
    if (v < 0) v += p;
    r[i] = (int64_t)v;
  }
  mpoly_trim(r);
  return r;
}

// Integer polys with coefficients reduced into [0, M).
inline IPoly ipoly_reduce(const IPoly& a, const Int& M) {
  IPoly r = a;
  for (auto& v : r.c) {
    v %= M;
    if (v < 0) v += M;
  }
  r.normalize();
  return r;
}

inline IPoly ipoly_symmetric(const IPoly& a, const Int& M) {
  IPoly r = ipoly_reduce(a, M);
  for (auto& v : r.c)
    if (v > M / 2) v -= M;
  r.normalize();
  return r;
}

inline IPoly lift_mpoly(const MPoly& a) {
  IPoly r;
  r.c.assign(a.begin(), a.end());
  r.normalize();
  return r;
}

// Linear Hensel: given monic fmod = g*h mod p (g, h monic, coprime mod p),
// lift to fmod = G*H mod p^K with G = g, H = h mod p. fmod is monic mod p^K.
inline std::pair<IPoly, IPoly> hensel_pair(const IPoly& fmod, const MPoly& g0, const MPoly& h0,
                                           int64_t p, const Int& pK) {
  auto [s, t] = mpoly_bezout(g0, h0, p);
  IPoly G = lift_mpoly(g0), H = lift_mpoly(h0);
  Int m = p;
  while (m < pK) {
    IPoly e = ipoly_reduce(fmod - G * H, m * p);
    MPoly em(e.is_zero() ? 0 : e.degree() + 1);
    for (int i = 0; i <= e.degree(); ++i) {
      Int v = (e.c[i] / m) % p;
      if (v < 0) v += p;
      em[i] = (int64_t)v;
    }
    mpoly_trim(em);
    if (!em.empty()) {
      MPoly dg = mpoly_mod(mpoly_mul(t, em, p), g0, p);
      MPoly dh = mpoly_mod(mpoly_mul(s, em, p), h0, p);
      // Corrections have degree < deg g0 (resp. h0), so monicity is kept.
      auto add = [&](IPoly& A, const MPoly& d) {
        if (d.empty()) return;
        if ((int)d.size() > A.degree() + 1) A.c.resize(d.size(), Int(0));
        for (size_t i = 0; i < d.size(); ++i) A.c[i] += m * d[i];
        A.normalize();
      };
      add(G, dg);
      add(H, dh);
      G = ipoly_reduce(G, m * p);
      H = ipoly_reduce(H, m * p);
    }
    m *= p;
  }
  return {G, H};
}

std::vector<IPoly> factor_squarefree(const IPoly& f);

inline std::vector<IPoly> factor_squarefree(const IPoly& f) {
  if (f.degree() <= 1) return {f};

  static const int64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23,
                                   29, 31, 37, 41, 43, 47, 53, 59};
  int64_t p = 0;
  MPoly fp;
  for (int64_t cand : primes) {
    if (f.lead() % cand == 0) continue;
    MPoly g = reduce_mod_p(f, cand);
    MPoly d(g.size() - 1);
    for (size_t i = 1; i < g.size(); ++i) d[i - 1] = (int64_t)(i % cand) * g[i] % cand;
    mpoly_trim(d);
    if (d.empty()) continue;
    if ((int)mpoly_gcd(g, d, cand).size() - 1 == 0) {
      int64_t inv = mod_inv(g.back(), cand);
      for (auto& v : g) v = v * inv % cand;
      p = cand;
      fp = g;
      break;
    }
  }
  if (p == 0) throw std::runtime_error("ipoly_factor: no suitable prime found");

  std::vector<MPoly> modular = berlekamp(fp, p);
  std::sort(modular.begin(), modular.end(),
            [](const MPoly& a, const MPoly& b) { return a.size() < b.size(); });
  if (modular.size() == 1) return {f};

  // Coefficient bound for any factor (generous Landau-Mignotte variant).
  Int maxc = 0;
  for (const auto& v : f.c) {
    Int av = boost::multiprecision::abs(v);
    if (av > maxc) maxc = av;
  }
  Int target = maxc * boost::multiprecision::abs(f.lead()) * (f.degree() + 1);
  for (int i = 0; i < f.degree() + 2; ++i) target *= 2;
  Int pK = p;
  while (pK < target) pK *= p;

  // Make f monic mod pK and lift each modular factor against its cofactor.
  Int lead_inv_mod;
  {
    // inverse of lead mod pK via extended euclid on cpp_int
    Int a = f.lead() % pK, m0 = pK, t0 = 0, t1 = 1;
    if (a < 0) a += pK;
    Int r0 = m0, r1 = a;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
      tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
    }
    lead_inv_mod = t0 % pK;
    if (lead_inv_mod < 0) lead_inv_mod += pK;
  }
  IPoly fmonic = ipoly_reduce(f * lead_inv_mod, pK);

  std::vector<IPoly> lifted;
  for (size_t i = 0; i < modular.size(); ++i) {
    MPoly cof{1};
    for (size_t j = 0; j < modular.size(); ++j)
      if (j != i) cof = mpoly_mul(cof, modular[j], p);
    lifted.push_back(hensel_pair(fmonic, modular[i], cof, p, pK).first);
  }

  // Zassenhaus recombination.
  std::vector<IPoly> result;
  std::vector<int> alive(lifted.size(), 1);
  IPoly remaining = f;
  int n = (int)lifted.size();
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> live;
    for (int i = 0; i < n; ++i)
      if (alive[i]) live.push_back(i);
    if (live.empty()) break;
    for (int size = 1; size <= (int)live.size() && !progress; ++size) {
      std::vector<int> comb(size);
      std::function<bool(int, int)> rec = [&](int start, int k) -> bool {
        if (k == size) {
          IPoly prod = IPoly::constant(remaining.lead());
          for (int j = 0; j < size; ++j) prod = prod * lifted[comb[j]];
          prod = ipoly_symmetric(prod, pK);
          if (prod.is_zero()) return false;
          IPoly cand = ipoly_primitive(prod);
          if (cand.degree() < 1) return false;
          auto q = ipoly_exact_divide(remaining, cand);
          if (q) {
            result.push_back(cand);
            for (int j = 0; j < size; ++j) alive[comb[j]] = 0;
            remaining = ipoly_primitive(*q);
            return true;
          }
          return false;
        }
        for (int i = start; i < (int)live.size(); ++i) {
          comb[k] = live[i];
          if (rec(i + 1, k + 1)) return true;
        }
        return false;
      };
      if (rec(0, 0)) progress = true;
    }
    if (remaining.degree() == 0) break;
  }
  if (remaining.degree() >= 1) result.push_back(ipoly_primitive(remaining));
  return result;
}

}  // namespace detail

// All irreducible factors (primitive, positive lead) of a nonzero integer
// poly, with multiplicity. Constant content is dropped.
inline std::vector<IPoly> ipoly_factor(const IPoly& poly) {
  std::vector<IPoly> out;
  if (poly.degree() <= 0) return out;
  IPoly work = ipoly_primitive(poly);
  while (work.degree() >= 1) {
    IPoly sf = ipoly_squarefree(work);
    for (const auto& f : detail::factor_squarefree(sf)) {
      out.push_back(f);
      auto q = ipoly_exact_divide(work, f);
      assert(q);
      work = ipoly_primitive(*q);
    }
  }
  std::sort(out.begin(), out.end(), [](const IPoly& a, const IPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
  });
  return out;
}

inline std::string ipoly_to_string(const IPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.c[i] == 0) continue;
    Int a = p.c[i];
    if (!s.empty())
      s += (a > 0) ? " + " : " - ";
    else if (a < 0)
      s += "-";
    Int mag = boost::multiprecision::abs(a);
    bool coeff_one = (mag == 1) && i != 0;
    if (!coeff_one) s += mag.str();
    if (i > 0) {
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace bgpa
