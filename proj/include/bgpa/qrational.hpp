#pragma once

// Rational functions in the formal variable q with integer coefficients, and
// quantum integers [k] = (q^k - q^-k)/(q - q^-1) in both exact and floating
// form. Values are kept in a canonical reduced shape so structural equality
// is mathematical equality.

#include <cmath>
#include <string>

#include "bgpa/poly.hpp"

namespace bgpa {

class QRational {
 public:
  QRational() : num_(), den_(IPoly::constant(Int(1))) {}
  QRational(long v) : num_(IPoly::constant(Int(v))), den_(IPoly::constant(Int(1))) { normalize(); }
  QRational(IPoly num, IPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRational: zero denominator");
    normalize();
  }
  static QRational q() { return QRational(IPoly::x(), IPoly::constant(Int(1))); }
  static QRational from_int_poly(IPoly p) { return QRational(std::move(p), IPoly::constant(Int(1))); }

  const IPoly& num() const { return num_; }
  const IPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRational operator+(const QRational& o) const {
    return QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  QRational operator-(const QRational& o) const {
    return QRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  QRational operator*(const QRational& o) const { return QRational(num_ * o.num_, den_ * o.den_); }
  QRational operator/(const QRational& o) const {
    if (o.is_zero()) throw std::domain_error("QRational: division by zero");
    return QRational(num_ * o.den_, den_ * o.num_);
  }
  QRational operator-() const {
    QRational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  bool operator==(const QRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRational& o) const { return !(*this == o); }

  // d/dq.
  QRational derivative() const {
    return QRational(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  double eval(double qv) const {
    double n = 0, d = 0;
    for (size_t i = num_.c.size(); i-- > 0;) n = n * qv + static_cast<double>(num_.c[i]);
    for (size_t i = den_.c.size(); i-- > 0;) d = d * qv + static_cast<double>(den_.c[i]);
    return n / d;
  }
  Rat eval(const Rat& qv) const {
    Rat n = to_rpoly(num_).eval(qv);
    Rat d = to_rpoly(den_).eval(qv);
    return n / d;
  }
  // Exact sign at a rational point (clears denominators).
  int sign_at(const Rat& qv) const {
    int sn = ipoly_sign_at(num_, qv);
    int sd = ipoly_sign_at(den_, qv);
    if (sd == 0) throw std::domain_error("QRational: pole at evaluation point");
    return sn * sd;
  }

  std::string to_string() const {
    std::string s = "(" + ipoly_to_string(num_, "q") + ")";
    if (den_.degree() > 0 || den_.coeff(0) != 1) s += "/(" + ipoly_to_string(den_, "q") + ")";
    return s;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = IPoly::constant(Int(1));
      return;
    }
    IPoly g = ipoly_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
      num_ = *ipoly_exact_divide(num_, g);
      den_ = *ipoly_exact_divide(den_, g);
    }
    Int cn = ipoly_content(num_), cd = ipoly_content(den_);
    Int c = int_gcd(cn, cd);
    if (den_.lead() < 0) c = -c;
    if (c != 1) {
      for (auto& v : num_.c) v /= c;
      for (auto& v : den_.c) v /= c;
    }
  }

  IPoly num_, den_;
};

// [k] as an exact rational function of q.
inline QRational quantum_int_q(int k) {
  if (k < 0) throw std::domain_error("quantum_int_q: k must be >= 0");
  if (k == 0) return QRational(0);
  // (q^{2k} - 1) / (q^{k-1} (q^2 - 1)) reduced: num = sum q^{2i}, den = q^{k-1}.
  IPoly num;
  num.c.assign(2 * (k - 1) + 1, Int(0));
  for (int i = 0; i < k; ++i) num.c[2 * i] = 1;
  num.normalize();
  IPoly den;
  den.c.assign(k, Int(0));
  den.c[k - 1] = 1;
  return QRational(num, den);
}

// [k] at a floating q; the q = 1 limit is k.
inline double quantum_int(int k, double q) {
  if (k < 0) throw std::domain_error("quantum_int: k must be >= 0");
  if (q == 1.0) return k;
  return (std::pow(q, k) - std::pow(q, -k)) / (q - 1.0 / q);
}

// The root q >= 1 of q + 1/q = sqrt(index).
inline double index_to_q(double index) {
  if (index < 4.0) throw std::domain_error("index_to_q: index must be >= 4");
  double s = std::sqrt(index);
  return (s + std::sqrt(index - 4.0)) / 2.0;
}

inline double q_to_index(double q) {
  double d = q + 1.0 / q;
  return d * d;
}

}  // namespace bgpa
