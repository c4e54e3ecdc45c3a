#pragma once

// The rotational-eigenvector generators of the 4-sunlet graph planar
// algebra: the one-parameter family A(lambda) (rotation eigenvalue +1) and
// the two families B(lambda, eps) (eigenvalue -1), the braidings R and S
// built from them, relation suites, braid-relation words and the closed
// hexagon-of-generators ("octahedron") trace invariant.

#include <functional>

#include "bgpa/gpa.hpp"

namespace bgpa {
namespace gpa {

// Coefficients follow the two-by-two / three-by-three corner-algebra
// completions anchored at coeff(0707,0767,0747) = (0,1,-1); the remaining
// blocks are forced by uncappability, the squared relations and the corner
// projections. Tips are 0,1,2,3; inner vertices 7,4,5,6 with dimension
// delta.
inline GpaElement build_a(const GraphContext& ctx, Cplx lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw std::invalid_argument("build_a: lambda must be a unit phase");
  double d = ctx.delta;
  double s = std::sqrt(d);
  Cplx lb = std::conj(lambda);
  GpaElement A(&ctx, 2, 0);
  auto set = [&](std::initializer_list<int> l, Cplx v) {
    Loop loop;
    for (int x : l) loop.push_back(static_cast<uint8_t>(x));
    A.add(loop, v);
  };
  // tip blocks
  set({0, 7, 6, 7}, 1);
  set({0, 7, 4, 7}, -1);
  set({2, 5, 4, 5}, 1);
  set({2, 5, 6, 5}, -1);
  set({4, 7, 0, 7}, -1);
  set({6, 7, 0, 7}, 1);
  set({4, 5, 2, 5}, 1);
  set({6, 5, 2, 5}, -1);
  // corner block between the two even inner vertices, carrying the phase
  set({6, 7, 4, 5}, lambda);
  set({6, 5, 4, 7}, lb);
  set({4, 7, 6, 5}, lb);
  set({4, 5, 6, 7}, lambda);
  // diagonal inner blocks
  set({4, 7, 4, 7}, 1 / d);
  set({4, 7, 4, 3}, -1 / s);
  set({4, 3, 4, 7}, -1 / s);
  set({4, 3, 4, 5}, 1 / s);
  set({4, 5, 4, 3}, 1 / s);
  set({4, 5, 4, 5}, -1 / d);
  set({6, 7, 6, 7}, -1 / d);
  set({6, 7, 6, 1}, 1 / s);
  set({6, 1, 6, 7}, 1 / s);
  set({6, 1, 6, 5}, -1 / s);
  set({6, 5, 6, 1}, -1 / s);
  set({6, 5, 6, 5}, 1 / d);
  return A;
}

inline GpaElement build_b(const GraphContext& ctx, Cplx lambda, int eps) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw std::invalid_argument("build_b: lambda must be a unit phase");
  if (eps != 1 && eps != -1) throw std::invalid_argument("build_b: eps must be +-1");
  double d = ctx.delta;
  double s = std::sqrt(d);
  double c = std::sqrt(1.0 - 1.0 / (d * d));
  Cplx I(0, 1);
  Cplx lb = std::conj(lambda);
  GpaElement B(&ctx, 2, 0);
  auto set = [&](std::initializer_list<int> l, Cplx v) {
    Loop loop;
    for (int x : l) loop.push_back(static_cast<uint8_t>(x));
    B.add(loop, v);
  };
  // tip blocks (the half rotation negates these in pairs)
  set({0, 7, 6, 7}, 1);
  set({0, 7, 4, 7}, -1);
  set({4, 7, 0, 7}, 1);
  set({6, 7, 0, 7}, -1);
  set({4, 5, 2, 5}, -1);
  set({2, 5, 4, 5}, 1);
  set({6, 5, 2, 5}, 1);
  set({2, 5, 6, 5}, -1);
  // corner block with the phase
  set({6, 7, 4, 7}, 1 / d);
  set({6, 7, 4, 5}, lambda * c);
  set({6, 5, 4, 7}, lb * c);
  set({6, 5, 4, 5}, -1 / d);
  set({4, 7, 6, 7}, -1 / d);
  set({4, 7, 6, 5}, -lb * c);
  set({4, 5, 6, 7}, -lambda * c);
  set({4, 5, 6, 5}, 1 / d);
  // diagonal inner blocks, carrying the sign eps
  Cplx ie = I * static_cast<double>(eps);
  set({4, 7, 4, 3}, ie / s);
  set({4, 7, 4, 5}, -ie / d);
  set({4, 3, 4, 7}, -ie / s);
  set({4, 3, 4, 5}, ie / s);
  set({4, 5, 4, 7}, ie / d);
  set({4, 5, 4, 3}, -ie / s);
  set({6, 7, 6, 5}, ie / d);
  set({6, 7, 6, 1}, -ie / s);
  set({6, 5, 6, 7}, -ie / d);
  set({6, 5, 6, 1}, ie / s);
  set({6, 1, 6, 7}, ie / s);
  set({6, 1, 6, 5}, -ie / s);
  return B;
}

// R = (sqrt2/2) i (1 - (1+sqrt2) e1) + (sqrt2/2) A ; its inverse is pinned
// by the quadratic relation R - R^{-1} = i sqrt2 1 - i(2+sqrt2) e1.
inline GpaElement build_r(const GraphContext& ctx, Cplx lambda) {
  double r2 = std::sqrt(2.0);
  Cplx I(0, 1);
  GpaElement one = identity(ctx, 2, 0);
  GpaElement e1 = jones_projection(ctx, 1, 2, 0);
  GpaElement A = build_a(ctx, lambda);
  return one * (I * r2 / 2.0) - e1 * (I * r2 / 2.0 * (1 + r2)) + A * (r2 / 2.0);
}

inline GpaElement inverse_r(const GraphContext& ctx, const GpaElement& R) {
  double r2 = std::sqrt(2.0);
  Cplx I(0, 1);
  GpaElement one = identity(ctx, 2, 0);
  GpaElement e1 = jones_projection(ctx, 1, 2, 0);
  return R - one * (I * r2) + e1 * (I * (2 + r2));
}

// S = (eps i / sqrt(4+2 sqrt2)) 1 + ((1+sqrt2)/sqrt(4+2 sqrt2)) (e1 + B);
// S^{-1} = S - eps i sqrt(2-sqrt2) 1.
inline GpaElement build_s(const GraphContext& ctx, Cplx lambda, int eps) {
  double r2 = std::sqrt(2.0);
  double c2 = std::sqrt(4 + 2 * r2);
  Cplx I(0, 1);
  GpaElement one = identity(ctx, 2, 0);
  GpaElement e1 = jones_projection(ctx, 1, 2, 0);
  GpaElement B = build_b(ctx, lambda, eps);
  return one * (I * static_cast<double>(eps) / c2) + (e1 + B) * ((1 + r2) / c2);
}

inline GpaElement inverse_s(const GraphContext& ctx, const GpaElement& S, int eps) {
  double r2 = std::sqrt(2.0);
  Cplx I(0, 1);
  GpaElement one = identity(ctx, 2, 0);
  return S - one * (I * static_cast<double>(eps) * std::sqrt(2 - r2));
}

// ---- brick words ---------------------------------------------------------

struct BrickSpec {
  int pos = 1;     // strands (pos, pos+1)
  int gen = 0;     // index into the binding list
  int clicks = 0;  // rotations applied before placement
};

struct BrickDiagram {
  int strands = 3;
  std::vector<BrickSpec> word;  // bottom to top; composed left to right
  bool closed = false;
};

inline GpaElement eval_brick_open(const GraphContext& ctx, const BrickDiagram& d,
                                  const std::vector<const GpaElement*>& bindings) {
  GpaElement acc = identity(ctx, d.strands, 0);
  for (const BrickSpec& b : d.word) {
    const GpaElement& g = *bindings.at(b.gen);
    GpaElement placed = rotate_by(g, b.clicks);
    int need = (b.pos - 1) % 2;  // parity of the brick's base region
    if (placed.shading != need)
      throw std::invalid_argument("eval_brick: inconsistent shading at position " +
                                  std::to_string(b.pos));
    acc = multiply(acc, brick(placed, b.pos, d.strands, 0));
  }
  return acc;
}

inline Cplx eval_brick(const GraphContext& ctx, const BrickDiagram& d,
                       const std::vector<const GpaElement*>& bindings) {
  GpaElement open = eval_brick_open(ctx, d, bindings);
  if (!d.closed) throw std::invalid_argument("eval_brick: diagram not closed");
  return trace_close(open);
}

// sigma (X1 Y2 X1) = sigma^2 (Y2 X1 Y2) on three strands, the even-position
// brick being the one-click rotation of the inverse generator. Returns the
// largest coefficient deviation.
inline double sigma_braid_deviation(const GraphContext& ctx, const GpaElement& R,
                                    const GpaElement& Rinv, Cplx sigma, int inner_clicks = 1) {
  GpaElement mid = rotate_by(Rinv, inner_clicks);
  GpaElement b1 = brick(R, 1, 3, 0);
  GpaElement b2 = brick(mid, 2, 3, 0);
  GpaElement lhs = multiply(multiply(b1, b2), b1) * sigma;
  GpaElement rhs = multiply(multiply(b2, b1), b2) * (sigma * sigma);
  return (lhs - rhs).norm_inf();
}

// The closed alternating 6-generator word (three bricks on each adjacent
// strand pair of three strands).
inline Cplx octahedron_trace(const GraphContext& ctx, const GpaElement& B, int inner_clicks = 1) {
  GpaElement mid = rotate_by(B, inner_clicks);
  GpaElement b1 = brick(B, 1, 3, 0);
  GpaElement b2 = brick(mid, 2, 3, 0);
  GpaElement word = multiply(b1, b2);
  GpaElement acc = word;
  for (int i = 1; i < 3; ++i) acc = multiply(acc, word);
  return trace_close(acc);
}

}  // namespace gpa
}  // namespace bgpa
