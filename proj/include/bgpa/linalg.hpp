#pragma once

// Small dense exact linear algebra over an arbitrary field type (number
// field elements, rational functions). Row reduction, kernels, and partially
// determined solutions of underdetermined systems.

#include <optional>
#include <vector>

namespace bgpa {

// F needs +, -, *, /, is_zero(); `zero` provides the additive identity.
template <class F>
struct LinearSolver {
  F zero;

  explicit LinearSolver(F z) : zero(std::move(z)) {}

  // Reduced row echelon form in place; returns pivot column per row.
  std::vector<int> rref(std::vector<std::vector<F>>& M) const {
    std::vector<int> pivots;
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
      size_t p = r;
      while (p < rows && M[p][c].is_zero()) ++p;
      if (p == rows) continue;
      std::swap(M[r], M[p]);
      F inv = M[r][c];
      for (size_t j = c; j < cols; ++j) M[r][j] = M[r][j] / inv;
      for (size_t i = 0; i < rows; ++i) {
        if (i == r || M[i][c].is_zero()) continue;
        F f = M[i][c];
        for (size_t j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
      }
      pivots.push_back(static_cast<int>(c));
      ++r;
    }
    return pivots;
  }

  // One kernel vector of the square matrix A (requires nullity >= 1); the
  // returned vector has a 1 in the first free coordinate.
  std::vector<F> kernel_vector(std::vector<std::vector<F>> A) const {
    auto pivots = rref(A);
    size_t n = A.empty() ? 0 : A[0].size();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = -1;
    for (size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) {
        free_col = static_cast<int>(c);
        break;
      }
    if (free_col < 0) return {};
    std::vector<F> v(n, zero);
    v[free_col] = zero;  // set to one below
    F one = [&] {
      // derive 1 from any nonzero entry; fall back to zero field info
      for (const auto& row : A)
        for (const auto& e : row)
          if (!e.is_zero()) return e / e;
      return zero;
    }();
    v[free_col] = one;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - A[r][free_col];
    return v;
  }

  // Solve M x = b allowing an underdetermined system: returns per-variable
  // values for the variables that are uniquely determined, nullopt for free
  // or dependent-on-free ones. Throws if inconsistent, reporting the row.
  std::vector<std::optional<F>> solve_partial(std::vector<std::vector<F>> M, std::vector<F> b,
                                              int* bad_row = nullptr) const {
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) M[i].push_back(b[i]);
    auto pivots = rref(M);
    // Inconsistency: pivot in the augmented column.
    for (size_t r = 0; r < rows; ++r) {
      bool all_zero = true;
      for (size_t c = 0; c < cols; ++c)
        if (!M[r][c].is_zero()) {
          all_zero = false;
          break;
        }
      if (all_zero && !M[r][cols].is_zero()) {
        if (bad_row) *bad_row = static_cast<int>(r);
        throw std::domain_error("solve_partial: inconsistent system");
      }
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
      if (c < static_cast<int>(cols)) is_pivot[c] = true;
    std::vector<std::optional<F>> out(cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
      int pc = pivots[r];
      if (pc >= static_cast<int>(cols)) continue;
      bool determined = true;
      for (size_t c = 0; c < cols; ++c) {
        if (static_cast<int>(c) != pc && !M[r][c].is_zero()) {
          determined = false;
          break;
        }
      }
      if (determined) out[pc] = M[r][cols];
    }
    return out;
  }
};

}  // namespace bgpa
