#include "freediv/matrix.hpp"

#include "freediv/error.hpp"

namespace freediv {

Poly determinant(const PolyMatrix& A0, const RingPtr& ring) {
  int n = int(A0.size());
  if (n == 0) return Poly::constant(ring, 1);
  for (const auto& row : A0)
    if (int(row.size()) != n) throw Error("determinant of a non-square matrix");
  if (n == 1) return A0[0][0];
  if (n == 2) return A0[0][0] * A0[1][1] - A0[0][1] * A0[1][0];
  PolyMatrix A = A0;
  Poly prev = Poly::constant(ring, 1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k].isZero()) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!A[i][k].isZero()) {
          swap = i;
          break;
        }
      if (swap < 0) return Poly(ring);
      std::swap(A[k], A[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        if (k == 0) {
          A[i][j] = num;
        } else {
          auto q = exact_divide(num, prev);
          if (!q) throw Error("Bareiss division was not exact");
          A[i][j] = *q;
        }
      }
    prev = A[k][k];
  }
  Poly d = A[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

PolyMatrix submatrix(const PolyMatrix& A, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix S;
  for (int r : rows) {
    std::vector<Poly> row;
    for (int c : cols) row.push_back(A[r][c]);
    S.push_back(std::move(row));
  }
  return S;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Poly> minors(const PolyMatrix& A, int k, const RingPtr& ring) {
  int r = int(A.size());
  int c = r ? int(A[0].size()) : 0;
  std::vector<Poly> out;
  for (const auto& rows : subsets(r, k))
    for (const auto& cols : subsets(c, k)) out.push_back(determinant(submatrix(A, rows, cols), ring));
  return out;
}

Poly pfaffian(const PolyMatrix& A, const RingPtr& ring) {
  int n = int(A.size());
  if (n == 0) return Poly::constant(ring, 1);
  if (n % 2) return Poly(ring);
  Poly sum(ring);
  std::vector<int> rest;
  for (int j = 1; j < n; ++j) {
    if (A[0][j].isZero()) continue;
    std::vector<int> idx;
    for (int k = 1; k < n; ++k)
      if (k != j) idx.push_back(k);
    Poly sub = pfaffian(submatrix(A, idx, idx), ring);
    Poly term = A[0][j] * sub;
    // Sign (-1)^(j+1) with 0-based j.
    if (j % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

PolyMatrix matmul(const PolyMatrix& A, const PolyMatrix& B, const RingPtr& ring) {
  int n = int(A.size()), m = B.empty() ? 0 : int(B[0].size()), k = int(B.size());
  PolyMatrix C(n, std::vector<Poly>(m, Poly(ring)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < k; ++l)
        if (!A[i][l].isZero() && !B[l][j].isZero()) C[i][j] += A[i][l] * B[l][j];
  return C;
}

PolyMatrix transpose(const PolyMatrix& A) {
  if (A.empty()) return {};
  PolyMatrix T(A[0].size(), std::vector<Poly>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  return T;
}

}  // namespace freediv

namespace freediv {

std::vector<int> rref(QMatrix& A, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < int(A.size()); ++c) {
    int p = -1;
    for (int i = r; i < int(A.size()); ++i)
      if (sgn(A[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[r], A[p]);
    Rational inv = 1 / A[r][c];
    for (int j = c; j < ncols; ++j) A[r][j] *= inv;
    for (int i = 0; i < int(A.size()); ++i) {
      if (i == r || sgn(A[i][c]) == 0) continue;
      Rational f = A[i][c];
      for (int j = c; j < ncols; ++j)
        if (sgn(A[r][j]) != 0) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int qrank(QMatrix A, int ncols) { return int(rref(A, ncols).size()); }

std::vector<std::vector<Rational>> nullspace(QMatrix A, int ncols) {
  auto piv = rref(A, ncols);
  std::vector<bool> isPivot(ncols, false);
  for (int c : piv) isPivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (isPivot[f]) continue;
    std::vector<Rational> v(ncols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> qsolve(QMatrix A, const std::vector<Rational>& b, int ncols) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    A[i].resize(ncols + 1);
    A[i][ncols] = b[i];
  }
  auto piv = rref(A, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  std::vector<Rational> x(ncols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = A[r][ncols];
  return x;
}

}  // namespace freediv
