#pragma once

#include <optional>
#include <vector>

#include "freediv/poly.hpp"

namespace freediv {

using PolyMatrix = std::vector<std::vector<Poly>>;  // row-major

// Fraction-free Bareiss elimination with exact polynomial division.
Poly determinant(const PolyMatrix& A, const RingPtr& ring);
// Square submatrix on the given rows and columns.
PolyMatrix submatrix(const PolyMatrix& A, const std::vector<int>& rows, const std::vector<int>& cols);
// All k x k minors, rows and columns in lexicographic subset order.
std::vector<Poly> minors(const PolyMatrix& A, int k, const RingPtr& ring);
// Pfaffian of a skew-symmetric matrix of even size.
Poly pfaffian(const PolyMatrix& A, const RingPtr& ring);
PolyMatrix matmul(const PolyMatrix& A, const PolyMatrix& B, const RingPtr& ring);
PolyMatrix transpose(const PolyMatrix& A);

std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace freediv

namespace freediv {

using QMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& A, int ncols);
int qrank(QMatrix A, int ncols);
// Basis of {x : A x = 0}.
std::vector<std::vector<Rational>> nullspace(QMatrix A, int ncols);
// Some x with A x = b.
std::optional<std::vector<Rational>> qsolve(QMatrix A, const std::vector<Rational>& b, int ncols);

}  // namespace freediv
