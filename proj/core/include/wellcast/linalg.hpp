#ifndef WELLCAST_LINALG_HPP
#define WELLCAST_LINALG_HPP

#include <cstddef>
#include <vector>

namespace wellcast {

// Small dense routines on row-major buffers. Nothing here is tuned for
// large problems; design matrices in this project top out at a few
// thousand rows and under a hundred columns.

struct LeastSquaresResult {
    std::vector<double> x;
    std::size_t rank = 0;
    bool rank_deficient = false;
};

// Minimum-norm least-squares solution of A x = b via column-pivoted
// Householder QR, completed to a full orthogonal decomposition when the
// numerical rank (relative to rcond) falls below the column count.
LeastSquaresResult solve_least_squares(const std::vector<double>& a, std::size_t rows,
                                       std::size_t cols, const std::vector<double>& b,
                                       double rcond = 1e-12);

// Replaces the square row-major matrix with the Q factor of its QR
// decomposition, sign-fixed so diag(R) >= 0 (makes the result unique).
void orthonormalize_square(std::vector<double>& a, std::size_t n);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

}  // namespace wellcast

#endif  // WELLCAST_LINALG_HPP
