#include "wellcast/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wellcast {

namespace {

// Column-pivoted Householder QR of the row-major m x n matrix `a`.
// On exit: R occupies the upper triangle, reflector vectors the strict
// lower triangle (unit leading entry implicit), `tau` the reflector
// scales, `perm` the column permutation (column j of the factored matrix
// is column perm[j] of the input).
struct QrFactors {
    std::vector<double> a;
    std::vector<double> tau;
    std::vector<std::size_t> perm;
    std::size_t m = 0, n = 0;
};

QrFactors qr_col_pivot(std::vector<double> a, std::size_t m, std::size_t n) {
    QrFactors f;
    f.m = m;
    f.n = n;
    f.tau.assign(std::min(m, n), 0.0);
    f.perm.resize(n);
    for (std::size_t j = 0; j < n; ++j) f.perm[j] = j;

    std::vector<double> colnorm(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) colnorm[j] += a[i * n + j] * a[i * n + j];

    const std::size_t steps = std::min(m, n);
    for (std::size_t k = 0; k < steps; ++k) {
        // Pivot: bring the column with the largest remaining norm to k.
        std::size_t piv = k;
        for (std::size_t j = k + 1; j < n; ++j)
            if (colnorm[j] > colnorm[piv]) piv = j;
        if (piv != k) {
            for (std::size_t i = 0; i < m; ++i) std::swap(a[i * n + k], a[i * n + piv]);
            std::swap(colnorm[k], colnorm[piv]);
            std::swap(f.perm[k], f.perm[piv]);
        }

        // Householder vector for column k below the diagonal.
        double norm = 0;
        for (std::size_t i = k; i < m; ++i) norm += a[i * n + k] * a[i * n + k];
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            f.tau[k] = 0.0;
            continue;
        }
        const double alpha = a[k * n + k] >= 0 ? -norm : norm;
        const double v0 = a[k * n + k] - alpha;
        a[k * n + k] = alpha;
        // Normalize so the leading entry of v is 1.
        if (v0 != 0.0) {
            for (std::size_t i = k + 1; i < m; ++i) a[i * n + k] /= v0;
            double vtv = 1.0;
            for (std::size_t i = k + 1; i < m; ++i) vtv += a[i * n + k] * a[i * n + k];
            f.tau[k] = 2.0 / vtv;
        } else {
            f.tau[k] = 0.0;
        }

        // Apply the reflector to the trailing columns.
        for (std::size_t j = k + 1; j < n; ++j) {
            double dot = a[k * n + j];
            for (std::size_t i = k + 1; i < m; ++i) dot += a[i * n + k] * a[i * n + j];
            dot *= f.tau[k];
            a[k * n + j] -= dot;
            for (std::size_t i = k + 1; i < m; ++i) a[i * n + j] -= dot * a[i * n + k];
        }
        for (std::size_t j = k + 1; j < n; ++j)
            colnorm[j] = std::max(0.0, colnorm[j] - a[k * n + j] * a[k * n + j]);
    }
    f.a = std::move(a);
    return f;
}

// Applies Q^T (product of stored reflectors) to a vector of length m.
void apply_qt(const QrFactors& f, std::vector<double>& v) {
    const std::size_t steps = f.tau.size();
    for (std::size_t k = 0; k < steps; ++k) {
        if (f.tau[k] == 0.0) continue;
        double dot = v[k];
        for (std::size_t i = k + 1; i < f.m; ++i) dot += f.a[i * f.n + k] * v[i];
        dot *= f.tau[k];
        v[k] -= dot;
        for (std::size_t i = k + 1; i < f.m; ++i) v[i] -= dot * f.a[i * f.n + k];
    }
}

}  // namespace

LeastSquaresResult solve_least_squares(const std::vector<double>& a, std::size_t rows,
                                       std::size_t cols, const std::vector<double>& b,
                                       double rcond) {
    if (a.size() != rows * cols || b.size() != rows)
        throw std::invalid_argument("solve_least_squares: dimension mismatch");
    if (rows == 0 || cols == 0) throw std::invalid_argument("solve_least_squares: empty system");

    QrFactors f = qr_col_pivot(a, rows, cols);

    // Numerical rank from the pivoted diagonal of R.
    const std::size_t steps = std::min(rows, cols);
    const double r00 = std::abs(f.a[0]);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        if (std::abs(f.a[k * cols + k]) > rcond * std::max(r00, 1e-300)) ++rank;
        else break;
    }

    LeastSquaresResult result;
    result.rank = rank;
    result.rank_deficient = rank < cols;
    result.x.assign(cols, 0.0);
    if (rank == 0) return result;

    std::vector<double> c = b;
    apply_qt(f, c);
    c.resize(rank);

    std::vector<double> y(cols, 0.0);
    if (!result.rank_deficient) {
        // Plain back-substitution on the full-rank triangle.
        for (std::size_t ii = rank; ii-- > 0;) {
            double s = c[ii];
            for (std::size_t j = ii + 1; j < cols; ++j) s -= f.a[ii * cols + j] * y[j];
            y[ii] = s / f.a[ii * cols + ii];
        }
    } else {
        // Complete the orthogonal decomposition: QR-factor R1^T (cols x rank)
        // so R1 = R2^T Q2^T, then min-norm y = Q2 R2^{-T} c.
        std::vector<double> r1t(cols * rank, 0.0);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i; j < cols; ++j) r1t[j * rank + i] = f.a[i * cols + j];
        QrFactors g = qr_col_pivot(r1t, cols, rank);
        // R1^T has full column rank by construction, and its columns are
        // already well conditioned, so the pivoting permutation g.perm
        // reorders the rank columns; undo it on the rhs side.
        // Solve R2^T z = P^T c by forward substitution (R2 upper => R2^T lower).
        std::vector<double> pc(rank);
        for (std::size_t j = 0; j < rank; ++j) pc[j] = c[g.perm[j]];
        std::vector<double> z(rank, 0.0);
        for (std::size_t i = 0; i < rank; ++i) {
            double s = pc[i];
            for (std::size_t j = 0; j < i; ++j) s -= g.a[j * rank + i] * z[j];
            const double d = g.a[i * rank + i];
            if (d == 0.0) throw std::runtime_error("solve_least_squares: singular R2");
            z[i] = s / d;
        }
        // y = Q2 z: extend z to length cols and apply the reflectors in
        // reverse (Q = H_0 ... H_{r-1} applied to the padded vector).
        y.assign(cols, 0.0);
        std::copy(z.begin(), z.end(), y.begin());
        for (std::size_t kk = g.tau.size(); kk-- > 0;) {
            if (g.tau[kk] == 0.0) continue;
            double dot = y[kk];
            for (std::size_t i = kk + 1; i < cols; ++i) dot += g.a[i * rank + kk] * y[i];
            dot *= g.tau[kk];
            y[kk] -= dot;
            for (std::size_t i = kk + 1; i < cols; ++i) y[i] -= dot * g.a[i * rank + kk];
        }
    }

    for (std::size_t j = 0; j < cols; ++j) result.x[f.perm[j]] = y[j];
    return result;
}

void orthonormalize_square(std::vector<double>& a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("orthonormalize_square: bad size");
    // Unpivoted QR via the pivoted routine would reorder columns; factor
    // manually here with the same reflector layout but no pivoting.
    std::vector<double> r = a;
    std::vector<double> tau(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double norm = 0;
        for (std::size_t i = k; i < n; ++i) norm += r[i * n + k] * r[i * n + k];
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = r[k * n + k] >= 0 ? -norm : norm;
        const double v0 = r[k * n + k] - alpha;
        r[k * n + k] = alpha;
        if (v0 != 0.0) {
            for (std::size_t i = k + 1; i < n; ++i) r[i * n + k] /= v0;
            double vtv = 1.0;
            for (std::size_t i = k + 1; i < n; ++i) vtv += r[i * n + k] * r[i * n + k];
            tau[k] = 2.0 / vtv;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            double dot = r[k * n + j];
            for (std::size_t i = k + 1; i < n; ++i) dot += r[i * n + k] * r[i * n + j];
            dot *= tau[k];
            r[k * n + j] -= dot;
            for (std::size_t i = k + 1; i < n; ++i) r[i * n + j] -= dot * r[i * n + k];
        }
    }
    // Build Q by applying the reflectors to the identity, then fix signs so
    // diag(R) >= 0.
    std::vector<double> q(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t k = n; k-- > 0;) {
            if (tau[k] == 0.0) continue;
            double dot = q[k * n + col];
            for (std::size_t i = k + 1; i < n; ++i) dot += r[i * n + k] * q[i * n + col];
            dot *= tau[k];
            q[k * n + col] -= dot;
            for (std::size_t i = k + 1; i < n; ++i) q[i * n + col] -= dot * r[i * n + k];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (r[j * n + j] < 0.0)
            for (std::size_t i = 0; i < n; ++i) q[i * n + j] = -q[i * n + j];
    }
    a = std::move(q);
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("symmetric_eigenvalues: bad size");
    // Cyclic Jacobi; plenty for the small matrices used in sanity checks.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double app = a[p * n + p], aqq = a[q * n + q];
                const double theta = (aqq - app) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1.0 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace wellcast
