#include "specround/spectra.hpp"

#include "specround/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>

namespace specround {

EigenSystem leading_eigenpairs(const Laplacian& lap, int K) {
    const int n = lap.n();
    if (K < 2) fail(ErrorCode::invalid_argument, "leading_eigenpairs requires K >= 2");
    if (K > n)
        fail(ErrorCode::k_too_large,
             "requested K = " + std::to_string(K) + " eigenpairs of an n = " + std::to_string(n) + " Laplacian");

    // D^{1/2} L_rw D^{-1/2} = D^{-1/2} (D - S) D^{-1/2}: the symmetric
    // form of the same pencil. The solver reads the lower triangle, so
    // rounding asymmetry in the upper half is irrelevant.
    Vector sqrt_d = lap.degrees.cwiseSqrt();
    Vector inv_sqrt_d = sqrt_d.cwiseInverse();
    Matrix lsym = sqrt_d.asDiagonal() * lap.l * inv_sqrt_d.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Matrix> solver(lsym);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::solver_failure, "symmetric eigensolver did not converge");

    EigenSystem out;
    out.eigenvalues = solver.eigenvalues().head(K);
    out.eigenvectors = inv_sqrt_d.asDiagonal() * solver.eigenvectors().leftCols(K);

    if (out.eigenvalues(0) < -1e-8)
        fail(ErrorCode::solver_failure,
             "computed eigenvalue " + std::to_string(out.eigenvalues(0)) + " is significantly negative");

    // Sign convention: the entry of largest magnitude (lowest index on
    // exact ties) ends up positive.
    for (int j = 0; j < K; ++j) {
        int arg = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(out.eigenvectors(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (out.eigenvectors(arg, j) < 0.0) out.eigenvectors.col(j) = -out.eigenvectors.col(j);
    }
    return out;
}

bool is_piecewise_constant(const Vector& vec, const Partition& partition, double tol) {
    if (vec.size() != partition.n())
        fail(ErrorCode::length_mismatch, "vector length does not match partition size");
    std::vector<double> lo(static_cast<std::size_t>(partition.k), std::numeric_limits<double>::infinity());
    std::vector<double> hi(static_cast<std::size_t>(partition.k), -std::numeric_limits<double>::infinity());
    for (int i = 0; i < partition.n(); ++i) {
        const auto cell = static_cast<std::size_t>(partition.assignment[static_cast<std::size_t>(i)]);
        lo[cell] = std::min(lo[cell], vec(i));
        hi[cell] = std::max(hi[cell], vec(i));
    }
    for (std::size_t c = 0; c < lo.size(); ++c)
        if (hi[c] - lo[c] > tol) return false;
    return true;
}

}  // namespace specround
