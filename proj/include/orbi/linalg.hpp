#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace orbi {

using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

inline double max_abs(const cmat &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// deviation of m from the identity
double dev_from_identity(const cmat &m);

cmat random_hermitian(int n, std::mt19937_64 &rng);

// Orthonormal basis of the nullspace of m, columns; tol is the rank cutoff.
cmat nullspace(const cmat &m, double tol = 1e-9);

int numeric_rank(const cmat &m, double tol = 1e-9);

// Seed picked up from ORBIFUSION_SEED when set, otherwise the default.
std::uint64_t default_seed();

} // namespace orbi
