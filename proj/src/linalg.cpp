#include "orbi/linalg.hpp"

#include <cstdlib>
#include <string>

namespace orbi {

double dev_from_identity(const cmat &m) {
    cmat d = m - cmat::Identity(m.rows(), m.cols());
    return max_abs(d);
}

cmat random_hermitian(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cmat m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = std::complex<double>(u(rng), 0.0);
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> v(u(rng), u(rng));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

cmat nullspace(const cmat &m, double tol) {
    if (m.rows() == 0)
        return cmat::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<cmat> svd(m, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    double scale = sv.size() ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * std::max(1.0, scale)) ++rank;
    return svd.matrixV().rightCols(m.cols() - rank);
}

int numeric_rank(const cmat &m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<cmat> svd(m);
    const auto &sv = svd.singularValues();
    double scale = sv.size() ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * std::max(1.0, scale)) ++rank;
    return rank;
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("ORBIFUSION_SEED"))
        return std::stoull(env, nullptr, 0);
    return 0x5EED;
}

} // namespace orbi
