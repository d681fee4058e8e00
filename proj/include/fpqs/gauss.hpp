#pragma once
// Gauss rules on [0,1] for the weight x^beta (beta > -1), via Golub-Welsch on the
// Jacobi matrix of the (0,beta) Jacobi polynomials.  Rules are cached.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpqs::gauss {

struct Rule {
    std::vector<double> x;  // nodes in (0,1), ascending
    std::vector<double> w;  // weights for int_0^1 x^beta g(x) dx
};

namespace detail {

inline Rule compute_jacobi_unit(int n, double beta) {
    const double a = 0.0, b = beta;
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag[k] = (k == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        sub[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0)));
    }
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    if (n == 1) {
        r.x[0] = 0.5 * (1.0 + diag[0]);
        r.w[0] = 1.0 / (b + 1.0);
        return r;
    }
    // Eigenvalues only; weights from the Christoffel sum of orthonormal polynomials,
    // which keeps construction O(n^2) even for a few hundred nodes.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("gauss: eigen solver failed");
    const double mu0 = std::pow(2.0, b + 1.0) / (b + 1.0);  // int_{-1}^{1} (1+xi)^b dxi
    const double scale = std::pow(2.0, -(b + 1.0));
    for (int i = 0; i < n; ++i) {
        const double xi = es.eigenvalues()[i];
        double pm = 0.0, pk = 1.0 / std::sqrt(mu0), acc = pk * pk;
        for (int k = 0; k + 1 < n; ++k) {
            const double pn = ((xi - diag[k]) * pk - (k > 0 ? sub[k - 1] * pm : 0.0)) / sub[k];
            pm = pk;
            pk = pn;
            acc += pk * pk;
        }
        r.x[i] = 0.5 * (1.0 + xi);
        r.w[i] = scale / acc;
    }
    return r;
}

}  // namespace detail

inline std::shared_ptr<const Rule> jacobi_unit(int n, double beta) {
    if (n < 1) throw std::invalid_argument("gauss: need at least one node");
    if (!(beta > -1.0)) throw std::invalid_argument("gauss: weight exponent must be > -1");
    static std::mutex mtx;
    static std::map<std::pair<int, double>, std::shared_ptr<const Rule>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, beta);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto rule = std::make_shared<const Rule>(detail::compute_jacobi_unit(n, beta));
    cache.emplace(key, rule);
    return rule;
}

inline std::shared_ptr<const Rule> legendre_unit(int n) { return jacobi_unit(n, 0.0); }

// Gauss-Laguerre: int_0^inf e^-y g(y) dy.
inline std::shared_ptr<const Rule> laguerre(int n) {
    if (n < 1) throw std::invalid_argument("gauss: need at least one node");
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const Rule>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < n; ++k) sub[k - 1] = double(k);
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    if (n == 1) {
        r.x[0] = 1.0;
        r.w[0] = 1.0;
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw std::runtime_error("gauss: eigen solver failed");
        for (int i = 0; i < n; ++i) {
            const double xi = es.eigenvalues()[i];
            double pm = 0.0, pk = 1.0, acc = 1.0;
            for (int k = 0; k + 1 < n; ++k) {
                const double pn = ((xi - diag[k]) * pk - (k > 0 ? sub[k - 1] * pm : 0.0)) / sub[k];
                pm = pk;
                pk = pn;
                acc += pk * pk;
            }
            r.x[i] = xi;
            r.w[i] = 1.0 / acc;
        }
    }
    auto rule = std::make_shared<const Rule>(std::move(r));
    cache.emplace(n, rule);
    return rule;
}

}  // namespace fpqs::gauss
