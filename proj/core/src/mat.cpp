#include "stackgame/mat.hpp"

#include <cmath>
#include <cstdlib>

#include "stackgame/errors.hpp"
#include "stackgame/rng.hpp"

namespace stackgame {

Vec matvec(const Mat& m, const Vec& x) {
    if (static_cast<int>(x.size()) != m.cols)
        throw DimensionError("matvec: vector length " + std::to_string(x.size()) +
                             " does not match matrix cols " + std::to_string(m.cols));
    Vec out(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double acc = 0.0;
        const double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        for (int j = 0; j < m.cols; ++j) acc += row[j] * x[j];
        out[i] = acc;
    }
    return out;
}

Vec matvec_transpose(const Mat& m, const Vec& y) {
    if (static_cast<int>(y.size()) != m.rows)
        throw DimensionError("matvec_transpose: vector length " + std::to_string(y.size()) +
                             " does not match matrix rows " + std::to_string(m.rows));
    Vec out(m.cols, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        const double yi = y[i];
        for (int j = 0; j < m.cols; ++j) out[j] += row[j] * yi;
    }
    return out;
}

double dot(const Vec& a, const Vec& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

double norm_inf(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

double spectral_norm(const Mat& m, int iters, double tol) {
    if (m.rows == 0 || m.cols == 0) return 0.0;
    bool all_zero = true;
    for (double x : m.data)
        if (x != 0.0) { all_zero = false; break; }
    if (all_zero) return 0.0;

    // Fixed-seed start vector keeps the estimate deterministic call to call.
    Rng rng(0x5eed5eedULL ^ (static_cast<std::uint64_t>(m.rows) << 32) ^ static_cast<std::uint64_t>(m.cols));
    Vec v(m.cols);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    double nv = norm2(v);
    if (nv == 0.0) v[0] = 1.0, nv = 1.0;
    for (double& x : v) x /= nv;

    double sigma = 0.0;
    for (int k = 0; k < iters; ++k) {
        Vec w = matvec(m, v);
        double nw = norm2(w);
        if (nw == 0.0) return 0.0;
        Vec u = matvec_transpose(m, w);
        double nu = norm2(u);
        if (nu == 0.0) return nw;
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / nu;
        double prev = sigma;
        sigma = nw;
        if (k > 0 && std::abs(sigma - prev) <= tol * std::max(1.0, sigma)) break;
    }
    return sigma;
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double acc = 0.0;
        for (double x : xs) acc += x;
        return acc;
    }
    std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace stackgame
