#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace stackgame {

using Vec = std::vector<double>;

/// Dense row-major matrix. All networks here are desk scale, so a plain
/// vector-backed type beats pulling in a linear-algebra dependency.
struct Mat {
    int rows = 0;
    int cols = 0;
    Vec data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

Vec matvec(const Mat& m, const Vec& x);

/// m^T y, used by backprop without materializing transposes.
Vec matvec_transpose(const Mat& m, const Vec& y);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);
double norm_inf(const Vec& v);
Vec sub(const Vec& a, const Vec& b);

/// Largest singular value by power iteration on m^T m.
double spectral_norm(const Mat& m, int iters = 100, double tol = 1e-10);

/// Order-fixed pairwise summation; the reduction every mean in the library
/// uses so that thread count never changes a reported number.
double pairwise_sum(std::span<const double> xs);

inline double mean(std::span<const double> xs) {
    return xs.empty() ? 0.0 : pairwise_sum(xs) / static_cast<double>(xs.size());
}

}  // namespace stackgame
