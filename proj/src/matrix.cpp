#include "schurkit/matrix.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>

namespace schurkit {

namespace {

// Below this many scalar mults the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelFlopThreshold = 1u << 16;

}  // namespace

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat matmul_serial(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: inner dims differ");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t k = 0; k < x.cols; ++k) {
            const cplx xv = x(i, k);
            if (xv == cplx(0.0, 0.0)) continue;
            const cplx* yrow = &y.a[k * y.cols];
            cplx* zrow = &z.a[i * z.cols];
            for (std::size_t j = 0; j < y.cols; ++j) zrow[j] += xv * yrow[j];
        }
    }
    return z;
}

Mat matmul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: inner dims differ");
    if (x.rows * x.cols * y.cols < kParallelFlopThreshold) return matmul_serial(x, y);
    Mat z(x.rows, y.cols);
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < (long long)x.rows; ++ii) {
        const std::size_t i = (std::size_t)ii;
        for (std::size_t k = 0; k < x.cols; ++k) {
            const cplx xv = x(i, k);
            if (xv == cplx(0.0, 0.0)) continue;
            const cplx* yrow = &y.a[k * y.cols];
            cplx* zrow = &z.a[i * z.cols];
            for (std::size_t j = 0; j < y.cols; ++j) zrow[j] += xv * yrow[j];
        }
    }
    return z;
}

std::vector<cplx> apply_serial(const Mat& m, const std::vector<cplx>& v) {
    if (m.cols != v.size()) throw std::invalid_argument("apply: dim mismatch");
    std::vector<cplx> w(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        cplx acc(0.0, 0.0);
        const cplx* row = &m.a[i * m.cols];
        for (std::size_t j = 0; j < m.cols; ++j) acc += row[j] * v[j];
        w[i] = acc;
    }
    return w;
}

std::vector<cplx> apply(const Mat& m, const std::vector<cplx>& v) {
    if (m.cols != v.size()) throw std::invalid_argument("apply: dim mismatch");
    if (m.rows * m.cols < kParallelFlopThreshold) return apply_serial(m, v);
    std::vector<cplx> w(m.rows);
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < (long long)m.rows; ++ii) {
        const std::size_t i = (std::size_t)ii;
        cplx acc(0.0, 0.0);
        const cplx* row = &m.a[i * m.cols];
        for (std::size_t j = 0; j < m.cols; ++j) acc += row[j] * v[j];
        w[i] = acc;
    }
    return w;
}

double max_abs_diff_serial(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

double max_abs_diff(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    if (x.a.size() < kParallelFlopThreshold) return max_abs_diff_serial(x, y);
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (long long i = 0; i < (long long)x.a.size(); ++i)
        m = std::max(m, std::abs(x.a[(std::size_t)i] - y.a[(std::size_t)i]));
    return m;
}

Mat kron_serial(const Mat& x, const Mat& y) {
    Mat z(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            const cplx xv = x(i, j);
            if (xv == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    z(i * y.rows + k, j * y.cols + l) = xv * y(k, l);
        }
    return z;
}

Mat kron(const Mat& x, const Mat& y) {
    if (x.a.size() * y.a.size() < kParallelFlopThreshold) return kron_serial(x, y);
    Mat z(x.rows * y.rows, x.cols * y.cols);
#pragma omp parallel for collapse(2) schedule(static)
    for (long long ii = 0; ii < (long long)x.rows; ++ii)
        for (long long kk = 0; kk < (long long)y.rows; ++kk) {
            const std::size_t i = (std::size_t)ii, k = (std::size_t)kk;
            for (std::size_t j = 0; j < x.cols; ++j) {
                const cplx xv = x(i, j);
                if (xv == cplx(0.0, 0.0)) continue;
                for (std::size_t l = 0; l < y.cols; ++l)
                    z(i * y.rows + k, j * y.cols + l) = xv * y(k, l);
            }
        }
    return z;
}

Mat adjoint(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = std::conj(m(i, j));
    return t;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Mat scale(const Mat& m, cplx s) {
    Mat z = m;
    for (auto& v : z.a) v *= s;
    return z;
}

Mat add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("add: shape mismatch");
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

double unitarity_residual(const Mat& u) {
    if (!u.is_square()) throw std::invalid_argument("unitarity_residual: not square");
    return max_abs_diff(matmul(u, adjoint(u)), Mat::identity(u.rows));
}

double max_abs_dist_identity(const Mat& u) {
    if (!u.is_square()) throw std::invalid_argument("max_abs_dist_identity: not square");
    return max_abs_diff(u, Mat::identity(u.rows));
}

Mat expm(const Mat& x) {
    if (!x.is_square()) throw std::invalid_argument("expm: not square");
    const std::size_t n = x.rows;
    double norm = 0.0;
    for (const auto& v : x.a) norm = std::max(norm, std::abs(v));
    norm *= (double)n;  // crude row-sum bound
    int s = 0;
    while (norm > 0.5 && s < 40) {
        norm *= 0.5;
        ++s;
    }
    Mat scaled = scale(x, cplx(std::ldexp(1.0, -s), 0.0));
    // Taylor with term recurrence; 24 terms at |A| <= 0.5 is < 1e-16.
    Mat result = Mat::identity(n);
    Mat term = Mat::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = matmul(term, scaled);
        term = scale(term, cplx(1.0 / k, 0.0));
        result = add(result, term);
    }
    for (int i = 0; i < s; ++i) result = matmul(result, result);
    return result;
}

Mat logm_near_identity(const Mat& u) {
    if (!u.is_square()) throw std::invalid_argument("logm: not square");
    const std::size_t n = u.rows;
    Mat e = add(u, scale(Mat::identity(n), cplx(-1.0, 0.0)));
    // Induced infinity norm controls the series: ||E^k|| <= ||E||^k.
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(e(i, j));
        norm = std::max(norm, row);
    }
    if (norm > 0.5)
        throw std::invalid_argument("logm_near_identity: argument too far from I");
    // log(I+E) = sum_{k>=1} (-1)^{k+1} E^k / k
    Mat result(n, n);
    Mat power = Mat::identity(n);
    for (int k = 1; k <= 64; ++k) {
        power = matmul(power, e);
        const double coef = (k % 2 == 1) ? 1.0 / k : -1.0 / k;
        result = add(result, scale(power, cplx(coef, 0.0)));
    }
    return result;
}

Mat haar_unitary(std::size_t d, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto uniform01 = [&gen]() {
        // 53-bit mantissa in (0,1]; avoids log(0) below.
        return (double)((gen() >> 11) + 1) * 0x1p-53;
    };
    auto gauss_pair = [&](double& g1, double& g2) {
        const double u1 = uniform01(), u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        g1 = r * std::cos(2.0 * M_PI * u2);
        g2 = r * std::sin(2.0 * M_PI * u2);
    };
    Mat g(d, d);
    for (auto& v : g.a) {
        double re, im;
        gauss_pair(re, im);
        v = cplx(re, im) / std::sqrt(2.0);
    }
    // Modified Gram-Schmidt. This is the unique QR with positive real R
    // diagonal, which is exactly the phase-normalized (Haar-correct) gauge.
    Mat q(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<cplx> col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = g(i, j);
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj(0.0, 0.0);
            for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, k)) * col[i];
            for (std::size_t i = 0; i < d; ++i) col[i] -= proj * q(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < d; ++i) nrm += std::norm(col[i]);
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < d; ++i) q(i, j) = col[i] / nrm;
    }
    return q;
}

}  // namespace schurkit
