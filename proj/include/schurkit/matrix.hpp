#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace schurkit {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Sized for desk-scale spectral work
// (dims up to a few thousand); storage is a flat vector, no views.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }

    bool is_square() const { return rows == cols; }
};

// Primary kernels are OpenMP-parallel above a size threshold; each has a
// serial twin kept as the reference implementation for differential tests
// and for the benchmark target.
Mat matmul(const Mat& x, const Mat& y);
Mat matmul_serial(const Mat& x, const Mat& y);

std::vector<cplx> apply(const Mat& m, const std::vector<cplx>& v);
std::vector<cplx> apply_serial(const Mat& m, const std::vector<cplx>& v);

double max_abs_diff(const Mat& x, const Mat& y);
double max_abs_diff_serial(const Mat& x, const Mat& y);

Mat kron(const Mat& x, const Mat& y);
Mat kron_serial(const Mat& x, const Mat& y);

Mat adjoint(const Mat& m);
Mat transpose(const Mat& m);
Mat scale(const Mat& m, cplx s);
Mat add(const Mat& x, const Mat& y);

// max |(U U+ - I)_ij|; 0 for a perfect unitary.
double unitarity_residual(const Mat& u);

// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
// Accurate to ~1e-14 for the bounded-norm generators used here.
Mat expm(const Mat& x);

// Principal matrix logarithm for u near the identity (max |u - I| well
// below 1); Mercator series with inverse scaling by square roots is not
// needed at that radius.
Mat logm_near_identity(const Mat& u);

// Frobenius-style max-entry norm of u - I.
double max_abs_dist_identity(const Mat& u);

// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
// R-diagonal phases folded into Q. Deterministic for a fixed seed across
// platforms (explicit Box-Muller on mt19937_64 output).
Mat haar_unitary(std::size_t d, std::uint64_t seed);

}  // namespace schurkit
