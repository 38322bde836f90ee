#pragma once

#include <Eigen/Dense>
#include <complex>

#include "psm/rng.hpp"

namespace psm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Inverse of a square Hermitian positive-definite matrix via
/// eigendecomposition. Throws NotHermitian if the symmetry check fails
/// (relative tolerance 1e-10) and SingularMatrix if the eigenvalue ratio
/// drops below 1e-12.
CMatrix hermitian_inverse(const CMatrix& a);

/// Hermitian inverse square root: returns S with S * W * S = I.
/// Same preconditions and errors as hermitian_inverse.
CMatrix inv_sqrt_psd(const CMatrix& w);

/// Largest squared singular value, computed from the smaller Gram matrix.
double spectral_norm_sq(const CMatrix& a);

/// Sum of squared entry moduli.
double frobenius_norm_sq(const CMatrix& a);

/// Matrix of i.i.d. CN(0, variance) entries: real and imaginary parts are
/// independent N(0, variance/2). Entries are drawn in row-major order, so the
/// output is a pure function of the stream state.
CMatrix sample_complex_gaussian(Eigen::Index rows, Eigen::Index cols, double variance,
                                RngStream& rng);

} // namespace psm
