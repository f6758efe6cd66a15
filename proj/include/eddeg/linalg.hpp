#pragma once

#include <vector>

#include "eddeg/rational.hpp"

namespace eddeg {

using QVec = std::vector<Rational>;
using QMat = std::vector<std::vector<Rational>>;

QMat identity_matrix(std::size_t n);
QMat matrix_product(const QMat& a, const QMat& b);
QVec matrix_vector(const QMat& a, const QVec& v);
std::size_t matrix_rank(QMat a);

// Inverse of a square matrix; throws DivisionByZero when singular.
QMat matrix_inverse(const QMat& a);

// A spanning vector of the kernel of a full-rank 3x4 matrix (the camera
// center in homogeneous coordinates).
QVec kernel_vector_3x4(const QMat& a);

// Whether two nonzero vectors are projectively equal.
bool proportional(const QVec& a, const QVec& b);

}  // namespace eddeg
