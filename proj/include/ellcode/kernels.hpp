#pragma once

#include <vector>

#include "ellcode/function.hpp"
#include "ellcode/matrix.hpp"

namespace ellcode::kernels {

/// Below this many entries the dispatchers stay serial.
inline constexpr std::size_t kParallelThreshold = 4096;

// Each kernel has a serial reference and an OpenMP version producing
// identical output.

Echelon rref_serial(const Matrix& M);
Echelon rref_parallel(const Matrix& M);

/// Componentwise products of all row pairs i <= j, in (i, j) order.
Matrix schur_products_serial(const Matrix& G);
Matrix schur_products_parallel(const Matrix& G);

/// Entry (i, j) = functions[i](points[j]).
Matrix evaluate_serial(const std::vector<CurveFunction>& functions, const std::vector<Point>& points);
Matrix evaluate_parallel(const std::vector<CurveFunction>& functions, const std::vector<Point>& points);

/// Minimum Hamming weight over all nonzero combinations of the rows of G
/// (G must have full row rank); 0 when G has no rows.
std::size_t min_weight_serial(const Matrix& G);
std::size_t min_weight_parallel(const Matrix& G);

Echelon rref(const Matrix& M);
Matrix schur_products(const Matrix& G);
Matrix evaluate(const std::vector<CurveFunction>& functions, const std::vector<Point>& points);
std::size_t min_weight(const Matrix& G);

}  // namespace ellcode::kernels
