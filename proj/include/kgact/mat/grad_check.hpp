#ifndef KGACT_MAT_GRAD_CHECK_HPP
#define KGACT_MAT_GRAD_CHECK_HPP

#include "kgact/mat/dense_matrix.hpp"

#include <functional>

namespace kgact {
namespace mat {

/// Central-difference gradient of a deterministic scalar loss:
/// (loss(p + h*e_i) - loss(p - h*e_i)) / (2h) per entry.
///
/// The independent oracle for every hand-derived backward pass in this
/// project. Throws numeric_error if the loss returns a non-finite value.
dense_matrix finite_difference_grad(const std::function<double(const dense_matrix&)>& loss,
                                    const dense_matrix& params, double h = 1e-5);

} // namespace mat
} // namespace kgact

#endif // KGACT_MAT_GRAD_CHECK_HPP
