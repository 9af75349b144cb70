#ifndef KGACT_MAT_ADAM_HPP
#define KGACT_MAT_ADAM_HPP

#include "kgact/mat/dense_matrix.hpp"

#include <cstddef>

namespace kgact {
namespace mat {

/// Per-parameter Adam moments. Canonical constants; bias correction applied
/// in adam_step.
struct adam_state {
    dense_matrix first_moment;
    dense_matrix second_moment;
    std::size_t step_count = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    adam_state() = default;
    adam_state(std::size_t rows, std::size_t cols)
        : first_moment(rows, cols), second_moment(rows, cols) {}
};

/// One bias-corrected Adam update, in place. Moments and step_count advance.
/// Throws validation_error on shape mismatch and numeric_error naming the
/// first non-finite gradient entry.
void adam_step(dense_matrix& params, const dense_matrix& grads, adam_state& state, double lr);

} // namespace mat
} // namespace kgact

#endif // KGACT_MAT_ADAM_HPP
