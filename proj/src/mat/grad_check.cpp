#include "kgact/mat/grad_check.hpp"

#include "kgact/error.hpp"

#include <cmath>
#include <string>

namespace kgact {
namespace mat {

dense_matrix finite_difference_grad(const std::function<double(const dense_matrix&)>& loss,
                                    const dense_matrix& params, double h) {
    if (!(h > 0.0)) {
        throw validation_error("finite_difference_grad: step size must be positive");
    }
    dense_matrix probe = params;
    dense_matrix grad(params.rows(), params.cols());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double original = probe.values()[i];
        probe.values()[i] = original + h;
        const double up = loss(probe);
        probe.values()[i] = original - h;
        const double down = loss(probe);
        probe.values()[i] = original;
        if (!std::isfinite(up) || !std::isfinite(down)) {
            throw numeric_error("finite_difference_grad: loss returned non-finite value at entry " +
                                std::to_string(i));
        }
        grad.values()[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

} // namespace mat
} // namespace kgact
