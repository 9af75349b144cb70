#include "kgact/mat/adam.hpp"

#include "kgact/error.hpp"

#include <cmath>
#include <string>

namespace kgact {
namespace mat {

void adam_step(dense_matrix& params, const dense_matrix& grads, adam_state& state, double lr) {
    if (!params.same_shape(grads)) {
        throw validation_error("adam_step: params " + shape_string(params) + " vs grads " +
                               shape_string(grads));
    }
    if (!params.same_shape(state.first_moment) || !params.same_shape(state.second_moment)) {
        throw validation_error("adam_step: state moments do not match params " +
                               shape_string(params));
    }
    if (!(lr > 0.0)) {
        throw validation_error("adam_step: learning rate must be positive");
    }
    for (std::size_t i = 0; i < grads.size(); ++i) {
        if (!std::isfinite(grads.values()[i])) {
            throw numeric_error("adam_step: non-finite gradient at (" +
                                std::to_string(i / grads.cols()) + "," +
                                std::to_string(i % grads.cols()) + ")");
        }
    }

    state.step_count += 1;
    const double t = static_cast<double>(state.step_count);
    const double correction1 = 1.0 - std::pow(state.beta1, t);
    const double correction2 = 1.0 - std::pow(state.beta2, t);

    double* p = params.values().data();
    double* m = state.first_moment.values().data();
    double* v = state.second_moment.values().data();
    const double* g = grads.values().data();
    for (std::size_t i = 0; i < params.size(); ++i) {
        m[i] = state.beta1 * m[i] + (1.0 - state.beta1) * g[i];
        v[i] = state.beta2 * v[i] + (1.0 - state.beta2) * g[i] * g[i];
        const double m_hat = m[i] / correction1;
        const double v_hat = v[i] / correction2;
        p[i] -= lr * m_hat / (std::sqrt(v_hat) + state.epsilon);
    }
    params.ensure_finite("adam_step");
}

} // namespace mat
} // namespace kgact
