#include "kgact/mat/dense_matrix.hpp"

#include "kgact/error.hpp"

#include <cmath>
#include <string>

namespace kgact {
namespace mat {

dense_matrix::dense_matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {
    if (!std::isfinite(fill)) {
        throw numeric_error("dense_matrix fill value is not finite");
    }
}

dense_matrix::dense_matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows * cols) {
        throw validation_error("dense_matrix: " + std::to_string(values_.size()) +
                               " values for shape " + std::to_string(rows) + "x" +
                               std::to_string(cols));
    }
    ensure_finite("dense_matrix construction");
}

dense_matrix dense_matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<double> values;
    values.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw validation_error("dense_matrix::from_rows: ragged row lengths");
        }
        values.insert(values.end(), row.begin(), row.end());
    }
    return dense_matrix(r, c, std::move(values));
}

dense_matrix dense_matrix::identity(std::size_t n) {
    dense_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

std::span<const double> dense_matrix::row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
}

std::span<double> dense_matrix::row(std::size_t i) {
    return {values_.data() + i * cols_, cols_};
}

bool dense_matrix::operator==(const dense_matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && values_ == other.values_;
}

void dense_matrix::ensure_finite(const char* context) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw numeric_error(std::string(context) + ": non-finite entry at (" +
                                std::to_string(i / cols_) + "," + std::to_string(i % cols_) + ")");
        }
    }
}

std::string shape_string(const dense_matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

dense_matrix matmul(const dense_matrix& a, const dense_matrix& b) {
    if (a.cols() != b.rows()) {
        throw validation_error("matmul: inner dimensions differ, " + shape_string(a) + " * " +
                               shape_string(b));
    }
    dense_matrix out(a.rows(), b.cols());
    // i-k-j adds terms to out(i,j) in ascending k, the documented order.
    const double* av = a.values().data();
    const double* bv = b.values().data();
    double* ov = out.values().data();
    const std::size_t n = a.rows(), inner = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            const double aik = av[i * inner + k];
            const double* brow = bv + k * m;
            double* orow = ov + i * m;
            for (std::size_t j = 0; j < m; ++j) {
                orow[j] += aik * brow[j];
            }
        }
    }
    out.ensure_finite("matmul");
    return out;
}

dense_matrix transpose(const dense_matrix& m) {
    dense_matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(j, i) = m(i, j);
        }
    }
    return out;
}

namespace {

void require_same_shape(const dense_matrix& a, const dense_matrix& b, const char* op) {
    if (!a.same_shape(b)) {
        throw validation_error(std::string(op) + ": shape mismatch, " + shape_string(a) +
                               " vs " + shape_string(b));
    }
}

} // namespace

dense_matrix operator+(const dense_matrix& a, const dense_matrix& b) {
    require_same_shape(a, b, "add");
    dense_matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.values()[i] += b.values()[i];
    }
    out.ensure_finite("add");
    return out;
}

dense_matrix operator-(const dense_matrix& a, const dense_matrix& b) {
    require_same_shape(a, b, "subtract");
    dense_matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.values()[i] -= b.values()[i];
    }
    out.ensure_finite("subtract");
    return out;
}

dense_matrix operator*(double scale, const dense_matrix& m) {
    dense_matrix out = m;
    for (double& v : out.values()) {
        v *= scale;
    }
    out.ensure_finite("scale");
    return out;
}

dense_matrix hadamard(const dense_matrix& a, const dense_matrix& b) {
    require_same_shape(a, b, "hadamard");
    dense_matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.values()[i] *= b.values()[i];
    }
    out.ensure_finite("hadamard");
    return out;
}

dense_matrix relu(const dense_matrix& x) {
    dense_matrix out = x;
    for (double& v : out.values()) {
        if (v < 0.0) {
            v = 0.0;
        }
    }
    return out;
}

dense_matrix relu_backward(const dense_matrix& x, const dense_matrix& upstream) {
    require_same_shape(x, upstream, "relu_backward");
    dense_matrix out = upstream;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (x.values()[i] <= 0.0) {
            out.values()[i] = 0.0;
        }
    }
    return out;
}

double max_abs_difference(const dense_matrix& a, const dense_matrix& b) {
    require_same_shape(a, b, "max_abs_difference");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::fabs(a.values()[i] - b.values()[i]));
    }
    return worst;
}

double frobenius_norm(const dense_matrix& m) {
    double total = 0.0;
    for (double v : m.values()) {
        total += v * v;
    }
    return std::sqrt(total);
}

} // namespace mat
} // namespace kgact
