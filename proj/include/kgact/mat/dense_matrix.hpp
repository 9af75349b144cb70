#ifndef KGACT_MAT_DENSE_MATRIX_HPP
#define KGACT_MAT_DENSE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace kgact {
namespace mat {

/// Row-major dense matrix of 64-bit floats.
///
/// Every public operation leaves only finite entries behind; operations that
/// could produce NaN/Inf scan their result and throw numeric_error instead of
/// returning it. Accumulations run in a fixed left-to-right order so results
/// are reproducible bit for bit.
class dense_matrix {
public:
    dense_matrix() = default;
    dense_matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    dense_matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    /// Builds from nested row lists; rows must be equally sized.
    static dense_matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static dense_matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const;
    std::span<double> row(std::size_t i);

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    bool same_shape(const dense_matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    /// Exact elementwise equality (bitwise on doubles).
    bool operator==(const dense_matrix& other) const;

    /// Throws numeric_error naming `context` if any entry is NaN/Inf.
    void ensure_finite(const char* context) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// "3x4" rendering for error messages.
std::string shape_string(const dense_matrix& m);

/// Standard product; accumulates each output entry left to right over k.
/// Throws validation_error on a.cols != b.rows.
dense_matrix matmul(const dense_matrix& a, const dense_matrix& b);

dense_matrix transpose(const dense_matrix& m);

dense_matrix operator+(const dense_matrix& a, const dense_matrix& b);
dense_matrix operator-(const dense_matrix& a, const dense_matrix& b);
dense_matrix operator*(double scale, const dense_matrix& m);
dense_matrix hadamard(const dense_matrix& a, const dense_matrix& b);

/// Elementwise max(0, x).
dense_matrix relu(const dense_matrix& x);

/// Zeroes `upstream` wherever x <= 0 (subgradient at the kink is 0).
dense_matrix relu_backward(const dense_matrix& x, const dense_matrix& upstream);

double max_abs_difference(const dense_matrix& a, const dense_matrix& b);
double frobenius_norm(const dense_matrix& m);

} // namespace mat
} // namespace kgact

#endif // KGACT_MAT_DENSE_MATRIX_HPP
