#ifndef KGACT_MAT_SPARSE_MATRIX_HPP
#define KGACT_MAT_SPARSE_MATRIX_HPP

#include "kgact/mat/dense_matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace kgact {
namespace mat {

/// Square CSR matrix with sorted, unique column indices per row and finite
/// stored values. Immutable after construction.
class sparse_matrix {
public:
    struct entry {
        std::size_t row;
        std::size_t col;
        double value;
    };

    /// Empty (all-zero) matrix.
    explicit sparse_matrix(std::size_t dim = 0);

    /// Builds from coordinate entries; duplicates are rejected.
    static sparse_matrix from_entries(std::size_t dim, std::vector<entry> entries);
    static sparse_matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return values_.size(); }

    std::span<const std::size_t> row_offsets() const { return row_offsets_; }
    std::span<const std::size_t> col_indices() const { return col_indices_; }
    std::span<const double> values() const { return values_; }

    /// Column indices / values of one row.
    std::span<const std::size_t> row_cols(std::size_t i) const;
    std::span<const double> row_values(std::size_t i) const;

    /// Stored value or 0.0; binary search within the row.
    double at(std::size_t i, std::size_t j) const;

    dense_matrix densify() const;

    /// Exact structural + value symmetry.
    bool is_symmetric() const;

    bool operator==(const sparse_matrix& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> row_offsets_;
    std::vector<std::size_t> col_indices_;
    std::vector<double> values_;
};

/// Sparse-times-dense product. Per output entry, terms accumulate in
/// ascending stored-column order. Throws validation_error on s.dim != d.rows.
dense_matrix spmm(const sparse_matrix& s, const dense_matrix& d);

} // namespace mat
} // namespace kgact

#endif // KGACT_MAT_SPARSE_MATRIX_HPP
