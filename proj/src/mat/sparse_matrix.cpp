#include "kgact/mat/sparse_matrix.hpp"

#include "kgact/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kgact {
namespace mat {

sparse_matrix::sparse_matrix(std::size_t dim) : dim_(dim), row_offsets_(dim + 1, 0) {}

sparse_matrix sparse_matrix::from_entries(std::size_t dim, std::vector<entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const entry& a, const entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    sparse_matrix out(dim);
    out.col_indices_.reserve(entries.size());
    out.values_.reserve(entries.size());
    std::size_t prev_row = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const entry& e = entries[i];
        if (e.row >= dim || e.col >= dim) {
            throw validation_error("sparse_matrix: entry (" + std::to_string(e.row) + "," +
                                   std::to_string(e.col) + ") outside dim " + std::to_string(dim));
        }
        if (i > 0 && entries[i - 1].row == e.row && entries[i - 1].col == e.col) {
            throw validation_error("sparse_matrix: duplicate entry at (" + std::to_string(e.row) +
                                   "," + std::to_string(e.col) + ")");
        }
        if (!std::isfinite(e.value)) {
            throw numeric_error("sparse_matrix: non-finite value at (" + std::to_string(e.row) +
                                "," + std::to_string(e.col) + ")");
        }
        while (prev_row < e.row) {
            out.row_offsets_[++prev_row] = out.values_.size();
        }
        out.col_indices_.push_back(e.col);
        out.values_.push_back(e.value);
    }
    while (prev_row < dim) {
        out.row_offsets_[++prev_row] = out.values_.size();
    }
    return out;
}

sparse_matrix sparse_matrix::identity(std::size_t dim) {
    std::vector<entry> entries;
    entries.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        entries.push_back({i, i, 1.0});
    }
    return from_entries(dim, std::move(entries));
}

std::span<const std::size_t> sparse_matrix::row_cols(std::size_t i) const {
    return {col_indices_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
}

std::span<const double> sparse_matrix::row_values(std::size_t i) const {
    return {values_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
}

double sparse_matrix::at(std::size_t i, std::size_t j) const {
    auto cols = row_cols(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) {
        return 0.0;
    }
    return values_[row_offsets_[i] + static_cast<std::size_t>(it - cols.begin())];
}

dense_matrix sparse_matrix::densify() const {
    dense_matrix out(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        auto cols = row_cols(i);
        auto vals = row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            out(i, cols[k]) = vals[k];
        }
    }
    return out;
}

bool sparse_matrix::is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        auto cols = row_cols(i);
        auto vals = row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (at(cols[k], i) != vals[k]) {
                return false;
            }
        }
    }
    return true;
}

dense_matrix spmm(const sparse_matrix& s, const dense_matrix& d) {
    if (s.dim() != d.rows()) {
        throw validation_error("spmm: sparse dim " + std::to_string(s.dim()) +
                               " vs dense rows " + std::to_string(d.rows()));
    }
    dense_matrix out(s.dim(), d.cols());
    const std::size_t width = d.cols();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto cols = s.row_cols(i);
        auto vals = s.row_values(i);
        double* orow = out.values().data() + i * width;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const double v = vals[k];
            const double* drow = d.values().data() + cols[k] * width;
            for (std::size_t j = 0; j < width; ++j) {
                orow[j] += v * drow[j];
            }
        }
    }
    out.ensure_finite("spmm");
    return out;
}

} // namespace mat
} // namespace kgact
