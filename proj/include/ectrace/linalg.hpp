#ifndef ECTRACE_LINALG_HPP
#define ECTRACE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "ectrace/extension.hpp"
#include "ectrace/field.hpp"

namespace ectrace {

// Dense matrix over a ground field, row-major.
class Matrix {
public:
    Matrix(const FieldDescriptor& desc, std::size_t rows, std::size_t cols)
        : desc_(desc), rows_(rows), cols_(cols),
          entries_(rows * cols, FieldScalar::zero(desc)) {}

    const FieldDescriptor& descriptor() const noexcept { return desc_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldScalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const FieldScalar& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::vector<FieldScalar> column(std::size_t j) const;

    bool is_zero() const;
    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

private:
    FieldDescriptor desc_;
    std::size_t rows_, cols_;
    std::vector<FieldScalar> entries_;
};

/*
 * Basis of the right kernel of m, in echelon form: reading columns left to
 * right, the number of trailing zeros at the bottom of each column strictly
 * decreases, and the last nonzero entry of every column is 1. A matrix with
 * trivial kernel yields a matrix with zero columns.
 */
Matrix kernel_echelon(const Matrix& m);

// Monic minimal polynomial of an element of a simple extension, computed as
// the lowest-degree kernel relation among the powers 1, a, a^2, ...
Polynomial minimal_polynomial(const ExtensionElement& a);

}  // namespace ectrace

#endif
