#include "ectrace/linalg.hpp"

#include <cassert>

namespace ectrace {

std::vector<FieldScalar> Matrix::column(std::size_t j) const {
    std::vector<FieldScalar> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

bool Matrix::is_zero() const {
    for (const FieldScalar& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (desc_ != rhs.desc_) throw UsageError("matrices have mismatched descriptors");
    if (cols_ != rhs.rows_) throw UsageError("matrix dimensions do not match");
    Matrix out(desc_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) = out.at(i, j) + a * rhs.at(k, j);
            }
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return desc_ == rhs.desc_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

Matrix kernel_echelon(const Matrix& m) {
    const FieldDescriptor& desc = m.descriptor();
    const std::size_t rows = m.rows(), cols = m.cols();

    // Gauss-Jordan to reduced row echelon form; the pivot is the first
    // nonzero entry in column order (exact arithmetic needs no pivoting
    // heuristics, and a fixed rule keeps the output deterministic).
    Matrix r = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && r.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(r.at(pivot, j), r.at(rank, j));
        }
        const FieldScalar inv = r.at(rank, col).inverse();
        for (std::size_t j = col; j < cols; ++j) r.at(rank, j) = r.at(rank, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const FieldScalar f = r.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j) {
                r.at(i, j) = r.at(i, j) - f * r.at(rank, j);
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    // One kernel vector per free column, emitted in increasing column order.
    // The vector for free column f has a 1 at position f and its other
    // nonzero entries at earlier pivot positions, so the last nonzero entry
    // is already 1 and the trailing-zero counts strictly decrease.
    std::vector<std::size_t> free_cols;
    {
        std::size_t next = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (next < pivot_cols.size() && pivot_cols[next] == col) {
                ++next;
            } else {
                free_cols.push_back(col);
            }
        }
    }
    Matrix z(desc, cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        z.at(f, k) = FieldScalar::one(desc);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (pivot_cols[i] > f) break;
            z.at(pivot_cols[i], k) = -r.at(i, f);
        }
    }
    return z;
}

Polynomial minimal_polynomial(const ExtensionElement& a) {
    const Extension& ext = a.parent();
    const FieldDescriptor& desc = ext.ground();
    const std::size_t d = ext.degree();

    Matrix powers(desc, d, d + 1);
    ExtensionElement p = ext.one();
    for (std::size_t j = 0; j <= d; ++j) {
        const auto& cs = p.rep().coefficients();
        for (std::size_t i = 0; i < cs.size(); ++i) powers.at(i, j) = cs[i];
        if (j < d) p = p * a;
    }

    Matrix z = kernel_echelon(powers);
    assert(z.cols() >= 1);
    std::vector<FieldScalar> rel = z.column(0);
    Polynomial min_poly(desc, std::move(rel));
    assert(min_poly.is_monic());
    assert(min_poly.degree() > 0);
    // Lagrange: the degree of a subfield generator divides the extension degree.
    assert(d % static_cast<std::size_t>(min_poly.degree()) == 0);
    return min_poly;
}

}  // namespace ectrace
