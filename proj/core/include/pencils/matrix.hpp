#ifndef PENCILS_MATRIX_HPP
#define PENCILS_MATRIX_HPP

#include <vector>

#include "pencils/number_field.hpp"

namespace pencils {

/// Dense row-major matrix over a number field.
class KMatrix {
public:
    KMatrix(FieldPtr field, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldElement& at(int r, int c) { return entries_[r * cols_ + c]; }
    const FieldElement& at(int r, int c) const { return entries_[r * cols_ + c]; }

    void append_row(const std::vector<FieldElement>& row);

    /// Matrix-vector product.
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

private:
    FieldPtr field_;
    int rows_;
    int cols_;
    std::vector<FieldElement> entries_;
};

struct RankKernel {
    int rank = 0;
    /// Basis of the right kernel; each vector has length cols. Deterministic:
    /// one vector per free column in column order, free coordinate set to 1.
    std::vector<std::vector<FieldElement>> kernel;
};

/// Exact rank and kernel by Gauss-Jordan elimination with first-nonzero
/// pivoting in row-major order.
RankKernel rank_and_kernel(const KMatrix& m);

}  // namespace pencils

#endif
