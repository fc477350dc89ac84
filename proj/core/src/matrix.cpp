#include "pencils/matrix.hpp"

#include "pencils/errors.hpp"

namespace pencils {

KMatrix::KMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    entries_.assign(static_cast<size_t>(rows) * cols, field_->zero());
}

void KMatrix::append_row(const std::vector<FieldElement>& row) {
    if (static_cast<int>(row.size()) != cols_)
        throw InternalError("append_row: wrong width");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<FieldElement> KMatrix::apply(const std::vector<FieldElement>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw InternalError("apply: wrong vector length");
    std::vector<FieldElement> out(rows_, field_->zero());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] = out[r] + at(r, c) * v[c];
    return out;
}

RankKernel rank_and_kernel(const KMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<FieldElement>> a(rows);
    for (int r = 0; r < rows; ++r) {
        a[r].reserve(cols);
        for (int c = 0; c < cols; ++c) a[r].push_back(m.at(r, c));
    }

    std::vector<int> pivot_col;  // pivot column of each eliminated row
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        FieldElement inv = a[row][col].inverse();
        for (int c = col; c < cols; ++c) a[row][c] = a[row][c] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            FieldElement f = a[r][col];
            for (int c = col; c < cols; ++c)
                a[r][c] = a[r][c] - f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    RankKernel out;
    out.rank = static_cast<int>(pivot_col.size());
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    const FieldPtr& field = m.field();
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols, field->zero());
        v[free] = field->one();
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -a[r][free];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace pencils
