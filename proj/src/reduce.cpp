#include <tropmix/reduce.hpp>

#include <tropmix/mpg.hpp>

#include <stdexcept>

namespace tropmix {

RowVector row_vector(const MixedInequality& row) {
    RowVector v;
    v.reserve(2 * row.dim() + 2);
    for (const auto& a : row.lhs) v.push_back(Germ::of(a));
    v.push_back(Germ::of(row.lhs_const));
    for (const auto& b : row.rhs) v.push_back(b);
    v.push_back(row.rhs_const);
    return v;
}

std::vector<RowVector> row_matrix(const MixedSystem& sys) {
    std::vector<RowVector> out;
    out.reserve(sys.rows.size());
    for (const auto& row : sys.rows) out.push_back(row_vector(row));
    return out;
}

bool weak_redundant(const std::vector<RowVector>& R, const RowVector& v) {
    return weak_redundant(R, v, nullptr);
}

bool weak_redundant(const std::vector<RowVector>& R, const RowVector& v,
                    std::vector<Germ>* witness) {
    const size_t width = v.size();
    for (const auto& row : R) {
        if (row.size() != width) throw std::invalid_argument("row width mismatch");
        bool bottom = true;
        for (const auto& g : row)
            if (!g.is_neg_inf()) bottom = false;
        if (bottom) throw std::invalid_argument("identically -oo row in the matrix");
    }

    std::vector<Germ> w;
    w.reserve(R.size());
    for (const auto& row : R) {
        Germ wi = Germ::pos_inf();
        for (size_t j = 0; j < width; ++j) wi = germ_min(wi, residual(v[j], row[j]));
        w.push_back(wi);
    }
    if (witness) *witness = w;

    for (size_t j = 0; j < width; ++j) {
        Germ col = Germ::neg_inf();
        for (size_t i = 0; i < R.size(); ++i) col = col + w[i] * R[i][j];
        if (col != v[j]) return false;
    }
    return true;
}

namespace {

bool trivially_true(const MixedInequality& row) {
    return row.lhs_bottom() || row.rhs_const.is_pos_inf();
}

bool redundant_against(const std::vector<MixedInequality>& rows, size_t skip,
                       const MixedInequality& row, int dim, ReduceMode mode) {
    std::vector<RowVector> R;
    R.reserve(rows.size() - 1);
    for (size_t i = 0; i < rows.size(); ++i)
        if (i != skip) R.push_back(row_vector(rows[i]));
    if (weak_redundant(R, row_vector(row))) return true;
    if (mode != ReduceMode::Exact) return false;
    MixedSystem rest(dim);
    for (size_t i = 0; i < rows.size(); ++i)
        if (i != skip) rest.add_row(rows[i]);
    return implies(rest, row);
}

}  // namespace

MixedSystem reduce_system(const MixedSystem& sys, ReduceMode mode) {
    if (mode == ReduceMode::None) return sys;

    MixedSystem out(sys.dim);
    for (const auto& row : sys.rows)
        if (!trivially_true(row)) out.add_row(row);

    size_t t = 0;
    while (t < out.rows.size()) {
        if (redundant_against(out.rows, t, out.rows[t], out.dim, mode)) {
            out.rows.erase(out.rows.begin() + t);
        } else {
            ++t;
        }
    }
    return out;
}

}  // namespace tropmix
