#include "toric/types.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> r;
    for (auto& row : rows) r.emplace_back(row);
    return int_matrix(r);
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) throw Error("ragged matrix literal");
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector int_vector(std::initializer_list<long> v) { return int_vector(std::vector<long>(v)); }

IntVector int_vector(const std::vector<long>& v) {
    IntVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

IntMatrix from_columns(const std::vector<IntVector>& cols, Eigen::Index rows) {
    if (cols.empty()) return IntMatrix(rows < 0 ? 0 : rows, 0);
    IntMatrix m(cols.front().size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw Error("column length mismatch");
        m.col(j) = cols[j];
    }
    return m;
}

std::vector<IntVector> columns(const IntMatrix& m) {
    std::vector<IntVector> r;
    r.reserve(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.emplace_back(m.col(j));
    return r;
}

IntMatrix select_columns(const IntMatrix& m, const IndexSet& idx) {
    IntMatrix r(m.rows(), idx.size());
    for (size_t j = 0; j < idx.size(); ++j) r.col(j) = m.col(idx[j]);
    return r;
}

IntMatrix drop_columns(const IntMatrix& m, const IndexSet& idx) {
    IndexSet keep;
    for (int j = 0; j < m.cols(); ++j)
        if (std::find(idx.begin(), idx.end(), j) == idx.end()) keep.push_back(j);
    return select_columns(m, keep);
}

IntVector select_entries(const IntVector& v, const IndexSet& idx) {
    IntVector r(idx.size());
    for (size_t j = 0; j < idx.size(); ++j) r[j] = v[idx[j]];
    return r;
}

IntVector drop_entries(const IntVector& v, const IndexSet& idx) {
    std::vector<Int> keep;
    for (int j = 0; j < v.size(); ++j)
        if (std::find(idx.begin(), idx.end(), j) == idx.end()) keep.push_back(v[j]);
    IntVector r(keep.size());
    for (size_t j = 0; j < keep.size(); ++j) r[j] = keep[j];
    return r;
}

RatVector to_rat(const IntVector& v) { return v.cast<Rat>(); }
RatMatrix to_rat(const IntMatrix& m) { return m.cast<Rat>(); }

bool is_integral(const RatVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (mp::denominator(v[i]) != 1) return false;
    return true;
}

IntVector to_int(const RatVector& v) {
    IntVector r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (mp::denominator(v[i]) != 1) throw Error("non-integral vector");
        r[i] = mp::numerator(v[i]);
    }
    return r;
}

Int floor_div(const Rat& r) {
    Int n = mp::numerator(r), d = mp::denominator(r);
    Int q = n / d;  // truncates toward zero
    if (q * d != n && n < 0) q -= 1;
    return q;
}

Int ceil_div(const Rat& r) { return -floor_div(-r); }

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
    if (mp::denominator(x) == 1) return mp::numerator(x).str();
    return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<IntVector> column_multiset(const IntMatrix& m) {
    auto cols = columns(m);
    std::sort(cols.begin(), cols.end(), [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
    return cols;
}

bool same_columns(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    auto ca = column_multiset(a), cb = column_multiset(b);
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return false;
    return true;
}

}  // namespace toric
