#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

namespace mp = boost::multiprecision;

// Expression templates off: Eigen expects scalars that behave like plain values.
using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using IndexSet = std::vector<int>;  // sorted, 0-based unless stated otherwise

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Build from nested literals, row by row.
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);
IntVector int_vector(std::initializer_list<long> v);
IntVector int_vector(const std::vector<long>& v);

// Columns given directly (for data listed column by column).
IntMatrix from_columns(const std::vector<IntVector>& cols, Eigen::Index rows = -1);
std::vector<IntVector> columns(const IntMatrix& m);

IntMatrix select_columns(const IntMatrix& m, const IndexSet& idx);
IntMatrix drop_columns(const IntMatrix& m, const IndexSet& idx);
IntVector select_entries(const IntVector& v, const IndexSet& idx);
IntVector drop_entries(const IntVector& v, const IndexSet& idx);

RatVector to_rat(const IntVector& v);
RatMatrix to_rat(const IntMatrix& m);
bool is_integral(const RatVector& v);
IntVector to_int(const RatVector& v);  // throws if not integral

Int floor_div(const Rat& r);
Int ceil_div(const Rat& r);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);  // "p/q" or "p"
std::string to_string(const IntVector& v);

// Lexicographic order on vectors of equal length.
template <class V>
bool lex_less(const V& a, const V& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

template <class V>
bool lex_greater(const V& a, const V& b) { return lex_less(b, a); }

// Columns of m as a sorted multiset; equal iff m1, m2 agree up to column permutation.
std::vector<IntVector> column_multiset(const IntMatrix& m);
bool same_columns(const IntMatrix& a, const IntMatrix& b);

}  // namespace toric
