#ifndef YBHOM_INTMATRIX_HPP
#define YBHOM_INTMATRIX_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <iosfwd>

namespace ybhom {

// Exact arbitrary-precision integers. Fixed-width arithmetic is not used
// anywhere in the linear-algebra layer: Smith-form pivots grow fast.
using Int = boost::multiprecision::mpz_int;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using EIndex = Eigen::Index;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
    for (EIndex j = 0; j < m.cols(); ++j)
        for (EIndex i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) return false;
    return true;
}

/// Plain-text export: one row per line, entries space-separated.
void write_matrix_text(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix_text(std::istream& is);

}  // namespace ybhom

#endif
