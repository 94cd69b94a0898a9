// Exact scalar and dense types used throughout qtcob.
//
// All arithmetic in the library is arbitrary-precision exact (GMP integers
// and rationals); there is no floating point anywhere in the pipeline.

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtcob {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Builds an IntVec from a braced list, e.g. int_vec({1, 0, -2}).
inline IntVec int_vec(std::initializer_list<long long> entries) {
    IntVec v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long long e : entries) v(i++) = e;
    return v;
}

inline int sign_of(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

inline bool vec_equal(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

inline bool vec_is_zero(const IntVec& a) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != 0) return false;
    return true;
}

/// Stacks equal-length vectors as the columns of a matrix.
/// Throws std::invalid_argument on mixed lengths.
inline IntMat columns(const std::vector<IntVec>& vs) {
    if (vs.empty()) return IntMat(0, 0);
    const Eigen::Index n = vs.front().size();
    IntMat m(n, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != n)
            throw std::invalid_argument("columns: vectors of mixed lengths");
        m.col(static_cast<Eigen::Index>(j)) = vs[j];
    }
    return m;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v(i).str();
    }
    s += ")";
    return s;
}

}  // namespace qtcob
