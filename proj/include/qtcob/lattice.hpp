// Exact integer linear algebra over Z^n: rank, determinant, sublattice and
// rational-span membership, primitivity, and the deterministic avoidance
// search used to pick the extra label in the simplex decomposition.

#pragma once

#include "qtcob/numeric.hpp"

#include <optional>
#include <vector>

namespace qtcob {

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
/// Throws std::invalid_argument on non-square input. det of the 0x0 matrix is 1.
Int det(const IntMat& m);

/// Rank over Q (equivalently over Z for a set of vectors).
int rank(const IntMat& m);
int rank(const std::vector<IntVec>& vectors);

/// True iff the vectors are linearly independent over the integers.
bool is_independent(const std::vector<IntVec>& vectors);

/// True iff the gcd of the entries is 1. The zero vector is not primitive.
bool is_primitive(const IntVec& v);

/// Classical adjugate, adj(m) * m = det(m) * I. Cofactor expansion; fine for
/// the small dimensions this library works in.
IntMat adjugate(const IntMat& m);

/// For |det(m)| = 1 returns the integer matrix (m^-1)^T.
/// Throws std::invalid_argument otherwise.
IntMat inverse_transpose_unimodular(const IntMat& m);

/// Solves U * a = b exactly for an integer matrix U (a square, det != 0).
/// Returns nullopt when no integral solution exists.
std::optional<IntMat> solve_left_integer(const IntMat& a, const IntMat& b);

/// A finitely generated sublattice of Z^n, stored with a canonical
/// row-echelon (Hermite) basis: pivots positive, entries above a pivot
/// reduced into [0, pivot).
class Sublattice {
  public:
    Sublattice(std::vector<IntVec> generators, Eigen::Index ambient_rank);

    Eigen::Index ambient_rank() const { return ambient_rank_; }
    int rank() const { return static_cast<int>(basis_.rows()); }
    /// Canonical basis, one generator per row.
    const IntMat& basis() const { return basis_; }

  private:
    Eigen::Index ambient_rank_;
    IntMat basis_;
};

/// Integral membership: v is an integer combination of L's generators.
bool in_sublattice(const IntVec& v, const Sublattice& l);

/// Membership in the rational span (the saturation): rank does not grow.
bool in_rational_span(const IntVec& v, const Sublattice& l);

/// Returns the primitive vector outside the rational span of every input,
/// minimal under (max-norm, then lexicographic) order. Deterministic.
/// Precondition: every span has rank < n; throws std::invalid_argument when
/// some span already has full rank (no avoiding vector exists).
IntVec find_avoiding_vector(const std::vector<Sublattice>& spans, Eigen::Index n);

}  // namespace qtcob
