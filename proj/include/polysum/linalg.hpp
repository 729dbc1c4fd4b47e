#ifndef POLYSUM_LINALG_HPP
#define POLYSUM_LINALG_HPP

#include "polysum/numeric.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <vector>

namespace polysum {

using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

// v / gcd(entries), direction preserved.  Throws on the zero vector.
IntVector primitive(const IntVector& v);
bool is_primitive(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);

// Smith normal form U*M*W = D with U, W unimodular and the diagonal of D
// non-negative with d1 | d2 | ... .  Winv = W^{-1} is tracked exactly.
struct SmithForm {
    IntMatrix U, D, W, Winv;
    std::vector<Int> divisors() const;  // diagonal entries
    int rank() const;                   // number of nonzero divisors
};
SmithForm smith_normal_form(const IntMatrix& m);

// Basis (as rows) of span_Q(rows) ∩ Z^n.  Empty input gives an empty basis.
IntMatrix saturate(const IntMatrix& rows);

// Basis (as columns) of {x in Z^n : M x = 0}; always saturated.
IntMatrix kernel_lattice_basis(const IntMatrix& m);

Rational det_exact(const RatMatrix& m);
Int det_exact(const IntMatrix& m);

// Exact solve A x = b; throws consistency_error if A is singular.
RatVector solve_exact(const RatMatrix& a, const RatVector& b);
RatMatrix inverse_exact(const RatMatrix& a);

// True iff {y : M y >= 0 componentwise} contains a nonzero vector
// (exact Fourier-Motzkin elimination).
bool cone_is_nontrivial(const RatMatrix& m);

}  // namespace polysum

#endif
