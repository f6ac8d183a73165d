#ifndef CVUR_ORDERING_HPP
#define CVUR_ORDERING_HPP

#include <Eigen/Core>
#include <string>

namespace cvur {

/// Layout of a 2n-dimensional quadrature vector.
///
/// interleaved: (x1, p1, x2, p2, ..., xn, pn) -- the ordering in which the
/// symplectic form is the block-diagonal Omega.
/// xxpp:        (x1, ..., xn, p1, ..., pn)    -- the ordering in which the
/// symplectic form is J = [[0, I], [-I, 0]].
///
/// All library internals use xxpp; interleaved is supported at the boundary.
enum class Ordering { interleaved, xxpp };

std::string to_string(Ordering o);
Ordering ordering_from_string(const std::string& s);

/// Permutes a 2n vector between the two orderings. Involution: applying the
/// conversion twice (swapping from/to) restores the input. Odd sizes rejected.
Eigen::VectorXd convert_ordering(const Eigen::VectorXd& v, Ordering from, Ordering to);

/// Conjugates a 2n x 2n matrix by the ordering permutation. Works for both
/// bilinear forms (covariances) and operators (symplectic maps), since the
/// permutation is orthogonal.
Eigen::MatrixXd convert_ordering(const Eigen::MatrixXd& m, Ordering from, Ordering to);

}  // namespace cvur

#endif
