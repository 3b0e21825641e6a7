#pragma once

#include <Eigen/Dense>
#include <vector>

#include "omstretch/element_set.hpp"

namespace omstretch {

/// Relative singular-value cutoff used for every rank decision.
inline constexpr double kRankTolerance = 1e-9;

/// Numerical rank: singular values above rel_tol * max(1, sigma_max).
int numeric_rank(const Eigen::MatrixXd& a, double rel_tol = kRankTolerance);

/// Orthonormal basis (as columns) of the null space of `a`.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& a, double rel_tol = kRankTolerance);

/// Orthonormal basis of the subspace {x in span(basis) : x_j = 0 for j outside s}.
/// `basis` must have orthonormal columns; rows are indexed by element - 1.
Eigen::MatrixXd restrict_to_support(const Eigen::MatrixXd& basis, ElementSet s,
                                    double rel_tol = kRankTolerance);

/// Sign pattern of x; entries with |x_k| <= tol count as zero.
SignedSet sign_vector(const Eigen::VectorXd& x, double tol);

/// An elementary vector of a subspace: nonzero, of inclusion-minimal support.
struct ElementaryVector {
  SignedSet signs;         ///< oriented so that the smallest support element is positive
  Eigen::VectorXd vector;  ///< scaled to max-abs 1, exact zeros off the support
};

/**
 * All elementary vectors (one per antipodal pair) of the subspace spanned by
 * the orthonormal columns of `basis`.
 *
 * Supports are scanned by increasing cardinality. A support S yields an
 * elementary vector when the subspace restricted to S is one-dimensional and
 * its generator is nonzero (above `sign_tol` after max-abs normalisation) on
 * every element of S. Results are sorted by sign vector.
 */
std::vector<ElementaryVector> elementary_vectors(const Eigen::MatrixXd& basis, double sign_tol);

}  // namespace omstretch
