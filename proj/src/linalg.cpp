#include "omstretch/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace omstretch {

namespace {

double cutoff(const Eigen::VectorXd& singular_values, double rel_tol) {
  const double top = singular_values.size() > 0 ? singular_values(0) : 0.0;
  return rel_tol * std::max(1.0, top);
}

}  // namespace

int numeric_rank(const Eigen::MatrixXd& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const Eigen::VectorXd& s = svd.singularValues();
  const double tol = cutoff(s, rel_tol);
  return static_cast<int>((s.array() > tol).count());
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& a, double rel_tol) {
  const Eigen::Index cols = a.cols();
  if (a.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double tol = cutoff(s, rel_tol);
  const Eigen::Index rank = (s.array() > tol).count();
  return svd.matrixV().rightCols(cols - rank);
}

Eigen::MatrixXd restrict_to_support(const Eigen::MatrixXd& basis, ElementSet s, double rel_tol) {
  const int n = static_cast<int>(basis.rows());
  std::vector<int> outside;
  for (int k = 0; k < n; ++k) {
    if (!s.contains(k + 1)) outside.push_back(k);
  }
  if (outside.empty()) return basis;
  Eigen::MatrixXd constraints(static_cast<Eigen::Index>(outside.size()), basis.cols());
  for (std::size_t r = 0; r < outside.size(); ++r) constraints.row(r) = basis.row(outside[r]);
  const Eigen::MatrixXd coefficients = kernel_basis(constraints, rel_tol);
  Eigen::MatrixXd restricted = basis * coefficients;
  for (int k : outside) restricted.row(k).setZero();
  return restricted;
}

SignedSet sign_vector(const Eigen::VectorXd& x, double tol) {
  SignedSet s;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (x(k) > tol) s.pos.insert(static_cast<int>(k) + 1);
    else if (x(k) < -tol) s.neg.insert(static_cast<int>(k) + 1);
  }
  return s;
}

std::vector<ElementaryVector> elementary_vectors(const Eigen::MatrixXd& basis, double sign_tol) {
  const int n = static_cast<int>(basis.rows());
  std::vector<ElementaryVector> found;
  if (basis.cols() == 0) return found;

  for (int size = 1; size <= n; ++size) {
    for (ElementSet support : subsets_of_size(n, size)) {
      const bool contains_known = std::any_of(found.begin(), found.end(), [&](const ElementaryVector& e) {
        return e.signs.support().is_subset_of(support);
      });
      if (contains_known) continue;

      const Eigen::MatrixXd sub = restrict_to_support(basis, support);
      if (sub.cols() != 1) continue;
      Eigen::VectorXd x = sub.col(0);
      x /= x.cwiseAbs().maxCoeff();
      for (int k = 0; k < n; ++k) {
        if (!support.contains(k + 1)) x(k) = 0.0;
      }
      if (sign_vector(x, sign_tol).support() != support) continue;
      if (x(support.min() - 1) < 0) x = -x;
      found.push_back({sign_vector(x, sign_tol), std::move(x)});
    }
  }

  // Support-minimality post-filter: drop anything that strictly contains another support.
  std::vector<ElementaryVector> minimal;
  for (const auto& e : found) {
    const bool dominated = std::any_of(found.begin(), found.end(), [&](const ElementaryVector& o) {
      return o.signs.support() != e.signs.support() && o.signs.support().is_subset_of(e.signs.support());
    });
    if (!dominated) minimal.push_back(e);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const ElementaryVector& a, const ElementaryVector& b) { return a.signs < b.signs; });
  return minimal;
}

}  // namespace omstretch
