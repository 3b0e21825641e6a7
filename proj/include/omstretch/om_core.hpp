#pragma once

#include <Eigen/Dense>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "omstretch/element_set.hpp"

namespace omstretch {

/// Coefficients of a normalised affine dependence below this magnitude are zero.
inline constexpr double kSignTolerance = 1e-9;

/// Ground set {1..n} together with the ambient dimension d of the matroid.
struct GroundSet {
  int n = 0;
  int d = 0;

  /// Validates n >= d + 2 and d >= 1.
  static GroundSet make(int n, int d);
  ElementSet elements() const { return ElementSet::range(n); }
  friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

/// Orientation of a signed circuit relative to its canonical form.
enum class Sign : int { kPositive = 1, kNegative = -1 };

constexpr Sign operator-(Sign s) { return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

/**
 * An unordered circuit A|B: Circuit(A, B) and Circuit(B, A) compare equal.
 * Stored in canonical form, with the smallest element of A u B in the positive part.
 */
class Circuit {
 public:
  Circuit(ElementSet a, ElementSet b);

  ElementSet positive() const { return signs_.pos; }
  ElementSet negative() const { return signs_.neg; }
  ElementSet support() const { return signs_.support(); }
  const SignedSet& signs() const { return signs_; }
  /// Signs of the circuit under the given orientation.
  SignedSet oriented(Sign s) const { return s == Sign::kPositive ? signs_ : signs_.negated(); }
  std::string to_string() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend auto operator<=>(const Circuit&, const Circuit&) = default;

 private:
  SignedSet signs_;
};

/// One of the two antipodal vertices of the Radon complex carried by a circuit.
struct SignedCircuitVertex {
  Circuit circuit;
  Sign orientation = Sign::kPositive;

  /// The vertex whose positive part is `a` and negative part is `b`.
  static SignedCircuitVertex from_parts(ElementSet a, ElementSet b);

  SignedSet signs() const { return circuit.oriented(orientation); }
  ElementSet positive() const { return signs().pos; }
  ElementSet negative() const { return signs().neg; }
  SignedCircuitVertex antipode() const { return {circuit, -orientation}; }
  std::string to_string() const { return signs().to_string(); }

  friend bool operator==(const SignedCircuitVertex&, const SignedCircuitVertex&) = default;
  friend auto operator<=>(const SignedCircuitVertex&, const SignedCircuitVertex&) = default;
};

/**
 * An oriented matroid given by its circuits. Construction validates labels,
 * disjointness and |A u B| <= d + 2, canonicalises and deduplicates; the
 * remaining axioms are checked by check_circuit_axioms.
 */
class OrientedMatroid {
 public:
  OrientedMatroid(GroundSet ground, std::vector<Circuit> circuits);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n; }
  int d() const { return ground_.d; }
  const std::vector<Circuit>& circuits() const { return circuits_; }
  bool contains(const Circuit& c) const;
  /// Both orientations of every circuit.
  std::vector<SignedSet> signed_circuits() const;
  /// No circuit has an empty negative part.
  bool acyclic() const;
  /// Every (d+2)-subset supports a circuit and nothing smaller does.
  bool uniform() const;
  /// Apply element relabeling e -> perm[e-1].
  OrientedMatroid relabeled(std::span<const int> perm) const;

  friend bool operator==(const OrientedMatroid&, const OrientedMatroid&) = default;
  friend auto operator<=>(const OrientedMatroid& a, const OrientedMatroid& b) {
    if (auto c = a.ground_.n <=> b.ground_.n; c != 0) return c;
    if (auto c = a.ground_.d <=> b.ground_.d; c != 0) return c;
    return a.circuits_ <=> b.circuits_;
  }

 private:
  GroundSet ground_;
  std::vector<Circuit> circuits_;
};

/// n labelled points in R^d, stored as the columns of a d x n matrix.
class PointConfiguration {
 public:
  PointConfiguration(int d, const std::vector<std::vector<double>>& points);
  explicit PointConfiguration(Eigen::MatrixXd coordinates);

  int n() const { return static_cast<int>(coords_.cols()); }
  int d() const { return static_cast<int>(coords_.rows()); }
  const Eigen::MatrixXd& coordinates() const { return coords_; }
  /// Point with 1-based label i.
  Eigen::VectorXd point(int i) const { return coords_.col(i - 1); }
  /// The (d+1) x n matrix with a trailing row of ones.
  Eigen::MatrixXd lifted() const;
  /// The points affinely span R^d.
  bool spans() const;

 private:
  Eigen::MatrixXd coords_;
};

/**
 * The minimal Radon partitions of a point configuration. Throws
 * RankDeficientError when the points do not affinely span R^d.
 */
OrientedMatroid circuits_of_points(const PointConfiguration& config);

/// Orthonormal basis of the affine dependences (kernel of the lifted matrix).
Eigen::MatrixXd dependence_space(const PointConfiguration& config);

/// (a, b) contains some circuit, in either orientation. Throws on overlapping a, b.
bool is_radon_partition(const OrientedMatroid& m, ElementSet a, ElementSet b);

/// m <= m2: every circuit of m2 is a Radon partition of m.
bool weak_map_leq(const OrientedMatroid& m, const OrientedMatroid& m2);

enum class AxiomViolationKind { kMalformed, kSupportMinimality, kSymmetry, kWeakElimination };

struct AxiomViolation {
  AxiomViolationKind kind;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  bool has(AxiomViolationKind kind) const;
};

/**
 * Check a hand-entered circuit list. Each entry is one signed circuit as
 * written; entries denoting the same unordered circuit are symmetry
 * violations.
 */
AxiomReport check_circuit_axioms(const GroundSet& ground, std::span<const SignedSet> entries);
AxiomReport check_circuit_axioms(const OrientedMatroid& m);

std::string to_string(AxiomViolationKind kind);

}  // namespace omstretch
