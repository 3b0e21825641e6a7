#include "omstretch/om_core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "omstretch/errors.hpp"
#include "omstretch/linalg.hpp"

namespace omstretch {

GroundSet GroundSet::make(int n, int d) {
  if (d < 1) throw ArgumentError("dimension d must be at least 1");
  if (n < d + 2) {
    throw ArgumentError("ground set of " + std::to_string(n) + " elements has no circuits in dimension " +
                        std::to_string(d) + " (need n >= d + 2)");
  }
  if (n > kMaxElements) throw ArgumentError("ground set too large");
  return GroundSet{n, d};
}

Circuit::Circuit(ElementSet a, ElementSet b) {
  if (a.intersects(b)) {
    throw ArgumentError("circuit parts " + a.to_string() + " and " + b.to_string() + " overlap");
  }
  if ((a | b).empty()) throw ArgumentError("circuit with empty support");
  const int first = (a | b).min();
  signs_ = a.contains(first) ? SignedSet{a, b} : SignedSet{b, a};
}

std::string Circuit::to_string() const { return signs_.pos.to_string() + "|" + signs_.neg.to_string(); }

SignedCircuitVertex SignedCircuitVertex::from_parts(ElementSet a, ElementSet b) {
  Circuit c(a, b);
  return {c, c.positive() == a ? Sign::kPositive : Sign::kNegative};
}

OrientedMatroid::OrientedMatroid(GroundSet ground, std::vector<Circuit> circuits)
    : ground_(GroundSet::make(ground.n, ground.d)), circuits_(std::move(circuits)) {
  const ElementSet all = ground_.elements();
  for (const Circuit& c : circuits_) {
    if (!c.support().is_subset_of(all)) {
      throw ArgumentError("circuit " + c.to_string() + " uses labels outside 1.." + std::to_string(ground_.n));
    }
    if (c.support().size() > ground_.d + 2) {
      throw ArgumentError("circuit " + c.to_string() + " larger than d + 2");
    }
  }
  std::sort(circuits_.begin(), circuits_.end());
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
}

bool OrientedMatroid::contains(const Circuit& c) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), c);
}

std::vector<SignedSet> OrientedMatroid::signed_circuits() const {
  std::vector<SignedSet> out;
  out.reserve(2 * circuits_.size());
  for (const Circuit& c : circuits_) {
    out.push_back(c.signs());
    out.push_back(c.signs().negated());
  }
  return out;
}

bool OrientedMatroid::acyclic() const {
  return std::none_of(circuits_.begin(), circuits_.end(), [](const Circuit& c) { return c.negative().empty(); });
}

bool OrientedMatroid::uniform() const {
  const auto expected = subsets_of_size(ground_.n, ground_.d + 2).size();
  if (circuits_.size() != expected) return false;
  std::set<ElementSet> supports;
  for (const Circuit& c : circuits_) {
    if (c.support().size() != ground_.d + 2) return false;
    supports.insert(c.support());
  }
  return supports.size() == expected;
}

OrientedMatroid OrientedMatroid::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != ground_.n) throw ArgumentError("relabeling has wrong length");
  auto map_set = [&](ElementSet s) {
    ElementSet out;
    for (int e : s.elements()) out.insert(perm[e - 1]);
    return out;
  };
  std::vector<Circuit> mapped;
  mapped.reserve(circuits_.size());
  for (const Circuit& c : circuits_) mapped.emplace_back(map_set(c.positive()), map_set(c.negative()));
  return OrientedMatroid(ground_, std::move(mapped));
}

namespace {

Eigen::MatrixXd points_to_matrix(int d, const std::vector<std::vector<double>>& points) {
  if (d < 1) throw ArgumentError("point dimension must be at least 1");
  Eigen::MatrixXd coords(d, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != d) {
      throw ArgumentError("point " + std::to_string(i + 1) + " has " + std::to_string(points[i].size()) +
                          " coordinates, expected " + std::to_string(d));
    }
    for (int k = 0; k < d; ++k) coords(k, static_cast<Eigen::Index>(i)) = points[i][k];
  }
  return coords;
}

}  // namespace

PointConfiguration::PointConfiguration(int d, const std::vector<std::vector<double>>& points)
    : PointConfiguration(points_to_matrix(d, points)) {}

PointConfiguration::PointConfiguration(Eigen::MatrixXd coordinates) : coords_(std::move(coordinates)) {
  if (coords_.rows() < 1) throw ArgumentError("point dimension must be at least 1");
  if (!coords_.allFinite()) throw ArgumentError("point coordinates must be finite");
  GroundSet::make(n(), d());
}

Eigen::MatrixXd PointConfiguration::lifted() const {
  Eigen::MatrixXd l(d() + 1, n());
  l.topRows(d()) = coords_;
  l.row(d()).setOnes();
  return l;
}

bool PointConfiguration::spans() const { return numeric_rank(lifted()) == d() + 1; }

Eigen::MatrixXd dependence_space(const PointConfiguration& config) {
  if (!config.spans()) {
    throw RankDeficientError("points do not affinely span R^" + std::to_string(config.d()));
  }
  return kernel_basis(config.lifted());
}

OrientedMatroid circuits_of_points(const PointConfiguration& config) {
  const Eigen::MatrixXd dependences = dependence_space(config);
  std::vector<Circuit> circuits;
  for (const ElementaryVector& e : elementary_vectors(dependences, kSignTolerance)) {
    circuits.emplace_back(e.signs.pos, e.signs.neg);
  }
  return OrientedMatroid(GroundSet::make(config.n(), config.d()), std::move(circuits));
}

bool is_radon_partition(const OrientedMatroid& m, ElementSet a, ElementSet b) {
  if (a.intersects(b)) throw ArgumentError("Radon partition parts " + a.to_string() + " and " + b.to_string() + " overlap");
  const SignedSet ab{a, b};
  return std::any_of(m.circuits().begin(), m.circuits().end(), [&](const Circuit& c) {
    return c.signs().conformal_below(ab) || c.signs().negated().conformal_below(ab);
  });
}

bool weak_map_leq(const OrientedMatroid& m, const OrientedMatroid& m2) {
  if (!(m.ground() == m2.ground())) throw ArgumentError("weak map comparison across different ground sets");
  return std::all_of(m2.circuits().begin(), m2.circuits().end(), [&](const Circuit& c) {
    return is_radon_partition(m, c.positive(), c.negative());
  });
}

bool AxiomReport::has(AxiomViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const AxiomViolation& v) { return v.kind == kind; });
}

std::string to_string(AxiomViolationKind kind) {
  switch (kind) {
    case AxiomViolationKind::kMalformed: return "malformed";
    case AxiomViolationKind::kSupportMinimality: return "support-minimality";
    case AxiomViolationKind::kSymmetry: return "symmetry";
    case AxiomViolationKind::kWeakElimination: return "weak-elimination";
  }
  return "unknown";
}

AxiomReport check_circuit_axioms(const GroundSet& ground, std::span<const SignedSet> entries) {
  AxiomReport report;
  auto flag = [&](AxiomViolationKind kind, std::string detail) {
    report.violations.push_back({kind, std::move(detail)});
  };

  const ElementSet all = ElementSet::range(ground.n);
  for (const SignedSet& x : entries) {
    if (x.pos.intersects(x.neg)) flag(AxiomViolationKind::kMalformed, x.to_string() + " has overlapping parts");
    if (x.is_zero()) flag(AxiomViolationKind::kMalformed, "empty circuit");
    if (!x.support().is_subset_of(all)) flag(AxiomViolationKind::kMalformed, x.to_string() + " outside ground set");
    if (x.support().size() > ground.d + 2) flag(AxiomViolationKind::kMalformed, x.to_string() + " larger than d + 2");
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const SignedSet& x = entries[i];
      const SignedSet& y = entries[j];
      if (x == y || x == y.negated()) {
        flag(AxiomViolationKind::kSymmetry, x.to_string() + " and " + y.to_string() + " denote the same circuit");
      } else if (x.support() != y.support() &&
                 (x.support().is_subset_of(y.support()) || y.support().is_subset_of(x.support()))) {
        flag(AxiomViolationKind::kSupportMinimality,
             "supports of " + x.to_string() + " and " + y.to_string() + " are nested");
      }
    }
  }

  std::vector<SignedSet> signed_set;
  for (const SignedSet& x : entries) {
    signed_set.push_back(x);
    signed_set.push_back(x.negated());
  }
  std::sort(signed_set.begin(), signed_set.end());
  signed_set.erase(std::unique(signed_set.begin(), signed_set.end()), signed_set.end());

  for (const SignedSet& x : signed_set) {
    for (const SignedSet& y : signed_set) {
      if (x == y || x == y.negated()) continue;
      for (int e : (x.pos & y.neg).elements()) {
        const ElementSet e_set{e};
        const SignedSet bound{(x.pos | y.pos) - e_set, (x.neg | y.neg) - e_set};
        const bool eliminated = std::any_of(signed_set.begin(), signed_set.end(),
                                            [&](const SignedSet& z) { return z.conformal_below(bound); });
        if (!eliminated) {
          flag(AxiomViolationKind::kWeakElimination, "no circuit eliminates " + std::to_string(e) + " from " +
                                                         x.to_string() + " and " + y.to_string());
        }
      }
    }
  }
  return report;
}

AxiomReport check_circuit_axioms(const OrientedMatroid& m) {
  std::vector<SignedSet> entries;
  entries.reserve(m.circuits().size());
  for (const Circuit& c : m.circuits()) entries.push_back(c.signs());
  return check_circuit_axioms(m.ground(), entries);
}

}  // namespace omstretch
