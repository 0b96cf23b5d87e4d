#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orbitkit/coxeter.hpp"
#include "orbitkit/point.hpp"

namespace orbitkit {

/// Budget and parallelism for enumerations.
struct ComputeLimits {
  static constexpr std::size_t kDefaultMaxPoints = 10'000'000;

  std::size_t max_points = kDefaultMaxPoints;
  unsigned threads = 1;

  /// Reads ORBITKIT_MAX_POINTS and ORBITKIT_THREADS, falling back to defaults.
  static ComputeLimits from_environment();
};

/// Reflects at negative coordinates until the point is dominant.
Point dominant_representative(const CoxeterGroup& group, Point x);

/// The unique orbit member with all coordinates ≤ 0.
Point lowest_point(const CoxeterGroup& group, Point x);

/// Nodes where a dominant point has coordinate zero.
std::vector<int> zero_nodes(const Point& dominant);

/// |G| / |Stab(λ)| without enumerating; the stabilizer is the subgroup on
/// the zero coordinates of the dominant point.
mpz_class orbit_size(const CoxeterGroup& group, const Point& dominant);

/// A G-orbit: its dominant point and all members in canonical order
/// (lexicographic by real value).
class Orbit {
 public:
  Orbit(GroupPtr group, Point dominant, std::vector<Point> points);

  const CoxeterGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Point& dominant() const noexcept { return dominant_; }
  const std::vector<Point>& points() const& noexcept { return points_; }
  std::vector<Point> points() && { return std::move(points_); }
  std::size_t size() const noexcept { return points_.size(); }

  bool contains(const Point& p) const;
  std::optional<std::size_t> index_of(const Point& p) const;

  QTau squared_radius() const { return group_->scalar_product(dominant_, dominant_); }

 private:
  GroupPtr group_;
  Point dominant_;
  std::vector<Point> points_;
};

/// Enumerates G(seed). Any seed is accepted; it is first moved to its
/// dominant representative, then the orbit is grown by reflecting only at
/// positive coordinates. Throws SizeGuardError when |G(seed)| exceeds the
/// budget.
Orbit generate_orbit(const CoxeterGroup& group, const Point& seed, const ComputeLimits& limits = {});

/// Closure of `seed` under the reflections at `nodes` (all nodes when
/// empty), by plain breadth-first search. Result in canonical order.
std::vector<Point> reflection_closure(const CoxeterGroup& group, const Point& seed, std::span<const int> nodes,
                                      const ComputeLimits& limits = {});

}  // namespace orbitkit
