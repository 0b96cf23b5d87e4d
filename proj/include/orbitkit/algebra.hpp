#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "orbitkit/orbit.hpp"

namespace orbitkit {

/// A formal sum of orbits with integer multiplicities, keyed by dominant
/// point. Multiplicities are positive for ordinary products and powers and
/// may be negative for signed (S-orbit) products.
class OrbitSum {
 public:
  struct Term {
    Point dominant;
    std::int64_t multiplicity;
    mpz_class size;
    QTau squared_radius;
  };

  explicit OrbitSum(GroupPtr group) : group_(std::move(group)) {}

  const CoxeterGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }

  void add(const Point& dominant, std::int64_t multiplicity);
  std::int64_t multiplicity(const Point& dominant) const;
  const std::map<Point, std::int64_t>& terms() const& noexcept { return terms_; }
  std::map<Point, std::int64_t> terms() && { return std::move(terms_); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Terms by descending squared radius, then lexicographic dominant point.
  std::vector<Term> sorted_terms() const;
  /// Σ multiplicity · |G(d)|.
  mpz_class weighted_size() const;

  std::string str() const;

  friend bool operator==(const OrbitSum& a, const OrbitSum& b) { return a.terms_ == b.terms_; }

 private:
  GroupPtr group_;
  std::map<Point, std::int64_t> terms_;
};

/// How a product is decomposed.
enum class ProductMethod {
  /// Form all |a|·|b| sums and count the dominant ones.
  direct,
  /// Pair only the dominant point of `a` with every point of `b`, reduce
  /// each sum to its dominant representative and rescale by orbit sizes.
  orbit_stabilizer,
};

/// G(λ) ⊗ G(μ) decomposed into orbits.
OrbitSum orbit_product(const Orbit& a, const Orbit& b, const ComputeLimits& limits = {},
                       ProductMethod method = ProductMethod::direct);

enum class Component { symm, anti, mixed };

Component parse_component(std::string_view text);
std::string_view to_string(Component c);

/// Number of index tuples selected for a symmetry component: N(N+1)/2 and
/// N(N-1)/2 for k = 2; C(N+2,3), C(N,3), N(N²-1)/3 for k = 3.
mpz_class tuple_count(std::size_t n, int k, Component component);

/// Permutation-symmetry component of the k-th power (k = 2, 3) of an orbit.
/// Points are numbered in the orbit's canonical order.
OrbitSum symmetrized_power(const Orbit& a, int k, Component component, const ComputeLimits& limits = {});

/// An orbit of a strictly dominant point with alternating signs:
/// +1 at the dominant point, flipped by every simple reflection.
class SignedOrbit {
 public:
  /// Throws DomainError unless the orbit's dominant point is strictly
  /// dominant; throws InternalError if the signs are inconsistent.
  explicit SignedOrbit(Orbit orbit);

  const Orbit& orbit() const& noexcept { return orbit_; }
  Orbit orbit() && { return std::move(orbit_); }
  /// Sign of the i-th point in canonical order.
  int sign(std::size_t i) const { return signs_[i]; }
  const std::vector<std::int8_t>& signs() const& noexcept { return signs_; }
  std::vector<std::int8_t> signs() && { return std::move(signs_); }

 private:
  Orbit orbit_;
  std::vector<std::int8_t> signs_;
};

enum class Basis { C, S };

struct SignedDecomposition {
  /// C: coefficients of plain orbits. S: coefficients of S-orbits.
  Basis basis;
  OrbitSum terms;
};

/// C×C → C, C×S → S, S×C → S, S×S → C.
SignedDecomposition signed_product(const Orbit& a, const Orbit& b, const ComputeLimits& limits = {});
SignedDecomposition signed_product(const Orbit& a, const SignedOrbit& b, const ComputeLimits& limits = {});
SignedDecomposition signed_product(const SignedOrbit& a, const Orbit& b, const ComputeLimits& limits = {});
SignedDecomposition signed_product(const SignedOrbit& a, const SignedOrbit& b, const ComputeLimits& limits = {});

/// Exponent vectors of the orbit's invariant polynomial Σ x^μ, one per point.
std::vector<Point> orbit_polynomial(const Orbit& a);

}  // namespace orbitkit
