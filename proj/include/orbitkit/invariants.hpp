#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/algebra.hpp"

namespace orbitkit {

/// Congruence class of a point: one residue per modulus. D_n contributes
/// two residues (mod 2, mod 4); groups with a single class use modulus 1.
/// Reducible groups concatenate the classes of their factors.
struct CongruenceClass {
  std::vector<int> values;
  std::vector<int> moduli;

  std::string str() const;
  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;
};

/// Componentwise sum modulo the shared moduli.
CongruenceClass operator+(const CongruenceClass& a, const CongruenceClass& b);
CongruenceClass operator*(int k, const CongruenceClass& a);

/// Throws DomainError for non-integral coordinates and for H3, H4, I2(m).
/// H2 coordinates a + bτ must have a, b ∈ ℤ and are evaluated at τ = 3.
CongruenceClass congruence_number(const CoxeterGroup& group, const Point& x);

/// I^{(2k)} = ⟨λ,λ⟩^k · |G(λ)|.
QTau index_even(const CoxeterGroup& group, const Point& dominant, unsigned k);

/// Closed form for the index of G(a) ⊗ G(b), degree 0, 2 or 4. Degree 4
/// needs an irreducible group.
QTau index_of_product(const CoxeterGroup& group, const Point& a, const Point& b, unsigned degree);

/// Σ multiplicity · I^{(degree)} over the terms of a decomposition.
QTau index_of_sum(const OrbitSum& sum, unsigned degree);

struct AnomalyVector {
  /// Fundamental weight of the removed node, unnormalized.
  Point u;
  int removed_node;
};

/// Nodes (0-based) whose removal leaves a maximal subgroup with a U(1)
/// factor, or the last node for H2, H3, H4. Empty when none exists.
std::vector<int> anomaly_nodes(const CoxeterGroup& group);

/// u = ω_j for the removed node j. Without a node, uses the single allowed
/// choice or, for A_n, the last node; throws DomainError if the node is not
/// allowed.
AnomalyVector anomaly_vector(const CoxeterGroup& group, std::optional<int> removed_node = std::nullopt);

/// Σ_{μ ∈ orbit} ⟨μ,u⟩^degree for odd degree.
QTau anomaly_number(const Orbit& orbit, const AnomalyVector& u, unsigned degree);

/// Σ multiplicity · I^{(degree)}(term) over a decomposition.
QTau anomaly_of_sum(const OrbitSum& sum, const AnomalyVector& u, unsigned degree,
                    const ComputeLimits& limits = {});

/// I³(a⊗b) = I³(a)·|b| + |a|·I³(b).
QTau anomaly_of_product(const Orbit& a, const Orbit& b, const AnomalyVector& u);

}  // namespace orbitkit
