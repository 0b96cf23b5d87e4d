#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitkit/matrix.hpp"
#include "orbitkit/point.hpp"
#include "orbitkit/qtau.hpp"

namespace orbitkit {

enum class Family { A, B, C, D, E, F, G, H, I };

/// One connected component of a Coxeter diagram.
///
/// Family::I is the dihedral family I2(m) = H2(m); it is only used for
/// m ∉ {3,4,5,6} (those are A2, C2, H2, G2).
struct SimpleFactor {
  Family family = Family::A;
  int rank = 1;
  int m = 0;

  std::string name() const;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Throws DomainError on out-of-range ranks; normalizes I2(5) to H2.
SimpleFactor make_factor(Family family, int rank, int m = 0);

/// |G| of a connected group, per the classical order table.
mpz_class factor_order(const SimpleFactor& factor);

struct GroupSpec {
  std::vector<SimpleFactor> factors;

  /// Names like "A3", "E8", "H2", "I2(7)" (alias "H2(7)"), products joined
  /// with 'x' ("A1xA1").
  static GroupSpec parse(std::string_view text);

  std::string name() const;
  int rank() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// A finite Coxeter group with its derived matrices.
///
/// Nodes are 0-based and concatenated in factor order; within a factor the
/// numbering is left to right along the main line, with the branch node of
/// D_n / E_n carrying the highest index. Long roots have ⟨α,α⟩ = 2; short
/// roots 1 (B, C, F4) or 2/3 (G2).
///
/// Groups containing an I2(m) factor carry only the Coxeter matrix and the
/// order; the coordinate accessors throw DomainError for them.
class CoxeterGroup : public std::enable_shared_from_this<CoxeterGroup> {
 public:
  static std::shared_ptr<const CoxeterGroup> build(const GroupSpec& spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::string name() const { return spec_.name(); }
  int rank() const noexcept { return rank_; }
  bool is_irreducible() const noexcept { return spec_.factors.size() == 1; }
  bool has_coordinates() const noexcept { return has_coordinates_; }

  const Matrix<int>& coxeter_matrix() const noexcept { return coxeter_; }
  const mpz_class& order() const noexcept { return order_; }

  const Matrix<QTau>& cartan() const;
  const Matrix<QTau>& cartan_inverse() const;
  const std::vector<QTau>& root_norms() const;
  const Matrix<QTau>& weight_gram() const;

  /// Index of the factor owning `node`, and the node's offset within it.
  std::pair<std::size_t, int> locate(int node) const;
  /// Diagram neighbours (m_ij ≥ 3).
  const std::vector<int>& neighbors(int node) const;

  /// α_k in the ω-basis (row k of the Cartan matrix).
  Point simple_root(int k) const;
  Point zero_point() const { return Point(static_cast<std::size_t>(rank_)); }

  /// r_k x in the ω-basis: x'_j = x_j - x_k C_kj.
  Point reflect(int k, const Point& x) const;
  void reflect_in_place(int k, Point& x) const;

  QTau scalar_product(const Point& x, const Point& y) const;

  /// Order of the parabolic subgroup generated by the reflections at
  /// `nodes`, found by classifying the induced subdiagram.
  mpz_class subdiagram_order(std::span<const int> nodes) const;
  /// Connected components of the induced subdiagram, classified.
  std::vector<SimpleFactor> classify_subdiagram(std::span<const int> nodes) const;

  void require_coordinates() const;
  void require_point(const Point& x) const;
  void require_node(int k) const;

 private:
  explicit CoxeterGroup(GroupSpec spec);

  GroupSpec spec_;
  int rank_ = 0;
  bool has_coordinates_ = false;
  Matrix<int> coxeter_;
  Matrix<QTau> cartan_;
  Matrix<QTau> cartan_inv_;
  std::vector<QTau> root_norms_;
  Matrix<QTau> weight_gram_;
  mpz_class order_;
  std::vector<int> factor_offsets_;
  std::vector<std::vector<int>> neighbors_;
  // nonzero entries of each Cartan row, for the reflection kernel
  std::vector<std::vector<std::pair<int, QTau>>> cartan_rows_;
};

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

GroupPtr build_group(const GroupSpec& spec);
GroupPtr build_group(std::string_view name);

/// Exact inverse over ℚ(τ) by Gauss-Jordan elimination.
Matrix<QTau> invert(const Matrix<QTau>& m);
/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
std::vector<QTau> leading_principal_minors(const Matrix<QTau>& m);

}  // namespace orbitkit
