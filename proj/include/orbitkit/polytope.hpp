#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/orbit.hpp"

namespace orbitkit {

enum class Mark : char { star = 's', black = 'b', open = 'o' };

/// A decorated diagram: one mark per node.
class Decoration {
 public:
  Decoration() = default;
  explicit Decoration(std::vector<Mark> marks) : marks_(std::move(marks)) {}

  /// One character per node from {o, b, s}, e.g. "sbo".
  static Decoration parse(std::string_view text);

  std::size_t size() const noexcept { return marks_.size(); }
  Mark operator[](std::size_t i) const { return marks_[i]; }
  Mark& operator[](std::size_t i) { return marks_[i]; }
  const std::vector<Mark>& marks() const noexcept { return marks_; }

  /// Nodes (0-based) carrying the given mark.
  std::vector<int> nodes(Mark mark) const;
  int count(Mark mark) const;
  /// Face dimension, i.e. the number of stars.
  int dimension() const { return count(Mark::star); }
  bool is_extreme() const { return count(Mark::star) == 0 && count(Mark::black) > 0; }

  std::string str() const;
  /// Pretty form with ●, ○ and ★.
  std::string symbols() const;

  friend bool operator==(const Decoration&, const Decoration&) = default;
  /// Table order: dimension, then number of open nodes, then
  /// lexicographic with star < black < open.
  friend std::strong_ordering operator<=>(const Decoration& a, const Decoration& b);

 private:
  std::vector<Mark> marks_;
};

struct FaceOrbit {
  Decoration decoration;
  int dimension = 0;
  mpz_class count;
  /// |G(★)|, the symmetry group of one face.
  mpz_class symmetry_order;
  /// |G(○)|, the subgroup fixing the face pointwise.
  mpz_class pointwise_stabilizer_order;
};

/// Black where the dominant point is positive, open elsewhere.
Decoration extreme_decoration(const CoxeterGroup& group, const Point& dominant);

/// All 2^n - 1 extreme decorations in table order.
std::vector<Decoration> extreme_decorations(const CoxeterGroup& group);

/// One decoration step per black node: star it, then blacken its open
/// neighbours. Decorations with every node starred are dropped.
std::vector<Decoration> decoration_successors(const CoxeterGroup& group, const Decoration& d);

FaceOrbit face_orbit(const CoxeterGroup& group, const Decoration& d);

/// Face orbits of the polytope fixed by an extreme decoration, vertices
/// included, in table order.
std::vector<FaceOrbit> enumerate_faces(const CoxeterGroup& group, const Decoration& start);

struct MembershipTable {
  std::vector<Decoration> rows;
  std::vector<Decoration> columns;
  /// member[r][c]: row r is a face type of the polytope in column c.
  std::vector<std::vector<bool>> member;
};

MembershipTable face_membership_table(const CoxeterGroup& group);

/// Vertices of the face of type `face` containing the dominant seed: the
/// closure of the seed under the star-node reflections, canonical order.
std::vector<Point> face_vertices(const CoxeterGroup& group, const Point& seed, const Decoration& face,
                                 const ComputeLimits& limits = {});

/// Every face of the given type as a sorted list of indices into `orbit`.
std::vector<std::vector<std::size_t>> face_orbit_vertices(const Orbit& orbit, const Decoration& face,
                                                          const ComputeLimits& limits = {});

/// ASCII OFF mesh. Rank ≤ 3 gives vertices and polygonal 2-faces (rank 2:
/// one polygon); higher ranks give an nOFF point cloud.
std::string export_off(const CoxeterGroup& group, const Point& seed, const ComputeLimits& limits = {});

}  // namespace orbitkit
