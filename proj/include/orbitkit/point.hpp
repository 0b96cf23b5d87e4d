#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/qtau.hpp"

namespace orbitkit {

/// Coordinate vector in the basis of fundamental weights (ω-basis).
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dimension) : coords_(dimension) {}
  explicit Point(std::vector<QTau> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<QTau> coords) : coords_(coords) {}

  /// Comma-separated scalars, e.g. "1,0,1+t".
  static Point parse(std::string_view text);
  static Point zero(std::size_t dimension) { return Point(dimension); }

  std::size_t size() const noexcept { return coords_.size(); }
  const QTau& operator[](std::size_t i) const { return coords_[i]; }
  QTau& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<QTau>& coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  /// All coordinates ≥ 0.
  bool is_dominant() const;
  /// All coordinates > 0.
  bool is_strictly_dominant() const;
  /// All coordinates ≤ 0.
  bool is_antidominant() const;

  std::string str() const;
  std::size_t hash() const noexcept;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(const QTau& factor);
  friend Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
  friend Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
  friend Point operator*(const QTau& factor, Point p) { return p *= factor; }
  Point operator-() const;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic by real value of each coordinate.
  friend std::strong_ordering operator<=>(const Point& lhs, const Point& rhs);

 private:
  std::vector<QTau> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept { return p.hash(); }
};

/// Throws DomainError unless both points have the same dimension.
void require_same_dimension(const Point& a, const Point& b);

}  // namespace orbitkit
