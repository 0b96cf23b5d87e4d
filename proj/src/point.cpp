#include "orbitkit/point.hpp"

#include <algorithm>

#include "orbitkit/error.hpp"

namespace orbitkit {

Point Point::parse(std::string_view text) {
  std::vector<QTau> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      coords.push_back(QTau::parse(piece));
    } catch (const ParseError& e) {
      throw ParseError(std::string("coordinate ") + std::to_string(coords.size() + 1) + ": " + e.message(),
                       start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Point(std::move(coords));
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const QTau& c) { return c.is_zero(); });
}

bool Point::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const QTau& c) { return c.sign() >= 0; });
}

bool Point::is_strictly_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const QTau& c) { return c.sign() > 0; });
}

bool Point::is_antidominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const QTau& c) { return c.sign() <= 0; });
}

std::string Point::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ',';
    out += coords_[i].str();
  }
  return out;
}

std::size_t Point::hash() const noexcept {
  std::size_t seed = coords_.size();
  for (const auto& c : coords_) hash_combine(seed, c.hash());
  return seed;
}

Point& Point::operator+=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(const QTau& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

Point Point::operator-() const {
  Point out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const Point& lhs, const Point& rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (auto c = lhs[i] <=> rhs[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void require_same_dimension(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw DomainError("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace orbitkit
