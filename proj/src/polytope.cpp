#include "orbitkit/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "orbitkit/error.hpp"

namespace orbitkit {

namespace {

int mark_rank(Mark m) {
  switch (m) {
    case Mark::star: return 0;
    case Mark::black: return 1;
    case Mark::open: return 2;
  }
  return 3;
}

std::vector<Decoration> reachable(const CoxeterGroup& group, const Decoration& start) {
  std::set<Decoration> seen{start};
  std::vector<Decoration> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto& next : decoration_successors(group, queue[head])) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

void require_extreme(const CoxeterGroup& group, const Decoration& d) {
  if (d.size() != static_cast<std::size_t>(group.rank())) {
    throw DomainError("decoration '" + d.str() + "' has " + std::to_string(d.size()) + " marks, " + group.name() +
                      " has rank " + std::to_string(group.rank()));
  }
  if (!d.is_extreme()) {
    throw DomainError("'" + d.str() + "' is not an extreme decoration (black and open marks only, one black at least)");
  }
}

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Upper factor U with W = Uᵀ U, so |U x|² = xᵀ W x.
std::vector<std::vector<double>> cholesky_upper(const Matrix<QTau>& w) {
  const std::size_t n = w.rows();
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = w(i, j).to_double();
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0) throw InternalError("weight Gram matrix is not positive definite");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  std::vector<std::vector<double>> u(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i][j] = l[j][i];
  return u;
}

std::vector<double> embed(const std::vector<std::vector<double>>& u, const Point& x) {
  const std::size_t n = x.size();
  std::vector<double> y(std::max<std::size_t>(n, 3), 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) y[i] += u[i][j] * x[j].to_double();
  return y;
}

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

// Counter-clockwise around the outward normal.
std::vector<std::size_t> orient_polygon(const std::vector<Vec3>& pos, std::vector<std::size_t> face) {
  Vec3 c{0, 0, 0};
  for (auto i : face)
    for (int k = 0; k < 3; ++k) c[k] += pos[i][k] / static_cast<double>(face.size());
  const Vec3 e1 = sub(pos[face[0]], c);
  Vec3 normal{0, 0, 0};
  for (std::size_t k = 1; k < face.size() && dot(normal, normal) < 1e-18; ++k) normal = cross(e1, sub(pos[face[k]], c));
  if (dot(normal, c) < 0) normal = {-normal[0], -normal[1], -normal[2]};
  const Vec3 e2 = cross(normal, e1);
  std::vector<std::pair<double, std::size_t>> keyed;
  for (auto i : face) {
    const Vec3 d = sub(pos[i], c);
    keyed.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), i);
  }
  std::sort(keyed.begin(), keyed.end());
  // start at the smallest index for a stable listing
  auto first = std::min_element(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.second < b.second; });
  std::rotate(keyed.begin(), first, keyed.end());
  std::vector<std::size_t> out;
  for (auto& [angle, i] : keyed) out.push_back(i);
  return out;
}

}  // namespace

Decoration Decoration::parse(std::string_view text) {
  std::vector<Mark> marks;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'o': marks.push_back(Mark::open); break;
      case 'b': marks.push_back(Mark::black); break;
      case 's': marks.push_back(Mark::star); break;
      default:
        throw ParseError("decoration marks must be o, b or s, got '" + std::string(1, text[i]) + "'", i);
    }
  }
  if (marks.empty()) throw ParseError("empty decoration", 0);
  return Decoration(std::move(marks));
}

std::vector<int> Decoration::nodes(Mark mark) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < marks_.size(); ++i)
    if (marks_[i] == mark) out.push_back(static_cast<int>(i));
  return out;
}

int Decoration::count(Mark mark) const {
  return static_cast<int>(std::count(marks_.begin(), marks_.end(), mark));
}

std::string Decoration::str() const {
  std::string out;
  for (Mark m : marks_) out += static_cast<char>(m);
  return out;
}

std::string Decoration::symbols() const {
  std::string out;
  for (Mark m : marks_) {
    switch (m) {
      case Mark::star: out += "★"; break;
      case Mark::black: out += "●"; break;
      case Mark::open: out += "○"; break;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Decoration& a, const Decoration& b) {
  if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
  if (auto c = a.count(Mark::open) <=> b.count(Mark::open); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = mark_rank(a[i]) <=> mark_rank(b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Decoration extreme_decoration(const CoxeterGroup& group, const Point& dominant) {
  group.require_point(dominant);
  if (!dominant.is_dominant()) throw DomainError("expected a dominant point, got (" + dominant.str() + ")");
  if (dominant.is_zero()) throw DomainError("the zero point has no polytope");
  std::vector<Mark> marks;
  for (const auto& c : dominant) marks.push_back(c.sign() > 0 ? Mark::black : Mark::open);
  return Decoration(std::move(marks));
}

std::vector<Decoration> extreme_decorations(const CoxeterGroup& group) {
  const int n = group.rank();
  std::vector<Decoration> out;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<Mark> marks;
    for (int k = 0; k < n; ++k) marks.push_back(mask >> k & 1U ? Mark::black : Mark::open);
    out.emplace_back(std::move(marks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Decoration> decoration_successors(const CoxeterGroup& group, const Decoration& d) {
  std::vector<Decoration> out;
  for (int k : d.nodes(Mark::black)) {
    Decoration next = d;
    next[static_cast<std::size_t>(k)] = Mark::star;
    for (int j : group.neighbors(k))
      if (next[static_cast<std::size_t>(j)] == Mark::open) next[static_cast<std::size_t>(j)] = Mark::black;
    if (next.dimension() < group.rank()) out.push_back(std::move(next));
  }
  return out;
}

FaceOrbit face_orbit(const CoxeterGroup& group, const Decoration& d) {
  if (d.size() != static_cast<std::size_t>(group.rank())) {
    throw DomainError("decoration '" + d.str() + "' does not match the rank of " + group.name());
  }
  const auto stars = d.nodes(Mark::star);
  const auto opens = d.nodes(Mark::open);
  FaceOrbit f;
  f.decoration = d;
  f.dimension = d.dimension();
  f.symmetry_order = group.subdiagram_order(stars);
  f.pointwise_stabilizer_order = group.subdiagram_order(opens);
  f.count = group.order() / (f.symmetry_order * f.pointwise_stabilizer_order);
  return f;
}

std::vector<FaceOrbit> enumerate_faces(const CoxeterGroup& group, const Decoration& start) {
  require_extreme(group, start);
  std::vector<FaceOrbit> out;
  for (const auto& d : reachable(group, start)) out.push_back(face_orbit(group, d));
  return out;
}

MembershipTable face_membership_table(const CoxeterGroup& group) {
  MembershipTable t;
  t.columns = extreme_decorations(group);
  std::vector<std::set<Decoration>> per_column;
  std::set<Decoration> all;
  for (const auto& c : t.columns) {
    auto r = reachable(group, c);
    all.insert(r.begin(), r.end());
    per_column.emplace_back(r.begin(), r.end());
  }
  t.rows.assign(all.begin(), all.end());
  for (const auto& row : t.rows) {
    std::vector<bool> line;
    for (const auto& col : per_column) line.push_back(col.count(row) > 0);
    t.member.push_back(std::move(line));
  }
  return t;
}

std::vector<Point> face_vertices(const CoxeterGroup& group, const Point& seed, const Decoration& face,
                                 const ComputeLimits& limits) {
  group.require_coordinates();
  const Decoration start = extreme_decoration(group, seed);
  const auto faces = reachable(group, start);
  if (!std::binary_search(faces.begin(), faces.end(), face)) {
    throw DomainError("face '" + face.str() + "' does not belong to the polytope '" + start.str() + "'");
  }
  const auto stars = face.nodes(Mark::star);
  if (stars.empty()) return {seed};
  return reflection_closure(group, seed, stars, limits);
}

std::vector<std::vector<std::size_t>> face_orbit_vertices(const Orbit& orbit, const Decoration& face,
                                                          const ComputeLimits& limits) {
  const CoxeterGroup& group = orbit.group();
  std::vector<std::size_t> base;
  for (const auto& p : face_vertices(group, orbit.dominant(), face, limits)) base.push_back(*orbit.index_of(p));
  std::sort(base.begin(), base.end());
  std::set<std::vector<std::size_t>> seen{base};
  std::vector<std::vector<std::size_t>> queue{base};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int k = 0; k < group.rank(); ++k) {
      std::vector<std::size_t> image;
      for (auto i : queue[head]) {
        const auto j = orbit.index_of(group.reflect(k, orbit.points()[i]));
        if (!j) throw InternalError("reflection left the orbit of (" + orbit.dominant().str() + ")");
        image.push_back(*j);
      }
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string export_off(const CoxeterGroup& group, const Point& seed, const ComputeLimits& limits) {
  group.require_coordinates();
  group.require_point(seed);
  const Point dominant = dominant_representative(group, seed);
  const Decoration start = extreme_decoration(group, dominant);
  const Orbit orbit = generate_orbit(group, dominant, limits);
  const auto u = cholesky_upper(group.weight_gram());
  std::vector<std::vector<double>> coords;
  for (const auto& p : orbit.points()) coords.push_back(embed(u, p));

  std::string out;
  const int rank = group.rank();
  if (rank > 3) {
    out += "nOFF\n" + std::to_string(rank) + "\n" + std::to_string(coords.size()) + " 0 0\n";
    for (const auto& y : coords) {
      for (int i = 0; i < rank; ++i) out += (i ? " " : "") + fmt(y[static_cast<std::size_t>(i)]);
      out += "\n";
    }
    return out;
  }

  std::vector<Vec3> pos;
  for (const auto& y : coords) pos.push_back({y[0], y[1], y[2]});
  std::vector<std::vector<std::size_t>> polygons;
  if (rank == 2) {
    std::vector<std::size_t> all(pos.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    // planar: orient towards +z
    std::vector<std::pair<double, std::size_t>> keyed;
    for (auto i : all) keyed.emplace_back(std::atan2(pos[i][1], pos[i][0]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> poly;
    for (auto& [a, i] : keyed) poly.push_back(i);
    auto first = std::min_element(poly.begin(), poly.end());
    std::rotate(poly.begin(), first, poly.end());
    polygons.push_back(std::move(poly));
  } else if (rank == 3) {
    for (const auto& d : reachable(group, start)) {
      if (d.dimension() != 2) continue;
      for (auto& face : face_orbit_vertices(orbit, d, limits)) polygons.push_back(orient_polygon(pos, std::move(face)));
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& poly : polygons) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      auto a = poly[i], b = poly[(i + 1) % poly.size()];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  if (rank == 1 && pos.size() == 2) edges.emplace(0, 1);
  out += "OFF\n" + std::to_string(pos.size()) + " " + std::to_string(polygons.size()) + " " +
         std::to_string(edges.size()) + "\n";
  for (const auto& p : pos) out += fmt(p[0]) + " " + fmt(p[1]) + " " + fmt(p[2]) + "\n";
  for (const auto& poly : polygons) {
    out += std::to_string(poly.size());
    for (auto i : poly) out += " " + std::to_string(i);
    out += "\n";
  }
  return out;
}

}  // namespace orbitkit
