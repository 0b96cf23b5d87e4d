#include "orbitkit/serialize.hpp"

#include "orbitkit/error.hpp"

namespace orbitkit {

using json = nlohmann::ordered_json;

json to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json to_json(const QTau& v) { return json(v.str()); }

json to_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

json to_json(const std::vector<Point>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

json to_json(const OrbitSum& sum) {
  json out = json::array();
  for (const auto& t : sum.sorted_terms()) {
    out.push_back({{"dominant", to_json(t.dominant)}, {"multiplicity", t.multiplicity}, {"size", to_json(t.size)}});
  }
  return out;
}

json to_json(const CongruenceClass& c) { return {{"values", c.values}, {"moduli", c.moduli}}; }

json to_json(const FaceOrbit& f) {
  return {{"decoration", f.decoration.str()},
          {"dimension", f.dimension},
          {"count", to_json(f.count)},
          {"symmetry_order", to_json(f.symmetry_order)},
          {"pointwise_stabilizer_order", to_json(f.pointwise_stabilizer_order)}};
}

json to_json(const Matrix<QTau>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Matrix<int>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

json anomaly_convention(const AnomalyVector& u) {
  return {{"u", to_json(u.u)}, {"removed_node", u.removed_node + 1}, {"normalized", false}};
}

Point point_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a point must be a JSON array", 0);
  std::vector<QTau> coords;
  for (const auto& c : j) {
    if (c.is_string()) {
      coords.push_back(QTau::parse(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coords.emplace_back(c.get<std::int64_t>());
    } else {
      throw ParseError("point coordinates must be strings or integers", 0);
    }
  }
  return Point(std::move(coords));
}

OrbitSum orbit_sum_from_json(const GroupPtr& group, const json& j) {
  OrbitSum out(group);
  for (const auto& term : j) out.add(point_from_json(term.at("dominant")), term.at("multiplicity").get<std::int64_t>());
  return out;
}

json envelope(std::string_view command, std::string_view group, json payload) {
  return {{"schema", kSchemaVersion},
          {"command", std::string(command)},
          {"group", std::string(group)},
          {"status", "ok"},
          {"payload", std::move(payload)}};
}

}  // namespace orbitkit
