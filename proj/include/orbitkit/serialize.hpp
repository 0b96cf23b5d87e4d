#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>

#include "orbitkit/algebra.hpp"
#include "orbitkit/invariants.hpp"
#include "orbitkit/polytope.hpp"

namespace orbitkit {

inline constexpr const char* kSchemaVersion = "v1";

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json to_json(const mpz_class& v);
/// Scalars are strings in the canonical "a+b*t" form.
nlohmann::ordered_json to_json(const QTau& v);
nlohmann::ordered_json to_json(const Point& p);
nlohmann::ordered_json to_json(const std::vector<Point>& points);
/// List of {dominant, multiplicity, size}, largest radius first.
nlohmann::ordered_json to_json(const OrbitSum& sum);
nlohmann::ordered_json to_json(const CongruenceClass& c);
nlohmann::ordered_json to_json(const FaceOrbit& f);
nlohmann::ordered_json to_json(const Matrix<QTau>& m);
nlohmann::ordered_json to_json(const Matrix<int>& m);

/// {u, removed_node (1-based), normalized: false}
nlohmann::ordered_json anomaly_convention(const AnomalyVector& u);

Point point_from_json(const nlohmann::ordered_json& j);
OrbitSum orbit_sum_from_json(const GroupPtr& group, const nlohmann::ordered_json& j);

/// {"schema", "command", "group", "status": "ok", "payload"}
nlohmann::ordered_json envelope(std::string_view command, std::string_view group, nlohmann::ordered_json payload);

}  // namespace orbitkit
