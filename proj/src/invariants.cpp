#include "orbitkit/invariants.hpp"

#include <algorithm>

#include "orbitkit/error.hpp"

namespace orbitkit {

namespace {

mpz_class integer_coordinate(const QTau& v, int node) {
  if (!v.is_rational() || v.rational_part().get_den() != 1) {
    throw DomainError("congruence class needs integer coordinates, coordinate " + std::to_string(node + 1) + " is " +
                      v.str());
  }
  return v.rational_part().get_num();
}

int reduce(const mpz_class& v, int modulus) {
  mpz_class r = v % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r.get_si());
}

// Class of one connected factor; x holds that factor's coordinates, 1-based.
void factor_class(const SimpleFactor& f, const Point& point, int offset, CongruenceClass& out) {
  const int n = f.rank;
  auto x = [&](int k) { return integer_coordinate(point[static_cast<std::size_t>(offset + k - 1)], offset + k - 1); };
  auto push = [&](const mpz_class& v, int modulus) {
    out.values.push_back(reduce(v, modulus));
    out.moduli.push_back(modulus);
  };
  mpz_class c = 0;
  switch (f.family) {
    case Family::A:
      for (int k = 1; k <= n; ++k) c += k * x(k);
      push(c, n + 1);
      return;
    case Family::B:
      push(x(n), 2);
      return;
    case Family::C:
      for (int k = 1; k <= n; k += 2) c += x(k);
      push(c, 2);
      return;
    case Family::D: {
      push(x(n - 1) + x(n), 2);
      for (int k = 1; k <= n - 2; k += 2) c += 2 * x(k);
      c += (n - 2) * x(n - 1) + n * x(n);
      push(c, 4);
      return;
    }
    case Family::E:
      if (n == 6) {
        push(x(1) - x(2) + x(4) - x(5), 3);
      } else if (n == 7) {
        push(x(4) + x(6) + x(7), 2);
      } else {
        push(0, 1);
      }
      return;
    case Family::F:
    case Family::G:
      push(0, 1);
      return;
    case Family::H:
      if (n == 2) {
        // a + bτ at τ = 3
        auto at3 = [&](int k) {
          const QTau& v = point[static_cast<std::size_t>(offset + k - 1)];
          if (v.rational_part().get_den() != 1 || v.tau_part().get_den() != 1) {
            throw DomainError("congruence class needs coordinates in Z[t], coordinate " +
                              std::to_string(offset + k) + " is " + v.str());
          }
          return mpz_class(v.rational_part().get_num() + 3 * v.tau_part().get_num());
        };
        push(3 * at3(1) + 2 * at3(2), 5);
        return;
      }
      break;
    case Family::I:
      break;
  }
  throw DomainError("congruence classes are not defined for " + f.name());
}

void require_dominant(const CoxeterGroup& group, const Point& p) {
  group.require_point(p);
  if (!p.is_dominant()) throw DomainError("expected a dominant point, got (" + p.str() + ")");
}

QTau from_mpz(const mpz_class& v) { return QTau(mpq_class(v), mpq_class(0)); }

QTau odd_power_sum(const CoxeterGroup& group, const std::vector<Point>& points, const Point& u, unsigned degree) {
  if (degree % 2 == 0) throw DomainError("anomaly numbers have odd degree, got " + std::to_string(degree));
  const auto& w = group.weight_gram();
  const std::size_t n = u.size();
  // ⟨μ,u⟩ = Σ_i μ_i (W u)_i
  std::vector<QTau> wu(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!u[j].is_zero()) wu[i] += w(i, j) * u[j];
  QTau total;
  for (const auto& mu : points) {
    QTau dot;
    for (std::size_t i = 0; i < n; ++i)
      if (!mu[i].is_zero() && !wu[i].is_zero()) dot += mu[i] * wu[i];
    total += pow(dot, degree);
  }
  return total;
}

}  // namespace

std::string CongruenceClass::str() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]) + " mod " + std::to_string(moduli[i]);
  }
  return out;
}

CongruenceClass operator+(const CongruenceClass& a, const CongruenceClass& b) {
  if (a.moduli != b.moduli) throw DomainError("congruence classes with different moduli cannot be added");
  CongruenceClass out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = (a.values[i] + b.values[i]) % a.moduli[i];
  return out;
}

CongruenceClass operator*(int k, const CongruenceClass& a) {
  CongruenceClass out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = ((k % a.moduli[i]) * a.values[i] % a.moduli[i] + a.moduli[i]) % a.moduli[i];
  }
  return out;
}

CongruenceClass congruence_number(const CoxeterGroup& group, const Point& x) {
  if (x.size() != static_cast<std::size_t>(group.rank())) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, " + group.name() + " has rank " +
                      std::to_string(group.rank()));
  }
  CongruenceClass out;
  int offset = 0;
  for (const auto& f : group.spec().factors) {
    factor_class(f, x, offset, out);
    offset += f.rank;
  }
  return out;
}

QTau index_even(const CoxeterGroup& group, const Point& dominant, unsigned k) {
  require_dominant(group, dominant);
  return pow(group.scalar_product(dominant, dominant), k) * from_mpz(orbit_size(group, dominant));
}

QTau index_of_product(const CoxeterGroup& group, const Point& a, const Point& b, unsigned degree) {
  auto I = [&](const Point& p, unsigned d) { return index_even(group, p, d / 2); };
  switch (degree) {
    case 0:
      return I(a, 0) * I(b, 0);
    case 2:
      return I(a, 2) * I(b, 0) + I(a, 0) * I(b, 2);
    case 4: {
      if (!group.is_irreducible()) {
        throw DomainError("the degree-4 product formula needs an irreducible group, got " + group.name());
      }
      const int r = group.rank();
      const QTau factor(mpq_class(2 * (r + 2), r), mpq_class(0));
      return I(a, 4) * I(b, 0) + factor * I(a, 2) * I(b, 2) + I(a, 0) * I(b, 4);
    }
    default:
      throw DomainError("product index formulas exist for degrees 0, 2 and 4, got " + std::to_string(degree));
  }
}

QTau index_of_sum(const OrbitSum& sum, unsigned degree) {
  if (degree % 2 != 0) throw DomainError("indices have even degree, got " + std::to_string(degree));
  QTau total;
  for (const auto& [d, m] : sum.terms()) total += QTau(m) * index_even(sum.group(), d, degree / 2);
  return total;
}

std::vector<int> anomaly_nodes(const CoxeterGroup& group) {
  group.require_coordinates();
  if (!group.is_irreducible()) return {};
  const SimpleFactor& f = group.spec().factors.front();
  const int n = f.rank;
  std::vector<int> nodes;  // 1-based here
  switch (f.family) {
    case Family::A:
      if (n >= 2)
        for (int k = 1; k <= n; ++k) nodes.push_back(k);
      break;
    case Family::B:
      if (n >= 3) nodes = {1};
      break;
    case Family::C:
      nodes = {n};
      break;
    case Family::D:
      nodes = {1, n - 1, n};
      break;
    case Family::E:
      if (n == 6) nodes = {1, 5};
      if (n == 7) nodes = {6};
      break;
    case Family::H:
      nodes = {n};
      break;
    default:
      break;
  }
  for (int& k : nodes) --k;
  return nodes;
}

AnomalyVector anomaly_vector(const CoxeterGroup& group, std::optional<int> removed_node) {
  const auto allowed = anomaly_nodes(group);
  if (allowed.empty()) throw DomainError(group.name() + " has no U(1) direction for anomaly numbers");
  int node = 0;
  if (removed_node) {
    node = *removed_node;
    if (std::find(allowed.begin(), allowed.end(), node) == allowed.end()) {
      std::string list;
      for (int k : allowed) list += (list.empty() ? "" : ",") + std::to_string(k + 1);
      throw DomainError("removing node " + std::to_string(node + 1) + " of " + group.name() +
                        " does not leave a U(1) factor; allowed nodes: " + list);
    }
  } else if (allowed.size() == 1 || group.spec().factors.front().family == Family::A) {
    node = allowed.back();
  } else {
    throw DomainError(group.name() + " has several U(1) directions; choose a removed node");
  }
  Point u(static_cast<std::size_t>(group.rank()));
  u[static_cast<std::size_t>(node)] = QTau(1);
  return AnomalyVector{std::move(u), node};
}

QTau anomaly_number(const Orbit& orbit, const AnomalyVector& u, unsigned degree) {
  orbit.group().require_point(u.u);
  return odd_power_sum(orbit.group(), orbit.points(), u.u, degree);
}

QTau anomaly_of_sum(const OrbitSum& sum, const AnomalyVector& u, unsigned degree, const ComputeLimits& limits) {
  QTau total;
  for (const auto& [d, m] : sum.terms()) {
    total += QTau(m) * anomaly_number(generate_orbit(sum.group(), d, limits), u, degree);
  }
  return total;
}

QTau anomaly_of_product(const Orbit& a, const Orbit& b, const AnomalyVector& u) {
  const QTau na(static_cast<long>(a.size()));
  const QTau nb(static_cast<long>(b.size()));
  return anomaly_number(a, u, 3) * nb + na * anomaly_number(b, u, 3);
}

}  // namespace orbitkit
