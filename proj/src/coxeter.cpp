#include "orbitkit/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "orbitkit/error.hpp"

namespace orbitkit {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    case Family::H: return 'H';
    case Family::I: return 'I';
  }
  return '?';
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class power_of_two(unsigned long n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
  return out;
}

// Per-factor diagram data: Coxeter labels and squared root lengths.
struct FactorDiagram {
  Matrix<int> labels;
  std::vector<mpq_class> norms;
};

FactorDiagram factor_diagram(const SimpleFactor& f) {
  const int n = f.rank;
  FactorDiagram d{Matrix<int>(n, n, 2), std::vector<mpq_class>(n, mpq_class(2))};
  for (int i = 0; i < n; ++i) d.labels(i, i) = 1;
  auto link = [&](int i, int j, int m) {
    d.labels(i, j) = m;
    d.labels(j, i) = m;
  };
  auto chain = [&](int count) {
    for (int i = 0; i + 1 < count; ++i) link(i, i + 1, 3);
  };
  switch (f.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      link(n - 2, n - 1, 4);
      d.norms[n - 1] = 1;
      break;
    case Family::C:
      chain(n);
      link(n - 2, n - 1, 4);
      for (int i = 0; i < n - 1; ++i) d.norms[i] = 1;
      break;
    case Family::D:
      chain(n - 1);
      link(n - 3, n - 1, 3);
      break;
    case Family::E:
      chain(n - 1);
      link(n == 8 ? 4 : 2, n - 1, 3);
      break;
    case Family::F:
      chain(4);
      link(1, 2, 4);
      d.norms[2] = 1;
      d.norms[3] = 1;
      break;
    case Family::G:
      link(0, 1, 6);
      d.norms[1] = mpq_class(2, 3);
      break;
    case Family::H:
      chain(n);
      link(n - 2, n - 1, 5);
      break;
    case Family::I:
      link(0, 1, f.m);
      break;
  }
  return d;
}

// C_jk = 2⟨α_j,α_k⟩/⟨α_k,α_k⟩ = -2cos(π/m)·sqrt(n_j/n_k)
QTau cartan_entry(int m, const mpq_class& norm_j, const mpq_class& norm_k) {
  const mpq_class ratio = norm_j / norm_k;
  switch (m) {
    case 2:
      return 0;
    case 3:
      if (ratio == 1) return -1;
      break;
    case 4:
      if (ratio == 2) return -2;
      if (ratio == mpq_class(1, 2)) return -1;
      break;
    case 5:
      if (ratio == 1) return -QTau::tau();
      break;
    case 6:
      if (ratio == 3) return -3;
      if (ratio == mpq_class(1, 3)) return -1;
      break;
    default:
      break;
  }
  throw InternalError("no exact Cartan entry for label " + std::to_string(m));
}

std::size_t checked_index(int k) { return static_cast<std::size_t>(k); }

}  // namespace

SimpleFactor make_factor(Family family, int rank, int m) {
  auto bad = [&](const std::string& why) {
    return DomainError(std::string("invalid group ") + family_letter(family) + std::to_string(rank) + ": " + why);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) throw bad("A_n needs n >= 1");
      break;
    case Family::B:
      if (rank < 3) throw bad("B_n needs n >= 3");
      break;
    case Family::C:
      if (rank < 2) throw bad("C_n needs n >= 2");
      break;
    case Family::D:
      if (rank < 4) throw bad("D_n needs n >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw bad("E_n needs n in 6..8");
      break;
    case Family::F:
      if (rank != 4) throw bad("only F4 exists");
      break;
    case Family::G:
      if (rank != 2) throw bad("only G2 exists");
      break;
    case Family::H:
      if (rank < 2 || rank > 4) throw bad("H_n needs n in 2..4");
      break;
    case Family::I:
      if (rank != 2) throw bad("dihedral groups have rank 2");
      if (m == 5) return SimpleFactor{Family::H, 2, 0};
      if (m < 5 || m == 6) throw bad("I2(m) needs m >= 5, m != 6 (use A2, C2, G2)");
      return SimpleFactor{Family::I, 2, m};
  }
  return SimpleFactor{family, rank, 0};
}

std::string SimpleFactor::name() const {
  if (family == Family::I) return "I2(" + std::to_string(m) + ")";
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

mpz_class factor_order(const SimpleFactor& f) {
  const auto n = static_cast<unsigned long>(f.rank);
  switch (f.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return power_of_two(n) * factorial(n);
    case Family::D: return power_of_two(n - 1) * factorial(n);
    case Family::E:
      if (n == 6) return mpz_class(51840);        // 2^7 3^4 5
      if (n == 7) return mpz_class(2903040);      // 2^10 3^4 5 7
      return mpz_class(696729600);                // 2^14 3^5 5^2 7
    case Family::F: return mpz_class(1152);
    case Family::G: return mpz_class(12);
    case Family::H:
      if (n == 2) return mpz_class(10);
      if (n == 3) return mpz_class(120);
      return mpz_class(14400);
    case Family::I: return mpz_class(2 * f.m);
  }
  return mpz_class(0);
}

GroupSpec GroupSpec::parse(std::string_view text) {
  GroupSpec spec;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, i); };
  auto read_int = [&]() {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected rank digits");
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) throw fail("number too large");
      ++i;
    }
    return value;
  };
  if (text.empty()) throw ParseError("empty group name", 0);
  while (true) {
    if (i >= text.size()) throw fail("expected a family letter");
    const char letter = text[i];
    Family family;
    switch (letter) {
      case 'A': family = Family::A; break;
      case 'B': family = Family::B; break;
      case 'C': family = Family::C; break;
      case 'D': family = Family::D; break;
      case 'E': family = Family::E; break;
      case 'F': family = Family::F; break;
      case 'G': family = Family::G; break;
      case 'H': family = Family::H; break;
      case 'I': family = Family::I; break;
      default: throw fail(std::string("unknown family '") + letter + "'");
    }
    ++i;
    const int rank = read_int();
    int m = 0;
    if (i < text.size() && text[i] == '(') {
      if (!((family == Family::H || family == Family::I) && rank == 2)) throw fail("only I2(m)/H2(m) take a label");
      ++i;
      m = read_int();
      if (i >= text.size() || text[i] != ')') throw fail("expected ')'");
      ++i;
      family = Family::I;
    } else if (family == Family::I) {
      throw fail("I2 needs a label, e.g. I2(7)");
    }
    spec.factors.push_back(make_factor(family, rank, m));
    if (i == text.size()) break;
    if (text[i] != 'x') throw fail("expected 'x' between factors");
    ++i;
  }
  return spec;
}

std::string GroupSpec::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != 0) out += 'x';
    out += factors[i].name();
  }
  return out;
}

int GroupSpec::rank() const {
  int n = 0;
  for (const auto& f : factors) n += f.rank;
  return n;
}

CoxeterGroup::CoxeterGroup(GroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.factors.empty()) throw DomainError("group needs at least one factor");
  rank_ = spec_.rank();
  const auto n = checked_index(rank_);
  has_coordinates_ = std::none_of(spec_.factors.begin(), spec_.factors.end(),
                                  [](const SimpleFactor& f) { return f.family == Family::I; });
  coxeter_ = Matrix<int>(n, n, 2);
  order_ = 1;
  std::vector<mpq_class> norms(n, mpq_class(2));
  int offset = 0;
  for (const auto& f : spec_.factors) {
    factor_offsets_.push_back(offset);
    const FactorDiagram d = factor_diagram(f);
    for (int i = 0; i < f.rank; ++i) {
      norms[checked_index(offset + i)] = d.norms[checked_index(i)];
      for (int j = 0; j < f.rank; ++j) coxeter_(checked_index(offset + i), checked_index(offset + j)) = d.labels(i, j);
    }
    order_ *= factor_order(f);
    offset += f.rank;
  }
  for (std::size_t i = 0; i < n; ++i) coxeter_(i, i) = 1;

  neighbors_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coxeter_(i, j) >= 3) neighbors_[i].push_back(static_cast<int>(j));

  if (!has_coordinates_) return;

  cartan_ = Matrix<QTau>(n, n, QTau(0));
  root_norms_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    root_norms_[j] = QTau(norms[j]);
    for (std::size_t k = 0; k < n; ++k) {
      cartan_(j, k) = j == k ? QTau(2) : cartan_entry(coxeter_(j, k), norms[j], norms[k]);
    }
  }
  cartan_inv_ = invert(cartan_);
  if (cartan_ * cartan_inv_ != Matrix<QTau>::identity(n)) throw InternalError("Cartan inverse check failed");

  // ⟨ω_i,ω_j⟩ = (C⁻¹)_ij ⟨α_j,α_j⟩/2
  weight_gram_ = Matrix<QTau>(n, n, QTau(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) weight_gram_(i, j) = cartan_inv_(i, j) * QTau(norms[j] / 2);
  if (weight_gram_ != weight_gram_.transpose()) throw InternalError("weight Gram matrix is not symmetric");
  for (const QTau& minor : leading_principal_minors(weight_gram_)) {
    if (minor.sign() <= 0) throw InternalError("weight Gram matrix is not positive definite");
  }

  cartan_rows_.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (!cartan_(k, j).is_zero()) cartan_rows_[k].emplace_back(static_cast<int>(j), cartan_(k, j));
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::build(const GroupSpec& spec) {
  return std::shared_ptr<const CoxeterGroup>(new CoxeterGroup(spec));
}

GroupPtr build_group(const GroupSpec& spec) { return CoxeterGroup::build(spec); }
GroupPtr build_group(std::string_view name) { return CoxeterGroup::build(GroupSpec::parse(name)); }

void CoxeterGroup::require_coordinates() const {
  if (!has_coordinates_) {
    throw DomainError("group " + name() + " has no exact coordinates (I2(m) needs cyclotomic arithmetic)");
  }
}

void CoxeterGroup::require_point(const Point& x) const {
  require_coordinates();
  if (x.size() != checked_index(rank_)) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, group " + name() + " has rank " +
                      std::to_string(rank_));
  }
}

void CoxeterGroup::require_node(int k) const {
  if (k < 0 || k >= rank_) throw DomainError("node " + std::to_string(k) + " out of range for " + name());
}

const Matrix<QTau>& CoxeterGroup::cartan() const {
  require_coordinates();
  return cartan_;
}

const Matrix<QTau>& CoxeterGroup::cartan_inverse() const {
  require_coordinates();
  return cartan_inv_;
}

const std::vector<QTau>& CoxeterGroup::root_norms() const {
  require_coordinates();
  return root_norms_;
}

const Matrix<QTau>& CoxeterGroup::weight_gram() const {
  require_coordinates();
  return weight_gram_;
}

std::pair<std::size_t, int> CoxeterGroup::locate(int node) const {
  require_node(node);
  auto it = std::upper_bound(factor_offsets_.begin(), factor_offsets_.end(), node);
  const auto factor = static_cast<std::size_t>(std::distance(factor_offsets_.begin(), it) - 1);
  return {factor, node - factor_offsets_[factor]};
}

const std::vector<int>& CoxeterGroup::neighbors(int node) const {
  require_node(node);
  return neighbors_[checked_index(node)];
}

Point CoxeterGroup::simple_root(int k) const {
  require_coordinates();
  require_node(k);
  return Point(cartan_.row(checked_index(k)));
}

Point CoxeterGroup::reflect(int k, const Point& x) const {
  Point out(x);
  reflect_in_place(k, out);
  return out;
}

void CoxeterGroup::reflect_in_place(int k, Point& x) const {
  require_point(x);
  require_node(k);
  const QTau xk = x[checked_index(k)];
  if (xk.is_zero()) return;
  for (const auto& [j, c] : cartan_rows_[checked_index(k)]) x[checked_index(j)] -= xk * c;
}

QTau CoxeterGroup::scalar_product(const Point& x, const Point& y) const {
  require_point(x);
  require_point(y);
  const auto n = checked_index(rank_);
  QTau total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    QTau row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j].is_zero() && !weight_gram_(i, j).is_zero()) row += weight_gram_(i, j) * y[j];
    }
    total += x[i] * row;
  }
  return total;
}

std::vector<SimpleFactor> CoxeterGroup::classify_subdiagram(std::span<const int> nodes) const {
  std::set<int> chosen;
  for (int k : nodes) {
    require_node(k);
    if (!chosen.insert(k).second) throw DomainError("node " + std::to_string(k) + " listed twice");
  }
  auto label = [&](int i, int j) { return coxeter_(checked_index(i), checked_index(j)); };
  auto adjacent = [&](int i) {
    std::vector<int> out;
    for (int j : neighbors_[checked_index(i)])
      if (chosen.count(j)) out.push_back(j);
    return out;
  };

  std::vector<SimpleFactor> out;
  std::set<int> seen;
  for (int start : chosen) {
    if (seen.count(start)) continue;
    std::vector<int> component{start};
    seen.insert(start);
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (int j : adjacent(component[head])) {
        if (seen.insert(j).second) component.push_back(j);
      }
    }
    const int size = static_cast<int>(component.size());
    int edges = 0;
    std::vector<int> branch_nodes;
    for (int v : component) {
      const auto deg = adjacent(v).size();
      edges += static_cast<int>(deg);
      if (deg > 2) branch_nodes.push_back(v);
    }
    edges /= 2;
    auto unclassifiable = [&]() { return InternalError("unclassifiable subdiagram in " + name()); };
    if (edges != size - 1) throw unclassifiable();

    if (size == 1) {
      out.push_back(SimpleFactor{Family::A, 1, 0});
      continue;
    }
    if (branch_nodes.empty()) {
      // walk the path from an endpoint
      int end = *std::find_if(component.begin(), component.end(), [&](int v) { return adjacent(v).size() == 1; });
      std::vector<int> labels;
      int prev = -1;
      int cur = end;
      while (true) {
        int next = -1;
        for (int j : adjacent(cur))
          if (j != prev) next = j;
        if (next < 0) break;
        labels.push_back(label(cur, next));
        prev = cur;
        cur = next;
      }
      if (size == 2) {
        switch (labels[0]) {
          case 3: out.push_back(SimpleFactor{Family::A, 2, 0}); break;
          case 4: out.push_back(SimpleFactor{Family::C, 2, 0}); break;
          case 5: out.push_back(SimpleFactor{Family::H, 2, 0}); break;
          case 6: out.push_back(SimpleFactor{Family::G, 2, 0}); break;
          default: out.push_back(SimpleFactor{Family::I, 2, labels[0]}); break;
        }
        continue;
      }
      std::vector<std::size_t> special;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != 3) special.push_back(i);
      if (special.empty()) {
        out.push_back(SimpleFactor{Family::A, size, 0});
        continue;
      }
      if (special.size() != 1) throw unclassifiable();
      const std::size_t at = special[0];
      const bool at_end = at == 0 || at + 1 == labels.size();
      const int m = labels[at];
      if (m == 4 && at_end) {
        out.push_back(SimpleFactor{Family::B, size, 0});
      } else if (m == 4 && size == 4) {
        out.push_back(SimpleFactor{Family::F, 4, 0});
      } else if (m == 5 && at_end && size <= 4) {
        out.push_back(SimpleFactor{Family::H, size, 0});
      } else {
        throw unclassifiable();
      }
      continue;
    }
    if (branch_nodes.size() != 1) throw unclassifiable();
    const int hub = branch_nodes[0];
    const auto arms_start = adjacent(hub);
    if (arms_start.size() != 3) throw unclassifiable();
    std::vector<int> arms;
    for (int first : arms_start) {
      if (label(hub, first) != 3) throw unclassifiable();
      int length = 1;
      int prev = hub;
      int cur = first;
      while (true) {
        int next = -1;
        for (int j : adjacent(cur))
          if (j != prev) next = j;
        if (next < 0) break;
        if (label(cur, next) != 3) throw unclassifiable();
        ++length;
        prev = cur;
        cur = next;
      }
      arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      out.push_back(SimpleFactor{Family::D, size, 0});
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      out.push_back(SimpleFactor{Family::E, size, 0});
    } else {
      throw unclassifiable();
    }
  }
  return out;
}

mpz_class CoxeterGroup::subdiagram_order(std::span<const int> nodes) const {
  mpz_class total = 1;
  for (const auto& f : classify_subdiagram(nodes)) total *= factor_order(f);
  return total;
}

Matrix<QTau> invert(const Matrix<QTau>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("cannot invert a non-square matrix");
  Matrix<QTau> a = m;
  Matrix<QTau> inv = Matrix<QTau>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DomainError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const QTau scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const QTau factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<QTau> leading_principal_minors(const Matrix<QTau>& m) {
  const std::size_t n = m.rows();
  std::vector<QTau> minors;
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<QTau> a(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    QTau det = 1;
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && a(pivot, col).is_zero()) ++pivot;
      if (pivot == k) {
        det = 0;
        break;
      }
      if (pivot != col) {
        for (std::size_t j = 0; j < k; ++j) std::swap(a(pivot, j), a(col, j));
        det = -det;
      }
      det *= a(col, col);
      const QTau inv = a(col, col).inverse();
      for (std::size_t r = col + 1; r < k; ++r) {
        if (a(r, col).is_zero()) continue;
        const QTau factor = a(r, col) * inv;
        for (std::size_t j = col; j < k; ++j) a(r, j) -= factor * a(col, j);
      }
    }
    minors.push_back(det);
  }
  return minors;
}

}  // namespace orbitkit
