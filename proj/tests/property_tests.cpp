// Randomized property checks. Seed with ORBITKIT_PROPERTY_SEED to reproduce.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <quadmath.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "orbitkit/invariants.hpp"
#include "orbitkit/polytope.hpp"

using namespace orbitkit;

namespace {

std::uint64_t g_seed = 0x5eed2026;

std::mt19937_64& rng() {
  static std::mt19937_64 engine(g_seed);
  return engine;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

mpq_class random_rational(long bound) {
  mpq_class r(uniform(-bound, bound), uniform(1, bound));
  r.canonicalize();
  return r;
}

QTau random_scalar(long bound = 1000) { return QTau(random_rational(bound), random_rational(bound)); }

// Small integers or integers in ℤ[τ], so orbits stay meaningful.
QTau random_coordinate(bool golden, long bound) {
  if (golden && uniform(0, 1) == 1) return QTau(mpq_class(uniform(-bound, bound)), mpq_class(uniform(-bound, bound)));
  return QTau(uniform(-bound, bound));
}

Point random_point(const CoxeterGroup& g, long bound = 3) {
  const bool golden = g.name().find('H') != std::string::npos;
  Point x(static_cast<std::size_t>(g.rank()));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = random_coordinate(golden, bound);
  return x;
}

Point random_dominant(const CoxeterGroup& g, long bound = 2) {
  Point x(static_cast<std::size_t>(g.rank()));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = QTau(uniform(0, bound));
  return x;
}

Point random_strict(const CoxeterGroup& g, long bound = 2) {
  Point x(static_cast<std::size_t>(g.rank()));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = QTau(uniform(1, bound));
  return x;
}

bool canonical(const mpq_class& q) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q.get_den() > 0 && g == 1;
}

bool canonical(const QTau& x) { return canonical(x.rational_part()) && canonical(x.tau_part()); }

__float128 to_quad(const mpq_class& q) {
  // exact for the magnitudes used here: numerators and denominators below 2^63
  return static_cast<__float128>(q.get_num().get_si()) / static_cast<__float128>(q.get_den().get_si());
}

__float128 to_quad(const QTau& x) {
  const __float128 tau = (1 + sqrtq(5)) / 2;
  return to_quad(x.rational_part()) + to_quad(x.tau_part()) * tau;
}

// Brute-force closure under every reflection, sharing nothing with the
// positive-coordinate search.
std::vector<Point> naive_closure(const CoxeterGroup& g, const Point& seed) {
  std::set<Point> seen{seed};
  std::vector<Point> todo{seed};
  while (!todo.empty()) {
    Point x = todo.back();
    todo.pop_back();
    for (int k = 0; k < g.rank(); ++k) {
      Point y = g.reflect(k, x);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

// Reflections needed to reach the dominant chamber from x; for a regular
// orbit this is the length of the group element.
int descent_length(const CoxeterGroup& g, Point x) {
  int steps = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (int k = 0; k < g.rank(); ++k) {
      if (x[static_cast<std::size_t>(k)].sign() < 0) {
        x = g.reflect(k, x);
        ++steps;
        moved = true;
        break;
      }
    }
  }
  return steps;
}

using Counts = std::map<Point, long>;

Counts counts_of(const OrbitSum& s) {
  Counts c;
  for (const auto& [d, m] : s.terms()) c[d] = m;
  return c;
}

// Tuple-restricted power over an arbitrary numbering of the orbit.
Counts power_oracle(const std::vector<Point>& pts, int k, Component comp) {
  Counts c;
  const std::size_t n = pts.size();
  auto record = [&](const Point& x) {
    if (x.is_dominant()) ++c[x];
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (k == 2) {
        if ((comp == Component::symm && b <= a) || (comp == Component::anti && b < a)) record(pts[a] + pts[b]);
        continue;
      }
      for (std::size_t s = 0; s < n; ++s) {
        bool take = false;
        switch (comp) {
          case Component::symm: take = s <= b && b <= a; break;
          case Component::anti: take = s < b && b < a; break;
          case Component::mixed: take = b <= a && s < a; break;
        }
        if (take) record(pts[a] + pts[b] + pts[s]);
      }
    }
  }
  return c;
}

const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> names{"A1", "A2", "A3", "A4", "B3", "C2", "C3", "D4", "G2",
                                              "F4", "H2", "H3", "A1xA2", "A1xB3"};
  return names;
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names{
      "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B3", "B4", "B5", "B6", "B7", "B8", "C2",   "C3",
      "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2", "H2",
      "H3", "H4", "A1xA1", "A2xG2"};
  return names;
}

}  // namespace

// ------------------------------------------------------------------ scalars

TEST_CASE("field axioms") {
  for (int i = 0; i < 500; ++i) {
    const QTau x = random_scalar(), y = random_scalar(), z = random_scalar();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + QTau(0) == x);
    CHECK(x * QTau(1) == x);
    CHECK(x + (-x) == QTau(0));
    CHECK(x - y == x + (-y));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == QTau(1));
      CHECK((y / x) * x == y);
    }
    CHECK(canonical(x * y + z));
    CHECK(canonical(x - y * z));
    if (!z.is_zero()) CHECK(canonical(x / z));
    CHECK(QTau::parse((x * y).str()) == x * y);
  }
  const QTau t = QTau::tau();
  CHECK(t * t == t + QTau(1));
}

TEST_CASE("sign agrees with a 128-bit float oracle") {
  int checked = 0;
  for (int i = 0; i < 4000; ++i) {
    QTau x = random_scalar(1'000'000);
    if (i % 2 == 1) {
      // near-cancelling pairs a + bτ with a ≈ -bτ
      const long b = uniform(-1'000'000'000L, 1'000'000'000L);
      const double approx = -static_cast<double>(b) * 1.6180339887498949;
      x = QTau(mpq_class(static_cast<long>(approx) + uniform(-2, 2)), mpq_class(b));
    }
    const __float128 v = to_quad(x);
    if (fabsq(v) <= static_cast<__float128>(1e-20)) continue;
    ++checked;
    CHECK(x.sign() == (v > 0 ? 1 : -1));
  }
  CHECK(checked > 3500);
}

TEST_CASE("ordering is a strict total order compatible with + and positive *") {
  for (int i = 0; i < 500; ++i) {
    const QTau x = random_scalar(), y = random_scalar(), z = random_scalar();
    const int lt = x < y, eq = x == y, gt = x > y;
    CHECK(lt + eq + gt == 1);
    if (x < y && y < z) CHECK(x < z);
    if (x < y) {
      CHECK(x + z < y + z);
      const QTau pos = z.sign() > 0 ? z : (z.is_zero() ? QTau(1) : -z);
      CHECK(x * pos < y * pos);
    }
  }
}

TEST_CASE("hash is stable across equal values") {
  for (int i = 0; i < 200; ++i) {
    const QTau x = random_scalar();
    CHECK((x + QTau(1) - QTau(1)).hash() == x.hash());
  }
}

// ------------------------------------------------------------------ groups

TEST_CASE("cartan times its inverse is the identity") {
  for (const auto& name : catalog()) {
    CAPTURE(name);
    const auto g = build_group(name);
    const auto& c = g->cartan();
    const auto& ci = g->cartan_inverse();
    const auto n = static_cast<std::size_t>(g->rank());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        QTau s = 0;
        for (std::size_t k = 0; k < n; ++k) s += c(i, k) * ci(k, j);
        CHECK(s == QTau(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("roots and weights are dual") {
  for (const auto& name : catalog()) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int k = 0; k < g->rank(); ++k) {
      const Point alpha = g->simple_root(k);
      const QTau half_norm = g->root_norms()[static_cast<std::size_t>(k)] / QTau(2);
      for (int j = 0; j < g->rank(); ++j) {
        Point omega = g->zero_point();
        omega[static_cast<std::size_t>(j)] = 1;
        CHECK(g->scalar_product(alpha, omega) == (j == k ? half_norm : QTau(0)));
      }
    }
    std::vector<int> all(static_cast<std::size_t>(g->rank()));
    std::iota(all.begin(), all.end(), 0);
    CHECK(g->subdiagram_order(all) == g->order());
  }
}

TEST_CASE("reflections are involutive isometries") {
  for (const auto& name : catalog()) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int i = 0; i < 40; ++i) {
      const Point x = random_point(*g), y = random_point(*g);
      const int k = static_cast<int>(uniform(0, g->rank() - 1));
      CHECK(g->reflect(k, g->reflect(k, x)) == x);
      CHECK(g->scalar_product(g->reflect(k, x), g->reflect(k, y)) == g->scalar_product(x, y));
      CHECK(g->reflect(k, g->simple_root(k)) == -g->simple_root(k));
    }
  }
}

// ------------------------------------------------------------------ orbits

TEST_CASE("positive-coordinate search equals the full closure") {
  int groups = 0;
  for (const auto& name : catalog()) {
    const auto g = build_group(name);
    if (g->order() > 2000) continue;
    ++groups;
    CAPTURE(name);
    for (int i = 0; i < 8; ++i) {
      const Point seed = random_point(*g);
      const Orbit o = generate_orbit(*g, seed);
      CHECK(o.points() == naive_closure(*g, seed));
      CHECK(o.size() == orbit_size(*g, o.dominant()));
    }
  }
  CHECK(groups >= 10);
}

TEST_CASE("orbit shape") {
  for (const auto& name : small_groups()) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int i = 0; i < 6; ++i) {
      const Orbit o = generate_orbit(*g, random_point(*g, 2));
      const QTau r = o.squared_radius();
      int dominant = 0, antidominant = 0;
      for (const auto& x : o.points()) {
        CHECK(g->scalar_product(x, x) == r);
        dominant += x.is_dominant();
        antidominant += x.is_antidominant();
      }
      CHECK(dominant == 1);
      CHECK(antidominant == 1);
      CHECK(o.contains(lowest_point(*g, o.dominant())));
      if (name == "A2" || name == "H2") {
        for (const auto& x : o.points()) CHECK(o.contains(Point{-x[1], -x[0]}));
      }
    }
  }
}

// ------------------------------------------------------------------ products

TEST_CASE("product invariants") {
  for (const char* name : {"A2", "C2", "G2", "H2", "A3", "B3", "C3", "H3", "A1xA2"}) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int i = 0; i < 6; ++i) {
      const Orbit a = generate_orbit(*g, random_dominant(*g));
      const Orbit b = generate_orbit(*g, random_dominant(*g));
      const OrbitSum ab = orbit_product(a, b);
      CHECK(ab.weighted_size() == mpz_class(a.size()) * mpz_class(b.size()));
      CHECK(ab.multiplicity(a.dominant() + b.dominant()) >= 1);
      CHECK(ab == orbit_product(b, a));
      CHECK(ab == orbit_product(a, b, {}, ProductMethod::orbit_stabilizer));
      const Point lo_b = lowest_point(*g, b.dominant());
      const Point lo_a = lowest_point(*g, a.dominant());
      CHECK(dominant_representative(*g, a.dominant() + lo_b) == dominant_representative(*g, b.dominant() + lo_a));
      for (unsigned k : {0U, 2U}) CHECK(index_of_sum(ab, k) == index_of_product(*g, a.dominant(), b.dominant(), k));
      if (g->is_irreducible())
        CHECK(index_of_sum(ab, 4) == index_of_product(*g, a.dominant(), b.dominant(), 4));
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto g = build_group("B3");
  const Orbit a = generate_orbit(*g, Point{1, 1, 1});
  const Orbit b = generate_orbit(*g, Point{0, 1, 2});
  ComputeLimits four;
  four.threads = 4;
  CHECK(orbit_product(a, b) == orbit_product(a, b, four));
  CHECK(symmetrized_power(a, 3, Component::mixed) == symmetrized_power(a, 3, Component::mixed, four));
}

TEST_CASE("symmetrized powers re-aggregate and ignore the point numbering") {
  for (const char* name : {"A2", "C2", "G2", "H2", "B3"}) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int i = 0; i < 3; ++i) {
      const Orbit a = generate_orbit(*g, random_dominant(*g, 1 + (g->rank() < 3)));
      if (a.size() > 24) continue;
      std::vector<Point> shuffled = a.points();
      std::shuffle(shuffled.begin(), shuffled.end(), rng());
      const mpz_class n(a.size());

      Counts square = counts_of(orbit_product(a, a));
      Counts cube;
      for (const auto& x : a.points())
        for (const auto& y : a.points())
          for (const auto& z : a.points())
            if ((x + y + z).is_dominant()) ++cube[x + y + z];

      Counts k2;
      for (Component c : {Component::symm, Component::anti}) {
        const OrbitSum s = symmetrized_power(a, 2, c);
        CHECK(counts_of(s) == power_oracle(shuffled, 2, c));
        CHECK(s.weighted_size() == tuple_count(a.size(), 2, c));
        for (const auto& [d, m] : s.terms()) k2[d] += m;
      }
      CHECK(k2 == square);

      Counts k3;
      for (Component c : {Component::symm, Component::anti, Component::mixed}) {
        const OrbitSum s = symmetrized_power(a, 3, c);
        CHECK(counts_of(s) == power_oracle(shuffled, 3, c));
        CHECK(s.weighted_size() == tuple_count(a.size(), 3, c));
        for (const auto& [d, m] : s.terms()) k3[d] += (c == Component::mixed ? 2 : 1) * m;
      }
      CHECK(k3 == cube);
    }
  }
}

TEST_CASE("signed products match a brute-force signed count") {
  for (const char* name : {"A2", "C2", "G2", "H2", "A3", "B3"}) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int i = 0; i < 3; ++i) {
      const SignedOrbit a(generate_orbit(*g, random_strict(*g)));
      const SignedOrbit b(generate_orbit(*g, random_strict(*g)));
      const Orbit c = generate_orbit(*g, random_dominant(*g));
      auto sign = [&](const Point& x) { return descent_length(*g, x) % 2 == 0 ? 1L : -1L; };
      for (std::size_t k = 0; k < a.orbit().size(); ++k) CHECK(a.signs()[k] == sign(a.orbit().points()[k]));

      Counts ss, cs;
      for (const auto& x : a.orbit().points()) {
        for (const auto& y : b.orbit().points())
          if ((x + y).is_dominant()) ss[x + y] += sign(x) * sign(y);
        for (const auto& y : c.points())
          if ((x + y).is_strictly_dominant()) cs[x + y] += sign(x);
      }
      std::erase_if(ss, [](const auto& e) { return e.second == 0; });
      std::erase_if(cs, [](const auto& e) { return e.second == 0; });
      const auto ssd = signed_product(a, b);
      CHECK(ssd.basis == Basis::C);
      CHECK(counts_of(ssd.terms) == ss);
      const auto csd = signed_product(c, a);
      CHECK(csd.basis == Basis::S);
      CHECK(counts_of(csd.terms) == cs);
    }
  }
}

// ------------------------------------------------------------------ invariants

TEST_CASE("congruence class is constant on orbits and additive") {
  for (const char* name : {"A2", "A3", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "H2"}) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int i = 0; i < 5; ++i) {
      const Orbit a = generate_orbit(*g, random_dominant(*g, 1));
      const Orbit b = generate_orbit(*g, random_dominant(*g, 1));
      const auto ca = congruence_number(*g, a.dominant());
      for (const auto& x : a.points()) CHECK(congruence_number(*g, x) == ca);
      if (mpz_class(a.size()) * mpz_class(b.size()) > 200000) continue;
      const auto cb = congruence_number(*g, b.dominant());
      for (const auto& [d, m] : orbit_product(a, b).terms()) CHECK(congruence_number(*g, d) == ca + cb);
      if (a.size() <= 60)
        for (const auto& [d, m] : symmetrized_power(a, 2, Component::symm).terms())
          CHECK(congruence_number(*g, d) == 2 * ca);
    }
  }
}

TEST_CASE("anomaly numbers") {
  for (const char* name : {"A2", "A3", "A4", "B3", "C3", "D4", "E6", "H2", "H3"}) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (int node : anomaly_nodes(*g)) {
      const AnomalyVector u = anomaly_vector(*g, node);
      for (int i = 0; i < 4; ++i) {
        const Orbit a = generate_orbit(*g, random_dominant(*g, 1 + (g->rank() < 4)));
        CHECK(anomaly_number(a, u, 1) == QTau(0));
        if (name == std::string("H2")) CHECK(anomaly_number(a, u, 3) == QTau(0));
        if (g->rank() <= 3) {
          const Orbit b = generate_orbit(*g, random_dominant(*g));
          CHECK(anomaly_of_product(a, b, u) == anomaly_of_sum(orbit_product(a, b), u, 3));
        }
      }
      for (int j = 0; j < g->rank(); ++j) {
        if (j == node) continue;
        CHECK(g->scalar_product(g->simple_root(j), u.u) == QTau(0));
      }
    }
  }
}

// ------------------------------------------------------------------ polytopes

TEST_CASE("face enumeration") {
  for (const char* name : {"A3", "B3", "C3", "H3", "A4", "B4", "D4", "F4"}) {
    CAPTURE(name);
    const auto g = build_group(name);
    for (const auto& start : extreme_decorations(*g)) {
      const auto faces = enumerate_faces(*g, start);
      std::map<int, mpz_class> by_dim;
      for (const auto& f : faces) {
        CHECK(f.count * f.symmetry_order * f.pointwise_stabilizer_order == g->order());
        by_dim[f.dimension] += f.count;
      }
      if (g->rank() == 3) CHECK(by_dim[0] - by_dim[1] + by_dim[2] == 2);
      if (g->rank() == 4) CHECK(by_dim[0] - by_dim[1] + by_dim[2] - by_dim[3] == 0);

      // each face type sits exactly `dimension` steps from the start
      std::map<Decoration, int> depth{{start, 0}};
      std::vector<Decoration> layer{start};
      for (int step = 1; !layer.empty(); ++step) {
        std::vector<Decoration> next;
        for (const auto& d : layer)
          for (const auto& s : decoration_successors(*g, d))
            if (depth.emplace(s, step).second) next.push_back(s);
        layer = std::move(next);
      }
      CHECK(depth.size() == faces.size());
      for (const auto& [d, steps] : depth) CHECK(d.dimension() == steps);
    }
  }
}

int main(int argc, char** argv) {
  if (const char* s = std::getenv("ORBITKIT_PROPERTY_SEED")) g_seed = std::strtoull(s, nullptr, 0);
  doctest::Context ctx(argc, argv);
  const int rc = ctx.run();
  if (!ctx.shouldExit()) std::printf("property seed 0x%llx\n", static_cast<unsigned long long>(g_seed));
  return rc;
}
