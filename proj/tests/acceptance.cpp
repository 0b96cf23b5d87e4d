// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "orbitkit/invariants.hpp"
#include "orbitkit/polytope.hpp"
#include "reference_data.hpp"

using namespace orbitkit;

namespace {

std::mt19937_64 rng(20261016);

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Collects failed checks with a short reason.
struct Report {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

Point pt(const std::string& s) { return Point::parse(s); }

Point random_dominant(const CoxeterGroup& g, long hi, bool golden = false) {
  Point x(static_cast<std::size_t>(g.rank()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = QTau(uniform(0, hi));
    if (golden && uniform(0, 3) == 0) x[i] += QTau::tau();
  }
  return x;
}

bool has_golden(const std::string& name) { return name.find('H') != std::string::npos; }

std::map<Point, std::int64_t> expected_terms(const CoxeterGroup& g, const std::vector<refdata::Term>& terms) {
  std::map<Point, std::int64_t> out;
  for (const auto& t : terms) out[dominant_representative(g, pt(t.dominant))] += t.multiplicity;
  return out;
}

std::map<Point, std::int64_t> as_map(const OrbitSum& s) { return {s.terms().begin(), s.terms().end()}; }

// ------------------------------------------------------------------ 1

void orders(Report& r) {
  for (const auto& c : refdata::group_orders()) {
    r.expect(build_group(c.group)->order() == mpz_class(c.order), c.group);
  }
}

// ------------------------------------------------------------------ 2

void orbit_listings(Report& r) {
  for (const auto& listing : refdata::orbit_listings()) {
    const auto g = build_group(listing.group);
    for (const auto& [a, b] : {std::pair{QTau(1), QTau(1)}, std::pair{QTau(2), QTau(3)}}) {
      const Point seed(listing.seed(a, b));
      const Orbit o = generate_orbit(*g, seed);
      std::set<Point> expected;
      for (const auto& c : listing.points(a, b)) expected.insert(Point(c));
      const std::set<Point> got(o.points().begin(), o.points().end());
      const std::string label = listing.group + " (" + seed.str() + ")";
      if (listing.complete) {
        r.expect(got == expected, label);
      } else {
        bool subset = true;
        for (const auto& x : expected) subset = subset && got.count(x) == 1;
        r.expect(subset && o.size() == static_cast<std::size_t>(listing.size), label);
      }
    }
  }
}

// ------------------------------------------------------------------ 3

void products(Report& r) {
  for (const auto& c : refdata::product_cases()) {
    const auto g = build_group(c.group);
    const OrbitSum got = orbit_product(generate_orbit(*g, pt(c.a)), generate_orbit(*g, pt(c.b)));
    r.expect(as_map(got) == expected_terms(*g, c.terms), c.group + " (" + c.a + ") x (" + c.b + ")");
  }
  const char* groups[] = {"A2", "C2", "G2", "H2", "A3", "B3", "C3", "H3"};
  for (int i = 0; i < 200; ++i) {
    const std::string name = groups[i % 8];
    const auto g = build_group(name);
    const Orbit a = generate_orbit(*g, random_dominant(*g, 3, has_golden(name)));
    const Orbit b = generate_orbit(*g, random_dominant(*g, 3, has_golden(name)));
    const OrbitSum s = orbit_product(a, b);
    r.expect(s.weighted_size() == mpz_class(a.size()) * mpz_class(b.size()),
             name + " size conservation (" + a.dominant().str() + ") x (" + b.dominant().str() + ")");
  }
}

// ------------------------------------------------------------------ 4

void powers(Report& r) {
  for (const auto& c : refdata::power_cases()) {
    const auto g = build_group(c.group);
    const Orbit a = generate_orbit(*g, pt(c.point));
    const Component comp = parse_component(c.component);
    const OrbitSum got = symmetrized_power(a, c.k, comp);
    const std::string label = c.group + " (" + c.point + ") k=" + std::to_string(c.k) + " " + c.component;
    r.expect(as_map(got) == expected_terms(*g, c.terms), label);
    r.expect(got.weighted_size() == tuple_count(a.size(), c.k, comp), label + " tuple count");
  }
  const char* groups[] = {"A2", "C2", "G2", "H2", "A3", "B3"};
  for (int i = 0; i < 30; ++i) {
    const std::string name = groups[i % 6];
    const auto g = build_group(name);
    const Orbit a = generate_orbit(*g, random_dominant(*g, 2, has_golden(name)));
    if (a.size() > 48) continue;
    for (int k : {2, 3}) {
      for (Component comp : {Component::symm, Component::anti, Component::mixed}) {
        if (k == 2 && comp == Component::mixed) continue;
        r.expect(symmetrized_power(a, k, comp).weighted_size() == tuple_count(a.size(), k, comp),
                 name + " tuple count (" + a.dominant().str() + ")");
      }
    }
  }
  // symm + anti + 2 mixed against (a x a) x a computed orbit by orbit
  for (const char* name : {"A2", "C2"}) {
    const auto g = build_group(name);
    for (const char* seed : {"1,0", "0,1", "1,1", "2,0"}) {
      const Orbit a = generate_orbit(*g, pt(seed));
      OrbitSum cube(a.group_ptr());
      const OrbitSum square = orbit_product(a, a);
      for (const auto& [d, m] : square.terms())
        for (const auto& [e, n] : orbit_product(generate_orbit(*g, d), a).terms()) cube.add(e, m * n);
      OrbitSum parts(a.group_ptr());
      for (Component comp : {Component::symm, Component::anti, Component::mixed})
        for (const auto& [d, m] : symmetrized_power(a, 3, comp).terms())
          parts.add(d, (comp == Component::mixed ? 2 : 1) * m);
      r.expect(parts == cube, std::string(name) + " cube (" + seed + ")");
    }
  }
}

// ------------------------------------------------------------------ 5

void face_table(Report& r, const refdata::FaceTable& ref) {
  for (std::size_t gi = 0; gi < ref.groups.size(); ++gi) {
    const auto g = build_group(ref.groups[gi]);
    const MembershipTable t = face_membership_table(*g);
    r.expect(t.rows.size() == ref.rows.size() && t.columns.size() == ref.columns.size(), ref.groups[gi] + " shape");
    if (t.rows.size() != ref.rows.size() || t.columns.size() != ref.columns.size()) continue;
    for (std::size_t c = 0; c < ref.columns.size(); ++c)
      r.expect(t.columns[c].str() == ref.columns[c], ref.groups[gi] + " column " + ref.columns[c]);
    for (std::size_t row = 0; row < ref.rows.size(); ++row) {
      const auto& want = ref.rows[row];
      const std::string label = ref.groups[gi] + " " + want.decoration;
      r.expect(t.rows[row].str() == want.decoration, label + " row order");
      r.expect(face_orbit(*g, Decoration::parse(want.decoration)).count == want.counts[gi], label + " count");
      for (std::size_t c = 0; c < ref.columns.size(); ++c) {
        bool mark = false;
        for (int m : want.member_of) mark = mark || m == static_cast<int>(c + 1);
        r.expect(t.member[row][c] == mark, label + " mark in column " + ref.columns[c]);
      }
    }
  }
}

void faces(Report& r) {
  face_table(r, refdata::rank2_faces());
  face_table(r, refdata::rank3_faces());
  int polytopes = 0;
  for (const char* name : {"A3", "B3", "C3", "H3"}) {
    const auto g = build_group(name);
    for (const auto& start : extreme_decorations(*g)) {
      mpz_class chi = 0;
      for (const auto& f : enumerate_faces(*g, start)) chi += (f.dimension % 2 == 0 ? 1 : -1) * f.count;
      r.expect(chi == 2, std::string(name) + " Euler characteristic of " + start.str());
      ++polytopes;
    }
  }
  r.expect(polytopes == 28, "28 rank-3 polytopes");
  for (const auto& c : refdata::face_vertex_cases()) {
    std::set<Point> want;
    for (const auto& v : c.vertices) want.insert(pt(v));
    const auto got = face_vertices(*build_group(c.group), pt(c.seed), Decoration::parse(c.decoration));
    r.expect(std::set<Point>(got.begin(), got.end()) == want && got.size() == want.size(),
             c.group + " face " + c.decoration + " of (" + c.seed + ")");
  }
}

// ------------------------------------------------------------------ 6

void invariants(Report& r) {
  for (const auto& row : refdata::index_rows()) {
    const auto g = build_group(row.group);
    for (unsigned k = 0; k < row.scaled.size(); ++k) {
      r.expect(refdata::index_multiplier(row.group, k) * index_even(*g, pt(row.point), k) == QTau::parse(row.scaled[k]),
               row.group + " (" + row.point + ") index degree " + std::to_string(2 * k));
    }
  }
  const char* groups[] = {"A2", "A3", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "H2"};
  int products = 0;
  for (int i = 0; products < 100; ++i) {
    const std::string name = groups[i % 12];
    const auto g = build_group(name);
    const bool golden = name == "H2";
    const Point pa = random_dominant(*g, g->rank() > 4 ? 1 : 2, golden);
    const Point pb = random_dominant(*g, g->rank() > 4 ? 1 : 2, golden);
    if (orbit_size(*g, pa) * orbit_size(*g, pb) > 300'000) continue;
    const Orbit a = generate_orbit(*g, pa);
    const Orbit b = generate_orbit(*g, pb);
    ++products;
    const auto ca = congruence_number(*g, a.dominant());
    const auto cb = congruence_number(*g, b.dominant());
    bool constant = true;
    for (const auto& x : a.points()) constant = constant && congruence_number(*g, x) == ca;
    for (const auto& x : b.points()) constant = constant && congruence_number(*g, x) == cb;
    r.expect(constant, name + " class constant on (" + a.dominant().str() + ") and (" + b.dominant().str() + ")");
    bool additive = true;
    for (const auto& [d, m] : orbit_product(a, b).terms()) additive = additive && congruence_number(*g, d) == ca + cb;
    r.expect(additive, name + " class additive");
  }
  for (const auto& c : refdata::product_cases()) {
    const auto g = build_group(c.group);
    const OrbitSum s = orbit_product(generate_orbit(*g, pt(c.a)), generate_orbit(*g, pt(c.b)));
    for (unsigned degree : {0U, 2U, 4U}) {
      r.expect(index_of_sum(s, degree) == index_of_product(*g, pt(c.a), pt(c.b), degree),
               c.group + " (" + c.a + ") x (" + c.b + ") index sum degree " + std::to_string(degree));
    }
  }
  for (const char* name : {"A2", "C2", "A3"}) {
    const auto g = build_group(name);
    for (int i = 0; i < 10; ++i) {
      const Point a = random_dominant(*g, 2), b = random_dominant(*g, 2);
      const OrbitSum s = orbit_product(generate_orbit(*g, a), generate_orbit(*g, b));
      r.expect(index_of_sum(s, 4) == index_of_product(*g, a, b, 4), std::string(name) + " degree-4 product rule");
    }
  }
}

// ------------------------------------------------------------------ 7

void anomalies(Report& r) {
  const char* groups[] = {"A2", "A3", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "H2", "H3", "H4"};
  for (int i = 0; i < 100; ++i) {
    const std::string name = groups[i % 13];
    const auto g = build_group(name);
    const Orbit a = generate_orbit(*g, random_dominant(*g, g->rank() > 3 ? 1 : 2, has_golden(name)));
    for (int node : anomaly_nodes(*g)) {
      r.expect(anomaly_number(a, anomaly_vector(*g, node), 1) == QTau(0),
               name + " first-degree anomaly of (" + a.dominant().str() + ")");
    }
  }
  const auto h2 = build_group("H2");
  const AnomalyVector uh = anomaly_vector(*h2);
  for (int i = 0; i < 30; ++i) {
    const Orbit a = generate_orbit(*h2, random_dominant(*h2, 4, true));
    r.expect(anomaly_number(a, uh, 3) == QTau(0), "H2 anomaly of (" + a.dominant().str() + ")");
  }
  for (const char* name : {"A2", "A3"}) {
    const auto g = build_group(name);
    for (int node : anomaly_nodes(*g)) {
      const AnomalyVector u = anomaly_vector(*g, node);
      for (int i = 0; i < 15; ++i) {
        const Orbit a = generate_orbit(*g, random_dominant(*g, 2));
        const Orbit b = generate_orbit(*g, random_dominant(*g, 2));
        r.expect(anomaly_of_product(a, b, u) == anomaly_of_sum(orbit_product(a, b), u, 3),
                 std::string(name) + " product anomaly, node " + std::to_string(node + 1));
      }
    }
  }
}

// ------------------------------------------------------------------ 8

void e8(Report& r) {
  const auto g = build_group("E8");
  mpz_class smallest = 0;
  int node = -1;
  for (int k = 0; k < 8; ++k) {
    Point w = g->zero_point();
    w[static_cast<std::size_t>(k)] = 1;
    const mpz_class n = orbit_size(*g, w);
    if (node < 0 || n < smallest) {
      smallest = n;
      node = k;
    }
  }
  r.expect(smallest == 240, "smallest fundamental orbit has " + smallest.get_str() + " points");
  Point w = g->zero_point();
  w[static_cast<std::size_t>(node)] = 1;
  ComputeLimits limits = ComputeLimits::from_environment();
  const Orbit o = generate_orbit(*g, w, limits);
  r.expect(o.size() == 240, "orbit enumeration");
  const OrbitSum s = orbit_product(o, o, limits);
  r.expect(s.weighted_size() == 240 * 240, "size conservation");
  for (unsigned degree : {0U, 2U, 4U})
    r.expect(index_of_sum(s, degree) == index_of_product(*g, w, w, degree), "index sum degree " + std::to_string(degree));
  r.expect(s == orbit_product(o, o, limits, ProductMethod::orbit_stabilizer), "both product methods agree");
}

// ------------------------------------------------------------------ 9

void property_suite(Report& r) {
  const std::string cmd = std::string("\"") + ORBITKIT_PROPERTY_TESTS + "\" > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  r.expect(rc == 0, "property suite exit status " + std::to_string(rc));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Report&)> run;
  };
  const Criterion criteria[] = {
      {1, "group orders", orders},
      {2, "explicit orbit listings", orbit_listings},
      {3, "orbit product decompositions", products},
      {4, "symmetrized powers", powers},
      {5, "face tables, Euler characteristic, face vertices", faces},
      {6, "congruence classes and indices", invariants},
      {7, "anomaly numbers", anomalies},
      {8, "E8 fundamental orbit product", e8},
      {9, "property suites", property_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = r.failures.empty();
    failed += !ok;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%d checks, %.1f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, r.checks, secs);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
