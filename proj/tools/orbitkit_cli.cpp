// orbitkit command-line interface.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orbitkit/algebra.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/invariants.hpp"
#include "orbitkit/polytope.hpp"
#include "orbitkit/serialize.hpp"

namespace {

using namespace orbitkit;
using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kDomain = 3, kSizeGuard = 4 };

/// Raised for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "table";
  std::optional<std::size_t> max_points;
  std::string seed_order = "canonical";
  bool timing = false;
};

struct Result {
  json payload;
  std::string text;
  std::optional<std::string> off;
};

struct Command {
  std::string name;
  std::string group;
  std::function<Result()> run;
};

ComputeLimits limits_from(const Globals& g) {
  ComputeLimits limits = ComputeLimits::from_environment();
  if (g.max_points) limits.max_points = *g.max_points;
  return limits;
}

Point parse_point(const std::string& text) { return Point::parse(text); }

Point dominant_of(const CoxeterGroup& group, const std::string& text) {
  return dominant_representative(group, parse_point(text));
}

std::string paren(const Point& p) { return "(" + p.str() + ")"; }

std::string matrix_text(const Matrix<QTau>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out += " " + m(i, j).str();
    out += "\n";
  }
  return out;
}

std::string sum_text(const OrbitSum& sum) {
  std::ostringstream out;
  for (const auto& t : sum.sorted_terms()) {
    out << "  " << t.multiplicity << " x " << paren(t.dominant) << "  size " << t.size.get_str() << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- group

Result group_info(const std::string& name) {
  const GroupPtr g = build_group(name);
  json factors = json::array();
  for (const auto& f : g->spec().factors) factors.push_back({{"name", f.name()}, {"order", to_json(factor_order(f))}});
  json p = {{"name", g->name()},
            {"rank", g->rank()},
            {"order", to_json(g->order())},
            {"irreducible", g->is_irreducible()},
            {"factors", factors},
            {"coxeter_matrix", to_json(g->coxeter_matrix())}};
  std::ostringstream t;
  t << "group        " << g->name() << "\nrank         " << g->rank() << "\norder        " << g->order().get_str()
    << "\n";
  for (const auto& f : g->spec().factors) t << "factor       " << f.name() << "  order " << factor_order(f).get_str() << "\n";
  t << "coxeter matrix\n";
  for (std::size_t i = 0; i < g->coxeter_matrix().rows(); ++i) {
    t << " ";
    for (std::size_t j = 0; j < g->coxeter_matrix().cols(); ++j) t << " " << g->coxeter_matrix()(i, j);
    t << "\n";
  }
  if (g->has_coordinates()) {
    json norms = json::array();
    for (const auto& n : g->root_norms()) norms.push_back(to_json(n));
    p["cartan"] = to_json(g->cartan());
    p["cartan_inverse"] = to_json(g->cartan_inverse());
    p["root_norms"] = norms;
    p["weight_gram"] = to_json(g->weight_gram());
    t << "cartan matrix\n" << matrix_text(g->cartan());
    t << "inverse cartan matrix\n" << matrix_text(g->cartan_inverse());
    t << "root norms  ";
    for (const auto& n : g->root_norms()) t << " " << n.str();
    t << "\nweight gram matrix\n" << matrix_text(g->weight_gram());
  }
  return {p, t.str(), std::nullopt};
}

// ---------------------------------------------------------------- orbits

Result orbit_gen(const std::string& name, const std::string& point, const ComputeLimits& limits) {
  const GroupPtr g = build_group(name);
  const Orbit o = generate_orbit(*g, parse_point(point), limits);
  json p = {{"dominant", to_json(o.dominant())},
            {"size", o.size()},
            {"squared_radius", to_json(o.squared_radius())},
            {"points", to_json(o.points())}};
  std::string t = "orbit of " + paren(o.dominant()) + ", " + std::to_string(o.size()) + " points\n";
  for (const auto& q : o.points()) t += "  " + paren(q) + "\n";
  return {p, t, std::nullopt};
}

Result orbit_size_cmd(const std::string& name, const std::string& point) {
  const GroupPtr g = build_group(name);
  const Point d = dominant_of(*g, point);
  const mpz_class n = orbit_size(*g, d);
  json zeros = json::array();
  for (int k : zero_nodes(d)) zeros.push_back(k + 1);
  json p = {{"dominant", to_json(d)}, {"size", to_json(n)}, {"stabilizer_nodes", zeros}};
  return {p, "orbit of " + paren(d) + ": " + n.get_str() + " points\n", std::nullopt};
}

// ---------------------------------------------------------------- products

std::pair<Basis, Basis> parse_signed(const std::string& spec) {
  // "a:C,b:S"
  std::optional<Basis> a, b;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.size() != 3 || item[1] != ':' || (item[2] != 'C' && item[2] != 'S') || (item[0] != 'a' && item[0] != 'b')) {
      throw UsageError("--signed expects a:C|S,b:C|S, got '" + spec + "'");
    }
    (item[0] == 'a' ? a : b) = item[2] == 'C' ? Basis::C : Basis::S;
  }
  if (!a || !b) throw UsageError("--signed needs a basis for both a and b, got '" + spec + "'");
  return {*a, *b};
}

Result product_cmd(const std::string& name, const std::string& pa, const std::string& pb,
                   const std::string& signed_spec, const std::string& method, const ComputeLimits& limits) {
  const GroupPtr g = build_group(name);
  const Orbit a = generate_orbit(*g, parse_point(pa), limits);
  const Orbit b = generate_orbit(*g, parse_point(pb), limits);
  if (signed_spec.empty()) {
    ProductMethod m = ProductMethod::direct;
    if (method == "orbit-stabilizer") m = ProductMethod::orbit_stabilizer;
    const OrbitSum sum = orbit_product(a, b, limits, m);
    json p = {{"a", to_json(a.dominant())},
              {"b", to_json(b.dominant())},
              {"terms", to_json(sum)},
              {"total_size", to_json(sum.weighted_size())}};
    std::string t = paren(a.dominant()) + " x " + paren(b.dominant()) + " = " + sum.str() + "\n" + sum_text(sum) +
                    "total size " + sum.weighted_size().get_str() + " = " + std::to_string(a.size()) + " x " +
                    std::to_string(b.size()) + "\n";
    return {p, t, std::nullopt};
  }
  const auto [ba, bb] = parse_signed(signed_spec);
  auto pick = [&](const Orbit& o, Basis basis) { return basis == Basis::S ? std::optional<SignedOrbit>(o) : std::nullopt; };
  const auto sa = pick(a, ba);
  const auto sb = pick(b, bb);
  SignedDecomposition d = sa ? (sb ? signed_product(*sa, *sb, limits) : signed_product(*sa, b, limits))
                             : (sb ? signed_product(a, *sb, limits) : signed_product(a, b, limits));
  const char* basis = d.basis == Basis::C ? "C" : "S";
  auto name_of = [](Basis x) { return x == Basis::C ? "C" : "S"; };
  json p = {{"a", {{"point", to_json(a.dominant())}, {"basis", name_of(ba)}}},
            {"b", {{"point", to_json(b.dominant())}, {"basis", name_of(bb)}}},
            {"basis", basis},
            {"terms", to_json(d.terms)}};
  std::string t = std::string(name_of(ba)) + paren(a.dominant()) + " x " + name_of(bb) + paren(b.dominant()) + " = " +
                  basis + "[" + d.terms.str() + "]\n" + sum_text(d.terms);
  return {p, t, std::nullopt};
}

Result power_cmd(const std::string& name, const std::string& point, int k, const std::string& component,
                 const ComputeLimits& limits) {
  const GroupPtr g = build_group(name);
  const Component c = parse_component(component);
  const Orbit a = generate_orbit(*g, parse_point(point), limits);
  const OrbitSum sum = symmetrized_power(a, k, c, limits);
  const mpz_class tuples = tuple_count(a.size(), k, c);
  json p = {{"point", to_json(a.dominant())},
            {"k", k},
            {"component", std::string(to_string(c))},
            {"tuples", to_json(tuples)},
            {"terms", to_json(sum)}};
  std::string t = std::string(to_string(c)) + " part of " + paren(a.dominant()) + "^" + std::to_string(k) + " = " +
                  sum.str() + "\n" + sum_text(sum) + "tuples " + tuples.get_str() + "\n";
  return {p, t, std::nullopt};
}

// ---------------------------------------------------------------- faces

Decoration start_decoration(const CoxeterGroup& g, const std::string& point, const std::string& decoration) {
  if (!decoration.empty()) return Decoration::parse(decoration);
  if (point.empty()) throw UsageError("faces count needs --point or --decoration");
  return extreme_decoration(g, dominant_of(g, point));
}

Result faces_count(const std::string& name, const std::string& point, const std::string& decoration) {
  const GroupPtr g = build_group(name);
  const Decoration start = start_decoration(*g, point, decoration);
  const auto faces = enumerate_faces(*g, start);
  std::vector<mpz_class> fvec(static_cast<std::size_t>(g->rank()), 0);
  json list = json::array();
  std::ostringstream t;
  t << "polytope " << start.str() << " of " << g->name() << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "  %-10s %3s %10s %8s %8s\n", "decoration", "dim", "count", "|G(s)|", "|G(o)|");
  t << line;
  for (const auto& f : faces) {
    list.push_back(to_json(f));
    fvec[static_cast<std::size_t>(f.dimension)] += f.count;
    std::snprintf(line, sizeof line, "  %-10s %3d %10s %8s %8s\n", f.decoration.str().c_str(), f.dimension,
                  f.count.get_str().c_str(), f.symmetry_order.get_str().c_str(),
                  f.pointwise_stabilizer_order.get_str().c_str());
    t << line;
  }
  json fj = json::array();
  t << "f-vector";
  for (const auto& v : fvec) {
    fj.push_back(to_json(v));
    t << " " << v.get_str();
  }
  t << "\n";
  json p = {{"decoration", start.str()}, {"faces", list}, {"f_vector", fj}};
  return {p, t.str(), std::nullopt};
}

Result faces_membership(const std::string& name) {
  const GroupPtr g = build_group(name);
  const MembershipTable table = face_membership_table(*g);
  json cols = json::array();
  for (const auto& c : table.columns) cols.push_back(c.str());
  json rows = json::array();
  std::ostringstream t;
  t << "  #  decoration  count ";
  for (std::size_t c = 0; c < table.columns.size(); ++c) t << " " << (c + 1);
  t << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const FaceOrbit f = face_orbit(*g, table.rows[r]);
    rows.push_back({{"decoration", f.decoration.str()},
                    {"dimension", f.dimension},
                    {"count", to_json(f.count)},
                    {"member", table.member[r]}});
    char head[64];
    std::snprintf(head, sizeof head, "%3zu  %-10s %6s ", r + 1, f.decoration.str().c_str(), f.count.get_str().c_str());
    t << head;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      t << " " << (table.member[r][c] ? "x" : ".") << std::string(std::to_string(c + 1).size() - 1, ' ');
    }
    t << "\n";
  }
  return {json{{"columns", cols}, {"rows", rows}}, t.str(), std::nullopt};
}

Result faces_vertices(const std::string& name, const std::string& point, const std::string& decoration,
                      const ComputeLimits& limits) {
  if (point.empty() || decoration.empty()) throw UsageError("faces vertices needs --point and --decoration");
  const GroupPtr g = build_group(name);
  const Point seed = dominant_of(*g, point);
  const Decoration face = Decoration::parse(decoration);
  const auto pts = face_vertices(*g, seed, face, limits);
  std::string t = "face " + face.str() + " at " + paren(seed) + ", " + std::to_string(pts.size()) + " vertices\n";
  for (const auto& q : pts) t += "  " + paren(q) + "\n";
  return {json{{"point", to_json(seed)}, {"decoration", face.str()}, {"vertices", to_json(pts)}}, t, std::nullopt};
}

Result faces_mesh(const std::string& name, const std::string& point, const ComputeLimits& limits) {
  if (point.empty()) throw UsageError("faces mesh needs --point");
  const GroupPtr g = build_group(name);
  const Point seed = dominant_of(*g, point);
  std::string off = export_off(*g, seed, limits);
  return {json{{"point", to_json(seed)}, {"off", off}}, off, off};
}

// ---------------------------------------------------------------- invariants

Result invariant_congruence(const std::string& name, const std::string& point) {
  const GroupPtr g = build_group(name);
  const Point x = parse_point(point);
  const CongruenceClass c = congruence_number(*g, x);
  json p = {{"point", to_json(x)}};
  p.update(to_json(c));
  return {p, "congruence class of " + paren(x) + ": " + c.str() + "\n", std::nullopt};
}

Result invariant_index(const std::string& name, const std::string& point, const std::string& other, int degree,
                       const ComputeLimits& limits) {
  if (degree < 0 || degree % 2 != 0) throw DomainError("indices have even degree, got " + std::to_string(degree));
  const GroupPtr g = build_group(name);
  const Point a = dominant_of(*g, point);
  if (other.empty()) {
    const QTau v = index_even(*g, a, static_cast<unsigned>(degree / 2));
    json p = {{"point", to_json(a)}, {"degree", degree}, {"value", to_json(v)}};
    return {p, "I^(" + std::to_string(degree) + ") of " + paren(a) + " = " + v.str() + "\n", std::nullopt};
  }
  const Point b = dominant_of(*g, other);
  const QTau closed = index_of_product(*g, a, b, static_cast<unsigned>(degree));
  const OrbitSum sum = orbit_product(generate_orbit(*g, a, limits), generate_orbit(*g, b, limits), limits);
  const QTau summed = index_of_sum(sum, static_cast<unsigned>(degree));
  json p = {{"a", to_json(a)},
            {"b", to_json(b)},
            {"degree", degree},
            {"value", to_json(closed)},
            {"decomposition_value", to_json(summed)},
            {"agree", closed == summed}};
  std::string t = "I^(" + std::to_string(degree) + ") of " + paren(a) + " x " + paren(b) + " = " + closed.str() +
                  " (closed form), " + summed.str() + " (sum over " + sum.str() + ")\n";
  return {p, t, std::nullopt};
}

Result invariant_anomaly(const std::string& name, const std::string& point, int degree, std::optional<int> node,
                         const ComputeLimits& limits) {
  if (degree < 1 || degree % 2 == 0) throw DomainError("anomaly numbers have odd degree, got " + std::to_string(degree));
  const GroupPtr g = build_group(name);
  std::optional<int> zero_based;
  if (node) {
    if (*node < 1 || *node > g->rank()) {
      throw UsageError("--removed-node must be between 1 and " + std::to_string(g->rank()));
    }
    zero_based = *node - 1;
  }
  const AnomalyVector u = anomaly_vector(*g, zero_based);
  const Orbit o = generate_orbit(*g, parse_point(point), limits);
  const QTau v = anomaly_number(o, u, static_cast<unsigned>(degree));
  json p = {{"point", to_json(o.dominant())}, {"degree", degree}, {"value", to_json(v)}, {"convention", anomaly_convention(u)}};
  std::string t = "I^(" + std::to_string(degree) + ") of " + paren(o.dominant()) + " = " + v.str() + "  (u = omega_" +
                  std::to_string(u.removed_node + 1) + ", unnormalized)\n";
  return {p, t, std::nullopt};
}

bool wants_json(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--format=json") return true;
    if (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json") return true;
  }
  return false;
}

int report(bool as_json, const std::string& command, const std::string& group, const char* kind, int code,
           const std::string& message) {
  if (as_json) {
    json e = {{"schema", kSchemaVersion},
              {"command", command},
              {"group", group},
              {"status", "error"},
              {"error", {{"kind", kind}, {"exit_code", code}, {"message", message}}}};
    std::cerr << e.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits, products, polytopes and invariants of finite Coxeter groups", "orbitkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "off"}))
      ->capture_default_str();
  app.add_option("--max-points", g.max_points, "Size guard: largest orbit or sum count to enumerate");
  app.add_option("--seed-order", g.seed_order, "Numbering of orbit points")
      ->check(CLI::IsMember({"canonical"}))
      ->capture_default_str();
  app.add_flag("--timing", g.timing, "Add wall-clock timing to JSON output");

  Command cmd;
  std::string group_name, point, point_b, signed_spec, decoration, component = "symm", method = "direct";
  int k = 2;
  int degree = -1;
  std::optional<int> removed_node;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("group", group_name, "Group, e.g. A2, B3, H3, E8, I2(7), A1xA2")->required();
    return sub;
  };
  auto set = [&](const std::string& name, std::function<Result()> run) {
    cmd.name = name;
    cmd.run = std::move(run);
  };

  // group
  auto* group_cmd = app.add_subcommand("group", "Group data")->require_subcommand(1);
  leaf(group_cmd, "info", "Order, Coxeter and Cartan matrices, root norms, weight Gram matrix")
      ->final_callback([&] { set("group info", [&] { return group_info(group_name); }); });

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit generation")->require_subcommand(1);
  auto* gen = leaf(orbit_cmd, "gen", "All points of an orbit");
  gen->add_option("--point", point, "Seed point, e.g. 1,0,1+t")->required();
  gen->final_callback([&] { set("orbit gen", [&] { return orbit_gen(group_name, point, limits_from(g)); }); });
  auto* size = leaf(orbit_cmd, "size", "Orbit size from the stabilizer");
  size->add_option("--point", point, "Seed point")->required();
  size->final_callback([&] { set("orbit size", [&] { return orbit_size_cmd(group_name, point); }); });

  // product
  auto* product = leaf(&app, "product", "Decompose the product of two orbits");
  product->add_option("--a", point, "First seed point")->required();
  product->add_option("--b", point_b, "Second seed point")->required();
  product->add_option("--signed", signed_spec, "Signed product, e.g. a:C,b:S");
  product->add_option("--method", method, "Decomposition method")
      ->check(CLI::IsMember({"direct", "orbit-stabilizer"}))
      ->capture_default_str();
  product->final_callback([&] {
    set("product", [&] { return product_cmd(group_name, point, point_b, signed_spec, method, limits_from(g)); });
  });

  // power
  auto* power = leaf(&app, "power", "Symmetrized power of an orbit");
  power->add_option("--point", point, "Seed point")->required();
  power->add_option("--k", k, "Power")->check(CLI::IsMember({2, 3}))->capture_default_str();
  power->add_option("--component", component, "Permutation symmetry")
      ->check(CLI::IsMember({"symm", "anti", "mixed"}))
      ->capture_default_str();
  power->final_callback(
      [&] { set("power", [&] { return power_cmd(group_name, point, k, component, limits_from(g)); }); });

  // faces
  auto* faces = app.add_subcommand("faces", "Polytope faces from decorated diagrams")->require_subcommand(1);
  auto* count = leaf(faces, "count", "Face orbits of one polytope");
  count->add_option("--point", point, "Dominant seed point");
  count->add_option("--decoration", decoration, "Extreme decoration, e.g. bbo");
  count->final_callback([&] { set("faces count", [&] { return faces_count(group_name, point, decoration); }); });
  leaf(faces, "membership", "Face types of every polytope of the group")->final_callback([&] {
    set("faces membership", [&] { return faces_membership(group_name); });
  });
  auto* verts = leaf(faces, "vertices", "Vertices of the face through the seed");
  verts->add_option("--point", point, "Dominant seed point");
  verts->add_option("--decoration", decoration, "Face decoration, e.g. ssb");
  verts->final_callback(
      [&] { set("faces vertices", [&] { return faces_vertices(group_name, point, decoration, limits_from(g)); }); });
  auto* mesh = leaf(faces, "mesh", "OFF mesh of the polytope");
  mesh->add_option("--point", point, "Seed point");
  mesh->final_callback([&] { set("faces mesh", [&] { return faces_mesh(group_name, point, limits_from(g)); }); });

  // invariant
  auto* inv = app.add_subcommand("invariant", "Orbit invariants")->require_subcommand(1);
  auto* cong = leaf(inv, "congruence", "Congruence class of a point");
  cong->add_option("--point", point, "Point")->required();
  cong->final_callback([&] { set("invariant congruence", [&] { return invariant_congruence(group_name, point); }); });
  auto* index = leaf(inv, "index", "Even-degree index of an orbit or of a product");
  index->add_option("--point", point, "Seed point")->required();
  index->add_option("--b", point_b, "Second seed point: index of the product");
  index->add_option("--degree", degree, "Even degree (default 2)");
  index->final_callback([&] {
    set("invariant index",
        [&] { return invariant_index(group_name, point, point_b, degree < 0 ? 2 : degree, limits_from(g)); });
  });
  auto* anomaly = leaf(inv, "anomaly", "Odd-degree anomaly number of an orbit");
  anomaly->add_option("--point", point, "Seed point")->required();
  anomaly->add_option("--degree", degree, "Odd degree (default 3)");
  anomaly->add_option("--removed-node", removed_node, "Node removed for the U(1) direction, 1-based");
  anomaly->final_callback([&] {
    set("invariant anomaly",
        [&] { return invariant_anomaly(group_name, point, degree < 0 ? 3 : degree, removed_node, limits_from(g)); });
  });

  const bool json_errors = wants_json(argc, argv);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(json_errors, cmd.name, group_name, "usage", kUsage, e.what());
  }

  const bool as_json = g.format == "json";
  try {
    if (g.format == "off" && cmd.name != "faces mesh") {
      throw UsageError("--format off is only available for faces mesh");
    }
    const auto t0 = std::chrono::steady_clock::now();
    Result r = cmd.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (as_json) {
      json out = envelope(cmd.name, build_group(group_name)->name(), std::move(r.payload));
      if (g.timing) out["timing"] = {{"seconds", seconds}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << r.text;
      if (g.timing) std::cerr << "elapsed " << seconds << " s\n";
    }
    return kOk;
  } catch (const UsageError& e) {
    return report(as_json, cmd.name, group_name, "usage", kUsage, e.what());
  } catch (const ParseError& e) {
    return report(as_json, cmd.name, group_name, "usage", kUsage, e.what());
  } catch (const SizeGuardError& e) {
    return report(as_json, cmd.name, group_name, "size_guard", kSizeGuard, e.what());
  } catch (const DomainError& e) {
    return report(as_json, cmd.name, group_name, "domain", kDomain, e.what());
  } catch (const InternalError& e) {
    return report(as_json, cmd.name, group_name, "internal", kInternal, e.what());
  }
}
