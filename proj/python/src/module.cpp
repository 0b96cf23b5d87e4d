#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitkit/error.hpp"
#include "orbitkit/invariants.hpp"
#include "orbitkit/polytope.hpp"

namespace py = pybind11;
using namespace orbitkit;

namespace {

// Points cross the boundary as lists of scalar strings ("1", "t", "-1/2+t").
using PyPoint = std::vector<std::string>;

Point to_point(const PyPoint& coords) {
  std::vector<QTau> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(QTau::parse(c));
  return Point(std::move(out));
}

PyPoint from_point(const Point& p) {
  PyPoint out;
  for (const auto& c : p) out.push_back(c.str());
  return out;
}

py::object big(const mpz_class& n) { return py::int_(py::str(n.get_str())); }

ComputeLimits limits(std::size_t max_points) {
  ComputeLimits l = ComputeLimits::from_environment();
  if (max_points != 0) l.max_points = max_points;
  return l;
}

py::list terms(const OrbitSum& sum) {
  py::list out;
  for (const auto& t : sum.sorted_terms()) out.append(py::make_tuple(from_point(t.dominant), t.multiplicity, big(t.size)));
  return out;
}

class PyGroup {
 public:
  explicit PyGroup(const std::string& name) : g_(build_group(name)) {}

  std::string name() const { return g_->name(); }
  int rank() const { return g_->rank(); }
  py::object order() const { return big(g_->order()); }

  std::vector<std::vector<std::string>> cartan() const {
    const auto& c = g_->cartan();
    std::vector<std::vector<std::string>> out(c.rows());
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) out[i].push_back(c(i, j).str());
    return out;
  }

  std::vector<PyPoint> orbit(const PyPoint& seed, std::size_t max_points) const {
    std::vector<PyPoint> out;
    for (const auto& p : generate_orbit(*g_, to_point(seed), limits(max_points)).points()) out.push_back(from_point(p));
    return out;
  }

  py::object orbit_size(const PyPoint& seed) const {
    return big(::orbitkit::orbit_size(*g_, dominant_representative(*g_, to_point(seed))));
  }

  PyPoint dominant(const PyPoint& x) const { return from_point(dominant_representative(*g_, to_point(x))); }

  py::list product(const PyPoint& a, const PyPoint& b, const std::string& method, std::size_t max_points) const {
    const ComputeLimits l = limits(max_points);
    const ProductMethod m = method == "orbit-stabilizer" ? ProductMethod::orbit_stabilizer : ProductMethod::direct;
    if (method != "direct" && method != "orbit-stabilizer") throw DomainError("unknown method '" + method + "'");
    return terms(orbit_product(generate_orbit(*g_, to_point(a), l), generate_orbit(*g_, to_point(b), l), l, m));
  }

  py::list power(const PyPoint& seed, int k, const std::string& component, std::size_t max_points) const {
    const ComputeLimits l = limits(max_points);
    return terms(symmetrized_power(generate_orbit(*g_, to_point(seed), l), k, parse_component(component), l));
  }

  py::list faces(const std::string& decoration) const {
    py::list out;
    for (const auto& f : enumerate_faces(*g_, Decoration::parse(decoration))) {
      py::dict d;
      d["decoration"] = f.decoration.str();
      d["dimension"] = f.dimension;
      d["count"] = big(f.count);
      out.append(d);
    }
    return out;
  }

  std::string extreme_decoration(const PyPoint& seed) const {
    return ::orbitkit::extreme_decoration(*g_, to_point(seed)).str();
  }

  py::tuple congruence(const PyPoint& x) const {
    const auto c = congruence_number(*g_, to_point(x));
    return py::make_tuple(c.values, c.moduli);
  }

  std::string index(const PyPoint& seed, unsigned k) const {
    return index_even(*g_, dominant_representative(*g_, to_point(seed)), k).str();
  }

  std::string anomaly(const PyPoint& seed, unsigned degree, std::optional<int> removed_node) const {
    std::optional<int> node;
    if (removed_node) node = *removed_node - 1;
    return anomaly_number(generate_orbit(*g_, to_point(seed)), anomaly_vector(*g_, node), degree).str();
  }

  std::string mesh(const PyPoint& seed) const { return export_off(*g_, to_point(seed)); }

 private:
  GroupPtr g_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orbits, products and polytopes of finite Coxeter groups in exact golden-ratio arithmetic";

  static py::exception<Error> base(m, "OrbitkitError", PyExc_RuntimeError);
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<SizeGuardError> guard(m, "SizeGuardError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse(e.what());
    } catch (const DomainError& e) {
      domain(e.what());
    } catch (const SizeGuardError& e) {
      guard(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("normalize_scalar", [](const std::string& s) { return QTau::parse(s).str(); },
        "Canonical form of a scalar a+b*t.");

  py::class_<PyGroup>(m, "Group")
      .def(py::init<const std::string&>(), py::arg("name"))
      .def_property_readonly("name", &PyGroup::name)
      .def_property_readonly("rank", &PyGroup::rank)
      .def_property_readonly("order", &PyGroup::order)
      .def_property_readonly("cartan", &PyGroup::cartan)
      .def("orbit", &PyGroup::orbit, py::arg("seed"), py::arg("max_points") = 0)
      .def("orbit_size", &PyGroup::orbit_size, py::arg("seed"))
      .def("dominant", &PyGroup::dominant, py::arg("point"))
      .def("product", &PyGroup::product, py::arg("a"), py::arg("b"), py::arg("method") = "direct",
           py::arg("max_points") = 0)
      .def("power", &PyGroup::power, py::arg("seed"), py::arg("k"), py::arg("component"), py::arg("max_points") = 0)
      .def("faces", &PyGroup::faces, py::arg("decoration"))
      .def("extreme_decoration", &PyGroup::extreme_decoration, py::arg("seed"))
      .def("congruence", &PyGroup::congruence, py::arg("point"))
      .def("index", &PyGroup::index, py::arg("seed"), py::arg("k"))
      .def("anomaly", &PyGroup::anomaly, py::arg("seed"), py::arg("degree") = 3, py::arg("removed_node") = py::none())
      .def("mesh", &PyGroup::mesh, py::arg("seed"))
      .def("__repr__", [](const PyGroup& g) { return "Group('" + g.name() + "')"; });
}
