#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metric_graphs/constructions.hpp"
#include "metric_graphs/errors.hpp"
#include "metric_graphs/graph.hpp"
#include "metric_graphs/metric_space.hpp"
#include "metric_graphs/point_cloud.hpp"
#include "metric_graphs/spaces.hpp"

namespace py = pybind11;
namespace mg = metric_graphs;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connected graphs induced by finite metric spaces: CS, MC and Sigma";

  py::register_exception<mg::Error>(m, "Error");

  py::enum_<mg::Norm>(m, "Norm")
      .value("l1", mg::Norm::l1)
      .value("l2", mg::Norm::l2)
      .value("linf", mg::Norm::linf);

  py::enum_<mg::ToleranceConfig::Scale>(m, "ToleranceScale")
      .value("absolute", mg::ToleranceConfig::Scale::absolute)
      .value("relative_to_diameter", mg::ToleranceConfig::Scale::relative_to_diameter);

  py::class_<mg::ToleranceConfig>(m, "ToleranceConfig")
      .def(py::init<>())
      .def(py::init([](double eq_tol, mg::ToleranceConfig::Scale scale) {
             return mg::ToleranceConfig{eq_tol, scale};
           }),
           py::arg("eq_tol"), py::arg("scale") = mg::ToleranceConfig::Scale::absolute)
      .def_readwrite("eq_tol", &mg::ToleranceConfig::eq_tol)
      .def_readwrite("scale", &mg::ToleranceConfig::scale);

  py::class_<mg::PointCloud>(m, "PointCloud")
      .def(py::init<>())
      .def(py::init([](std::vector<std::vector<double>> points, mg::Norm norm) {
             return mg::PointCloud{std::move(points), norm};
           }),
           py::arg("points"), py::arg("norm") = mg::Norm::l2)
      .def_readwrite("points", &mg::PointCloud::points)
      .def_readwrite("norm", &mg::PointCloud::norm)
      .def("__len__", &mg::PointCloud::size)
      .def_property_readonly("dim", &mg::PointCloud::dim);

  m.def("point_distance", &mg::point_distance, py::arg("a"), py::arg("b"), py::arg("norm"));

  py::enum_<mg::Provenance>(m, "Provenance")
      .value("points", mg::Provenance::points)
      .value("matrix", mg::Provenance::matrix);

  py::class_<mg::FiniteMetricSpace>(m, "FiniteMetricSpace")
      .def_static("from_points", &mg::FiniteMetricSpace::from_points, py::arg("cloud"),
                  py::arg("tol") = mg::ToleranceConfig{})
      .def_static("from_matrix", &mg::FiniteMetricSpace::from_matrix, py::arg("table"),
                  py::arg("tol") = mg::ToleranceConfig{})
      .def("__len__", &mg::FiniteMetricSpace::size)
      .def_property_readonly("size", &mg::FiniteMetricSpace::size)
      .def("dist", &mg::FiniteMetricSpace::dist, py::arg("i"), py::arg("j"))
      .def_property_readonly("diameter", &mg::FiniteMetricSpace::diameter)
      .def_property_readonly("tol", &mg::FiniteMetricSpace::tol)
      .def_property_readonly("provenance", &mg::FiniteMetricSpace::provenance)
      .def_property_readonly("cloud",
                             [](const mg::FiniteMetricSpace& s) { return s.cloud(); });

  py::class_<mg::DistanceSet>(m, "DistanceSet")
      .def_readonly("values", &mg::DistanceSet::values)
      .def_readonly("multiplicity", &mg::DistanceSet::multiplicity)
      .def("index_of", &mg::DistanceSet::index_of, py::arg("d"));

  m.def("distance_set", &mg::distance_set, py::arg("space"));
  m.def("mesh_delta", &mg::mesh_delta, py::arg("distances"));
  m.def("is_distance_separated", &mg::is_distance_separated, py::arg("space"));

  py::enum_<mg::WeightMode>(m, "WeightMode")
      .value("unit", mg::WeightMode::unit)
      .value("distance", mg::WeightMode::distance);

  py::class_<mg::Edge>(m, "Edge")
      .def(py::init([](std::size_t u, std::size_t v, double weight) {
             return mg::Edge{u, v, weight};
           }),
           py::arg("u"), py::arg("v"), py::arg("weight") = 1.0)
      .def_readonly("u", &mg::Edge::u)
      .def_readonly("v", &mg::Edge::v)
      .def_readonly("weight", &mg::Edge::weight)
      .def("__repr__", [](const mg::Edge& e) {
        return "Edge(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
               std::to_string(e.weight) + ")";
      });

  py::class_<mg::WeightedGraph>(m, "WeightedGraph")
      .def(py::init<std::size_t, std::vector<mg::Edge>, mg::WeightMode>(),
           py::arg("vertex_count"), py::arg("edges"),
           py::arg("mode") = mg::WeightMode::distance)
      .def_property_readonly("vertex_count", &mg::WeightedGraph::vertex_count)
      .def_property_readonly("edge_count", &mg::WeightedGraph::edge_count)
      .def_property_readonly("edges", &mg::WeightedGraph::edges)
      .def_property_readonly("weight_mode", &mg::WeightedGraph::weight_mode)
      .def("weight", &mg::WeightedGraph::weight, py::arg("edge"))
      .def("has_edge", &mg::WeightedGraph::has_edge, py::arg("u"), py::arg("v"))
      .def("with_mode", &mg::WeightedGraph::with_mode, py::arg("mode"));

  py::class_<mg::ComponentPartition>(m, "ComponentPartition")
      .def_readonly("representative", &mg::ComponentPartition::representative)
      .def_readonly("components", &mg::ComponentPartition::components)
      .def("__len__", &mg::ComponentPartition::count)
      .def("same_component", &mg::ComponentPartition::same_component, py::arg("a"), py::arg("b"));

  m.def("components", &mg::components, py::arg("graph"));
  m.def("is_connected", &mg::is_connected, py::arg("graph"));
  m.def("is_tree", &mg::is_tree, py::arg("graph"));
  m.def("has_cycle", &mg::has_cycle, py::arg("graph"));
  m.def("path_metric", &mg::path_metric, py::arg("graph"),
        py::arg("tol") = mg::ToleranceConfig{});
  m.def("isomorphic_under", &mg::isomorphic_under, py::arg("g"), py::arg("h"), py::arg("f"));
  m.def("is_subgraph", &mg::is_subgraph, py::arg("g"), py::arg("h"));
  m.def("same_edge_set", &mg::same_edge_set, py::arg("g"), py::arg("h"));

  py::class_<mg::CsStep>(m, "CsStep")
      .def_readonly("partition", &mg::CsStep::partition)
      .def_readonly("nu", &mg::CsStep::nu)
      .def_readonly("new_edges", &mg::CsStep::new_edges);

  py::class_<mg::CsTrace>(m, "CsTrace")
      .def_readonly("steps", &mg::CsTrace::steps)
      .def_readonly("final_graph", &mg::CsTrace::final_graph);

  m.def("build_cs", &mg::build_cs, py::arg("space"));

  py::class_<mg::CutValue>(m, "CutValue")
      .def_readonly("value", &mg::CutValue::value)
      .def_readonly("index", &mg::CutValue::index);

  m.def("build_mc", &mg::build_mc, py::arg("space"));
  m.def("build_sigma", &mg::build_sigma, py::arg("space"));

  py::enum_<mg::IntrinsicLabel>(m, "IntrinsicLabel")
      .value("extrinsic", mg::IntrinsicLabel::extrinsic)
      .value("intrinsic_i", mg::IntrinsicLabel::intrinsic_i)
      .value("intrinsic_ii", mg::IntrinsicLabel::intrinsic_ii);

  py::class_<mg::IntrinsicClass>(m, "IntrinsicClass")
      .def_readonly("label", &mg::IntrinsicClass::label)
      .def_readonly("common_length", &mg::IntrinsicClass::common_length);

  m.def("classify_intrinsic", &mg::classify_intrinsic, py::arg("space"));

  py::class_<mg::RelationsReport>(m, "RelationsReport")
      .def_readonly("cs", &mg::RelationsReport::cs)
      .def_readonly("mc", &mg::RelationsReport::mc)
      .def_readonly("sigma", &mg::RelationsReport::sigma)
      .def_readonly("cut", &mg::RelationsReport::cut)
      .def_readonly("cls", &mg::RelationsReport::cls)
      .def_readonly("cs_steps", &mg::RelationsReport::cs_steps)
      .def_readonly("cs_subset_sigma", &mg::RelationsReport::cs_subset_sigma)
      .def_readonly("cs_subset_mc", &mg::RelationsReport::cs_subset_mc)
      .def_readonly("cs_eq_sigma_cap_mc", &mg::RelationsReport::cs_eq_sigma_cap_mc)
      .def_readonly("sigma_eq_cs", &mg::RelationsReport::sigma_eq_cs)
      .def_readonly("mc_eq_cs", &mg::RelationsReport::mc_eq_cs)
      .def_readonly("all_equal", &mg::RelationsReport::all_equal);

  m.def("relations_report", &mg::relations_report, py::arg("space"));

  py::class_<mg::Bijection>(m, "Bijection")
      .def(py::init([](std::vector<std::size_t> forward) {
             mg::Bijection f{std::move(forward)};
             f.validate();
             return f;
           }),
           py::arg("forward"))
      .def_static("identity", &mg::Bijection::identity, py::arg("m"))
      .def("inverse", &mg::Bijection::inverse)
      .def_readonly("forward", &mg::Bijection::forward)
      .def("__len__", &mg::Bijection::size)
      .def("__call__", &mg::Bijection::operator(), py::arg("i"));

  m.def("separation",
        py::overload_cast<const mg::PointCloud&, const mg::PointCloud&, const mg::Bijection&>(
            &mg::separation),
        py::arg("a"), py::arg("b"), py::arg("f"));
  m.def("separation",
        py::overload_cast<const mg::FiniteMetricSpace&, const mg::FiniteMetricSpace&,
                          const mg::Bijection&>(&mg::separation),
        py::arg("a"), py::arg("b"), py::arg("f"));

  py::class_<mg::BottleneckResult>(m, "BottleneckResult")
      .def_readonly("distance", &mg::BottleneckResult::distance)
      .def_readonly("matching", &mg::BottleneckResult::matching);

  m.def("bottleneck_distance", &mg::bottleneck_distance, py::arg("a"), py::arg("b"),
        py::arg("cap") = 512);
  m.def("bottleneck_bruteforce", &mg::bottleneck_bruteforce, py::arg("a"), py::arg("b"));

  py::class_<mg::PerturbReport>(m, "PerturbReport")
      .def_readonly("output", &mg::PerturbReport::output)
      .def_readonly("displacement", &mg::PerturbReport::displacement)
      .def_readonly("attempts", &mg::PerturbReport::attempts)
      .def_readonly("seed", &mg::PerturbReport::seed);

  m.def("perturb_to_ds", &mg::perturb_to_ds, py::arg("cloud"), py::arg("epsilon"),
        py::arg("seed"), py::arg("max_attempts") = 64, py::arg("tol") = mg::ToleranceConfig{});

  py::class_<mg::SampleModel>(m, "SampleModel")
      .def_static("uniform_cube", &mg::SampleModel::uniform_cube, py::arg("dim"), py::arg("side"))
      .def_static("grid", &mg::SampleModel::grid, py::arg("dim"), py::arg("k"))
      .def_static("jittered_grid", &mg::SampleModel::jittered_grid, py::arg("dim"), py::arg("k"),
                  py::arg("sigma"));

  m.def("sample_cloud", &mg::sample_cloud, py::arg("model"), py::arg("m"), py::arg("seed"));

  py::class_<mg::RigidMotion>(m, "RigidMotion")
      .def(py::init<>())
      .def_readwrite("rotation", &mg::RigidMotion::rotation)
      .def_readwrite("translation", &mg::RigidMotion::translation)
      .def_readwrite("relabeling", &mg::RigidMotion::relabeling);

  m.def("random_rigid_motion", &mg::random_rigid_motion, py::arg("dim"), py::arg("seed"));
  m.def("random_bijection", &mg::random_bijection, py::arg("m"), py::arg("seed"));
  m.def("apply_motion", &mg::apply, py::arg("motion"), py::arg("cloud"));
}
