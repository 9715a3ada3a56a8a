#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohconf/cellmult.hpp"
#include "cohconf/configuration.hpp"
#include "cohconf/io.hpp"

namespace py = pybind11;
using namespace cohconf;

namespace {

struct Built {
  LineSpace ls;
  ChamberSystem cs;
};

Built open_geometry(const std::string& geometry, long q) {
  LineSpace ls = geometry == "pg"         ? projective_plane(q)
                 : geometry == "ag"       ? affine_plane(q)
                 : geometry == "clique"   ? clique_plane(q)
                 : geometry == "petersen" ? petersen_linespace()
                                          : throw Error("unknown geometry: " + geometry);
  ChamberSystem cs = chamber_system(ls);
  return {std::move(ls), std::move(cs)};
}

AlgebraBasis make_algebra(const EdgeColouredGraph& g) {
  std::vector<RatMatrix> gens;
  for (int c = 1; c <= g.colour_count(); ++c) gens.push_back(adjacency_operator(g, c));
  const std::size_t n = g.vertex_count();
  return AlgebraBasis::closure(std::move(gens), std::max<std::size_t>(1, n * n));
}

PermutationAction builtin_action(const std::string& geometry, long q) {
  if (geometry == "ag") return affine_symmetries(q);
  if (geometry == "pg") return projective_symmetries(q);
  if (geometry == "clique") return clique_symmetries(q);
  if (geometry == "petersen") return petersen_symmetries();
  throw Error("no builtin action for geometry: " + geometry);
}

CoherentConfiguration build_config(const Built& b, const std::string& geometry,
                                   const AlgebraBasis& ab) {
  if (geometry == "ag")
    return verify_architecture(b.cs.graph, ab, canonical_affine_architecture(b.ls, b.cs));
  if (geometry == "pg")
    return verify_architecture(b.cs.graph, ab, canonical_projective_architecture(b.ls, b.cs));
  if (geometry == "clique")
    return verify_architecture(b.cs.graph, ab, canonical_clique_architecture(b.ls, b.cs));
  return verify_architecture(b.cs.graph, ab, canonical_petersen_architecture(ab));
}

py::dict config_dict(const CoherentConfiguration& cc) {
  py::dict d;
  d["classes"] = cc.class_count();
  py::list exprs;
  for (std::size_t i = 0; i < cc.class_count(); ++i) exprs.append(cc.expression_text(i));
  d["expressions"] = exprs;
  py::list inter;
  for (std::size_t i = 0; i < cc.class_count(); ++i)
    for (std::size_t j = 0; j < cc.class_count(); ++j)
      for (std::size_t k = 0; k < cc.class_count(); ++k)
        if (cc.intersection(i, j, k) != 0)
          inter.append(py::make_tuple(i, j, k, cc.intersection(i, j, k)));
  d["intersection"] = inter;
  d["transpose_perm"] = cc.transpose_perm();
  d["sphere_sizes"] = cc.sphere_sizes();
  return d;
}

py::dict analyze(const std::string& geometry, long q) {
  const Built b = open_geometry(geometry, q);
  const AlgebraBasis ab = make_algebra(b.cs.graph);
  py::dict d;
  d["vertices"] = b.cs.graph.vertex_count();
  d["colours"] = b.cs.graph.colour_count();
  const auto orders = regularity_orders(b.cs.graph);
  if (orders)
    d["regular_orders"] = *orders;
  else
    d["regular_orders"] = py::none();
  d["chamber_system"] = is_chamber_system(b.cs.graph);
  d["dim"] = ab.dim();
  py::list words;
  for (const auto& w : ab.words()) words.append(word_to_string(w));
  d["basis_words"] = words;
  d["semisimple"] = gram_semisimple(ab);
  return d;
}

py::dict configuration(const std::string& geometry, long q) {
  const Built b = open_geometry(geometry, q);
  const AlgebraBasis ab = make_algebra(b.cs.graph);
  return config_dict(build_config(b, geometry, ab));
}

py::dict strong_transitivity(const std::string& geometry, long q, int base) {
  const Built b = open_geometry(geometry, q);
  const AlgebraBasis ab = make_algebra(b.cs.graph);
  const PermutationAction act = builtin_action(geometry, q);
  const auto r = strong_transitivity_report(b.cs.graph, act, ab, base);
  py::dict d;
  d["transitive"] = r.transitive;
  d["b_orbit_count"] = r.b_orbit_count;
  d["algebra_dim"] = r.algebra_dim;
  d["strongly_transitive"] = r.strongly_transitive;
  d["group_order"] = py::cast(group_order(act).get_str());
  return d;
}

py::dict subgroups(const std::string& geometry, long q, int base) {
  const Built b = open_geometry(geometry, q);
  const AlgebraBasis ab = make_algebra(b.cs.graph);
  const CoherentConfiguration cc = build_config(b, geometry, ab);
  const PermutationAction act = builtin_action(geometry, q);
  const StabilizerData stab = stabilizer(act, base);
  const auto idems = idempotents(cc);
  const auto poset = subgroup_poset(cc, idems, &act, &stab);
  py::dict d;
  py::list ji;
  for (const ClassSet x : idems) {
    py::list classes;
    for (std::size_t k = 0; k < cc.class_count(); ++k)
      if (x >> k & 1) classes.append(k);
    ji.append(classes);
  }
  d["idempotents"] = ji;
  py::list jh;
  for (auto [lo, hi] : poset.hasse) jh.append(py::make_tuple(lo, hi));
  d["hasse"] = jh;
  py::list orders;
  for (const auto& sub : poset.subgroups) orders.append(py::int_(py::str(sub.order->get_str())));
  d["orders"] = orders;
  return d;
}

py::tuple multiplicities(long q) {
  const Built b = open_geometry("ag", q);
  const auto m = affine_multiplicities(b.cs.graph, q);
  return py::make_tuple(m.n0, m.n1, m.n2, m.n3);
}

py::dict spectrum(long q) {
  const Built b = open_geometry("ag", q);
  const auto r = affine_spectrum_certificate(b.cs.graph, q);
  py::dict d;
  py::list checks;
  for (const auto& [name, ok] : r.checks) checks.append(py::make_tuple(name, ok));
  d["checks"] = checks;
  d["all_ok"] = r.all_ok;
  return d;
}

py::list verify_relations(const std::string& geometry, const std::string& preset, long q) {
  const Built b = open_geometry(geometry, q);
  const AlgebraBasis ab = make_algebra(b.cs.graph);
  std::vector<RelationPolynomial> rels;
  if (preset == "hecke-a2")
    rels = hecke_presentation({{1, 3}, {3, 1}}, {q, q});
  else if (preset == "aff")
    rels = aff_presentation(q);
  else if (preset == "circle")
    rels = circle_presentation(q);
  else if (preset == "petersen")
    rels = petersen_presentation();
  else
    throw Error("unknown preset: " + preset);
  py::list out;
  for (const auto& r : rels) out.append(py::make_tuple(r.to_string(), check_relation(ab, r)));
  return out;
}

}  // namespace

PYBIND11_MODULE(cohconf, m) {
  m.doc() = "chamber systems, adjacency algebras and coherent configurations";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "CohconfError");

  m.def("analyze", &analyze, py::arg("geometry"), py::arg("q") = 0,
        "Vertex count, regularity orders, algebra dimension and basis words of a builtin "
        "geometry (pg | ag | clique | petersen).");
  m.def("configuration", &configuration, py::arg("geometry"), py::arg("q") = 0,
        "Verified coherent configuration: expressions, intersection numbers, transpose "
        "permutation and sphere sizes.");
  m.def("strong_transitivity", &strong_transitivity, py::arg("geometry"), py::arg("q") = 0,
        py::arg("base") = 0, "Strong-transitivity report of the builtin symmetry action.");
  m.def("subgroups", &subgroups, py::arg("geometry"), py::arg("q") = 0, py::arg("base") = 0,
        "Complex-multiplication idempotents, Hasse diagram and subgroup orders.");
  m.def("affine_multiplicities", &multiplicities, py::arg("q"),
        "Module multiplicities (n0, n1, n2, n3) of the AG(2,q) chamber system.");
  m.def("affine_spectrum", &spectrum, py::arg("q"),
        "Spectrum certificate of the uncoloured AG(2,q) chamber graph.");
  m.def("verify_relations", &verify_relations, py::arg("geometry"), py::arg("preset"),
        py::arg("q") = 0, "Evaluate a relation preset on a builtin geometry's algebra.");
}
