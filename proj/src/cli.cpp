#include "cohconf/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cohconf/cellmult.hpp"
#include "cohconf/configuration.hpp"
#include "cohconf/io.hpp"
#include "json.hpp"

namespace cohconf {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1729;

struct Options {
  std::string geometry;  // pg | ag | clique | petersen
  long q = 0;
  std::string input_graph;
  std::string input_linespace;
  std::string group;  // "builtin" or a path
  int base = 0;
  std::string format = "text";
  std::string label_direction = "from-base";
  long dim_cap = 0;  // 0: default (vertex count, or COHCONF_DIM_CAP)
  bool force = false;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::string relations_file;
  std::string preset;
};

struct Source {
  std::string kind;  // pg | ag | clique | petersen | graph-file | linespace-file
  long q = 0;
  std::optional<LineSpace> ls;
  std::optional<ChamberSystem> cs;
  std::optional<EdgeColouredGraph> plain;

  const EdgeColouredGraph& graph() const { return cs ? cs->graph : *plain; }
};

Source open_source(const Options& o) {
  const int picked = int(!o.geometry.empty()) + int(!o.input_graph.empty()) +
                     int(!o.input_linespace.empty());
  if (picked != 1)
    throw Error("exactly one graph source required: --geometry, --input, or --linespace");
  Source s;
  if (!o.input_graph.empty()) {
    s.kind = "graph-file";
    s.plain = parse_graph_file(o.input_graph);
    return s;
  }
  if (!o.input_linespace.empty()) {
    s.kind = "linespace-file";
    s.ls = parse_linespace_file(o.input_linespace);
    s.cs = chamber_system(*s.ls);
    return s;
  }
  s.kind = o.geometry;
  s.q = o.q;
  if (s.kind == "petersen") {
    s.ls = petersen_linespace();
  } else if (s.kind == "pg" || s.kind == "ag" || s.kind == "clique") {
    if (o.q < 2) throw Error("--q is required (>= 2) for geometry '" + s.kind + "'");
    s.ls = s.kind == "pg"   ? projective_plane(o.q)
           : s.kind == "ag" ? affine_plane(o.q)
                            : clique_plane(o.q);
  } else {
    throw Error("unknown geometry '" + s.kind + "' (pg | ag | clique | petersen)");
  }
  s.cs = chamber_system(*s.ls);
  return s;
}

std::size_t effective_dim_cap(const Options& o, const EdgeColouredGraph& g) {
  if (o.dim_cap > 0) return static_cast<std::size_t>(o.dim_cap);
  if (const char* env = std::getenv("COHCONF_DIM_CAP")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const std::size_t n = g.vertex_count();
  return std::max<std::size_t>(1, n * n);
}

AlgebraBasis make_algebra(const Options& o, const EdgeColouredGraph& g) {
  std::vector<RatMatrix> gens;
  for (int c = 1; c <= g.colour_count(); ++c) gens.push_back(adjacency_operator(g, c));
  return AlgebraBasis::closure(std::move(gens), effective_dim_cap(o, g));
}

std::optional<PermutationAction> open_action(const Options& o, const Source& s) {
  if (o.group.empty()) return std::nullopt;
  if (o.group != "builtin") return parse_group_file(o.group);
  if (s.kind == "ag") return affine_symmetries(s.q);
  if (s.kind == "pg") return projective_symmetries(s.q);
  if (s.kind == "clique") return clique_symmetries(s.q);
  if (s.kind == "petersen") return petersen_symmetries();
  throw Error("--group builtin requires a builtin geometry");
}

std::optional<std::vector<RatMatrix>> canonical_candidates(const Source& s,
                                                           const AlgebraBasis& ab) {
  if (s.kind == "ag") return canonical_affine_architecture(*s.ls, *s.cs);
  if (s.kind == "pg") return canonical_projective_architecture(*s.ls, *s.cs);
  if (s.kind == "clique") return canonical_clique_architecture(*s.ls, *s.cs);
  if (s.kind == "petersen") return canonical_petersen_architecture(ab);
  if (s.kind == "linespace-file") {
    // Recognize the plane families a canonical construction exists for.
    if (is_projective_plane(*s.ls)) return canonical_projective_architecture(*s.ls, *s.cs);
    if (is_affine_plane(*s.ls)) return canonical_affine_architecture(*s.ls, *s.cs);
    const int n = s.ls->point_count();
    if (s.ls->line_count() == n * (n - 1) / 2 && n >= 4) {
      bool all_pairs = true;
      for (const auto& line : s.ls->lines()) all_pairs = all_pairs && line.size() == 2;
      if (all_pairs) return canonical_clique_architecture(*s.ls, *s.cs);
    }
  }
  return std::nullopt;
}

struct BuiltConfiguration {
  std::optional<CoherentConfiguration> cc;
  bool action_matches_canonical = true;   // meaningful when both were built
  bool compared = false;
  std::optional<StrongTransitivityReport> report;
  std::optional<StabilizerData> stab;
};

bool same_matrix_set(const std::vector<RatMatrix>& a, const std::vector<RatMatrix>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& m : a)
    if (std::find(b.begin(), b.end(), m) == b.end()) return false;
  return true;
}

BuiltConfiguration build_configuration(const Options& o, const Source& s, const AlgebraBasis& ab,
                                       const std::optional<PermutationAction>& action) {
  BuiltConfiguration out;
  auto canonical = canonical_candidates(s, ab);
  if (action) {
    out.report = strong_transitivity_report(s.graph(), *action, ab, o.base);
    CoherentConfiguration from_action = architecture_from_action(s.graph(), *action, ab, o.base);
    out.stab = stabilizer(*action, o.base);
    if (canonical) {
      // The architecture is unique; present the canonical class order and
      // record the cross-check against the action-derived classes.
      out.cc = verify_architecture(s.graph(), ab, std::move(*canonical));
      out.action_matches_canonical = same_matrix_set(out.cc->classes(), from_action.classes());
      out.compared = true;
      if (!out.action_matches_canonical)
        throw Error("action-derived classes differ from the canonical architecture");
    } else {
      out.cc = std::move(from_action);
    }
    return out;
  }
  if (!canonical)
    throw Error("no canonical architecture for this source; supply --group");
  out.cc = verify_architecture(s.graph(), ab, std::move(*canonical));
  return out;
}

json configuration_json(const CoherentConfiguration& cc) {
  json j;
  j["classes"] = cc.class_count();
  j["dim"] = cc.class_count();
  json exprs = json::array();
  for (std::size_t i = 0; i < cc.class_count(); ++i) exprs.push_back(cc.expression_text(i));
  j["expressions"] = exprs;
  json inter = json::array();
  for (std::size_t i = 0; i < cc.class_count(); ++i)
    for (std::size_t k = 0; k < cc.class_count(); ++k)
      for (std::size_t l = 0; l < cc.class_count(); ++l)
        if (cc.intersection(i, k, l) != 0)
          inter.push_back(json::array({i, k, l, cc.intersection(i, k, l)}));
  j["intersection"] = inter;
  j["transpose_perm"] = cc.transpose_perm();
  j["sphere_sizes"] = cc.sphere_sizes();
  return j;
}

int finish(const Options& o, const json& j, bool ok, std::ostream& out,
           const std::string& text) {
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
  return ok ? 0 : 1;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Source s = open_source(o);
  const EdgeColouredGraph& g = s.graph();
  const AlgebraBasis ab = make_algebra(o, g);
  const auto orders = regularity_orders(g);
  const bool chamber = is_chamber_system(g);
  const bool semisimple = gram_semisimple(ab);

  json j;
  j["vertices"] = g.vertex_count();
  j["colours"] = g.colour_count();
  if (orders)
    j["regular_orders"] = *orders;
  else
    j["regular_orders"] = nullptr;
  j["chamber_system"] = chamber;
  j["dim"] = ab.dim();
  json words = json::array();
  for (const auto& w : ab.words()) words.push_back(word_to_string(w));
  j["basis_words"] = words;
  j["semisimple"] = semisimple;

  std::ostringstream t;
  t << "vertices " << g.vertex_count() << "\n";
  t << "colours " << g.colour_count() << "\n";
  t << "regular orders:";
  if (orders)
    for (int q : *orders) t << " " << q;
  else
    t << " (irregular)";
  t << "\n";
  t << "chamber system: " << (chamber ? "yes" : "no") << "\n";
  t << "dim " << ab.dim() << "\n";
  t << "basis words:";
  for (const auto& w : ab.words()) t << " " << word_to_string(w);
  t << "\n";
  t << "semisimple: " << (semisimple ? "yes" : "no") << "\n";
  return finish(o, j, true, out, t.str());
}

int cmd_config(const Options& o, std::ostream& out) {
  const Source s = open_source(o);
  const AlgebraBasis ab = make_algebra(o, s.graph());
  const auto action = open_action(o, s);
  const BuiltConfiguration built = build_configuration(o, s, ab, action);
  const bool cross = cross_check_intersection_tensor(*built.cc, o.seed);

  json j = configuration_json(*built.cc);
  j["tensor_cross_check"] = cross;
  if (built.compared) j["action_matches_canonical"] = built.action_matches_canonical;
  if (built.report) {
    j["strongly_transitive"] = built.report->strongly_transitive;
    j["b_orbits"] = built.report->b_orbit_count;
  }

  std::ostringstream t;
  t << "classes " << built.cc->class_count() << "\n";
  for (std::size_t i = 0; i < built.cc->class_count(); ++i)
    t << "  A" << i << " = " << built.cc->expression_text(i)
      << "  (sphere size " << built.cc->sphere_sizes()[i] << ")\n";
  if (built.report)
    t << "strongly transitive: " << (built.report->strongly_transitive ? "yes" : "no")
      << " (B-orbits " << built.report->b_orbit_count << ", dim " << built.cc->class_count()
      << ")\n";
  if (built.compared)
    t << "action-derived classes match canonical: "
      << (built.action_matches_canonical ? "yes" : "no") << "\n";
  t << "tensor cross-check: " << (cross ? "pass" : "FAIL") << "\n";
  return finish(o, j, cross, out, t.str());
}

int cmd_subgroups(const Options& o, std::ostream& out) {
  const Source s = open_source(o);
  const AlgebraBasis ab = make_algebra(o, s.graph());
  const auto action = open_action(o, s);
  const BuiltConfiguration built = build_configuration(o, s, ab, action);
  const auto idems = idempotents(*built.cc, o.force);
  const SubgroupPoset poset =
      subgroup_poset(*built.cc, idems, action ? &*action : nullptr,
                     built.stab ? &*built.stab : nullptr);

  json j;
  json ji = json::array();
  for (const ClassSet x : idems) {
    json classes = json::array();
    for (std::size_t k = 0; k < built.cc->class_count(); ++k)
      if (x >> k & 1) classes.push_back(k);
    ji.push_back(classes);
  }
  j["idempotents"] = ji;
  json jh = json::array();
  for (auto [a, b] : poset.hasse) jh.push_back(json::array({a, b}));
  j["hasse"] = jh;
  if (built.stab) {
    json jo = json::array();
    for (const auto& d : poset.subgroups) jo.push_back(d.order->get_str());
    j["orders"] = jo;
  }

  std::ostringstream t;
  t << idems.size() << " idempotents\n";
  for (std::size_t i = 0; i < idems.size(); ++i) {
    t << "  #" << i << " classes {";
    bool first = true;
    for (std::size_t k = 0; k < built.cc->class_count(); ++k)
      if (idems[i] >> k & 1) {
        t << (first ? "" : ",") << k;
        first = false;
      }
    t << "}";
    if (built.stab) t << " order " << poset.subgroups[i].order->get_str();
    t << " index " << rational_to_string(poset.subgroups[i].index_in_g);
    t << "\n";
  }
  t << "hasse:";
  for (auto [a, b] : poset.hasse) t << " " << a << "<" << b;
  t << "\n";
  return finish(o, j, true, out, t.str());
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Source s = open_source(o);
  long q = s.q;
  if (s.kind != "ag") {
    if (o.q < 2) throw Error("spectrum: supply --geometry ag --q N, or --q with a file input");
    q = o.q;
  }
  const SpectrumReport r = affine_spectrum_certificate(s.graph(), q);
  const AffineMultiplicities m = affine_multiplicities(s.graph(), q);

  json j;
  json checks = json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"ok", ok}});
  j["checks"] = checks;
  j["multiplicities"] = json::array({m.n0, m.n1, m.n2, m.n3});
  j["all_ok"] = r.all_ok;

  std::ostringstream t;
  for (const auto& [name, ok] : r.checks)
    t << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  t << "multiplicities (n0,n1,n2,n3) = (" << m.n0 << "," << m.n1 << "," << m.n2 << "," << m.n3
    << ")\n";
  return finish(o, j, r.all_ok, out, t.str());
}

int cmd_label(const Options& o, std::ostream& out) {
  const Source s = open_source(o);
  const AlgebraBasis ab = make_algebra(o, s.graph());
  const auto action = open_action(o, s);
  const BuiltConfiguration built = build_configuration(o, s, ab, action);
  const LabelDirection dir = o.label_direction == "to-base"
                                 ? LabelDirection::ToBase
                                 : LabelDirection::FromBase;
  const SphereLabelling lab = sphere_labels(*built.cc, o.base, dir);

  json j;
  j["base"] = lab.base;
  j["direction"] = o.label_direction;
  j["labels"] = lab.labels;
  json exprs = json::array();
  for (std::size_t i = 0; i < built.cc->class_count(); ++i)
    exprs.push_back(built.cc->expression_text(i));
  j["expressions"] = exprs;

  std::ostringstream t;
  t << "base " << lab.base << " (" << o.label_direction << ")\n";
  for (std::size_t y = 0; y < lab.labels.size(); ++y)
    t << "  vertex " << y << ": class " << lab.labels[y] << " = "
      << built.cc->expression_text(lab.labels[y]) << "\n";
  return finish(o, j, true, out, t.str());
}

int cmd_verify_relations(const Options& o, std::ostream& out) {
  const Source s = open_source(o);
  const AlgebraBasis ab = make_algebra(o, s.graph());
  std::vector<RelationPolynomial> rels;
  if (!o.relations_file.empty()) {
    rels = parse_relations_file(o.relations_file);
  } else if (o.preset == "hecke-a2") {
    if (o.q < 1) throw Error("preset hecke-a2 requires --q");
    rels = hecke_presentation({{1, 3}, {3, 1}}, {o.q, o.q});
  } else if (o.preset == "aff") {
    if (o.q < 2) throw Error("preset aff requires --q");
    rels = aff_presentation(o.q);
  } else if (o.preset == "circle") {
    if (o.q < 2) throw Error("preset circle requires --q");
    rels = circle_presentation(o.q);
  } else if (o.preset == "petersen") {
    rels = petersen_presentation();
  } else {
    throw Error("verify-relations: supply --relations FILE or --preset "
                "{hecke-a2,aff,circle,petersen}");
  }

  bool all = true;
  json jr = json::array();
  std::ostringstream t;
  for (const auto& r : rels) {
    const bool ok = check_relation(ab, r);
    all = all && ok;
    jr.push_back({{"relation", r.to_string()}, {"holds", ok}});
    t << (ok ? "pass" : "FAIL") << "  " << r.to_string() << " = 0\n";
  }
  json j;
  j["relations"] = jr;
  j["all_hold"] = all;
  return finish(o, j, all, out, t.str());
}

void add_common(CLI::App* cmd, Options& o, bool with_group = true) {
  cmd->add_option("--geometry", o.geometry, "builtin geometry: pg | ag | clique | petersen");
  cmd->add_option("--q", o.q, "order of the parameterized geometry");
  cmd->add_option("--input", o.input_graph, "edge-coloured graph file");
  cmd->add_option("--linespace", o.input_linespace, "line space file");
  if (with_group) cmd->add_option("--group", o.group, "'builtin' or a group file");
  cmd->add_option("--base", o.base, "base vertex (default 0)");
  cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--dim-cap", o.dim_cap,
                  "algebra dimension cap (default: vertex count or COHCONF_DIM_CAP)");
  cmd->add_option("--seed", o.seed, "seed for sampled cross-checks");
  cmd->add_option("--threads", o.threads, "worker threads (outputs are identical for any value)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chamber systems, adjacency algebras and coherent configurations"};
  app.require_subcommand(1);
  Options o;

  CLI::App* analyze = app.add_subcommand("analyze", "graph, algebra and basis summary");
  add_common(analyze, o, false);
  CLI::App* config = app.add_subcommand("config", "build and verify a coherent configuration");
  add_common(config, o);
  CLI::App* subgroups =
      app.add_subcommand("subgroups", "complex-multiplication idempotents and subgroup poset");
  add_common(subgroups, o);
  subgroups->add_flag("--force", o.force, "enumerate even with many classes");
  CLI::App* spectrum = app.add_subcommand("spectrum", "affine-plane spectrum certificate");
  add_common(spectrum, o, false);
  CLI::App* label = app.add_subcommand("label", "per-vertex architecture labels");
  add_common(label, o);
  label->add_option("--label-direction", o.label_direction, "from-base | to-base")
      ->check(CLI::IsMember({"from-base", "to-base"}));
  CLI::App* verify = app.add_subcommand("verify-relations", "check presentation relations");
  add_common(verify, o, false);
  verify->add_option("--relations", o.relations_file, "relation file, one per line");
  verify->add_option("--preset", o.preset, "hecke-a2 | aff | circle | petersen");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (config->parsed()) return cmd_config(o, out);
    if (subgroups->parsed()) return cmd_subgroups(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (label->parsed()) return cmd_label(o, out);
    if (verify->parsed()) return cmd_verify_relations(o, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const VerifyError& e) {
    if (o.format == "json") {
      json j;
      json fl = json::array();
      for (const auto& f : e.failures()) fl.push_back({{"check", f.check}, {"witness", f.witness}});
      j["failures"] = fl;
      out << j.dump(2) << "\n";
    } else {
      for (const auto& f : e.failures()) err << "FAIL [" << f.check << "] " << f.witness << "\n";
    }
    return 1;
  } catch (const Error& e) {
    if (o.format == "json") {
      json j;
      j["error"] = e.what();
      out << j.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  }
}

}  // namespace cohconf
