#include <cstdio>
#include <fstream>
#include <sstream>

#include "cohconf/cli.hpp"
#include "cohconf/io.hpp"
#include "doctest.h"

using namespace cohconf;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "cohconf_test_" + std::to_string(counter++) + ".tmp";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("graph file parsing") {
  std::istringstream in(
      "graph\n"
      "vertices 3\n"
      "colours 2\n"
      "# the triangle with a mixed colouring\n"
      "edge 0 1 1\n"
      "edge 0 2 1\n"
      "edge 1 2 2\n");
  const EdgeColouredGraph g = parse_graph(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_colour(1, 2) == 2);

  std::istringstream bad(
      "graph\n"
      "vertices 3\n"
      "colours 1\n"
      "edge 0 x 1\n");
  CHECK_THROWS_WITH_AS(parse_graph(bad), "line 4: expected an integer, got 'x'", Error);

  std::istringstream wrong_header("vertices 3\n");
  CHECK_THROWS_AS(parse_graph(wrong_header), Error);
}

TEST_CASE("linespace and group file parsing") {
  std::istringstream ls_in(
      "linespace\n"
      "points 4\n"
      "line 0 1\n"
      "line 2 3\n");
  const LineSpace ls = parse_linespace(ls_in);
  CHECK(ls.point_count() == 4);
  CHECK(ls.line_count() == 2);

  std::istringstream g_in(
      "group\n"
      "degree 3\n"
      "perm 1 0 2\n"
      "perm 0 2 1\n");
  const PermutationAction a = parse_group(g_in);
  CHECK(a.degree() == 3);
  CHECK(group_order(a) == 6);

  std::istringstream short_perm(
      "group\n"
      "degree 3\n"
      "perm 1 0\n");
  CHECK_THROWS_WITH_AS(parse_group(short_perm), "line 3: permutation must list 3 images",
                       Error);
}

TEST_CASE("relation parsing") {
  const RelationPolynomial r = parse_relation_line("T1T2T1 - T2T1T2");
  CHECK(r.to_string() == "T1T2T1 - T2T1T2");
  const RelationPolynomial s = parse_relation_line("T1T1 - 1*T1 - 2*1");
  CHECK(s.to_string() == "T1T1 - 2*I - T1");
  const RelationPolynomial t = parse_relation_line("3/2*T2 + 1");
  CHECK(t.to_string() == "I + 3/2*T2");
  CHECK_THROWS_AS(parse_relation_line("T1 + + T2"), Error);
  CHECK_THROWS_AS(parse_relation_line("T1 -"), Error);
  CHECK_THROWS_AS(parse_relation_line("2*Tx"), Error);

  std::istringstream file("T1T1 - 1\n\n# comment\nT2T2 - T2 - 2\n");
  CHECK(parse_relations(file).size() == 2);
}

TEST_CASE("cli analyze") {
  const RunResult r = run({"analyze", "--geometry", "petersen"});
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices 30") != std::string::npos);
  CHECK(r.out.find("dim 11") != std::string::npos);

  const RunResult ag = run({"analyze", "--geometry", "ag", "--q", "3"});
  CHECK(ag.out.find("dim 7") != std::string::npos);

  TempFile noarch(
      "graph\nvertices 3\ncolours 2\nedge 0 1 1\nedge 0 2 1\nedge 1 2 2\n");
  const RunResult na = run({"analyze", "--input", noarch.path});
  CHECK(na.code == 0);
  CHECK(na.out.find("dim 5") != std::string::npos);
}

TEST_CASE("cli config and failure modes") {
  const RunResult ag = run({"config", "--geometry", "ag", "--q", "2"});
  CHECK(ag.code == 0);
  CHECK(ag.out.find("T2T1T2 - T1T2T1") != std::string::npos);

  const RunResult missing = run({"config"});
  CHECK(missing.code == 2);

  // No canonical construction for a raw graph file without a group.
  TempFile noarch(
      "graph\nvertices 3\ncolours 2\nedge 0 1 1\nedge 0 2 1\nedge 1 2 2\n");
  const RunResult nf = run({"config", "--input", noarch.path});
  CHECK(nf.code == 2);
}

TEST_CASE("cli json output is byte-identical across runs and thread counts") {
  const RunResult a =
      run({"config", "--geometry", "ag", "--q", "2", "--format", "json", "--threads", "1"});
  const RunResult b =
      run({"config", "--geometry", "ag", "--q", "2", "--format", "json", "--threads", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"classes\": 7") != std::string::npos);
}

TEST_CASE("cli verify-relations exit codes") {
  const RunResult ok =
      run({"verify-relations", "--geometry", "pg", "--q", "2", "--preset", "hecke-a2"});
  CHECK(ok.code == 0);

  // Circle(3) does not hold on AG(2,3): T1 has order 2 there, not 1.
  const RunResult bad =
      run({"verify-relations", "--geometry", "ag", "--q", "3", "--preset", "circle"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);

  TempFile rels("T1T2T1 - T2T1T2\n");
  const RunResult file_ok = run(
      {"verify-relations", "--geometry", "pg", "--q", "2", "--relations", rels.path});
  CHECK(file_ok.code == 0);
}

TEST_CASE("cli subgroups and spectrum") {
  const RunResult sub =
      run({"subgroups", "--geometry", "petersen", "--group", "builtin"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("6 idempotents") != std::string::npos);

  const RunResult spec = run({"spectrum", "--geometry", "ag", "--q", "2"});
  CHECK(spec.code == 0);
  CHECK(spec.out.find("(3,3,2,1)") != std::string::npos);

  const RunResult lab = run({"label", "--geometry", "petersen", "--group", "builtin",
                             "--base", "0", "--label-direction", "to-base"});
  CHECK(lab.code == 0);
  CHECK(lab.out.find("class 0 = I") != std::string::npos);
}

TEST_CASE("cli group file pipeline") {
  // S_3 = <(01),(12)> acting on the triangle with one colour.
  TempFile graph("graph\nvertices 3\ncolours 1\nedge 0 1 1\nedge 0 2 1\nedge 1 2 1\n");
  TempFile group("group\ndegree 3\nperm 1 0 2\nperm 0 2 1\n");
  const RunResult r =
      run({"config", "--input", graph.path, "--group", group.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("classes 2") != std::string::npos);
}

TEST_CASE("cli linespace file with a recognizable plane uses the canonical classes") {
  // AG(2,2) written out by hand: 4 points, all six 2-subsets as lines.
  TempFile ls(
      "linespace\npoints 4\nline 0 1\nline 2 3\nline 0 2\nline 1 3\nline 0 3\nline 1 2\n");
  const RunResult r = run({"config", "--linespace", ls.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("classes 7") != std::string::npos);
  CHECK(r.out.find("T2T1T2 - T1T2T1") != std::string::npos);

  // The Fano plane as a file.
  TempFile fano(
      "linespace\npoints 7\n"
      "line 0 1 2\nline 0 3 4\nline 0 5 6\nline 1 3 5\nline 1 4 6\nline 2 3 6\nline 2 4 5\n");
  const RunResult f = run({"config", "--linespace", fano.path});
  CHECK(f.code == 0);
  CHECK(f.out.find("classes 6") != std::string::npos);

  // A path line space has no canonical construction.
  TempFile path("linespace\npoints 3\nline 0 1\nline 1 2\n");
  const RunResult p = run({"config", "--linespace", path.path});
  CHECK(p.code == 2);
}
