#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cohconf/action.hpp"
#include "cohconf/algebra.hpp"
#include "cohconf/geometry.hpp"
#include "cohconf/graph.hpp"

namespace cohconf {

// graph / vertices <m> / colours <n> / edge <u> <v> <c>, 0-based vertices,
// 1-based colours. Blank lines and '#' comments are ignored; parse errors
// carry line numbers.
EdgeColouredGraph parse_graph(std::istream& in);
EdgeColouredGraph parse_graph_file(const std::string& path);

// linespace / points <m> / line <i1> <i2> ...
LineSpace parse_linespace(std::istream& in);
LineSpace parse_linespace_file(const std::string& path);

// group / degree <m> / perm <img0> <img1> ...
PermutationAction parse_group(std::istream& in);
PermutationAction parse_group_file(const std::string& path);

// One relation per line, terms like "T1T2T1 - T2T1T2" or "2*T1 + 1";
// "1" denotes the identity word.
std::vector<RelationPolynomial> parse_relations(std::istream& in);
std::vector<RelationPolynomial> parse_relations_file(const std::string& path);
RelationPolynomial parse_relation_line(const std::string& line);

}  // namespace cohconf
