#include "cohconf/io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

namespace cohconf {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next significant line split into tokens, or false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.assign(std::istream_iterator<std::string>(ss), {});
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("line " + std::to_string(line_no) + ": " + msg);
  }
};

long to_long_tok(const LineReader& r, const std::string& t) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    r.fail("expected an integer, got '" + t + "'");
  }
}

void expect_header(LineReader& r, const std::string& kind) {
  std::vector<std::string> tok;
  if (!r.next(tok) || tok.size() != 1 || tok[0] != kind)
    r.fail("expected '" + kind + "' header");
}

}  // namespace

EdgeColouredGraph parse_graph(std::istream& in) {
  LineReader r{in};
  expect_header(r, "graph");
  std::vector<std::string> tok;
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "vertices") r.fail("expected 'vertices <m>'");
  const long m = to_long_tok(r, tok[1]);
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "colours") r.fail("expected 'colours <n>'");
  const long n = to_long_tok(r, tok[1]);
  std::vector<Edge> edges;
  while (r.next(tok)) {
    if (tok.size() != 4 || tok[0] != "edge") r.fail("expected 'edge <u> <v> <c>'");
    edges.push_back({static_cast<int>(to_long_tok(r, tok[1])),
                     static_cast<int>(to_long_tok(r, tok[2])),
                     static_cast<int>(to_long_tok(r, tok[3]))});
  }
  try {
    return EdgeColouredGraph(static_cast<int>(m), static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    throw Error(std::string("graph input: ") + e.what());
  }
}

LineSpace parse_linespace(std::istream& in) {
  LineReader r{in};
  expect_header(r, "linespace");
  std::vector<std::string> tok;
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "points") r.fail("expected 'points <m>'");
  const long m = to_long_tok(r, tok[1]);
  std::vector<std::vector<int>> lines;
  while (r.next(tok)) {
    if (tok.size() < 2 || tok[0] != "line") r.fail("expected 'line <i1> <i2> ...'");
    std::vector<int> line;
    for (std::size_t i = 1; i < tok.size(); ++i)
      line.push_back(static_cast<int>(to_long_tok(r, tok[i])));
    lines.push_back(std::move(line));
  }
  try {
    return LineSpace(static_cast<int>(m), std::move(lines));
  } catch (const Error& e) {
    throw Error(std::string("linespace input: ") + e.what());
  }
}

PermutationAction parse_group(std::istream& in) {
  LineReader r{in};
  expect_header(r, "group");
  std::vector<std::string> tok;
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "degree") r.fail("expected 'degree <m>'");
  const long m = to_long_tok(r, tok[1]);
  std::vector<Permutation> gens;
  while (r.next(tok)) {
    if (tok[0] != "perm") r.fail("expected 'perm <img0> <img1> ...'");
    if (static_cast<long>(tok.size()) != m + 1)
      r.fail("permutation must list " + std::to_string(m) + " images");
    Permutation p;
    for (std::size_t i = 1; i < tok.size(); ++i)
      p.push_back(static_cast<int>(to_long_tok(r, tok[i])));
    try {
      validate_permutation(p);
    } catch (const Error&) {
      r.fail("not a permutation of 0.." + std::to_string(m - 1));
    }
    gens.push_back(std::move(p));
  }
  try {
    return PermutationAction(static_cast<int>(m), std::move(gens));
  } catch (const Error& e) {
    throw Error(std::string("group input: ") + e.what());
  }
}

RelationPolynomial parse_relation_line(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tok(std::istream_iterator<std::string>(ss), {});
  std::vector<Term> terms;
  int sign = 1;
  bool expect_term = true;
  auto parse_word = [](const std::string& s, Word& w) {
    if (s == "1") return true;  // identity word
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != 'T') return false;
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) return false;
      w.push_back(std::stoi(s.substr(i + 1, j - i - 1)));
      i = j;
    }
    return !w.empty();
  };
  for (const auto& t : tok) {
    if (t == "+" || t == "-") {
      if (expect_term) throw Error("relation: unexpected sign '" + t + "'");
      sign = t == "-" ? -1 : 1;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error("relation: missing '+' or '-' before '" + t + "'");
    std::string body = t;
    Rational coeff = 1;
    const auto star = t.find('*');
    if (star != std::string::npos) {
      coeff = rational_from_string(t.substr(0, star));
      body = t.substr(star + 1);
    }
    Word w;
    if (!parse_word(body, w)) {
      if (star != std::string::npos) throw Error("relation: malformed word '" + body + "'");
      // A bare rational stands for a multiple of the identity word.
      coeff = rational_from_string(body);
      w.clear();
    }
    terms.push_back({sign * coeff, std::move(w)});
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw Error("relation: empty or trailing sign");
  return RelationPolynomial(std::move(terms));
}

std::vector<RelationPolynomial> parse_relations(std::istream& in) {
  std::vector<RelationPolynomial> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_relation_line(line));
    } catch (const Error& e) {
      throw Error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

namespace {

template <typename F>
auto from_file(const std::string& path, F f) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return f(in);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace

EdgeColouredGraph parse_graph_file(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_graph(in); });
}
LineSpace parse_linespace_file(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_linespace(in); });
}
PermutationAction parse_group_file(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_group(in); });
}
std::vector<RelationPolynomial> parse_relations_file(const std::string& path) {
  return from_file(path, [](std::istream& in) { return parse_relations(in); });
}

}  // namespace cohconf
