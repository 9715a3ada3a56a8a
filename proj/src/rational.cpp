#include "cohconf/rational.hpp"

namespace cohconf {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal: " + s);
  if (q.get_den() == 0) throw Error("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long rational_to_long(const Rational& r) {
  if (!is_integer(r)) throw Error("not an integer: " + rational_to_string(r));
  if (!r.get_num().fits_slong_p()) throw Error("integer too large: " + rational_to_string(r));
  return r.get_num().get_si();
}

}  // namespace cohconf
