#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cohconf {

// Exact scalars. mpq_class values are kept canonical (reduced, positive
// denominator); every arithmetic result out of gmpxx already is.
using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Accepts "a" or "a/b" with optional sign; throws Error on malformed input
// or zero denominator.
Rational rational_from_string(const std::string& s);

// "a" when integral, "a/b" otherwise.
std::string rational_to_string(const Rational& r);

bool is_integer(const Rational& r);

// Requires is_integer and a value that fits in long.
long rational_to_long(const Rational& r);

}  // namespace cohconf
