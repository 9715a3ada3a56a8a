#include "cohconf/word.hpp"

#include <algorithm>

namespace cohconf {

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string s;
  for (int c : w) {
    s += 'T';
    s += std::to_string(c);
  }
  return s;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace cohconf
