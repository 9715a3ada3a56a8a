#pragma once

#include <string>
#include <vector>

namespace cohconf {

// A word in the colour generators; entries are 1-based colour indices.
// The empty word stands for the identity.
using Word = std::vector<int>;

// Length first, then lexicographic with colour 1 < 2 < ...
bool word_less(const Word& a, const Word& b);

// "I" for the empty word, otherwise "T1T2T1"-style concatenation.
std::string word_to_string(const Word& w);

Word reversed(const Word& w);

}  // namespace cohconf
