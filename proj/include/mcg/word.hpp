#ifndef MCG_WORD_HPP
#define MCG_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mcg {

// A letter of pi_1(N_g): +i encodes a_i, -i encodes a_i^{-1} (1-based index).
using Letter = int16_t;

inline int letter_index(Letter x) { return x > 0 ? x : -x; }
inline int letter_sign(Letter x) { return x > 0 ? 1 : -1; }

// Freely reduced word in the generators a_1..a_g.
struct GroupWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  bool operator==(const GroupWord& o) const { return letters == o.letters; }
  bool operator<(const GroupWord& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return letters < o.letters;
  }
};

GroupWord free_reduce(const std::vector<Letter>& letters);
GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& u, const GroupWord& v);
GroupWord conjugate(const GroupWord& w, const GroupWord& by);  // by * w * by^{-1}
GroupWord power(const GroupWord& w, int n);

// Substitutes images[i-1] for a_i (and its inverse for A_i); freely reduces.
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images);

// Plain-text syntax: lowercase = positive, uppercase = inverse, e.g. "a1 A1 a2".
GroupWord parse_word(const std::string& text, int genus);
std::string word_str(const GroupWord& w);

inline GroupWord single(Letter x) { return GroupWord{{x}}; }

}  // namespace mcg

#endif
