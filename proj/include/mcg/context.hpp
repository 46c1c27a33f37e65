#ifndef MCG_CONTEXT_HPP
#define MCG_CONTEXT_HPP

#include <vector>

#include "mcg/word.hpp"

namespace mcg {

// pi_1(N_g) = <a_1,...,a_g | a_1^2 a_2^2 ... a_g^2>.  The presentation is
// C'(1/6) for g >= 4 (max piece length 1 against relator length 2g), so
// Dehn's algorithm decides the word problem.
class GroupContext {
 public:
  explicit GroupContext(int genus);

  int genus() const { return g_; }
  const GroupWord& relator() const { return relator_; }

  // Longest factor of w starting at pos that is a factor of a cyclic shift
  // of relator^{+-1}.  Returns length; phase/sign describe the match.
  int longest_relator_match(const GroupWord& w, size_t pos, int* phase, int* sign) const;

  // Deterministic Dehn reduction: repeatedly replaces the leftmost longest
  // relator factor of length > g by the inverse complement.  Factors of
  // length exactly g are left alone.
  GroupWord dehn_reduce(const GroupWord& w) const;
  bool is_identity(const GroupWord& w) const;
  bool equal(const GroupWord& u, const GroupWord& v) const;

  // Cyclic reduction: removes cancelling ends and Dehn-reduces the cyclic
  // word until no factor of length > g remains in any rotation.  If
  // conj_out is given, the result r satisfies w = conj * r * conj^{-1}.
  GroupWord cyclic_reduce(const GroupWord& w, GroupWord* conj_out = nullptr) const;

  // All length-preserving rewrites of a cyclic word: rotations plus
  // substitutions of exactly-half relator factors.  Used by conjugacy.
  std::vector<std::pair<GroupWord, GroupWord>> half_swap_neighbors(const GroupWord& w) const;

  // Abelianization in Z^g / <2(1,...,1)>, canonical representative.
  std::vector<long long> abelianized(const GroupWord& w) const;
  bool abelian_trivial(const GroupWord& w) const;

  // Maximum length of a common factor of two distinct cyclic shifts of
  // relator^{+-1}; 1 for this presentation.  Exhaustive, used in tests.
  int max_piece_length() const;

 private:
  int g_;
  GroupWord relator_;
  std::vector<Letter> cycle_pos_;  // relator repeated, positive direction
  std::vector<Letter> cycle_neg_;  // inverse relator repeated
};

std::vector<long long> canonical_abelian(std::vector<long long> v);

}  // namespace mcg

#endif
