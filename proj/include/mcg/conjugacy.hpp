#ifndef MCG_CONJUGACY_HPP
#define MCG_CONJUGACY_HPP

#include <optional>

#include "mcg/context.hpp"

namespace mcg {

enum class Verdict { Yes, No, Undecided };

struct ConjugacyResult {
  Verdict verdict = Verdict::Undecided;
  GroupWord witness;  // on Yes: v = witness * u * witness^{-1}
};

// Conjugacy via cyclic Dehn minimization and closure of the minimal cyclic
// form under rotations and exactly-half relator swaps.  "No" is only
// returned when an invariant separates the words or the closure is
// exhausted; never guesses.
ConjugacyResult are_conjugate(const GroupContext& ctx, const GroupWord& u, const GroupWord& v,
                              int budget = 20000);

struct InnerResult {
  Verdict verdict = Verdict::Undecided;
  GroupWord witness;  // on Yes: images[i] = w a_i w^{-1} for all i
};

// Decides whether a_i |-> images[i] is an inner automorphism.  Requires the
// relator to map to a conjugate of relator^{+-1} (throws otherwise).  The
// witness coset is w0 <a_1> since a_1 has cyclic centralizer; scans
// w0 a_1^k for |k| <= budget.
InnerResult inner_witness(const GroupContext& ctx, const std::vector<GroupWord>& images,
                          int budget = 200);

// Checks that images send the relator to a conjugate of relator^{+-1}.
bool preserves_relator(const GroupContext& ctx, const std::vector<GroupWord>& images);

}  // namespace mcg

#endif
