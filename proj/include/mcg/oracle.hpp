#ifndef MCG_ORACLE_HPP
#define MCG_ORACLE_HPP

#include <cstdint>

#include "mcg/context.hpp"

namespace mcg {

enum class Triviality { Trivial, Nontrivial, Unknown };

// Independent cross-check for dehn_reduce.  "Trivial" comes from a
// breadth-first search over relator insertions plus free reduction;
// "Nontrivial" from the abelianization or a seeded finite-quotient probe
// into small symmetric groups.  One-sided in both directions.
Triviality triviality_oracle(const GroupContext& ctx, const GroupWord& w, int radius,
                             uint64_t seed = 0x5eed);

}  // namespace mcg

#endif
