#ifndef MCG_CURVES_HPP
#define MCG_CURVES_HPP

#include <string>
#include <vector>

#include "mcg/context.hpp"
#include "mcg/homology.hpp"

namespace mcg {

enum class CurveFamily { Alpha, AlphaBar, AlphaBar4, Generic };
enum class PassageKind { Through, Over, Under };

struct Passage {
  int crosscap = 0;  // 1-based
  PassageKind kind = PassageKind::Through;
};

// Combinatorial encoding of the standard-position curves: the crosscaps
// passed through, with over/under tags for the in-between crosscaps.
struct CurveSpec {
  CurveFamily family = CurveFamily::Generic;
  std::vector<int> indices;       // defining index set, increasing
  std::vector<Passage> passages;  // full passage list, left to right

  bool operator==(const CurveSpec& o) const {
    return family == o.family && passages == o.passages;
  }
  int transit_count() const;
  int transit_count(int crosscap) const;
  bool two_sided() const { return transit_count() % 2 == 0; }
  std::string str() const;  // alpha{1,2,3} / abar{1,3} / abar4{1,2,3,4}
};

inline bool operator==(const Passage& a, const Passage& b) {
  return a.crosscap == b.crosscap && a.kind == b.kind;
}

CurveSpec make_alpha(const std::vector<int>& I, int g);
CurveSpec make_alpha_bar(int i, int j, int g);
CurveSpec make_alpha_bar4(int i, int j, int k, int g);  // indices {1,i,j,k}
CurveSpec make_generic(const std::vector<Passage>& passages, int g);

// pi_1 representative per the fixed convention: a passage through crosscap
// m contributes a_m, an Under tag contributes a_m^2, Over contributes
// nothing.  Canonical up to conjugation and inversion.
GroupWord curve_word(const GroupContext& ctx, const CurveSpec& spec);

Z2Vec mod2_class(const CurveSpec& spec, int g);
std::vector<long long> int_class(const GroupContext& ctx, const CurveSpec& spec);

}  // namespace mcg

#endif
