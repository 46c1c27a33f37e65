#ifndef MCG_CHORDS_HPP
#define MCG_CHORDS_HPP

#include "mcg/context.hpp"
#include "mcg/curves.hpp"

namespace mcg {

// Polygon model of N_g: a disk whose boundary consists of 2g arcs
// L_1 R_1 L_2 R_2 ... L_g R_g, with L_i glued to R_i preserving the
// boundary direction (one crosscap per pair).  Curves are chord diagrams:
// a cyclic sequence of window transits joined by taut chords.  A transit
// occupies one slot, identified across the L/R pair.
enum class TransitDir { LtoR, RtoL };

struct Transit {
  int win = 0;   // crosscap index, 1-based
  int slot = 0;  // slot within the window, unique per drawn point
  TransitDir dir = TransitDir::LtoR;
};

struct DrawnCurve {
  std::vector<Transit> transits;  // chord k runs exit(T_k) -> enter(T_{k+1})
};

class SlotAlloc {
 public:
  explicit SlotAlloc(int g) : next_(g + 1, 0) {}
  int alloc(int win);

 private:
  std::vector<int> next_;
};

// Standard drawings.  Passage tags map to chord patterns: Through is a
// single left-to-right transit, Under is the double transit that inserts
// a_m^2, Over contributes nothing (the taut chord already passes the
// window).  The drawn word of a standard curve is conjugate to
// curve_word(spec) or its inverse.
DrawnCurve layout_curve(const CurveSpec& spec, int g, SlotAlloc& alloc);

// Based representative of the generator a_m: reads exactly a_m.
DrawnCurve core_loop(int m, SlotAlloc& alloc);

// Reading of the cyclic chord diagram, based at exit(T_0).
GroupWord drawn_word(const GroupContext& ctx, const DrawnCurve& c);

int count_crossings(const DrawnCurve& a, const DrawnCurve& b);
int self_crossings(const DrawnCurve& c);

// Images of a_1..a_g under the Dehn twist about the drawn curve of spec.
// Walks each generator loop and splices in the full curve cycle at every
// transversal crossing, signed by the local crossing orientation times the
// side transport along the curve (which flips at each transit).
std::vector<GroupWord> twist_images(const GroupContext& ctx, const CurveSpec& spec);

// Same twist with the opposite annulus orientation: the inverse map.
std::vector<GroupWord> twist_images_reversed(const GroupContext& ctx, const CurveSpec& spec);

}  // namespace mcg

#endif
