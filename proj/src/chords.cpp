#include "mcg/chords.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcg {

namespace {

// Boundary points live on a convex arc; chords are straight segments, so
// two chords cross iff their endpoints interleave and all intersection
// predicates are exact integer computations.
constexpr long long kSlotCap = 1024;

struct BPoint {
  long long key;  // half * kSlotCap + slot
};

long long half_of_L(int win) { return 2 * (win - 1); }
long long half_of_R(int win) { return 2 * (win - 1) + 1; }

BPoint enter_point(const Transit& t) {
  return {(t.dir == TransitDir::LtoR ? half_of_L(t.win) : half_of_R(t.win)) * kSlotCap + t.slot};
}

BPoint exit_point(const Transit& t) {
  return {(t.dir == TransitDir::LtoR ? half_of_R(t.win) : half_of_L(t.win)) * kSlotCap + t.slot};
}

struct Pt {
  long long x, y;
};

Pt pos(const BPoint& p) { return {p.key, p.key * p.key}; }

long long det(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

Pt sub(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }

bool in_arc(long long a, long long x, long long b) {
  // strict cyclic membership x in (a, b)
  return a < b ? (a < x && x < b) : (x > a || x < b);
}

struct Chord {
  BPoint from, to;
};

Chord chord_of(const DrawnCurve& c, size_t k) {
  return {exit_point(c.transits[k]), enter_point(c.transits[(k + 1) % c.transits.size()])};
}

bool chords_cross(const Chord& a, const Chord& b) {
  bool i1 = in_arc(a.from.key, b.from.key, a.to.key);
  bool i2 = in_arc(a.from.key, b.to.key, a.to.key);
  return i1 != i2;
}

struct Crossing {
  size_t gchord = 0;   // chord index on gamma
  long long num = 0;   // parameter along gamma chord, num/den with den > 0
  long long den = 1;
  size_t cchord = 0;   // chord index on c
  int eps = 0;         // insertion sign
};

bool param_less(const Crossing& a, const Crossing& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs != rhs) return lhs < rhs;
  return a.cchord < b.cchord;
}

std::vector<Crossing> find_crossings(const DrawnCurve& gamma, const DrawnCurve& c) {
  std::vector<Crossing> out;
  size_t n = c.transits.size();
  for (size_t k = 0; k < gamma.transits.size(); ++k) {
    Chord gc = chord_of(gamma, k);
    Pt pa = pos(gc.from), pb = pos(gc.to);
    for (size_t j = 0; j < n; ++j) {
      Chord cc = chord_of(c, j);
      if (!chords_cross(gc, cc)) continue;
      Pt pc = pos(cc.from), pd = pos(cc.to);
      Pt dg = sub(pb, pa), dc = sub(pd, pc);
      long long den = det(dg, dc);
      long long num = det(sub(pc, pa), dc);
      if (den < 0) {
        den = -den;
        num = -num;
      }
      int s = det(dg, dc) > 0 ? 1 : -1;
      int sigma = (j % 2 == 0) ? 1 : -1;  // side transport flips per transit
      out.push_back({k, num, den, j, s * sigma});  // caller may flip globally
    }
  }
  return out;
}

}  // namespace

int SlotAlloc::alloc(int win) {
  if (win < 1 || win >= static_cast<int>(next_.size())) throw std::invalid_argument("bad window");
  int s = next_[win]++;
  if (s >= kSlotCap - 1) throw std::logic_error("slot capacity exhausted");
  return s;
}

DrawnCurve layout_curve(const CurveSpec& spec, int g, SlotAlloc& alloc) {
  DrawnCurve c;
  for (const auto& p : spec.passages) {
    if (p.crosscap < 1 || p.crosscap > g) throw std::invalid_argument("passage out of range");
    switch (p.kind) {
      case PassageKind::Through:
        c.transits.push_back({p.crosscap, alloc.alloc(p.crosscap), TransitDir::LtoR});
        break;
      case PassageKind::Under: {
        int u1 = alloc.alloc(p.crosscap);
        int u2 = alloc.alloc(p.crosscap);
        c.transits.push_back({p.crosscap, u1, TransitDir::LtoR});
        c.transits.push_back({p.crosscap, u2, TransitDir::LtoR});
        break;
      }
      case PassageKind::Over:
        break;
    }
  }
  if (c.transits.empty()) throw std::invalid_argument("curve with no transits");
  if (self_crossings(c) != 0) throw std::logic_error("standard curve drawing not embedded");
  return c;
}

DrawnCurve core_loop(int m, SlotAlloc& alloc) {
  return DrawnCurve{{Transit{m, alloc.alloc(m), TransitDir::RtoL}}};
}

GroupWord drawn_word(const GroupContext& ctx, const DrawnCurve& c) {
  int g = ctx.genus();
  std::vector<Letter> letters;
  size_t n = c.transits.size();
  for (size_t k = 0; k < n; ++k) {
    Chord ch = chord_of(c, k);
    // Letters along the route: one a_i for each window-half end corner
    // strictly inside the arc, ordered by cyclic distance from the start.
    std::vector<std::pair<long long, Letter>> hits;
    long long total = 2 * g * kSlotCap;
    for (int h = 0; h < 2 * g; ++h) {
      long long corner = h * kSlotCap + (kSlotCap - 1);
      if (in_arc(ch.from.key, corner, ch.to.key)) {
        long long dist = (corner - ch.from.key + total) % total;
        hits.emplace_back(dist, static_cast<Letter>(h / 2 + 1));
      }
    }
    std::sort(hits.begin(), hits.end());
    for (auto& [d, l] : hits) letters.push_back(l);
  }
  return free_reduce(letters);
}

int count_crossings(const DrawnCurve& a, const DrawnCurve& b) {
  return static_cast<int>(find_crossings(a, b).size());
}

int self_crossings(const DrawnCurve& c) {
  int count = 0;
  size_t n = c.transits.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (chords_cross(chord_of(c, i), chord_of(c, j))) ++count;
  return count;
}

namespace {

std::vector<GroupWord> twist_images_dir(const GroupContext& ctx, const CurveSpec& spec, int dir) {
  if (!spec.two_sided()) throw std::invalid_argument("twist: curve is one-sided");
  int g = ctx.genus();
  SlotAlloc alloc(g);
  // Generator loops take the lowest slot of each window, below every slot of
  // the twisting curve.  This pins the loop strand outside the curve's
  // collar wedge at a shared window, so the chord crossings carry the whole
  // geometric intersection with consistent signs.
  std::vector<DrawnCurve> loops;
  loops.reserve(g);
  for (int m = 1; m <= g; ++m) loops.push_back(core_loop(m, alloc));
  DrawnCurve c = layout_curve(spec, g, alloc);
  size_t n = c.transits.size();

  std::vector<GroupWord> images(g);
  for (int m = 1; m <= g; ++m) {
    const DrawnCurve& gamma = loops[m - 1];
    std::vector<Crossing> xs = find_crossings(gamma, c);
    for (Crossing& x : xs) x.eps *= dir;
    std::sort(xs.begin(), xs.end(), param_less);

    // Composite loop: gamma's transit, then one full cycle of c spliced in
    // at each crossing, rotated to start past the crossing and reversed
    // for negative insertions.
    DrawnCurve comp;
    comp.transits.push_back(gamma.transits[0]);
    for (const Crossing& x : xs) {
      if (x.eps > 0) {
        for (size_t t = 1; t <= n; ++t) comp.transits.push_back(c.transits[(x.cchord + t) % n]);
      } else {
        for (size_t t = 0; t < n; ++t) {
          Transit tr = c.transits[(x.cchord + n - t) % n];
          tr.dir = tr.dir == TransitDir::LtoR ? TransitDir::RtoL : TransitDir::LtoR;
          comp.transits.push_back(tr);
        }
      }
    }
    images[m - 1] = ctx.dehn_reduce(drawn_word(ctx, comp));
  }
  return images;
}

}  // namespace

std::vector<GroupWord> twist_images(const GroupContext& ctx, const CurveSpec& spec) {
  return twist_images_dir(ctx, spec, 1);
}

std::vector<GroupWord> twist_images_reversed(const GroupContext& ctx, const CurveSpec& spec) {
  return twist_images_dir(ctx, spec, -1);
}

}  // namespace mcg
