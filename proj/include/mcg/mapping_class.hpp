#ifndef MCG_MAPPING_CLASS_HPP
#define MCG_MAPPING_CLASS_HPP

#include <map>
#include <mutex>
#include <string>

#include "mcg/chords.hpp"
#include "mcg/conjugacy.hpp"
#include "mcg/curves.hpp"
#include "mcg/homology.hpp"

namespace mcg {

// Automorphism of pi_1(N_g) up to inner automorphism (= mapping class by
// Dehn-Nielsen-Baer).  Forward and inverse images are kept together so
// inversion is exact; homology actions are computed eagerly.
struct MappingClass {
  std::vector<GroupWord> images;
  std::vector<GroupWord> inverse_images;
  GF2Matrix mod2;
  IntMatrix intm;
};

MappingClass mc_identity(const GroupContext& ctx);
MappingClass mc_from_images(const GroupContext& ctx, std::vector<GroupWord> images,
                            std::vector<GroupWord> inverse_images, bool check_relator);
MappingClass mc_compose(const GroupContext& ctx, const MappingClass& f, const MappingClass& h);
MappingClass mc_invert(const GroupContext& ctx, const MappingClass& f);
MappingClass mc_power(const GroupContext& ctx, const MappingClass& f, int n);
GroupWord mc_apply(const GroupContext& ctx, const MappingClass& f, const GroupWord& w);

bool is_level2(const MappingClass& f);

// Dehn twist about a two-sided standard-position curve.  dir = +-1 selects
// the twisting direction (both are honest twists about the curve).
MappingClass twist(const GroupContext& ctx, const CurveSpec& c, int dir = 1);

// Crosscap slide of the one-sided core through crosscap mu along the
// two-sided curve c, which must pass through mu exactly once.  Built by
// conjugating a searched base slide on the two-crosscap subsurface by
// certified transport maps.
MappingClass crosscap_slide(const GroupContext& ctx, int mu, const CurveSpec& c);

// The reflection of the standard embedding: an exact involution acting as
// -1 on integral homology, trivially mod 2.
MappingClass reflection(const GroupContext& ctx);

GroupWord apply_to_curve(const GroupContext& ctx, const MappingClass& f, const CurveSpec& c);
Verdict curve_equiv(const GroupContext& ctx, const GroupWord& w, const CurveSpec& target,
                    int budget = 20000);

struct EqualResult {
  Verdict verdict = Verdict::Undecided;
  GroupWord witness;
  std::string reason;  // for not-equal: which invariant separated
};

EqualResult equal_mod_inner(const GroupContext& ctx, const MappingClass& f,
                            const MappingClass& h, int budget = 200);

// ---- named generators -------------------------------------------------

enum class GenKind { Y, Ybar, Ymix, T, Tbar4, R };

struct GenName {
  GenKind kind = GenKind::R;
  std::vector<int> idx;
  std::string str() const;
};

struct GenFactor {
  GenName name;
  int exp = 1;
};

using GenWord = std::vector<GenFactor>;

GenWord parse_genword(const std::string& text);
std::string genword_str(const GenWord& gw);
GenWord genword_inverse(const GenWord& gw);

// Builds and caches the named generators for one context.
class GenCache {
 public:
  explicit GenCache(const GroupContext& ctx) : ctx_(ctx) {}
  GenCache(const GenCache&) = delete;
  const GroupContext& ctx() const { return ctx_; }
  const MappingClass& get(const GenName& name);
  MappingClass realize(const GenWord& gw);  // left factor acts last

 private:
  MappingClass build(const GenName& name);
  const GroupContext& ctx_;
  std::mutex mu_;
  std::map<std::string, MappingClass> cache_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> checks;    // one line per passed check group
  std::vector<std::string> failures;  // failed check descriptions
};

// Construction-soundness gate: relator preservation, twist/transvection
// agreement, level-2 membership of slides, squared twists and R, a braid
// relation, naturality and disjoint-support commutation samples, and a
// mutated-generator negative control.
ValidationReport validate_generators(GenCache& gc, bool check_slide_square = false);

// Base slide images on the two-crosscap subsurface (exposed for tests).
// Returns the searched pair: images of (a,b) for the slide of the given
// core along the two-crosscap curve, with its inverse.
struct BaseSlide {
  GroupWord a, b;       // images of a, b
  GroupWord inv_a, inv_b;
};
BaseSlide base_slide(bool left_core);

}  // namespace mcg

#endif
