#include "mcg/mapping_class.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mcg {

namespace {

GF2Matrix mod2_of_images(const GroupContext& ctx, const std::vector<GroupWord>& images) {
  int g = ctx.genus();
  GF2Matrix m;
  m.g = g;
  m.rows.assign(g, 0);
  for (int j = 0; j < g; ++j) {
    std::vector<long long> ab(g, 0);
    for (Letter x : images[j].letters) ab[letter_index(x) - 1] += letter_sign(x);
    for (int i = 0; i < g; ++i)
      if (ab[i] & 1) m.rows[i] |= 1u << j;
  }
  return m;
}

IntMatrix int_of_images(const GroupContext& ctx, const std::vector<GroupWord>& images) {
  int g = ctx.genus();
  IntMatrix m;
  m.g = g;
  m.cols.resize(g);
  for (int j = 0; j < g; ++j) m.cols[j] = ctx.abelianized(images[j]);
  return m;
}

}  // namespace

MappingClass mc_from_images(const GroupContext& ctx, std::vector<GroupWord> images,
                            std::vector<GroupWord> inverse_images, bool check_relator) {
  int g = ctx.genus();
  if (static_cast<int>(images.size()) != g || static_cast<int>(inverse_images.size()) != g)
    throw std::invalid_argument("mapping class needs g images");
  for (auto& w : images) w = ctx.dehn_reduce(w);
  for (auto& w : inverse_images) w = ctx.dehn_reduce(w);
  MappingClass f;
  f.images = std::move(images);
  f.inverse_images = std::move(inverse_images);
  if (check_relator) {
    if (!preserves_relator(ctx, f.images) || !preserves_relator(ctx, f.inverse_images))
      throw std::invalid_argument("images do not preserve the relator");
    for (int i = 0; i < g; ++i) {
      GroupWord round = substitute(f.inverse_images[i], f.images);
      if (!ctx.is_identity(concat(round, inverse(single(static_cast<Letter>(i + 1))))))
        throw std::invalid_argument("inverse images do not invert the map");
    }
  }
  f.mod2 = mod2_of_images(ctx, f.images);
  if (!is_isometry(f.mod2)) throw std::invalid_argument("induced mod-2 map not an isometry");
  f.intm = int_of_images(ctx, f.images);
  return f;
}

MappingClass mc_identity(const GroupContext& ctx) {
  std::vector<GroupWord> ims;
  for (int i = 1; i <= ctx.genus(); ++i) ims.push_back(single(static_cast<Letter>(i)));
  return mc_from_images(ctx, ims, ims, false);
}

MappingClass mc_compose(const GroupContext& ctx, const MappingClass& f, const MappingClass& h) {
  int g = ctx.genus();
  std::vector<GroupWord> ims(g), invs(g);
  for (int i = 0; i < g; ++i) {
    ims[i] = ctx.dehn_reduce(substitute(h.images[i], f.images));
    invs[i] = ctx.dehn_reduce(substitute(f.inverse_images[i], h.inverse_images));
  }
  return mc_from_images(ctx, std::move(ims), std::move(invs), false);
}

MappingClass mc_invert(const GroupContext& ctx, const MappingClass& f) {
  return mc_from_images(ctx, f.inverse_images, f.images, false);
}

MappingClass mc_power(const GroupContext& ctx, const MappingClass& f, int n) {
  MappingClass acc = mc_identity(ctx);
  MappingClass base = n < 0 ? mc_invert(ctx, f) : f;
  int k = n < 0 ? -n : n;
  for (int i = 0; i < k; ++i) acc = mc_compose(ctx, acc, base);
  return acc;
}

GroupWord mc_apply(const GroupContext& ctx, const MappingClass& f, const GroupWord& w) {
  return ctx.dehn_reduce(substitute(w, f.images));
}

bool is_level2(const MappingClass& f) { return f.mod2.is_identity(); }

// ---- twist --------------------------------------------------------------

MappingClass twist(const GroupContext& ctx, const CurveSpec& c, int dir) {
  std::vector<GroupWord> fwd = twist_images(ctx, c);
  // The opposite twisting direction is the inverse mapping class; compute it
  // by inverting the insertion signs, which equals the inverse automorphism.
  std::vector<GroupWord> bwd = twist_images_reversed(ctx, c);
  if (dir >= 0) return mc_from_images(ctx, fwd, bwd, true);
  return mc_from_images(ctx, bwd, fwd, true);
}

// ---- base slide search ----------------------------------------------------

namespace {

// Free-group helpers on the alphabet {a=1, b=2}.
GroupWord f2_reduce_cyclic(const GroupWord& w) {
  GroupWord r = free_reduce(w.letters);
  while (r.size() >= 2 && r.letters.front() == -r.letters.back()) {
    r.letters.erase(r.letters.begin());
    r.letters.pop_back();
  }
  return r;
}

bool parity_ok(const GroupWord& w, int odd_index) {
  int c1 = 0, c2 = 0;
  for (Letter x : w.letters) (letter_index(x) == 1 ? c1 : c2)++;
  if (odd_index == 1) return (c1 % 2 == 1) && (c2 % 2 == 0);
  return (c1 % 2 == 0) && (c2 % 2 == 1);
}

// Unique square root of a reduced free word, if any: strip the conjugating
// shell, halve the cyclically reduced core.
bool f2_sqrt(const GroupWord& q, GroupWord* out) {
  size_t strip = 0;
  const auto& l = q.letters;
  while (strip * 2 + 2 <= l.size() && l[strip] == -l[l.size() - 1 - strip]) ++strip;
  size_t core = l.size() - 2 * strip;
  if (core == 0 || core % 2 != 0) return false;
  size_t half = core / 2;
  for (size_t i = 0; i < half; ++i)
    if (l[strip + i] != l[strip + half + i]) return false;
  std::vector<Letter> b(l.begin(), l.begin() + strip + half);
  for (size_t i = 0; i < strip; ++i) b.push_back(l[strip + core + i]);
  GroupWord r = free_reduce(b);
  if (!(free_reduce(concat(r, r).letters) == free_reduce(q.letters))) return false;
  *out = r;
  return true;
}

std::vector<GroupWord> enum_f2_words(int maxlen) {
  std::vector<GroupWord> out;
  out.push_back(GroupWord{});
  size_t lo = 0, hi = 1;
  for (int len = 1; len <= maxlen; ++len) {
    for (size_t i = lo; i < hi; ++i) {
      for (Letter x : {Letter(1), Letter(-1), Letter(2), Letter(-2)}) {
        if (!out[i].letters.empty() && out[i].letters.back() == -x) continue;
        GroupWord w = out[i];
        w.letters.push_back(x);
        out.push_back(w);
      }
    }
    lo = hi;
    hi = out.size();
  }
  return out;
}

GroupWord f2_apply(const GroupWord& w, const GroupWord& ia, const GroupWord& ib) {
  return substitute(w, {ia, ib});
}

struct SlideCandidate {
  GroupWord a, b;
};

// Search for the slide of one core of the two-crosscap Klein piece along
// its two-crosscap curve, as an automorphism of F(a,b):
//  - fixes a^2 b^2 exactly,
//  - acts trivially mod 2,
//  - reverses the chosen core and fixes its Moebius boundary class,
//  - fixes the class of the sliding curve,
//  - squares to conjugation by (a^2 b^2)^{+-1}.
std::vector<SlideCandidate> search_slides(bool left_core, int maxlen) {
  GroupWord r = parse_word("a1 a1 a2 a2", 2);
  std::vector<SlideCandidate> found;
  for (const GroupWord& A : enum_f2_words(maxlen)) {
    if (A.empty() || !parity_ok(A, 1)) continue;
    GroupWord q = free_reduce(concat(power(inverse(A), 2), r).letters);
    GroupWord B;
    if (!f2_sqrt(q, &B)) continue;
    if (!parity_ok(B, 2)) continue;

    const GroupWord& mu = left_core ? A : B;
    GroupWord mu_cyc = f2_reduce_cyclic(mu);
    if (mu_cyc.size() != 1) continue;
    GroupWord bd = f2_reduce_cyclic(concat(mu, mu));
    if (bd.size() != 2 || bd.letters[0] != bd.letters[1]) continue;
    GroupWord curve = f2_reduce_cyclic(concat(A, B));
    if (curve.size() != 2 || letter_index(curve.letters[0]) == letter_index(curve.letters[1]))
      continue;

    // y^2 = conjugation by r^{+-1}
    GroupWord yya = f2_apply(A, A, B);
    GroupWord yyb = f2_apply(B, A, B);
    bool sq = false;
    for (int e : {1, -1}) {
      GroupWord re = e > 0 ? r : inverse(r);
      if (yya == conjugate(single(1), re) && yyb == conjugate(single(2), re)) sq = true;
    }
    if (!sq) continue;
    found.push_back({A, B});
  }
  std::sort(found.begin(), found.end(), [](const SlideCandidate& x, const SlideCandidate& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  });
  return found;
}

}  // namespace

namespace {

BaseSlide compute_base_slide(bool left_core) {
  std::vector<SlideCandidate> cands = search_slides(left_core, 8);
  if (cands.size() != 2)
    throw std::logic_error("base slide search found " + std::to_string(cands.size()) +
                           " candidates, expected an inverse pair");
  // The two survivors must be mutually inverse: the slide and the slide
  // along the reversed curve.
  const SlideCandidate& y = cands[0];
  const SlideCandidate& z = cands[1];
  if (!(f2_apply(z.a, y.a, y.b) == single(1)) || !(f2_apply(z.b, y.a, y.b) == single(2)))
    throw std::logic_error("base slide survivors are not mutually inverse");
  return BaseSlide{y.a, y.b, z.a, z.b};
}

}  // namespace

BaseSlide base_slide(bool left_core) {
  static const BaseSlide left = compute_base_slide(true);
  static const BaseSlide right = compute_base_slide(false);
  return left_core ? left : right;
}

namespace {

GroupWord shift_letters(const GroupWord& w, int offset) {
  GroupWord out;
  for (Letter x : w.letters) {
    int idx = letter_index(x) + offset;
    out.letters.push_back(static_cast<Letter>(letter_sign(x) * idx));
  }
  return out;
}

// Embeds a two-generator automorphism pair at positions (i, i+1).
MappingClass embed_pair(const GroupContext& ctx, int i, const GroupWord& img_a,
                        const GroupWord& img_b, const GroupWord& inv_a, const GroupWord& inv_b) {
  int g = ctx.genus();
  std::vector<GroupWord> ims, invs;
  for (int m = 1; m <= g; ++m) {
    if (m == i) {
      ims.push_back(shift_letters(img_a, i - 1));
      invs.push_back(shift_letters(inv_a, i - 1));
    } else if (m == i + 1) {
      ims.push_back(shift_letters(img_b, i - 1));
      invs.push_back(shift_letters(inv_b, i - 1));
    } else {
      ims.push_back(single(static_cast<Letter>(m)));
      invs.push_back(single(static_cast<Letter>(m)));
    }
  }
  return mc_from_images(ctx, ims, invs, true);
}

MappingClass adjacent_slide(const GroupContext& ctx, int i, bool left_core) {
  BaseSlide bs = base_slide(left_core);
  return embed_pair(ctx, i, bs.a, bs.b, bs.inv_a, bs.inv_b);
}

// Index move a_i -> a_{i+1}, a_{i+1} -> a_{i+1}^{-2} a_i a_{i+1}^2; fixes
// a_i^2 a_{i+1}^2 exactly, hence the relator.  Used only as certified
// transport for non-adjacent slides.
MappingClass braid_move(const GroupContext& ctx, int i) {
  GroupWord ia = parse_word("a2", 2);
  GroupWord ib = parse_word("A2 A2 a1 a2 a2", 2);
  GroupWord va = parse_word("a1 a1 a2 A1 A1", 2);
  GroupWord vb = parse_word("a1", 2);
  return embed_pair(ctx, i, ia, ib, va, vb);
}

MappingClass conj_mc(const GroupContext& ctx, const MappingClass& f, const MappingClass& by) {
  return mc_compose(ctx, by, mc_compose(ctx, f, mc_invert(ctx, by)));
}

bool word_matches_curve(const GroupContext& ctx, const GroupWord& w, const CurveSpec& c) {
  GroupWord cw = curve_word(ctx, c);
  if (are_conjugate(ctx, w, cw).verdict == Verdict::Yes) return true;
  return are_conjugate(ctx, w, inverse(cw)).verdict == Verdict::Yes;
}

}  // namespace

MappingClass crosscap_slide(const GroupContext& ctx, int mu, const CurveSpec& c) {
  int g = ctx.genus();
  if (mu < 1 || mu > g) throw std::invalid_argument("crosscap_slide: bad core index");
  if (!c.two_sided()) throw std::invalid_argument("crosscap_slide: curve is one-sided");
  if (c.transit_count(mu) != 1)
    throw std::invalid_argument("crosscap_slide: curve must pass through the core crosscap once");

  const auto& idx = c.indices;
  if (idx.size() != 2 || (idx[0] != mu && idx[1] != mu))
    throw std::invalid_argument("crosscap_slide: only two-crosscap curves are supported");
  int other = idx[0] == mu ? idx[1] : idx[0];
  bool bar = false;
  for (const auto& p : c.passages)
    if (p.kind == PassageKind::Under) bar = true;

  MappingClass result = mc_identity(ctx);
  bool built = false;
  if (!bar) {
    if (other == mu + 1) {
      result = adjacent_slide(ctx, mu, true);
      built = true;
    } else if (other == mu - 1) {
      result = adjacent_slide(ctx, mu - 1, false);
      built = true;
    } else if (other > mu) {
      // transport alpha_{mu,mu+1} -> alpha_{mu,other} by braid moves
      MappingClass f = mc_identity(ctx);
      for (int k = mu + 1; k < other; ++k) f = mc_compose(ctx, braid_move(ctx, k), f);
      result = conj_mc(ctx, adjacent_slide(ctx, mu, true), f);
      built = true;
    } else {
      // other < mu - 1: transport alpha_{mu-1,mu} -> alpha_{other,mu}
      MappingClass f = mc_identity(ctx);
      for (int k = mu - 2; k >= other; --k)
        f = mc_compose(ctx, mc_invert(ctx, braid_move(ctx, k)), f);
      result = conj_mc(ctx, adjacent_slide(ctx, mu - 1, false), f);
      built = true;
    }
  } else {
    // bar curve: conjugate the adjacent slide by a chain of pair twists,
    // following the standard transport of the pair curve to the bar curve.
    int lo = std::min(mu, other), hi = std::max(mu, other);
    if (hi == lo + 1) {
      // no in-between crosscaps: same curve as the plain pair
      result = mu == lo ? adjacent_slide(ctx, lo, true) : adjacent_slide(ctx, lo, false);
      built = true;
    } else {
      MappingClass base = mu == lo ? adjacent_slide(ctx, lo, true)
                                   : adjacent_slide(ctx, hi - 1, false);
      CurveSpec base_curve = mu == lo ? make_alpha({lo, lo + 1}, g) : make_alpha({hi - 1, hi}, g);
      std::vector<MappingClass> chain;
      if (mu == lo) {
        for (int k = lo + 1; k < hi; ++k) chain.push_back(twist(ctx, make_alpha({k, k + 1}, g)));
      } else {
        for (int k = lo; k < hi - 1; ++k) chain.push_back(twist(ctx, make_alpha({k, k + 1}, g)));
      }
      // try the chain product and its variants until the curve transport
      // certificate holds
      for (int variant = 0; variant < 4 && !built; ++variant) {
        bool rev_order = variant & 1, inv = variant & 2;
        MappingClass f = mc_identity(ctx);
        for (size_t t = 0; t < chain.size(); ++t) {
          const MappingClass& step = chain[rev_order ? chain.size() - 1 - t : t];
          f = mc_compose(ctx, f, inv ? mc_invert(ctx, step) : step);
        }
        GroupWord moved = mc_apply(ctx, f, curve_word(ctx, base_curve));
        GroupWord core_moved = mc_apply(ctx, f, single(static_cast<Letter>(mu)));
        if (word_matches_curve(ctx, moved, c) &&
            ctx.equal(core_moved, single(static_cast<Letter>(mu)))) {
          result = conj_mc(ctx, base, f);
          built = true;
        }
      }
      if (!built) throw std::logic_error("crosscap_slide: no certified transport found");
    }
  }
  if (!built) throw std::logic_error("crosscap_slide: construction failed");

  // Construction certificates: a slide is level 2 and fixes both its core
  // and its sliding curve up to isotopy.
  if (!is_level2(result)) throw std::logic_error("crosscap_slide: not level 2");
  GroupWord core_img = mc_apply(ctx, result, single(static_cast<Letter>(mu)));
  GroupWord core = single(static_cast<Letter>(mu));
  if (are_conjugate(ctx, core_img, core).verdict != Verdict::Yes &&
      are_conjugate(ctx, core_img, inverse(core)).verdict != Verdict::Yes)
    throw std::logic_error("crosscap_slide: core not preserved");
  GroupWord curve_img = mc_apply(ctx, result, curve_word(ctx, c));
  if (!word_matches_curve(ctx, curve_img, c))
    throw std::logic_error("crosscap_slide: sliding curve not preserved");
  return result;
}

MappingClass reflection(const GroupContext& ctx) {
  int g = ctx.genus();
  std::vector<GroupWord> ims;
  std::vector<Letter> prefix;
  for (int i = 1; i <= g; ++i) {
    GroupWord q{prefix};
    ims.push_back(conjugate(inverse(single(static_cast<Letter>(i))), q));
    prefix.push_back(static_cast<Letter>(i));
    prefix.push_back(static_cast<Letter>(i));
  }
  return mc_from_images(ctx, ims, ims, true);
}

GroupWord apply_to_curve(const GroupContext& ctx, const MappingClass& f, const CurveSpec& c) {
  return mc_apply(ctx, f, curve_word(ctx, c));
}

Verdict curve_equiv(const GroupContext& ctx, const GroupWord& w, const CurveSpec& target,
                    int budget) {
  GroupWord cw = curve_word(ctx, target);
  ConjugacyResult r1 = are_conjugate(ctx, w, cw, budget);
  if (r1.verdict == Verdict::Yes) return Verdict::Yes;
  ConjugacyResult r2 = are_conjugate(ctx, w, inverse(cw), budget);
  if (r2.verdict == Verdict::Yes) return Verdict::Yes;
  if (r1.verdict == Verdict::No && r2.verdict == Verdict::No) return Verdict::No;
  return Verdict::Undecided;
}

EqualResult equal_mod_inner(const GroupContext& ctx, const MappingClass& f,
                            const MappingClass& h, int budget) {
  MappingClass delta = mc_compose(ctx, f, mc_invert(ctx, h));
  if (!delta.mod2.is_identity()) return {Verdict::No, {}, "mod-2 actions differ"};
  if (!delta.intm.is_identity()) return {Verdict::No, {}, "integral actions differ"};
  InnerResult r = inner_witness(ctx, delta.images, budget);
  return {r.verdict, r.witness, ""};
}

// ---- named generators -----------------------------------------------------

std::string GenName::str() const {
  if (kind == GenKind::R) return "R";
  std::string base;
  switch (kind) {
    case GenKind::Y: base = "Y"; break;
    case GenKind::Ybar: base = "Ybar"; break;
    case GenKind::Ymix: base = "Ymix"; break;
    case GenKind::T: base = "T"; break;
    case GenKind::Tbar4: base = "Tbar4"; break;
    case GenKind::R: base = "R"; break;
  }
  std::string s = base + "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

GenWord parse_genword(const std::string& text) {
  GenWord out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    size_t start = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    std::string name = text.substr(start, i - start);
    GenFactor f;
    if (name == "R") f.name.kind = GenKind::R;
    else if (name == "Y") f.name.kind = GenKind::Y;
    else if (name == "Ybar") f.name.kind = GenKind::Ybar;
    else if (name == "Ymix") f.name.kind = GenKind::Ymix;
    else if (name == "T") f.name.kind = GenKind::T;
    else if (name == "Tbar") f.name.kind = GenKind::Tbar4;
    else if (name == "Tbar4") f.name.kind = GenKind::Tbar4;
    else throw std::invalid_argument("unknown generator name: " + name);
    if (i < text.size() && text[i] == '(') {
      ++i;
      int val = 0;
      bool have = false;
      while (i < text.size() && text[i] != ')') {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          val = val * 10 + (ch - '0');
          have = true;
        } else if (ch == ',' || ch == ';') {
          if (have) f.name.idx.push_back(val);
          val = 0;
          have = false;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
          throw std::invalid_argument("bad generator arguments: " + text);
        }
        ++i;
      }
      if (i == text.size()) throw std::invalid_argument("unterminated generator arguments");
      ++i;
      if (have) f.name.idx.push_back(val);
    }
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      int e = 0;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad exponent in: " + text);
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i] - '0');
        ++i;
      }
      f.exp = neg ? -e : e;
    }
    out.push_back(f);
    skip_ws();
  }
  return out;
}

std::string genword_str(const GenWord& gw) {
  if (gw.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < gw.size(); ++i) {
    if (i) s += " * ";
    s += gw[i].name.str();
    if (gw[i].exp != 1) s += "^" + std::to_string(gw[i].exp);
  }
  return s;
}

GenWord genword_inverse(const GenWord& gw) {
  GenWord out;
  for (auto it = gw.rbegin(); it != gw.rend(); ++it) {
    GenFactor f = *it;
    f.exp = -f.exp;
    out.push_back(f);
  }
  return out;
}

const MappingClass& GenCache::get(const GenName& name) {
  std::string key = name.str();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  MappingClass built = build(name);
  std::lock_guard<std::mutex> lock(mu_);
  auto [pos, inserted] = cache_.emplace(key, std::move(built));
  return pos->second;
}

MappingClass GenCache::build(const GenName& name) {
  int g = ctx_.genus();
  auto need = [&](size_t n) {
    if (name.idx.size() != n)
      throw std::invalid_argument("generator " + name.str() + ": wrong index count");
  };
  switch (name.kind) {
    case GenKind::R:
      return reflection(ctx_);
    case GenKind::Y: {
      need(2);
      int i = name.idx[0], j = name.idx[1];
      if (i == j || i < 1 || j < 1 || i > g || j > g)
        throw std::invalid_argument("Y indices out of range");
      return crosscap_slide(ctx_, i, make_alpha({std::min(i, j), std::max(i, j)}, g));
    }
    case GenKind::Ybar: {
      need(2);
      int i = name.idx[0], j = name.idx[1];
      if (i == j || i < 1 || j < 1 || i > g || j > g)
        throw std::invalid_argument("Ybar indices out of range");
      return crosscap_slide(ctx_, i, make_alpha_bar(std::min(i, j), std::max(i, j), g));
    }
    case GenKind::Ymix: {
      need(2);
      int j = name.idx[0], k = name.idx[1];
      if (j >= k || j < 1 || k > g) throw std::invalid_argument("Ymix needs j < k");
      return crosscap_slide(ctx_, k, make_alpha_bar(j, k, g));
    }
    case GenKind::T: {
      if (name.idx.empty()) throw std::invalid_argument("T needs indices");
      return twist(ctx_, make_alpha(name.idx, g));
    }
    case GenKind::Tbar4: {
      need(4);
      if (name.idx[0] != 1) throw std::invalid_argument("Tbar4 first index must be 1");
      return twist(ctx_, make_alpha_bar4(name.idx[1], name.idx[2], name.idx[3], g));
    }
  }
  throw std::logic_error("unreachable generator kind");
}

MappingClass GenCache::realize(const GenWord& gw) {
  MappingClass acc = mc_identity(ctx_);
  for (const GenFactor& f : gw) {
    if (f.exp == 0) continue;
    const MappingClass& gen = get(f.name);
    MappingClass p = mc_power(ctx_, gen, f.exp);
    acc = mc_compose(ctx_, acc, p);
  }
  return acc;
}

// ---- validation gate --------------------------------------------------

ValidationReport validate_generators(GenCache& gc, bool check_slide_square) {
  const GroupContext& ctx = gc.ctx();
  int g = ctx.genus();
  ValidationReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  auto note = [&](const std::string& msg) { rep.checks.push_back(msg); };

  // Catalog curves and their twists: relator preservation is enforced at
  // construction; here we re-check and compare mod-2 actions with the
  // transvection formula.
  std::vector<CurveSpec> curves;
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) {
      curves.push_back(make_alpha({i, j}, g));
      curves.push_back(make_alpha_bar(i, j, g));
    }
  for (int i = 2; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      for (int k = j + 1; k <= g; ++k) {
        curves.push_back(make_alpha({1, i, j, k}, g));
        curves.push_back(make_alpha_bar4(i, j, k, g));
      }
  int n_twist = 0;
  for (const CurveSpec& c : curves) {
    MappingClass t = twist(ctx, c);
    if (!preserves_relator(ctx, t.images)) fail("twist relator: " + c.str());
    if (!(t.mod2 == transvection(mod2_class(c, g)))) fail("twist transvection: " + c.str());
    if (!is_level2(mc_power(ctx, t, 2))) fail("squared twist not level 2: " + c.str());
    GroupWord drawn = ctx.dehn_reduce(drawn_word(ctx, [&] {
      SlotAlloc alloc(g);
      return layout_curve(c, g, alloc);
    }()));
    GroupWord cw = curve_word(ctx, c);
    if (are_conjugate(ctx, drawn, cw).verdict != Verdict::Yes &&
        are_conjugate(ctx, drawn, inverse(cw)).verdict != Verdict::Yes)
      fail("drawn word mismatch: " + c.str());
    ++n_twist;
  }
  note("twists: " + std::to_string(n_twist) + " curves (relator, transvection, squares)");

  // Slides: all Y(i,j) and Ybar(i,j); level-2 and curve preservation are
  // certified inside the constructor, which throws on failure.
  int n_slide = 0;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      if (i == j) continue;
      try {
        const MappingClass& y = gc.get({GenKind::Y, {i, j}});
        const MappingClass& yb = gc.get({GenKind::Ybar, {i, j}});
        if (!is_level2(y)) fail("Y not level 2: " + std::to_string(i) + "," + std::to_string(j));
        if (!is_level2(yb)) fail("Ybar not level 2");
        n_slide += 2;
      } catch (const std::exception& e) {
        fail(std::string("slide construction: ") + e.what());
      }
    }
  note("slides: " + std::to_string(n_slide) + " built with certificates");

  // The reflection.
  const MappingClass& R = gc.get({GenKind::R, {}});
  if (!is_level2(R)) fail("R not level 2");
  EqualResult rr = equal_mod_inner(ctx, mc_power(ctx, R, 2), mc_identity(ctx));
  if (rr.verdict != Verdict::Yes) fail("R^2 not inner-trivial");
  note("reflection: level 2, exact involution");

  // Braid relation on adjacent pair twists.
  {
    MappingClass t1 = gc.get({GenKind::T, {1, 2}});
    MappingClass t2 = gc.get({GenKind::T, {2, 3}});
    MappingClass lhs = mc_compose(ctx, mc_compose(ctx, t1, t2), t1);
    MappingClass rhs = mc_compose(ctx, mc_compose(ctx, t2, t1), t2);
    if (equal_mod_inner(ctx, lhs, rhs).verdict != Verdict::Yes) fail("braid relation");
    note("braid relation T12 T23 T12 = T23 T12 T23");
  }

  // Naturality sample: conjugating a twist by a disjoint mapping class
  // fixes it; conjugating by the reflection gives the twist about the
  // reflected curve (the same curve, possibly opposite direction).
  {
    MappingClass t34 = gc.get({GenKind::T, {3, 4}});
    const MappingClass& y12 = gc.get({GenKind::Y, {1, 2}});
    MappingClass conj = mc_compose(ctx, mc_compose(ctx, y12, t34), mc_invert(ctx, y12));
    if (equal_mod_inner(ctx, conj, t34).verdict != Verdict::Yes)
      fail("naturality: Y12 T34 Y12^-1 != T34");
    MappingClass rconj = mc_compose(ctx, mc_compose(ctx, R, t34), mc_invert(ctx, R));
    bool ok = equal_mod_inner(ctx, rconj, t34).verdict == Verdict::Yes ||
              equal_mod_inner(ctx, rconj, mc_invert(ctx, t34)).verdict == Verdict::Yes;
    if (!ok) fail("naturality: R T34 R^-1 != T34^{+-1}");
    note("naturality samples");
  }

  // Disjoint-support commutation.
  {
    const MappingClass& y12 = gc.get({GenKind::Y, {1, 2}});
    const MappingClass& y34 = gc.get({GenKind::Y, {3, 4}});
    MappingClass ab = mc_compose(ctx, y12, y34);
    MappingClass ba = mc_compose(ctx, y34, y12);
    if (equal_mod_inner(ctx, ab, ba).verdict != Verdict::Yes) fail("disjoint slides commute");
    note("disjoint-support commutation");
  }

  // Negative control: a corrupted twist must not preserve the relator.
  {
    MappingClass t = gc.get({GenKind::T, {1, 2}});
    std::vector<GroupWord> bad = t.images;
    bad[0] = concat(bad[0], single(3));
    if (preserves_relator(ctx, bad)) fail("mutated twist still preserves relator");
    note("negative control: mutated twist rejected");
  }

  if (check_slide_square) {
    // Optional: the square of an adjacent slide is the boundary twist of
    // its Klein-bottle neighborhood.
    CurveSpec bd = make_generic({{1, PassageKind::Under}, {2, PassageKind::Under}}, g);
    MappingClass y = gc.get({GenKind::Y, {1, 2}});
    MappingClass y2 = mc_power(ctx, y, 2);
    MappingClass tb = twist(ctx, bd);
    bool ok = equal_mod_inner(ctx, y2, tb).verdict == Verdict::Yes ||
              equal_mod_inner(ctx, y2, mc_invert(ctx, tb)).verdict == Verdict::Yes;
    if (!ok) fail("Y^2 != boundary twist");
    else note("Y^2 = Klein-neighborhood boundary twist");
  }
  return rep;
}

}  // namespace mcg
