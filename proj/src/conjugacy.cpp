#include "mcg/conjugacy.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace mcg {

namespace {

bool same_abelian(const GroupContext& ctx, const GroupWord& u, const GroupWord& v) {
  return ctx.abelianized(u) == ctx.abelianized(v);
}

}  // namespace

ConjugacyResult are_conjugate(const GroupContext& ctx, const GroupWord& u, const GroupWord& v,
                              int budget) {
  if (!same_abelian(ctx, u, v)) return {Verdict::No, {}};

  GroupWord cu, cv;
  GroupWord u0 = ctx.cyclic_reduce(u, &cu);
  GroupWord v0 = ctx.cyclic_reduce(v, &cv);
  if (u0.empty() || v0.empty()) {
    if (u0.empty() != v0.empty()) return {Verdict::No, {}};
    // Both trivial: v = (cv cu^{-1}) u (..)^{-1} trivially.
    return {Verdict::Yes, ctx.dehn_reduce(concat(cv, inverse(cu)))};
  }

  // Orbit of u0 under length-preserving moves, with transports
  // u0 = t * x * t^{-1}.  A swap may open a shorter cyclic form; restart
  // from it when that happens.
  for (int restart = 0; restart < 64; ++restart) {
    std::map<std::vector<Letter>, GroupWord> seen;
    std::queue<GroupWord> q;
    seen.emplace(u0.letters, GroupWord{});
    q.push(u0);
    bool shrunk = false;
    while (!q.empty()) {
      GroupWord x = q.front();
      q.pop();
      GroupWord t = seen.at(x.letters);
      if (x == v0) {
        GroupWord w = ctx.dehn_reduce(concat(concat(cv, inverse(t)), inverse(cu)));
        return {Verdict::Yes, w};
      }
      if (static_cast<int>(seen.size()) > budget) return {Verdict::Undecided, {}};
      for (auto& [nx, p] : ctx.half_swap_neighbors(x)) {
        GroupWord shorter_c;
        GroupWord red = ctx.cyclic_reduce(nx, &shorter_c);
        if (red.size() < u0.size()) {
          // u0 = (t p shorter_c) red (...)^{-1}; restart from the minimum.
          cu = concat(cu, concat(concat(t, p), shorter_c));
          u0 = red;
          shrunk = true;
          break;
        }
        if (seen.find(nx.letters) == seen.end()) {
          seen.emplace(nx.letters, concat(t, p));
          q.push(nx);
        }
      }
      if (shrunk) break;
    }
    if (!shrunk) return {Verdict::No, {}};
    if (u0.empty()) break;
  }
  return {Verdict::Undecided, {}};
}

bool preserves_relator(const GroupContext& ctx, const std::vector<GroupWord>& images) {
  // The relator is trivial in the group, so its image under a well-defined
  // endomorphism must be too.
  return ctx.is_identity(substitute(ctx.relator(), images));
}

InnerResult inner_witness(const GroupContext& ctx, const std::vector<GroupWord>& images,
                          int budget) {
  int g = ctx.genus();
  if (static_cast<int>(images.size()) != g)
    throw std::invalid_argument("inner_witness: wrong image count");
  if (!preserves_relator(ctx, images))
    throw std::invalid_argument("inner_witness: relator not preserved, not an automorphism");

  // Inner automorphisms act trivially on homology.
  for (int i = 0; i < g; ++i) {
    std::vector<long long> e(g, 0);
    e[i] = 1;
    if (ctx.abelianized(images[i]) != canonical_abelian(e)) return {Verdict::No, {}};
  }

  bool all_exact = true;
  for (int i = 0; i < g; ++i)
    if (!(images[i].size() == 1 && images[i].letters[0] == i + 1)) all_exact = false;
  if (all_exact) return {Verdict::Yes, {}};

  GroupWord a1 = single(1);
  ConjugacyResult base = are_conjugate(ctx, a1, images[0]);
  if (base.verdict == Verdict::No) return {Verdict::No, {}};
  if (base.verdict == Verdict::Undecided) return {Verdict::Undecided, {}};

  auto try_witness = [&](const GroupWord& w) {
    for (int i = 0; i < g; ++i) {
      GroupWord lhs = conjugate(single(static_cast<Letter>(i + 1)), w);
      if (!ctx.equal(lhs, images[i])) return false;
    }
    return true;
  };
  for (int k = 0; k <= budget; ++k) {
    for (int sgn = 0; sgn < (k == 0 ? 1 : 2); ++sgn) {
      int e = sgn == 0 ? k : -k;
      GroupWord w = ctx.dehn_reduce(concat(base.witness, power(a1, e)));
      if (try_witness(w)) return {Verdict::Yes, w};
    }
  }
  return {Verdict::Undecided, {}};
}

}  // namespace mcg
