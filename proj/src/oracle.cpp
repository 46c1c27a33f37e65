#include "mcg/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace mcg {

namespace {

constexpr int kProbeDegree = 8;

using Perm = std::array<uint8_t, kProbeDegree>;

Perm perm_id() {
  Perm p;
  for (int i = 0; i < kProbeDegree; ++i) p[i] = static_cast<uint8_t>(i);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm c;
  for (int i = 0; i < kProbeDegree; ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inv(const Perm& a) {
  Perm c;
  for (int i = 0; i < kProbeDegree; ++i) c[a[i]] = static_cast<uint8_t>(i);
  return c;
}

// A square root of p in S_n, if one exists: even-length cycles must pair up.
bool perm_sqrt(const Perm& p, Perm* out) {
  std::array<bool, kProbeDegree> seen{};
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < kProbeDegree; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = p[j];
    }
    cycles.push_back(cyc);
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  Perm r = perm_id();
  std::vector<std::vector<int>> pending;
  for (auto& cyc : cycles) {
    if (cyc.size() % 2 == 1) {
      // Odd cycle c has the square root c^{(len+1)/2}.
      size_t len = cyc.size(), k = (len + 1) / 2;
      for (size_t t = 0; t < len; ++t) r[cyc[t]] = static_cast<uint8_t>(cyc[(t + k) % len]);
    } else {
      pending.push_back(cyc);
    }
  }
  // Pair equal-length even cycles by interleaving.
  std::sort(pending.begin(), pending.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (size_t i = 0; i < pending.size(); i += 2) {
    if (i + 1 >= pending.size() || pending[i].size() != pending[i + 1].size()) return false;
    const auto& c1 = pending[i];
    const auto& c2 = pending[i + 1];
    size_t len = c1.size();
    for (size_t t = 0; t < len; ++t) {
      r[c1[t]] = static_cast<uint8_t>(c2[t]);
      r[c2[t]] = static_cast<uint8_t>(c1[(t + 1) % len]);
    }
  }
  *out = r;
  return true;
}

bool probe_nontrivial(const GroupContext& ctx, const GroupWord& w, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  int g = ctx.genus();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Perm> gens(g);
    Perm acc = perm_id();
    for (int i = 0; i + 1 < g; ++i) {
      Perm p = perm_id();
      std::shuffle(p.begin(), p.end(), rng);
      gens[i] = p;
      acc = perm_mul(acc, perm_mul(p, p));
    }
    // Need sigma_g with sigma_g^2 = acc^{-1}.
    Perm target = perm_inv(acc), root;
    if (!perm_sqrt(target, &root)) continue;
    gens[g - 1] = root;
    Perm img = perm_id();
    for (Letter x : w.letters) {
      const Perm& p = gens[letter_index(x) - 1];
      img = perm_mul(img, x > 0 ? p : perm_inv(p));
    }
    if (img != perm_id()) return true;
  }
  return false;
}

}  // namespace

Triviality triviality_oracle(const GroupContext& ctx, const GroupWord& w, int radius,
                             uint64_t seed) {
  GroupWord start = free_reduce(w.letters);
  if (start.empty()) return Triviality::Trivial;
  if (!ctx.abelian_trivial(start)) return Triviality::Nontrivial;

  // BFS over relator insertions at every position, every shift, both signs.
  int n = 2 * ctx.genus();
  size_t maxlen = start.size() + static_cast<size_t>(radius);
  std::vector<GroupWord> shifts;
  for (int s = 0; s < 2; ++s) {
    GroupWord r = s == 0 ? ctx.relator() : inverse(ctx.relator());
    for (int p = 0; p < n; ++p) {
      std::vector<Letter> rl(r.letters.begin() + p, r.letters.end());
      rl.insert(rl.end(), r.letters.begin(), r.letters.begin() + p);
      shifts.push_back(GroupWord{rl});
    }
  }
  std::set<std::vector<Letter>> seen;
  std::queue<std::pair<GroupWord, int>> q;
  seen.insert(start.letters);
  q.emplace(start, 0);
  size_t expansions = 0;
  while (!q.empty() && expansions < 20000) {
    auto [cur, depth] = q.front();
    q.pop();
    if (depth >= radius) continue;
    ++expansions;
    for (size_t pos = 0; pos <= cur.size(); ++pos) {
      for (const GroupWord& sh : shifts) {
        std::vector<Letter> next(cur.letters.begin(), cur.letters.begin() + pos);
        next.insert(next.end(), sh.letters.begin(), sh.letters.end());
        next.insert(next.end(), cur.letters.begin() + pos, cur.letters.end());
        GroupWord nw = free_reduce(next);
        if (nw.empty()) return Triviality::Trivial;
        if (nw.size() > maxlen) continue;
        if (seen.insert(nw.letters).second) q.emplace(nw, depth + 1);
      }
    }
  }

  if (probe_nontrivial(ctx, start, seed)) return Triviality::Nontrivial;
  return Triviality::Unknown;
}

}  // namespace mcg
