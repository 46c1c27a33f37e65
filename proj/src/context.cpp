#include "mcg/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcg {

GroupContext::GroupContext(int genus) : g_(genus) {
  if (genus < 4) throw std::invalid_argument("genus must be >= 4 (C'(1/6) needs g >= 4)");
  std::vector<Letter> r;
  for (int i = 1; i <= genus; ++i) {
    r.push_back(static_cast<Letter>(i));
    r.push_back(static_cast<Letter>(i));
  }
  relator_ = GroupWord{r};
  int n = 2 * genus;
  cycle_pos_.resize(2 * n);
  cycle_neg_.resize(2 * n);
  GroupWord rin = inverse(relator_);
  for (int i = 0; i < 2 * n; ++i) {
    cycle_pos_[i] = relator_.letters[i % n];
    cycle_neg_[i] = rin.letters[i % n];
  }
  if (max_piece_length() * 6 >= n)
    throw std::logic_error("piece condition violated");
}

int GroupContext::max_piece_length() const {
  // Pieces are common factors of two distinct cyclic shifts of relator^{+-1}.
  int n = 2 * g_;
  int best = 0;
  auto scan = [&](const std::vector<Letter>& u, const std::vector<Letter>& v, bool same) {
    for (int su = 0; su < n; ++su)
      for (int sv = 0; sv < n; ++sv) {
        if (same && su == sv) continue;
        int len = 0;
        while (len < n && u[su + len] == v[sv + len]) ++len;
        best = std::max(best, len == n && same ? 0 : std::min(len, n));
      }
  };
  scan(cycle_pos_, cycle_pos_, true);
  scan(cycle_pos_, cycle_neg_, false);
  scan(cycle_neg_, cycle_neg_, true);
  return best;
}

int GroupContext::longest_relator_match(const GroupWord& w, size_t pos, int* phase,
                                        int* sign) const {
  int n = 2 * g_;
  int best = 0, bphase = 0, bsign = 1;
  size_t maxlen = std::min(w.size() - pos, static_cast<size_t>(n));
  for (int s = 0; s < 2; ++s) {
    const std::vector<Letter>& cyc = s == 0 ? cycle_pos_ : cycle_neg_;
    for (int p = 0; p < n; ++p) {
      int len = 0;
      while (len < static_cast<int>(maxlen) && w.letters[pos + len] == cyc[p + len]) ++len;
      if (len > best) {
        best = len;
        bphase = p;
        bsign = s == 0 ? 1 : -1;
      }
    }
  }
  if (phase) *phase = bphase;
  if (sign) *sign = bsign;
  return best;
}

GroupWord GroupContext::dehn_reduce(const GroupWord& w) const {
  int n = 2 * g_;
  GroupWord cur = free_reduce(w.letters);
  for (;;) {
    int bestlen = 0, bestpos = -1, bestphase = 0, bestsign = 1;
    for (size_t pos = 0; pos < cur.size(); ++pos) {
      int phase, sign;
      int len = longest_relator_match(cur, pos, &phase, &sign);
      if (len > bestlen) {
        bestlen = len;
        bestpos = static_cast<int>(pos);
        bestphase = phase;
        bestsign = sign;
      }
    }
    if (bestlen <= g_) return cur;
    // Matched M at bestpos with relator^sign shifted by bestphase: r = M C
    // cyclically, so M = C^{-1} in the group; substitute.
    const std::vector<Letter>& cyc = bestsign > 0 ? cycle_pos_ : cycle_neg_;
    std::vector<Letter> repl;
    for (int i = n - 1; i >= bestlen; --i) repl.push_back(-cyc[bestphase + i]);
    std::vector<Letter> next(cur.letters.begin(), cur.letters.begin() + bestpos);
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(), cur.letters.begin() + bestpos + bestlen, cur.letters.end());
    cur = free_reduce(next);
  }
}

bool GroupContext::is_identity(const GroupWord& w) const { return dehn_reduce(w).empty(); }

bool GroupContext::equal(const GroupWord& u, const GroupWord& v) const {
  return is_identity(concat(u, inverse(v)));
}

GroupWord GroupContext::cyclic_reduce(const GroupWord& w, GroupWord* conj_out) const {
  GroupWord cur = dehn_reduce(w);
  GroupWord conj;  // w = conj * cur * conj^{-1}
  for (;;) {
    bool changed = false;
    // Free cyclic reduction: w = x u x^{-1}  ->  u, conjugator gains x.
    while (cur.size() >= 2 && cur.letters.front() == -cur.letters.back()) {
      conj = concat(conj, single(cur.letters.front()));
      cur.letters.pop_back();
      cur.letters.erase(cur.letters.begin());
      changed = true;
    }
    // Dehn steps across the seam: check rotations for long relator factors.
    size_t sz = cur.size();
    bool rotated = false;
    for (size_t rot = 0; rot < sz && !rotated; ++rot) {
      std::vector<Letter> rl(cur.letters.begin() + rot, cur.letters.end());
      rl.insert(rl.end(), cur.letters.begin(), cur.letters.begin() + rot);
      GroupWord r{rl};
      int phase, sign;
      bool has_long = false;
      for (size_t pos = 0; pos < r.size() && !has_long; ++pos)
        if (longest_relator_match(r, pos, &phase, &sign) > g_) has_long = true;
      if (has_long) {
        GroupWord pre{std::vector<Letter>(cur.letters.begin(), cur.letters.begin() + rot)};
        conj = concat(conj, pre);
        cur = dehn_reduce(r);
        changed = true;
        rotated = true;
      }
    }
    if (!changed) break;
  }
  if (conj_out) *conj_out = conj;
  return cur;
}

std::vector<std::pair<GroupWord, GroupWord>> GroupContext::half_swap_neighbors(
    const GroupWord& w) const {
  // For cyclic word w, returns (w', c) with w = c w' c^{-1} and |w'| = |w|:
  // rotations, and rotations with one exactly-half relator factor replaced
  // by the inverse complement half.
  std::vector<std::pair<GroupWord, GroupWord>> out;
  size_t sz = w.size();
  int n = 2 * g_;
  for (size_t rot = 0; rot < sz; ++rot) {
    std::vector<Letter> rl(w.letters.begin() + rot, w.letters.end());
    rl.insert(rl.end(), w.letters.begin(), w.letters.begin() + rot);
    GroupWord pre{std::vector<Letter>(w.letters.begin(), w.letters.begin() + rot)};
    GroupWord r{rl};
    out.emplace_back(r, pre);
    if (static_cast<int>(sz) < g_) continue;
    int phase, sign;
    int len = longest_relator_match(r, 0, &phase, &sign);
    if (len >= g_) {
      const std::vector<Letter>& cyc = sign > 0 ? cycle_pos_ : cycle_neg_;
      std::vector<Letter> repl;
      for (int i = n - 1; i >= g_; --i) repl.push_back(-cyc[phase + i]);
      std::vector<Letter> next(repl);
      next.insert(next.end(), r.letters.begin() + g_, r.letters.end());
      GroupWord swapped = free_reduce(next);
      if (swapped.size() == sz) out.emplace_back(swapped, pre);
    }
  }
  return out;
}

std::vector<long long> canonical_abelian(std::vector<long long> v) {
  // Representative of Z^g / <2(1,...,1)> with first coordinate in {0,1}.
  if (v.empty()) return v;
  long long k = v[0] >= 0 ? v[0] / 2 : -((-v[0] + 1) / 2);
  for (auto& x : v) x -= 2 * k;
  return v;
}

std::vector<long long> GroupContext::abelianized(const GroupWord& w) const {
  std::vector<long long> v(g_, 0);
  for (Letter x : w.letters) v[letter_index(x) - 1] += letter_sign(x);
  return canonical_abelian(std::move(v));
}

bool GroupContext::abelian_trivial(const GroupWord& w) const {
  std::vector<long long> v(g_, 0);
  for (Letter x : w.letters) v[letter_index(x) - 1] += letter_sign(x);
  long long first = v[0];
  if (first % 2 != 0) return false;
  for (long long x : v)
    if (x != first) return false;
  return true;
}

}  // namespace mcg
