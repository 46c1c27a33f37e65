#include "mcg/homology.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "mcg/context.hpp"

namespace mcg {

int intersection_mod2(const Z2Vec& a, const Z2Vec& b) {
  if (a.g != b.g) throw std::invalid_argument("intersection_mod2: genus mismatch");
  return std::popcount(a.bits & b.bits) & 1;
}

GF2Matrix GF2Matrix::identity(int g) {
  GF2Matrix m;
  m.g = g;
  m.rows.resize(g);
  for (int i = 0; i < g; ++i) m.rows[i] = 1u << i;
  return m;
}

bool GF2Matrix::is_identity() const { return *this == identity(g); }

Z2Vec GF2Matrix::apply(const Z2Vec& v) const {
  Z2Vec out{g, 0};
  for (int i = 0; i < g; ++i)
    if (std::popcount(rows[i] & v.bits) & 1) out.bits |= 1u << i;
  return out;
}

uint64_t GF2Matrix::key() const {
  uint64_t k = 0;
  for (int i = 0; i < g; ++i) k = (k << g) | rows[i];
  return k;
}

std::string GF2Matrix::str() const {
  std::string s;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      s += ((rows[i] >> j) & 1) ? '1' : '0';
      if (j + 1 < g) s += ' ';
    }
    s += '\n';
  }
  return s;
}

GF2Matrix gf2_mul(const GF2Matrix& a, const GF2Matrix& b) {
  GF2Matrix c;
  c.g = a.g;
  c.rows.assign(a.g, 0);
  // row_i(C) = sum over j with A_ij = 1 of row_j(B)
  for (int i = 0; i < a.g; ++i) {
    uint32_t acc = 0, m = a.rows[i];
    while (m) {
      int j = std::countr_zero(m);
      m &= m - 1;
      acc ^= b.rows[j];
    }
    c.rows[i] = acc;
  }
  return c;
}

GF2Matrix gf2_transpose(const GF2Matrix& a) {
  GF2Matrix t;
  t.g = a.g;
  t.rows.assign(a.g, 0);
  for (int i = 0; i < a.g; ++i)
    for (int j = 0; j < a.g; ++j)
      if ((a.rows[i] >> j) & 1) t.rows[j] |= 1u << i;
  return t;
}

bool is_isometry(const GF2Matrix& m) {
  return gf2_mul(gf2_transpose(m), m).is_identity();
}

int gf2_rank(std::vector<uint64_t> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols; ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot] >> c) & 1)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<size_t>(rank) && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

GF2Matrix transvection(const Z2Vec& c) {
  if (std::popcount(c.bits) & 1)
    throw std::invalid_argument("transvection: one-sided class (odd self-intersection)");
  GF2Matrix m = GF2Matrix::identity(c.g);
  for (int i = 0; i < c.g; ++i)
    if (c.get(i)) m.rows[i] ^= c.bits;
  return m;
}

IntMatrix IntMatrix::identity(int g) {
  IntMatrix m;
  m.g = g;
  m.cols.assign(g, std::vector<long long>(g, 0));
  for (int i = 0; i < g; ++i) {
    m.cols[i][i] = 1;
    m.cols[i] = canonical_abelian(m.cols[i]);
  }
  return m;
}

std::string IntMatrix::str() const {
  std::string s;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      s += std::to_string(cols[j][i]);
      if (j + 1 < g) s += ' ';
    }
    s += '\n';
  }
  return s;
}

IsometryReport isometry_order_bruteforce(int g) {
  if (g < 1 || g > 5) throw std::invalid_argument("bruteforce isometry order: need 1 <= g <= 5");
  // Build column by column; columns must be orthonormal for the identity
  // Gram matrix: <v,v> = 1, <v, earlier> = 0.
  unsigned long long count = 0;
  std::vector<uint32_t> cols(g, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == g) {
      ++count;
      return;
    }
    for (uint32_t v = 1; v < (1u << g); ++v) {
      if (!(std::popcount(v) & 1)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        if (std::popcount(v & cols[j]) & 1) ok = false;
      if (!ok) continue;
      cols[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return {g, count, "bruteforce", 0};
}

IsometryReport isometry_order_closure(int g, const std::vector<GF2Matrix>& gens) {
  if (g > 8) throw std::invalid_argument("closure isometry order: g <= 8");
  for (const auto& m : gens)
    if (!is_isometry(m)) throw std::invalid_argument("closure: generator is not an isometry");
  std::unordered_set<uint64_t> seen;
  std::vector<GF2Matrix> frontier;
  GF2Matrix id = GF2Matrix::identity(g);
  seen.insert(id.key());
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<GF2Matrix> next;
    for (const auto& m : frontier)
      for (const auto& gmat : gens) {
        GF2Matrix p = gf2_mul(gmat, m);
        if (seen.insert(p.key()).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {g, seen.size(), "closure", static_cast<int>(gens.size())};
}

}  // namespace mcg
