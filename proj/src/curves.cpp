#include "mcg/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcg {

int CurveSpec::transit_count() const {
  int n = 0;
  for (const auto& p : passages)
    if (p.kind == PassageKind::Through) ++n;
  return n;
}

int CurveSpec::transit_count(int crosscap) const {
  int n = 0;
  for (const auto& p : passages)
    if (p.kind == PassageKind::Through && p.crosscap == crosscap) ++n;
  return n;
}

std::string CurveSpec::str() const {
  std::string name;
  switch (family) {
    case CurveFamily::Alpha: name = "alpha"; break;
    case CurveFamily::AlphaBar: name = "abar"; break;
    case CurveFamily::AlphaBar4: name = "abar4"; break;
    case CurveFamily::Generic: name = "curve"; break;
  }
  std::string s = name + "{";
  if (family == CurveFamily::Generic) {
    for (size_t i = 0; i < passages.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(passages[i].crosscap);
      if (passages[i].kind == PassageKind::Over) s += 'o';
      if (passages[i].kind == PassageKind::Under) s += 'u';
    }
  } else {
    for (size_t i = 0; i < indices.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(indices[i]);
    }
  }
  return s + "}";
}

namespace {

std::vector<Passage> fill_passages(const std::vector<int>& I, PassageKind between) {
  std::vector<Passage> out;
  for (size_t t = 0; t < I.size(); ++t) {
    out.push_back({I[t], PassageKind::Through});
    if (t + 1 < I.size())
      for (int m = I[t] + 1; m < I[t + 1]; ++m) out.push_back({m, between});
  }
  return out;
}

void check_indices(const std::vector<int>& I, int g) {
  if (I.empty()) throw std::invalid_argument("curve needs a nonempty index set");
  for (size_t t = 0; t < I.size(); ++t) {
    if (I[t] < 1 || I[t] > g) throw std::invalid_argument("curve index out of range");
    if (t && I[t] <= I[t - 1]) throw std::invalid_argument("curve indices must increase");
  }
}

}  // namespace

CurveSpec make_alpha(const std::vector<int>& I, int g) {
  check_indices(I, g);
  CurveSpec c;
  c.family = CurveFamily::Alpha;
  c.indices = I;
  c.passages = fill_passages(I, PassageKind::Over);
  return c;
}

CurveSpec make_alpha_bar(int i, int j, int g) {
  if (!(1 <= i && i < j && j <= g)) throw std::invalid_argument("abar needs 1 <= i < j <= g");
  CurveSpec c;
  c.family = CurveFamily::AlphaBar;
  c.indices = {i, j};
  c.passages = fill_passages({i, j}, PassageKind::Under);
  return c;
}

CurveSpec make_alpha_bar4(int i, int j, int k, int g) {
  if (!(1 < i && i < j && j < k && k <= g))
    throw std::invalid_argument("abar4 needs 1 < i < j < k <= g");
  CurveSpec c;
  c.family = CurveFamily::AlphaBar4;
  c.indices = {1, i, j, k};
  c.passages = fill_passages({1, i, j, k}, PassageKind::Under);
  return c;
}

CurveSpec make_generic(const std::vector<Passage>& passages, int g) {
  CurveSpec c;
  c.family = CurveFamily::Generic;
  for (const auto& p : passages) {
    if (p.crosscap < 1 || p.crosscap > g) throw std::invalid_argument("passage out of range");
    if (p.kind == PassageKind::Through) c.indices.push_back(p.crosscap);
  }
  c.passages = passages;
  return c;
}

GroupWord curve_word(const GroupContext& ctx, const CurveSpec& spec) {
  std::vector<Letter> w;
  for (const auto& p : spec.passages) {
    if (p.crosscap < 1 || p.crosscap > ctx.genus())
      throw std::invalid_argument("curve passage out of range for genus");
    Letter x = static_cast<Letter>(p.crosscap);
    switch (p.kind) {
      case PassageKind::Through: w.push_back(x); break;
      case PassageKind::Under:
        w.push_back(x);
        w.push_back(x);
        break;
      case PassageKind::Over: break;
    }
  }
  return free_reduce(w);
}

Z2Vec mod2_class(const CurveSpec& spec, int g) {
  Z2Vec v{g, 0};
  for (const auto& p : spec.passages)
    if (p.kind == PassageKind::Through) v.bits ^= 1u << (p.crosscap - 1);
  return v;
}

std::vector<long long> int_class(const GroupContext& ctx, const CurveSpec& spec) {
  return ctx.abelianized(curve_word(ctx, spec));
}

}  // namespace mcg
