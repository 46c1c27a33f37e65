#ifndef MCG_HOMOLOGY_HPP
#define MCG_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mcg {

// Class in H_1(N_g; Z/2) over the basis xbar_1..xbar_g, as a bit vector.
struct Z2Vec {
  int g = 0;
  uint32_t bits = 0;

  bool operator==(const Z2Vec& o) const { return g == o.g && bits == o.bits; }
  bool get(int i) const { return (bits >> i) & 1u; }  // 0-based
};

int intersection_mod2(const Z2Vec& a, const Z2Vec& b);

// GF(2) matrix acting on column vectors; rows stored as bitmasks.
struct GF2Matrix {
  int g = 0;
  std::vector<uint32_t> rows;

  static GF2Matrix identity(int g);
  bool operator==(const GF2Matrix& o) const { return g == o.g && rows == o.rows; }
  bool is_identity() const;
  Z2Vec apply(const Z2Vec& v) const;
  uint64_t key() const;  // g <= 8 only
  std::string str() const;
};

GF2Matrix gf2_mul(const GF2Matrix& a, const GF2Matrix& b);
GF2Matrix gf2_transpose(const GF2Matrix& a);
bool is_isometry(const GF2Matrix& m);  // M^T M = I
int gf2_rank(std::vector<uint64_t> rows, int cols);

// Transvection x |-> x + <x,c> c for a two-sided class c (<c,c> = 0).
GF2Matrix transvection(const Z2Vec& c);

// Induced action on H_1(N_g; Z) = Z^g / <2(1,...,1)>; columns are the
// canonicalized abelianized generator images.
struct IntMatrix {
  int g = 0;
  std::vector<std::vector<long long>> cols;

  static IntMatrix identity(int g);
  bool operator==(const IntMatrix& o) const { return g == o.g && cols == o.cols; }
  bool is_identity() const { return *this == identity(g); }
  std::string str() const;
};

struct IsometryReport {
  int genus = 0;
  unsigned long long order = 0;
  std::string method;
  int generators_used = 0;
};

// Counts all g x g matrices over GF(2) with M^T M = I, by orthonormal
// column extension with pruning.  Feasible for g <= 5.
IsometryReport isometry_order_bruteforce(int g);

// Cardinality of the subgroup generated by the given isometries (hashed
// breadth-first closure; g <= 8).
IsometryReport isometry_order_closure(int g, const std::vector<GF2Matrix>& gens);

}  // namespace mcg

#endif
