// Test-side reference implementation of the Hecke algebra of W_n, kept
// separate from the library: its own polynomials, group enumeration by
// breadth-first search, KL basis from bar invariance, structure constants
// from full T-basis products and cells from the closure of h != 0.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Exp = std::vector<int>;               // lex ordered
using Poly = std::map<Exp, long long>;      // no zero coefficients

Poly add(const Poly& a, const Poly& b, long long sign = 1);
Poly mul(const Poly& a, const Poly& b);
Poly bar(const Poly& a);
Poly mono(const Exp& e, long long c = 1);
bool is_zero(const Poly& a);
// e^{-d} with d >= 0 for every term; lex-lowest exponent
Exp lowest(const Poly& a);
Exp highest(const Poly& a);
std::string text(const Poly& a);  // e.g. "1*(0,-1) + -1*(1,0)"

using Window = std::vector<int>;

struct Group {
  int n = 0;
  std::vector<Window> elems;     // BFS order
  std::map<Window, int> index;
  std::vector<int> len;
  std::vector<Exp> weight;       // L(w)
  std::vector<std::vector<int>> right, left;  // [g][w], g = 0 is t
  std::vector<int> inverse;
};

// b, a: exponent vectors of L(t), L(s_i)
Group make_group(int n, const Exp& b, const Exp& a);

struct Hecke {
  Group G;
  Exp b, a;
  std::vector<Poly> vdiff;  // v_g - v_g^{-1} per generator
  using Vec = std::vector<Poly>;

  Hecke(int n, Exp b, Exp a);
  Vec basis(int w) const;
  Vec left_T(int g, const Vec& h) const;
  Vec right_T(const Vec& h, int g) const;
  Vec mul(const Vec& x, const Vec& y) const;
  // T_u y for all u, and sum_u x_u (T_u y) from that table
  std::vector<Vec> all_T_times(const Vec& y) const;
  Vec combine(const Vec& x, const std::vector<Vec>& Ty) const;
  Vec bar_vec(const Vec& h) const;
};

struct KL {
  Hecke H;
  std::vector<Hecke::Vec> cprime;          // T coordinates
  std::vector<std::vector<std::map<int, Poly>>> h;  // h[x][y][z]

  KL(int n, Exp b, Exp a, bool with_h = true);
  int N() const { return static_cast<int>(H.G.elems.size()); }
  std::map<int, Poly> to_cprime(Hecke::Vec t) const;
  // lex max of -lowest(h_{x,y,z}) over x,y, floored at 0
  Exp a_value(int z) const;
  // classes of the preorder generated by z <- y when some h_{x,y,z} != 0 (left)
  std::set<std::set<Window>> left_cells() const;
  std::set<std::set<Window>> right_cells() const;
};

}  // namespace oracle
