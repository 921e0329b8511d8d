// Iwahori-Hecke algebra of W_n (or a standard parabolic) with unequal
// parameters: T-basis arithmetic, Kazhdan-Lusztig bases, structure
// constants and cells.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hecke/ordgamma.hpp"
#include "hecke/signedperm.hpp"

namespace hecke {

struct WeightFunction {
  int n = 0;
  GammaVec b, a;  // L(t), L(s_i)

  // b = (1,0), a = (0,1)
  static WeightFunction generic(int n);
  static WeightFunction integer(int n, int b, int a);

  int dim() const { return b.dim(); }
  const GammaVec& of_gen(int g) const { return g == 0 ? b : a; }
  bool asymptotic() const;
  std::string text() const;
};

// T-basis coordinates indexed by group element
using HeckeVec = std::vector<LaurentElt>;
// (element, coefficient) pairs sorted by element
using SparseRow = std::vector<std::pair<int, LaurentElt>>;

const LaurentElt* find_in_row(const SparseRow& row, int z);

class HeckeAlgebra {
 public:
  HeckeAlgebra(std::shared_ptr<const CoxeterGroup> group, WeightFunction L);

  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return group_; }
  const WeightFunction& weights() const { return L_; }
  int gdim() const { return L_.dim(); }
  int size() const { return group_->size(); }

  LaurentElt one() const { return LaurentElt::constant(1, gdim()); }
  // v_s and v_s - v_s^{-1} for the k-th generator of the group
  const LaurentElt& v(int k) const { return v_[k]; }
  const LaurentElt& v_inv(int k) const { return vinv_[k]; }
  const LaurentElt& v_diff(int k) const { return vdiff_[k]; }
  // e^{L(w)}
  GammaVec weight_of(int w) const;

  HeckeVec zero() const { return HeckeVec(size(), LaurentElt::zero(gdim())); }
  HeckeVec basis(int w) const;
  HeckeVec left_T(int k, const HeckeVec& h) const;
  HeckeVec right_T(const HeckeVec& h, int k) const;
  // T_u * h by the reduced word of u
  HeckeVec T_times(int u, const HeckeVec& h) const;
  HeckeVec times_T(const HeckeVec& h, int u) const;
  HeckeVec mul(const HeckeVec& a, const HeckeVec& b) const;
  LaurentElt tau(const HeckeVec& h) const { return h[0]; }
  // coefficient involution with T_w -> T_{w^-1}^{-1}
  HeckeVec bar(const HeckeVec& h) const;
  const HeckeVec& bar_T(int w) const;

 private:
  std::shared_ptr<const CoxeterGroup> group_;
  WeightFunction L_;
  std::vector<LaurentElt> v_, vinv_, vdiff_;
  mutable std::once_flag bar_once_;
  mutable std::vector<HeckeVec> bar_T_;
};

void axpy(HeckeVec& y, const LaurentElt& c, const HeckeVec& x);
bool is_zero(const HeckeVec& h);

enum class Side { Left, Right, TwoSided };

struct CellPartition {
  std::vector<int> cell_of;
  std::vector<std::vector<int>> cells;  // ordered by least element
  // leq[c][d]: cell c <= cell d
  std::vector<std::vector<char>> leq;
};

struct HTensor {
  int N = 0;
  std::vector<SparseRow> rows;  // rows[x*N + y] = C'-expansion of C'_x C'_y
  const SparseRow& row(int x, int y) const { return rows[static_cast<std::size_t>(x) * N + y]; }
  LaurentElt get(int x, int y, int z) const;
  bool nonzero(int x, int y, int z) const { return find_in_row(row(x, y), z) != nullptr; }
};

class KLContext {
 public:
  KLContext(std::shared_ptr<const CoxeterGroup> group, WeightFunction L);
  KLContext(const KLContext&) = delete;
  KLContext& operator=(const KLContext&) = delete;

  static std::shared_ptr<const KLContext> type_b(int n, const WeightFunction& L);

  const CoxeterGroup& group() const { return alg_.group(); }
  const HeckeAlgebra& algebra() const { return alg_; }
  const WeightFunction& weights() const { return alg_.weights(); }
  int size() const { return alg_.size(); }
  int gdim() const { return alg_.gdim(); }
  int eps(int w) const { return group().len(w) % 2 ? -1 : 1; }

  const LaurentElt& pstar(int y, int w) const { return cprime_[w][y]; }
  const HeckeVec& cprime(int w) const { return cprime_[w]; }
  const SparseRow& cprime_support(int w) const { return support_[w]; }
  HeckeVec c_basis(int w) const;
  HeckeVec d_basis(int y) const;
  // M^s_{z,y} with s = gens()[k]; requires sz < z < y < sy
  LaurentElt mu(int k, int z, int y) const;
  // all M^s_{z,y} for fixed (s,y) with sy > y, keyed by z
  SparseRow mu_column(int k, int y) const;

  // unitriangular back-substitution to C' coordinates
  SparseRow to_cprime(HeckeVec t) const;
  // the same against the C basis
  SparseRow to_c(HeckeVec t) const;

  SparseRow left_gen_product(int k, int y) const;   // C'_s C'_y
  SparseRow right_gen_product(int y, int k) const;  // C'_y C'_s
  SparseRow product_row(int x, int y) const;        // C'_x C'_y, direct

  // full tensor, computed once by the parallel kernel
  const HTensor& h_tensor() const;
  bool has_h_tensor() const;
  LaurentElt h(int x, int y, int z) const;

  // edges y -> z with h_{s,y,z} != 0 (left) or h_{y,s,z} != 0 (right)
  const std::vector<std::vector<int>>& left_edges() const { return left_edges_; }
  const std::vector<std::vector<int>>& right_edges() const { return right_edges_; }
  const CellPartition& cells(Side side) const;
  // z <=_side y
  bool preceq(Side side, int z, int y) const;

  LaurentElt cell_character_C(const std::vector<int>& cell, int w) const;
  LaurentElt cell_character_T(const std::vector<int>& cell, int w) const;

 private:
  void build_cprime();
  SparseRow mu_column_uncached(int k, int y, HeckeVec* result) const;
  void build_cells();

  HeckeAlgebra alg_;
  std::vector<HeckeVec> cprime_;
  std::vector<SparseRow> support_;
  mutable std::mutex mu_mutex_;
  mutable std::map<std::pair<int, int>, SparseRow> mu_cache_;
  mutable std::once_flag h_once_;
  mutable std::unique_ptr<HTensor> h_;
  std::vector<std::vector<int>> left_edges_, right_edges_;
  std::vector<std::vector<char>> reach_[3];
  CellPartition cells_[3];
};

// partition and order from edge lists (edges[y] lists z with z <- y)
CellPartition cells_from_edges(const std::vector<std::vector<int>>& edges, std::vector<std::vector<char>>* reach);

}  // namespace hecke
