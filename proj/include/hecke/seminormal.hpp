// Orthogonal seminormal representations on standard bitableaux, Schur
// elements and leading matrix coefficients.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hecke/bitab.hpp"
#include "hecke/kl.hpp"

namespace hecke {

// Matrix with entries num[i*d+j] / prod_k factor_k^{pow[k]}; factors are
// owned by the representation.
struct FracMatrix {
  int d = 0;
  std::vector<LaurentElt> num;
  std::vector<int> pow;
  const LaurentElt& at(int i, int j) const { return num[static_cast<std::size_t>(i) * d + j]; }
  LaurentElt& at(int i, int j) { return num[static_cast<std::size_t>(i) * d + j]; }
};

// signed monomial sign * e^exp
struct SignedMono {
  int sign = 1;
  GammaVec exp;
};

GammaVec alpha_invariant(const Bipartition& lam, const WeightFunction& L);

class SeminormalRep {
 public:
  SeminormalRep(const Bipartition& lam, const WeightFunction& L);

  const Bipartition& lambda() const { return lam_; }
  const WeightFunction& weights() const { return L_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<StdBitableau>& basis() const { return basis_; }
  const std::vector<LaurentElt>& factors() const { return factors_; }
  // generator g of W_n (0 = t)
  const FracMatrix& gen(int g) const { return gens_[g]; }

  FracMatrix identity() const;
  FracMatrix mul(const FracMatrix& a, const FracMatrix& b) const;
  FracMatrix add(const FracMatrix& a, const FracMatrix& b) const;
  FracMatrix scale(const FracMatrix& a, const LaurentElt& c) const;
  // raise denominators to pow, adjusting numerators
  FracMatrix lift(const FracMatrix& a, const std::vector<int>& pow) const;
  bool equal(const FracMatrix& a, const FracMatrix& b) const;
  LaurentElt den_poly(const std::vector<int>& pow) const;
  RatioElt entry(const FracMatrix& m, int i, int j) const;
  Valuation entry_valuation(const FracMatrix& m, int i, int j) const;

  FracMatrix of_word(const std::vector<int>& gens) const;
  // X(T_w) for every element of the full group, in group index order
  std::vector<FracMatrix> all_T(const CoxeterGroup& G) const;
  // X(h) for h in T coordinates, given all_T
  FracMatrix of_element(const HeckeVec& h, const std::vector<FracMatrix>& T) const;

  // diagonal P with P^{-1} X(T_s)^T P = X(T_s) on generators, P[0] = 1
  const std::vector<RatioElt>& gram() const { return gram_; }
  // problems found while building P (inconsistent cycles)
  const std::vector<std::string>& gram_problems() const { return gram_problems_; }

 private:
  int factor_index(const SignedMono& q);
  void build_generators();
  void build_gram();

  Bipartition lam_;
  WeightFunction L_;
  std::vector<StdBitableau> basis_;
  std::map<std::vector<int>, int> index_;  // per-entry (component,row,col) signature
  std::vector<LaurentElt> factors_;
  std::vector<std::pair<Coef, GammaVec>> factor_low_;
  std::vector<SignedMono> factor_q_;
  std::vector<FracMatrix> gens_;
  std::vector<RatioElt> gram_;
  std::vector<std::string> gram_problems_;
};

RatioElt schur_element(const SeminormalRep& rep, const std::vector<FracMatrix>& T, const CoxeterGroup& G);

class LeadingCoeffTable {
 public:
  LeadingCoeffTable(std::shared_ptr<const CoxeterGroup> G, const WeightFunction& L);

  const CoxeterGroup& group() const { return *G_; }
  int num_lambdas() const { return static_cast<int>(lams_.size()); }
  const Bipartition& lambda(int li) const { return lams_[li]; }
  int lambda_index(const Bipartition& lam) const;
  const SeminormalRep& rep(int li) const { return *reps_[li]; }
  const std::vector<FracMatrix>& T_images(int li) const { return T_[li]; }
  const GammaVec& alpha(int li) const { return alpha_[li]; }
  int dim(int li) const { return rep(li).dim(); }

  int c(int w, int li, int i, int j) const;
  // -1 when no unique supporting element exists
  int w_of(int li, int i, int j) const;
  // (lambda index, i, j)
  std::tuple<int, int, int> cell_of(int w) const;
  std::vector<int> t_set(int li) const;
  std::optional<int> star(int x, int y) const;
  int n_triple(int x, int y, int z) const;
  bool schur_relations_check(int li, int mi) const;
  bool second_orthogonality_check(int y, int w) const;
  // structural defects (non-unique support, values outside {0,1,-1})
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::shared_ptr<const CoxeterGroup> G_;
  WeightFunction L_;
  std::vector<Bipartition> lams_;
  std::vector<std::unique_ptr<SeminormalRep>> reps_;
  std::vector<std::vector<FracMatrix>> T_;
  std::vector<GammaVec> alpha_;
  std::vector<std::vector<int>> c_;  // c_[li][(w*d + i)*d + j]
  std::vector<std::vector<int>> w_of_;
  std::vector<std::tuple<int, int, int>> cell_of_;
  std::vector<std::string> problems_;
};

}  // namespace hecke
