// The asymptotic ring J on basis {t_w}, with t_x t_y = sum_z gamma_{x,y,z^-1} t_z.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/afun.hpp"
#include "hecke/seminormal.hpp"

namespace hecke {

// group index -> integer coefficient; zero coefficients are never stored
using JElement = std::map<int, Coef>;

class JRing {
 public:
  explicit JRing(std::shared_ptr<const AfunTable> af);

  const AfunTable& afun() const { return *af_; }
  int size() const { return af_->size(); }
  JElement basis(int w) const { return {{w, 1}}; }
  JElement mul(const JElement& x, const JElement& y) const;
  JElement add(const JElement& x, const JElement& y) const;
  JElement scale(const JElement& x, Coef c) const;
  // sum over D of n_d t_d
  const JElement& identity() const { return one_; }

 private:
  std::shared_ptr<const AfunTable> af_;
  JElement one_;
};

// E^{ij} = c^{ij}_{w,lambda} t_w with w = w_lambda(i,j); indexed [i*d + j]
std::vector<JElement> matrix_units(const LeadingCoeffTable& lct, int li);

struct BlockReport {
  std::vector<int> block_sizes;  // in bipartition order
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// block decomposition, matrix units, identity, support rule, agreement of
// h-derived gamma with the star-product prediction, associativity
// (exhaustive when |W|^3 <= assoc_samples, sampled otherwise)
BlockReport verify_block_structure(const JRing& J, const LeadingCoeffTable& lct, long assoc_samples = 10000,
                                   std::uint64_t seed = 1);

std::string jelement_text(const JElement& x, const CoxeterGroup& G);

}  // namespace hecke
