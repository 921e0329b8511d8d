// Lusztig's a-function, Delta, n_z, gamma constants and the set D.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/kl.hpp"

namespace hecke {

GammaVec a_bruteforce(const KLContext& ctx, int z, bool pruned = true);
// closed form from the RS shape; asymptotic weights only
GammaVec a_formula(const SignedPerm& w, const WeightFunction& L);
// from the lex-highest term of P*_{1,z}
std::pair<GammaVec, Coef> delta_and_n(const KLContext& ctx, int z);

class AfunTable {
 public:
  explicit AfunTable(std::shared_ptr<const KLContext> ctx, bool pruned = true);

  const KLContext& ctx() const { return *ctx_; }
  std::shared_ptr<const KLContext> ctx_ptr() const { return ctx_; }
  int size() const { return ctx_->size(); }
  const GammaVec& a(int z) const { return a_[z]; }
  const GammaVec& delta(int z) const { return delta_[z]; }
  Coef n(int z) const { return n_[z]; }
  bool in_D(int z) const { return a_[z] == delta_[z]; }
  std::vector<int> distinguished() const;
  // gamma_{x,y,z}
  int gamma(int x, int y, int z) const { return gamma_[(static_cast<std::size_t>(x) * N_ + y) * N_ + z]; }
  // nonzero gamma_{x,y,z} as (z, value)
  const std::vector<std::pair<int, int>>& gamma_row(int x, int y) const { return grow_[static_cast<std::size_t>(x) * N_ + y]; }

 private:
  std::shared_ptr<const KLContext> ctx_;
  int N_;
  std::vector<GammaVec> a_, delta_;
  std::vector<Coef> n_;
  std::vector<std::int8_t> gamma_;
  std::vector<std::vector<std::pair<int, int>>> grow_;
};

std::vector<int> distinguished(const AfunTable& t);

}  // namespace hecke
