#include "hecke/afun.hpp"

#include <stdexcept>

#include "hecke/bitab.hpp"
#include "hecke/kernels.hpp"

namespace hecke {

GammaVec a_bruteforce(const KLContext& ctx, int z, bool pruned) {
  const HTensor& H = ctx.h_tensor();
  int N = ctx.size();
  GammaVec best(ctx.gdim());
  for (int x = 0; x < N; ++x) {
    if (pruned && !ctx.preceq(Side::Right, z, x)) continue;
    for (int y = 0; y < N; ++y) {
      if (pruned && !ctx.preceq(Side::Left, z, y)) continue;
      if (const LaurentElt* p = find_in_row(H.row(x, y), z)) best = max(best, -p->lowest().exp);
    }
  }
  return best;
}

GammaVec a_formula(const SignedPerm& w, const WeightFunction& L) {
  if (!L.asymptotic()) throw UsageError("a_formula requires the asymptotic regime b > (n-1)a > 0");
  Bipartition s = shape_of(w);
  int na = n_stat(s.first) + 2 * n_stat(conjugate(s.second)) - n_stat(s.second);
  return L.b.scaled(partition_size(s.second)) + L.a.scaled(na);
}

std::pair<GammaVec, Coef> delta_and_n(const KLContext& ctx, int z) {
  const LaurentElt& p = ctx.pstar(0, z);
  if (p.is_zero()) throw std::logic_error("P*_{1,z} vanishes");
  return {-p.highest().exp, p.highest().coef};
}

AfunTable::AfunTable(std::shared_ptr<const KLContext> ctx, bool pruned) : ctx_(std::move(ctx)), N_(ctx_->size()) {
  a_ = a_scan(*ctx_, pruned);
  for (int z = 0; z < N_; ++z) {
    auto [d, n] = delta_and_n(*ctx_, z);
    delta_.push_back(d);
    n_.push_back(n);
  }
  const CoxeterGroup& G = ctx_->group();
  const HTensor& H = ctx_->h_tensor();
  gamma_.assign(static_cast<std::size_t>(N_) * N_ * N_, 0);
  grow_.assign(static_cast<std::size_t>(N_) * N_, {});
  for (int x = 0; x < N_; ++x)
    for (int y = 0; y < N_; ++y)
      for (const auto& [z, h] : H.row(x, y)) {
        Coef c = h.coeff(-a_[z]);
        if (c == 0) continue;
        if (c < -127 || c > 127) throw std::logic_error("gamma constant out of range");
        int zi = G.inverse(z);
        gamma_[(static_cast<std::size_t>(x) * N_ + y) * N_ + zi] = static_cast<std::int8_t>(c);
      }
  for (int x = 0; x < N_; ++x)
    for (int y = 0; y < N_; ++y)
      for (int z = 0; z < N_; ++z)
        if (int g = gamma(x, y, z)) grow_[static_cast<std::size_t>(x) * N_ + y].emplace_back(z, g);
}

std::vector<int> AfunTable::distinguished() const {
  std::vector<int> out;
  for (int z = 0; z < N_; ++z)
    if (in_D(z)) out.push_back(z);
  return out;
}

std::vector<int> distinguished(const AfunTable& t) { return t.distinguished(); }

}  // namespace hecke
