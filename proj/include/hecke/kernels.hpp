// OpenMP kernels and their serial references.
#pragma once

#include <cstdint>
#include <vector>

#include "hecke/kl.hpp"

namespace hecke {

// Full h tensor. Parallel over y; within a column C'_x C'_y follows the
// KL recursion for C'_x in C' coordinates.
HTensor compute_h_tensor(const KLContext& ctx);
// One independent product per pair, no sharing, no threads.
HTensor compute_h_tensor_serial(const KLContext& ctx);

// eps_x eps_y eps_z tau(C_x C_y D_{z^-1}) for all z
SparseRow h_row_via_tau(const KLContext& ctx, int x, int y);

// max over (x,y) of -(lowest exponent of h_{x,y,z}), floored at 0.
// pruned scans only z <=_R x, z <=_L y.
std::vector<GammaVec> a_scan(const KLContext& ctx, bool pruned);
std::vector<GammaVec> a_scan_serial(const KLContext& ctx, bool pruned);

struct P15Sample {
  int w, x, xp, y;
};
// both sides of the P15 identity in Z[Gamma x Gamma]
bool p15_holds(const KLContext& ctx, const P15Sample& q);
// indices of failing samples, in input order
std::vector<std::size_t> p15_check(const KLContext& ctx, const std::vector<P15Sample>& qs);
std::vector<std::size_t> p15_check_serial(const KLContext& ctx, const std::vector<P15Sample>& qs);

int kernel_threads();

}  // namespace hecke
