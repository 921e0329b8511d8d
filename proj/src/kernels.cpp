#include "hecke/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hecke {

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// C'_x = C'_s C'_{x'} - sum_z mu^s_{z,x'} C'_z with x = s x' > x', reused
// column by column: C'_x C'_y = C'_s (C'_{x'} C'_y) - sum_z mu C'_z C'_y.
struct Recursion {
  std::vector<int> k, prev;
  std::vector<SparseRow> mu;
  std::vector<std::vector<SparseRow>> left;  // left[k][u] = C'_s C'_u
};

Recursion prepare(const KLContext& ctx) {
  const CoxeterGroup& G = ctx.group();
  int N = ctx.size(), K = G.num_gens();
  Recursion R;
  R.k.assign(N, -1);
  R.prev.assign(N, -1);
  R.mu.assign(N, {});
  for (int x = 1; x < N; ++x) {
    int k = 0;
    while (G.len(G.lmul(k, x)) > G.len(x)) ++k;
    R.k[x] = k;
    R.prev[x] = G.lmul(k, x);
    R.mu[x] = ctx.mu_column(k, R.prev[x]);
  }
  R.left.assign(K, std::vector<SparseRow>(N));
  for (int k = 0; k < K; ++k)
    for (int u = 0; u < N; ++u) R.left[k][u] = ctx.left_gen_product(k, u);
  return R;
}

void fill_column(const KLContext& ctx, const Recursion& R, int y, HTensor& H) {
  int N = ctx.size();
  std::vector<LaurentElt> acc(N, LaurentElt::zero(ctx.gdim()));
  std::vector<char> touched(N, 0);
  std::vector<int> list;
  auto add = [&](int v, const LaurentElt& a, const LaurentElt& b) {
    if (!touched[v]) {
      touched[v] = 1;
      list.push_back(v);
    }
    acc[v].add_product(a, b);
  };
  H.rows[y] = {{y, ctx.algebra().one()}};
  for (int x = 1; x < N; ++x) {
    for (const auto& [u, h] : H.row(R.prev[x], y))
      for (const auto& [v, g] : R.left[R.k[x]][u]) add(v, h, g);
    for (const auto& [z, m] : R.mu[x]) {
      LaurentElt neg = -m;
      for (const auto& [v, g] : H.row(z, y)) add(v, neg, g);
    }
    std::sort(list.begin(), list.end());
    SparseRow row;
    for (int v : list) {
      if (!acc[v].is_zero()) row.emplace_back(v, std::move(acc[v]));
      acc[v] = LaurentElt::zero(ctx.gdim());
      touched[v] = 0;
    }
    list.clear();
    H.rows[static_cast<std::size_t>(x) * N + y] = std::move(row);
  }
}

GammaVec a_of(const KLContext& ctx, const HTensor& H, int z, bool pruned) {
  int N = ctx.size();
  GammaVec best(ctx.gdim());
  for (int x = 0; x < N; ++x) {
    if (pruned && !ctx.preceq(Side::Right, z, x)) continue;
    for (int y = 0; y < N; ++y) {
      if (pruned && !ctx.preceq(Side::Left, z, y)) continue;
      const LaurentElt* p = find_in_row(H.row(x, y), z);
      if (!p) continue;
      GammaVec g = -p->lowest().exp;
      if (g > best) best = g;
    }
  }
  return best;
}

// Both sides put the coefficient of the left action (by C_x) in the first
// tensor factor and that of the right action (by C_x') in the second:
//   lhs = sum_{y'} h_{x,y',y} (x) h_{w,x',y'}
//   rhs = sum_{y'} h_{x,w,y'} (x) h_{y',x',y}
LaurentElt p15_side(const KLContext& ctx, const HTensor& H, const P15Sample& q, bool lhs) {
  std::vector<Term> acc;
  const SparseRow& first = lhs ? H.row(q.w, q.xp) : H.row(q.x, q.w);
  for (const auto& [yp, h1] : first) {
    const LaurentElt* h2 = lhs ? find_in_row(H.row(q.x, yp), q.y) : find_in_row(H.row(yp, q.xp), q.y);
    if (!h2) continue;
    LaurentElt t = lhs ? tensor(*h2, h1) : tensor(h1, *h2);
    acc.insert(acc.end(), t.terms().begin(), t.terms().end());
  }
  return LaurentElt::from_terms(std::move(acc), 2 * ctx.gdim());
}

}  // namespace

HTensor compute_h_tensor(const KLContext& ctx) {
  int N = ctx.size();
  HTensor H;
  H.N = N;
  H.rows.assign(static_cast<std::size_t>(N) * N, {});
  Recursion R = prepare(ctx);
#pragma omp parallel for schedule(dynamic)
  for (int y = 0; y < N; ++y) fill_column(ctx, R, y, H);
  return H;
}

HTensor compute_h_tensor_serial(const KLContext& ctx) {
  int N = ctx.size();
  HTensor H;
  H.N = N;
  H.rows.assign(static_cast<std::size_t>(N) * N, {});
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) H.rows[static_cast<std::size_t>(x) * N + y] = ctx.product_row(x, y);
  return H;
}

SparseRow h_row_via_tau(const KLContext& ctx, int x, int y) {
  const CoxeterGroup& G = ctx.group();
  const HeckeAlgebra& alg = ctx.algebra();
  HeckeVec CC = alg.mul(ctx.c_basis(x), ctx.c_basis(y));
  SparseRow out;
  for (int z = 0; z < ctx.size(); ++z) {
    HeckeVec D = ctx.d_basis(G.inverse(z));
    LaurentElt t = LaurentElt::zero(ctx.gdim());
    for (int w = 0; w < ctx.size(); ++w)
      if (!CC[w].is_zero()) t.add_product(CC[w], D[G.inverse(w)]);
    if (t.is_zero()) continue;
    if (ctx.eps(x) * ctx.eps(y) * ctx.eps(z) < 0) t = -t;
    out.emplace_back(z, std::move(t));
  }
  return out;
}

std::vector<GammaVec> a_scan(const KLContext& ctx, bool pruned) {
  const HTensor& H = ctx.h_tensor();
  int N = ctx.size();
  std::vector<GammaVec> a(N);
#pragma omp parallel for schedule(dynamic)
  for (int z = 0; z < N; ++z) a[z] = a_of(ctx, H, z, pruned);
  return a;
}

std::vector<GammaVec> a_scan_serial(const KLContext& ctx, bool pruned) {
  const HTensor& H = ctx.h_tensor();
  std::vector<GammaVec> a(ctx.size());
  for (int z = 0; z < ctx.size(); ++z) a[z] = a_of(ctx, H, z, pruned);
  return a;
}

bool p15_holds(const KLContext& ctx, const P15Sample& q) {
  const HTensor& H = ctx.h_tensor();
  return p15_side(ctx, H, q, true) == p15_side(ctx, H, q, false);
}

std::vector<std::size_t> p15_check(const KLContext& ctx, const std::vector<P15Sample>& qs) {
  ctx.h_tensor();
  std::vector<char> bad(qs.size(), 0);
  long m = static_cast<long>(qs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < m; ++i) bad[i] = !p15_holds(ctx, qs[i]);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (bad[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> p15_check_serial(const KLContext& ctx, const std::vector<P15Sample>& qs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (!p15_holds(ctx, qs[i])) out.push_back(i);
  return out;
}

}  // namespace hecke
