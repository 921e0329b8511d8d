#include "hecke/kl.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hecke/kernels.hpp"

namespace hecke {

WeightFunction WeightFunction::generic(int n) { return {n, GammaVec{1, 0}, GammaVec{0, 1}}; }

WeightFunction WeightFunction::integer(int n, int b, int a) {
  if (a <= 0 || b <= 0) throw UsageError("weights must be positive");
  return {n, GammaVec{b}, GammaVec{a}};
}

bool WeightFunction::asymptotic() const {
  if (a.sign() <= 0) return false;
  return b > a.scaled(n - 1);
}

std::string WeightFunction::text() const {
  if (dim() == 2 && b == GammaVec{1, 0} && a == GammaVec{0, 1}) return "generic";
  return "b=" + to_string(b) + ",a=" + to_string(a);
}

const LaurentElt* find_in_row(const SparseRow& row, int z) {
  auto it = std::lower_bound(row.begin(), row.end(), z, [](const auto& p, int v) { return p.first < v; });
  return it != row.end() && it->first == z ? &it->second : nullptr;
}

void axpy(HeckeVec& y, const LaurentElt& c, const HeckeVec& x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(c, x[i]);
}

bool is_zero(const HeckeVec& h) {
  return std::all_of(h.begin(), h.end(), [](const LaurentElt& c) { return c.is_zero(); });
}

// ---- HeckeAlgebra ----

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const CoxeterGroup> group, WeightFunction L)
    : group_(std::move(group)), L_(std::move(L)) {
  if (L_.n != group_->rank()) throw UsageError("weight function rank does not match the group");
  for (int g : group_->gens()) {
    const GammaVec& w = L_.of_gen(g);
    if (w.sign() <= 0) throw UsageError("weights must be positive");
    v_.push_back(LaurentElt::monomial(w));
    vinv_.push_back(LaurentElt::monomial(-w));
    vdiff_.push_back(v_.back() - vinv_.back());
  }
}

GammaVec HeckeAlgebra::weight_of(int w) const {
  GammaVec g(gdim());
  for (int k : group_->reduced_word(w)) g = g + L_.of_gen(group_->gens()[k]);
  return g;
}

HeckeVec HeckeAlgebra::basis(int w) const {
  HeckeVec h = zero();
  h[w] = one();
  return h;
}

HeckeVec HeckeAlgebra::left_T(int k, const HeckeVec& h) const {
  HeckeVec out = zero();
  const CoxeterGroup& G = *group_;
  for (int w = 0; w < size(); ++w) {
    if (h[w].is_zero()) continue;
    int sw = G.lmul(k, w);
    out[sw] += h[w];
    if (G.len(sw) < G.len(w)) out[w].add_product(vdiff_[k], h[w]);
  }
  return out;
}

HeckeVec HeckeAlgebra::right_T(const HeckeVec& h, int k) const {
  HeckeVec out = zero();
  const CoxeterGroup& G = *group_;
  for (int w = 0; w < size(); ++w) {
    if (h[w].is_zero()) continue;
    int ws = G.rmul(k, w);
    out[ws] += h[w];
    if (G.len(ws) < G.len(w)) out[w].add_product(vdiff_[k], h[w]);
  }
  return out;
}

HeckeVec HeckeAlgebra::T_times(int u, const HeckeVec& h) const {
  HeckeVec r = h;
  const auto& word = group_->reduced_word(u);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = left_T(*it, r);
  return r;
}

HeckeVec HeckeAlgebra::times_T(const HeckeVec& h, int u) const {
  HeckeVec r = h;
  for (int k : group_->reduced_word(u)) r = right_T(r, k);
  return r;
}

HeckeVec HeckeAlgebra::mul(const HeckeVec& a, const HeckeVec& b) const {
  HeckeVec out = zero();
  for (int u = 0; u < size(); ++u)
    if (!a[u].is_zero()) axpy(out, a[u], T_times(u, b));
  return out;
}

const HeckeVec& HeckeAlgebra::bar_T(int w) const {
  std::call_once(bar_once_, [this] {
    bar_T_.assign(size(), {});
    bar_T_[0] = basis(0);
    for (int y = 1; y < size(); ++y) {
      int k = group_->reduced_word(y).back();
      const HeckeVec& prev = bar_T_[group_->rmul(k, y)];
      HeckeVec r = right_T(prev, k);
      axpy(r, -vdiff_[k], prev);
      bar_T_[y] = std::move(r);
    }
  });
  return bar_T_[w];
}

HeckeVec HeckeAlgebra::bar(const HeckeVec& h) const {
  HeckeVec out = zero();
  for (int y = 0; y < size(); ++y)
    if (!h[y].is_zero()) axpy(out, hecke::bar(h[y]), bar_T(y));
  return out;
}

// ---- HTensor ----

LaurentElt HTensor::get(int x, int y, int z) const {
  const LaurentElt* p = find_in_row(row(x, y), z);
  return p ? *p : LaurentElt();
}

// ---- KLContext ----

KLContext::KLContext(std::shared_ptr<const CoxeterGroup> group, WeightFunction L) : alg_(std::move(group), std::move(L)) {
  build_cprime();
  build_cells();
}

std::shared_ptr<const KLContext> KLContext::type_b(int n, const WeightFunction& L) {
  return std::make_shared<const KLContext>(CoxeterGroup::type_b(n), L);
}

namespace {

// bar-invariant M with q - M in A_{<0}
LaurentElt symmetric_head(const LaurentElt& q) {
  LaurentElt pos = positive_part(q);
  LaurentElt M = pos + hecke::bar(pos);
  if (q.dim()) M += LaurentElt::constant(q.coeff(GammaVec(q.dim())), q.dim());
  return M;
}

}  // namespace

SparseRow KLContext::mu_column_uncached(int k, int y, HeckeVec* result) const {
  const CoxeterGroup& G = group();
  int sy = G.lmul(k, y);
  if (G.len(sy) < G.len(y)) throw UsageError("mu_column: requires sy > y");
  HeckeVec X = alg_.left_T(k, cprime_[y]);
  axpy(X, alg_.v_inv(k), cprime_[y]);
  SparseRow col;
  for (int z = sy - 1; z >= 0; --z) {
    if (X[z].is_zero() || G.len(z) >= G.len(sy)) continue;
    bool descent = G.len(G.lmul(k, z)) < G.len(z);
    if (!descent) {
      if (!in_A_lt0(X[z])) throw std::logic_error("KL recursion: coefficient outside A_<0 at a non-descent");
      continue;
    }
    LaurentElt M = symmetric_head(X[z]);
    if (M.is_zero()) continue;
    axpy(X, -M, cprime_[z]);
    col.emplace_back(z, std::move(M));
  }
  std::reverse(col.begin(), col.end());
  if (result) *result = std::move(X);
  return col;
}

void KLContext::build_cprime() {
  const CoxeterGroup& G = group();
  int N = size();
  cprime_.assign(N, {});
  support_.assign(N, {});
  cprime_[0] = alg_.basis(0);
  for (int w = 1; w < N; ++w) {
    int k = 0;
    while (G.len(G.lmul(k, w)) > G.len(w)) ++k;
    int y = G.lmul(k, w);
    HeckeVec X;
    SparseRow col = mu_column_uncached(k, y, &X);
    if (!(X[w] == alg_.one())) throw std::logic_error("KL recursion: leading coefficient is not 1");
    for (int z = 0; z < N; ++z)
      if (z != w && !in_A_lt0(X[z])) throw std::logic_error("KL recursion: degree bound violated");
    cprime_[w] = std::move(X);
    std::lock_guard<std::mutex> lock(mu_mutex_);
    mu_cache_[{k, y}] = std::move(col);
  }
  for (int w = 0; w < N; ++w)
    for (int y = 0; y <= w; ++y)
      if (!cprime_[w][y].is_zero()) support_[w].emplace_back(y, cprime_[w][y]);
}

SparseRow KLContext::mu_column(int k, int y) const {
  {
    std::lock_guard<std::mutex> lock(mu_mutex_);
    auto it = mu_cache_.find({k, y});
    if (it != mu_cache_.end()) return it->second;
  }
  SparseRow col = mu_column_uncached(k, y, nullptr);
  std::lock_guard<std::mutex> lock(mu_mutex_);
  return mu_cache_.emplace(std::make_pair(k, y), std::move(col)).first->second;
}

LaurentElt KLContext::mu(int k, int z, int y) const {
  const CoxeterGroup& G = group();
  bool ok = G.len(G.lmul(k, z)) < G.len(z) && G.bruhat(z, y) && z != y && G.len(G.lmul(k, y)) > G.len(y);
  if (!ok) throw UsageError("mu: requires sz < z < y < sy");
  SparseRow col = mu_column(k, y);
  const LaurentElt* p = find_in_row(col, z);
  return p ? *p : LaurentElt::zero(gdim());
}

HeckeVec KLContext::c_basis(int w) const {
  HeckeVec h = alg_.zero();
  for (const auto& [y, p] : support_[w]) {
    LaurentElt c = hecke::bar(p);
    h[y] = eps(y) * eps(w) > 0 ? c : -c;
  }
  return h;
}

HeckeVec KLContext::d_basis(int y) const {
  const CoxeterGroup& G = group();
  int w0 = G.longest();
  HeckeVec h = alg_.zero();
  int yw0 = G.mul(y, w0);
  for (int w = 0; w < size(); ++w) {
    if (!G.bruhat(y, w)) continue;
    h[w] = hecke::bar(pstar(G.mul(w, w0), yw0));
  }
  return h;
}

SparseRow KLContext::to_cprime(HeckeVec t) const {
  SparseRow out;
  for (int w = size() - 1; w >= 0; --w) {
    if (t[w].is_zero()) continue;
    LaurentElt c = t[w];
    for (const auto& [y, p] : support_[w]) t[y].add_product(-c, p);
    out.emplace_back(w, std::move(c));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SparseRow KLContext::to_c(HeckeVec t) const {
  SparseRow out;
  for (int w = size() - 1; w >= 0; --w) {
    if (t[w].is_zero()) continue;
    LaurentElt c = t[w];
    for (const auto& [y, p] : support_[w]) {
      LaurentElt q = hecke::bar(p);
      if (eps(y) * eps(w) < 0) q = -q;
      t[y].add_product(-c, q);
    }
    out.emplace_back(w, std::move(c));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SparseRow KLContext::left_gen_product(int k, int y) const {
  HeckeVec X = alg_.left_T(k, cprime_[y]);
  axpy(X, alg_.v_inv(k), cprime_[y]);
  return to_cprime(std::move(X));
}

SparseRow KLContext::right_gen_product(int y, int k) const {
  HeckeVec X = alg_.right_T(cprime_[y], k);
  axpy(X, alg_.v_inv(k), cprime_[y]);
  return to_cprime(std::move(X));
}

SparseRow KLContext::product_row(int x, int y) const { return to_cprime(alg_.mul(cprime_[x], cprime_[y])); }

const HTensor& KLContext::h_tensor() const {
  std::call_once(h_once_, [this] { h_ = std::make_unique<HTensor>(compute_h_tensor(*this)); });
  return *h_;
}

bool KLContext::has_h_tensor() const { return h_ != nullptr; }

LaurentElt KLContext::h(int x, int y, int z) const { return h_tensor().get(x, y, z); }

CellPartition cells_from_edges(const std::vector<std::vector<int>>& edges, std::vector<std::vector<char>>* reach_out) {
  int N = static_cast<int>(edges.size());
  // reach[y][z]: z <= y
  std::vector<std::vector<char>> reach(N, std::vector<char>(N, 0));
  for (int y = 0; y < N; ++y) {
    std::vector<int> stack{y};
    reach[y][y] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int z : edges[u])
        if (!reach[y][z]) {
          reach[y][z] = 1;
          stack.push_back(z);
        }
    }
  }
  CellPartition P;
  P.cell_of.assign(N, -1);
  for (int x = 0; x < N; ++x) {
    if (P.cell_of[x] >= 0) continue;
    int id = static_cast<int>(P.cells.size());
    P.cells.push_back({});
    for (int y = x; y < N; ++y)
      if (reach[x][y] && reach[y][x]) {
        P.cell_of[y] = id;
        P.cells[id].push_back(y);
      }
  }
  int C = static_cast<int>(P.cells.size());
  P.leq.assign(C, std::vector<char>(C, 0));
  for (int c = 0; c < C; ++c)
    for (int d = 0; d < C; ++d) P.leq[c][d] = reach[P.cells[d][0]][P.cells[c][0]];
  if (reach_out) *reach_out = std::move(reach);
  return P;
}

void KLContext::build_cells() {
  int N = size();
  left_edges_.assign(N, {});
  right_edges_.assign(N, {});
  for (int y = 0; y < N; ++y)
    for (int k = 0; k < group().num_gens(); ++k) {
      for (const auto& [z, c] : left_gen_product(k, y)) left_edges_[y].push_back(z);
      for (const auto& [z, c] : right_gen_product(y, k)) right_edges_[y].push_back(z);
    }
  std::vector<std::vector<int>> both(N);
  for (int y = 0; y < N; ++y) {
    for (auto* e : {&left_edges_, &right_edges_}) {
      auto& v = (*e)[y];
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    std::set_union(left_edges_[y].begin(), left_edges_[y].end(), right_edges_[y].begin(), right_edges_[y].end(),
                   std::back_inserter(both[y]));
  }
  cells_[0] = cells_from_edges(left_edges_, &reach_[0]);
  cells_[1] = cells_from_edges(right_edges_, &reach_[1]);
  cells_[2] = cells_from_edges(both, &reach_[2]);
}

const CellPartition& KLContext::cells(Side side) const { return cells_[static_cast<int>(side)]; }

bool KLContext::preceq(Side side, int z, int y) const { return reach_[static_cast<int>(side)][y][z] != 0; }

LaurentElt KLContext::cell_character_C(const std::vector<int>& cell, int w) const {
  LaurentElt sum = LaurentElt::zero(gdim());
  for (int x : cell) {
    if (has_h_tensor()) {
      sum += h_->get(w, x, x);
    } else {
      SparseRow r = product_row(w, x);
      if (const LaurentElt* p = find_in_row(r, x)) sum += *p;
    }
  }
  return eps(w) > 0 ? sum : -sum;
}

LaurentElt KLContext::cell_character_T(const std::vector<int>& cell, int w) const {
  LaurentElt sum = LaurentElt::zero(gdim());
  for (const auto& [y, c] : to_c(alg_.basis(w))) sum.add_product(c, cell_character_C(cell, y));
  return sum;
}

}  // namespace hecke
