#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace oracle {

Poly add(const Poly& a, const Poly& b, long long sign) {
  Poly r = a;
  for (const auto& [e, c] : b) {
    long long& x = r[e];
    x += sign * c;
    if (!x) r.erase(e);
  }
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) {
      Exp e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      long long& x = r[e];
      x += c1 * c2;
      if (!x) r.erase(e);
    }
  return r;
}

Poly bar(const Poly& a) {
  Poly r;
  for (const auto& [e, c] : a) {
    Exp m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = -e[i];
    r[m] = c;
  }
  return r;
}

Poly mono(const Exp& e, long long c) { return c ? Poly{{e, c}} : Poly{}; }
bool is_zero(const Poly& a) { return a.empty(); }
Exp lowest(const Poly& a) { return a.begin()->first; }
Exp highest(const Poly& a) { return a.rbegin()->first; }

std::string text(const Poly& a) {
  std::string s;
  for (const auto& [e, c] : a) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    s += ")";
  }
  return s.empty() ? "0" : s;
}

namespace {

bool negative(const Exp& e) {
  for (int x : e)
    if (x) return x < 0;
  return false;
}

Exp neg(const Exp& e) {
  Exp r(e);
  for (int& x : r) x = -x;
  return r;
}

Exp plus(const Exp& a, const Exp& b) {
  Exp r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// right action on positions: t negates position 1, s_i swaps positions i, i+1
Window right_gen(Window w, int g) {
  if (g == 0) w[0] = -w[0];
  else std::swap(w[g - 1], w[g]);
  return w;
}

// left action on values
Window left_gen(Window w, int g) {
  for (int& x : w) {
    int m = x < 0 ? -x : x, s = x < 0 ? -1 : 1;
    if (g == 0) {
      if (m == 1) x = -x;
    } else if (m == g) {
      x = s * (g + 1);
    } else if (m == g + 1) {
      x = s * g;
    }
  }
  return w;
}

}  // namespace

Group make_group(int n, const Exp& b, const Exp& a) {
  Group G;
  G.n = n;
  Window id(n);
  for (int i = 0; i < n; ++i) id[i] = i + 1;
  G.elems.push_back(id);
  G.index[id] = 0;
  G.len.push_back(0);
  G.weight.push_back(Exp(b.size(), 0));
  for (std::size_t i = 0; i < G.elems.size(); ++i)
    for (int g = 0; g < n; ++g) {
      Window y = right_gen(G.elems[i], g);
      if (G.index.count(y)) continue;
      G.index[y] = static_cast<int>(G.elems.size());
      G.elems.push_back(y);
      G.len.push_back(G.len[i] + 1);
      G.weight.push_back(plus(G.weight[i], g == 0 ? b : a));
    }
  int N = static_cast<int>(G.elems.size());
  G.right.assign(n, std::vector<int>(N));
  G.left.assign(n, std::vector<int>(N));
  G.inverse.assign(N, 0);
  for (int w = 0; w < N; ++w) {
    for (int g = 0; g < n; ++g) {
      G.right[g][w] = G.index.at(right_gen(G.elems[w], g));
      G.left[g][w] = G.index.at(left_gen(G.elems[w], g));
    }
    Window inv(n);
    for (int i = 0; i < n; ++i) {
      int x = G.elems[w][i];
      inv[(x < 0 ? -x : x) - 1] = x < 0 ? -(i + 1) : i + 1;
    }
    G.inverse[w] = G.index.at(inv);
  }
  return G;
}

Hecke::Hecke(int n, Exp b_, Exp a_) : G(make_group(n, b_, a_)), b(std::move(b_)), a(std::move(a_)) {
  for (int g = 0; g < n; ++g) {
    const Exp& L = g == 0 ? b : a;
    vdiff.push_back(add(mono(L), mono(neg(L)), -1));
  }
}

Hecke::Vec Hecke::basis(int w) const {
  Vec v(G.elems.size());
  v[w] = mono(Exp(b.size(), 0));
  return v;
}

Hecke::Vec Hecke::left_T(int g, const Vec& h) const {
  Vec out(h.size());
  for (std::size_t w = 0; w < h.size(); ++w) {
    if (h[w].empty()) continue;
    int sw = G.left[g][w];
    out[sw] = add(out[sw], h[w]);
    if (G.len[sw] < G.len[w]) out[w] = add(out[w], oracle::mul(vdiff[g], h[w]));
  }
  return out;
}

Hecke::Vec Hecke::right_T(const Vec& h, int g) const {
  Vec out(h.size());
  for (std::size_t w = 0; w < h.size(); ++w) {
    if (h[w].empty()) continue;
    int ws = G.right[g][w];
    out[ws] = add(out[ws], h[w]);
    if (G.len[ws] < G.len[w]) out[w] = add(out[w], oracle::mul(vdiff[g], h[w]));
  }
  return out;
}

std::vector<Hecke::Vec> Hecke::all_T_times(const Vec& y) const {
  int N = static_cast<int>(G.elems.size());
  // T_u y for every u, built along the BFS tree (u = s u' by values)
  std::vector<Vec> Ty(N);
  std::vector<char> done(N, 0);
  Ty[0] = y;
  done[0] = 1;
  std::deque<int> q{0};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int g = 0; g < G.n; ++g) {
      int su = G.left[g][u];
      if (done[su] || G.len[su] < G.len[u]) continue;
      Ty[su] = left_T(g, Ty[u]);
      done[su] = 1;
      q.push_back(su);
    }
  }
  return Ty;
}

Hecke::Vec Hecke::combine(const Vec& x, const std::vector<Vec>& Ty) const {
  int N = static_cast<int>(G.elems.size());
  Vec out(N);
  for (int u = 0; u < N; ++u) {
    if (x[u].empty()) continue;
    for (int w = 0; w < N; ++w)
      if (!Ty[u][w].empty()) out[w] = add(out[w], oracle::mul(x[u], Ty[u][w]));
  }
  return out;
}

Hecke::Vec Hecke::mul(const Vec& x, const Vec& y) const { return combine(x, all_T_times(y)); }

Hecke::Vec Hecke::bar_vec(const Vec& h) const {
  int N = static_cast<int>(G.elems.size());
  // bar(T_w) = bar(T_{w'}) T_s^{-1} for w = w's > w', T_s^{-1} = T_s - vdiff
  std::vector<Vec> bT(N);
  bT[0] = basis(0);
  for (int w = 1; w < N; ++w) {
    int g = 0;
    while (G.len[G.right[g][w]] > G.len[w]) ++g;
    int wp = G.right[g][w];
    Vec x = right_T(bT[wp], g);
    for (int z = 0; z < N; ++z)
      if (!bT[wp][z].empty()) x[z] = add(x[z], oracle::mul(vdiff[g], bT[wp][z]), -1);
    bT[w] = std::move(x);
  }
  Vec out(N);
  for (int w = 0; w < N; ++w) {
    if (h[w].empty()) continue;
    Poly c = bar(h[w]);
    for (int z = 0; z < N; ++z)
      if (!bT[w][z].empty()) out[z] = add(out[z], oracle::mul(c, bT[w][z]));
  }
  return out;
}

KL::KL(int n, Exp b, Exp a, bool with_h) : H(n, std::move(b), std::move(a)) {
  int N = this->N();
  const Group& G = H.G;
  // R[z] = bar(T_z) in T coordinates
  std::vector<Hecke::Vec> R(N);
  for (int z = 0; z < N; ++z) R[z] = H.bar_vec(H.basis(z));
  std::vector<int> order(N);
  for (int i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return G.len[p] > G.len[q]; });
  cprime.assign(N, Hecke::Vec(N));
  for (int w = 0; w < N; ++w) {
    Hecke::Vec& p = cprime[w];
    p[w] = mono(Exp(H.b.size(), 0));
    // p_y - bar(p_y) = sum_{l(z) > l(y)} bar(p_z) R[z]_y, and p_y lies in A_{<0}
    for (int y : order) {
      if (y == w || G.len[y] >= G.len[w]) continue;
      Poly q;
      for (int z = 0; z < N; ++z)
        if (G.len[z] > G.len[y] && !p[z].empty() && !R[z][y].empty()) q = add(q, mul(bar(p[z]), R[z][y]));
      Poly py;
      for (const auto& [e, c] : q)
        if (negative(e)) py[e] = c;
      // consistency: q must be anti-invariant
      if (add(q, add(py, bar(py), -1), -1).size()) throw std::logic_error("oracle: bar condition not solvable");
      p[y] = py;
    }
  }
  if (!with_h) return;
  h.assign(N, std::vector<std::map<int, Poly>>(N));
  for (int y = 0; y < N; ++y) {
    auto Ty = H.all_T_times(cprime[y]);
    for (int x = 0; x < N; ++x) h[x][y] = to_cprime(H.combine(cprime[x], Ty));
  }
}

std::map<int, Poly> KL::to_cprime(Hecke::Vec t) const {
  std::map<int, Poly> out;
  const Group& G = H.G;
  int N = this->N();
  while (true) {
    int top = -1;
    for (int w = 0; w < N; ++w)
      if (!t[w].empty() && (top < 0 || G.len[w] > G.len[top])) top = w;
    if (top < 0) break;
    Poly c = t[top];
    out[top] = c;
    for (int y = 0; y < N; ++y)
      if (!cprime[top][y].empty()) t[y] = add(t[y], mul(c, cprime[top][y]), -1);
  }
  return out;
}

Exp KL::a_value(int z) const {
  Exp best(H.b.size(), 0);
  for (int x = 0; x < N(); ++x)
    for (int y = 0; y < N(); ++y) {
      auto it = h[x][y].find(z);
      if (it == h[x][y].end()) continue;
      Exp m = neg(lowest(it->second));
      if (best < m) best = m;
    }
  return best;
}

namespace {

std::set<std::set<Window>> classes(int N, const std::function<bool(int, int)>& edge, const Group& G) {
  // reach[y][z]: z reachable from y
  std::vector<std::vector<char>> reach(N, std::vector<char>(N, 0));
  for (int y = 0; y < N; ++y) {
    std::vector<int> stack{y};
    reach[y][y] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int z = 0; z < N; ++z)
        if (!reach[y][z] && edge(u, z)) {
          reach[y][z] = 1;
          stack.push_back(z);
        }
    }
  }
  std::set<std::set<Window>> out;
  for (int y = 0; y < N; ++y) {
    std::set<Window> c;
    for (int z = 0; z < N; ++z)
      if (reach[y][z] && reach[z][y]) c.insert(G.elems[z]);
    out.insert(c);
  }
  return out;
}

}  // namespace

std::set<std::set<Window>> KL::left_cells() const {
  int n = N();
  std::vector<std::vector<char>> e(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const auto& [z, c] : h[x][y]) e[y][z] = 1;
  return classes(n, [&](int y, int z) { return e[y][z] != 0; }, H.G);
}

std::set<std::set<Window>> KL::right_cells() const {
  int n = N();
  std::vector<std::vector<char>> e(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const auto& [z, c] : h[x][y]) e[x][z] = 1;
  return classes(n, [&](int x, int z) { return e[x][z] != 0; }, H.G);
}

}  // namespace oracle
