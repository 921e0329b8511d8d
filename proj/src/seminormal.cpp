#include "hecke/seminormal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hecke {

GammaVec alpha_invariant(const Bipartition& lam, const WeightFunction& L) {
  if (!L.asymptotic()) throw UsageError("alpha_invariant requires the asymptotic regime");
  int na = n_stat(lam.first) + 2 * n_stat(lam.second) - n_stat(conjugate(lam.second));
  return L.b.scaled(partition_size(lam.second)) + L.a.scaled(na);
}

namespace {

struct Cell {
  int comp, row, col;
};

std::vector<Cell> positions(const StdBitableau& t, int n) {
  std::vector<Cell> pos(n + 1);
  for (int c = 0; c < 2; ++c)
    for (std::size_t r = 0; r < t.comp(c).size(); ++r)
      for (std::size_t j = 0; j < t.comp(c)[r].size(); ++j)
        pos[t.comp(c)[r][j]] = {c, static_cast<int>(r), static_cast<int>(j)};
  return pos;
}

std::vector<int> signature(const std::vector<Cell>& pos) {
  std::vector<int> s;
  for (std::size_t k = 1; k < pos.size(); ++k) {
    s.push_back(pos[k].comp);
    s.push_back(pos[k].row);
    s.push_back(pos[k].col);
  }
  return s;
}

}  // namespace

SeminormalRep::SeminormalRep(const Bipartition& lam, const WeightFunction& L) : lam_(lam), L_(L) {
  if (!L_.asymptotic()) throw UsageError("seminormal representations require the asymptotic regime");
  if (lam_.size() != L_.n) throw UsageError("bipartition size does not match the rank");
  basis_ = enumerate_std(lam_);
  for (int i = 0; i < dim(); ++i) index_[signature(positions(basis_[i], L_.n))] = i;
  build_generators();
  build_gram();
}

int SeminormalRep::factor_index(const SignedMono& q) {
  for (std::size_t k = 0; k < factor_q_.size(); ++k)
    if (factor_q_[k].sign == q.sign && factor_q_[k].exp == q.exp) return static_cast<int>(k);
  int gd = L_.dim();
  LaurentElt f = LaurentElt::constant(1, gd) - LaurentElt::monomial(q.exp, q.sign);
  factors_.push_back(f);
  factor_q_.push_back(q);
  factor_low_.emplace_back(f.lowest().coef, f.lowest().exp);
  return static_cast<int>(factors_.size()) - 1;
}

void SeminormalRep::build_generators() {
  int n = L_.n, d = dim(), gd = L_.dim();
  std::vector<std::vector<Cell>> pos(d);
  for (int i = 0; i < d; ++i) pos[i] = positions(basis_[i], n);
  auto residue = [&](const Cell& c) {
    GammaVec e = L_.a.scaled(2 * (c.col - c.row));
    return c.comp == 0 ? SignedMono{1, e + L_.b.scaled(2)} : SignedMono{-1, e};
  };
  LaurentElt one = LaurentElt::constant(1, gd);
  LaurentElt v = LaurentElt::monomial(L_.a), vi = LaurentElt::monomial(-L_.a);
  LaurentElt v2 = LaurentElt::monomial(L_.a.scaled(2)), v2i = LaurentElt::monomial(L_.a.scaled(-2));

  // entries before common denominators: value / factor (factor -1 means none)
  struct Raw {
    int i, j;
    LaurentElt val;
    int factor;
  };
  std::vector<std::vector<Raw>> raws(n);
  LaurentElt Vt = LaurentElt::monomial(L_.b), Vti = LaurentElt::monomial(-L_.b);
  for (int i = 0; i < d; ++i) raws[0].push_back({i, i, pos[i][1].comp == 0 ? Vt : -Vti, -1});
  for (int s = 1; s < n; ++s) {
    for (int t = 0; t < d; ++t) {
      const Cell& a = pos[t][s];
      const Cell& b = pos[t][s + 1];
      if (a.comp == b.comp && a.row == b.row) {
        raws[s].push_back({t, t, v, -1});
        continue;
      }
      if (a.comp == b.comp && a.col == b.col) {
        raws[s].push_back({t, t, -vi, -1});
        continue;
      }
      std::vector<Cell> swapped = pos[t];
      std::swap(swapped[s], swapped[s + 1]);
      int tp = index_.at(signature(swapped));
      SignedMono ra = residue(a), rb = residue(b);
      SignedMono q{ra.sign * rb.sign, ra.exp - rb.exp};
      int sg = q.exp.sign();
      if (sg == 0) throw std::logic_error("seminormal: coinciding residues");
      bool star = sg > 0;
      SignedMono qs = star ? q : SignedMono{q.sign, -q.exp};
      int f = factor_index(qs);
      LaurentElt Q = LaurentElt::monomial(qs.exp, qs.sign);
      if (star) {
        raws[s].push_back({t, t, v - vi, f});
        raws[s].push_back({tp, t, one - Q * v2, f});
      } else {
        raws[s].push_back({t, t, -(Q * (v - vi)), f});
        raws[s].push_back({tp, t, one - Q * v2i, f});
      }
    }
  }
  int F = static_cast<int>(factors_.size());
  gens_.assign(n, {});
  for (int s = 0; s < n; ++s) {
    FracMatrix m;
    m.d = d;
    m.num.assign(static_cast<std::size_t>(d) * d, LaurentElt::zero(gd));
    m.pow.assign(F, 0);
    for (auto& r : raws[s])
      if (r.factor >= 0) m.pow[r.factor] = 1;
    for (auto& r : raws[s]) {
      LaurentElt val = r.val;
      for (int k = 0; k < F; ++k)
        if (m.pow[k] && k != r.factor) val = val * factors_[k];
      m.at(r.i, r.j) = val;
    }
    gens_[s] = std::move(m);
  }
}

FracMatrix SeminormalRep::identity() const {
  FracMatrix m;
  m.d = dim();
  m.num.assign(static_cast<std::size_t>(m.d) * m.d, LaurentElt::zero(L_.dim()));
  for (int i = 0; i < m.d; ++i) m.at(i, i) = LaurentElt::constant(1, L_.dim());
  m.pow.assign(factors_.size(), 0);
  return m;
}

FracMatrix SeminormalRep::mul(const FracMatrix& a, const FracMatrix& b) const {
  FracMatrix m;
  m.d = a.d;
  m.num.assign(static_cast<std::size_t>(m.d) * m.d, LaurentElt::zero(L_.dim()));
  m.pow.resize(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) m.pow[k] = a.pow[k] + b.pow[k];
  for (int i = 0; i < m.d; ++i)
    for (int k = 0; k < m.d; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < m.d; ++j) m.at(i, j).add_product(a.at(i, k), b.at(k, j));
    }
  return m;
}

FracMatrix SeminormalRep::lift(const FracMatrix& a, const std::vector<int>& pow) const {
  LaurentElt mult = LaurentElt::constant(1, L_.dim());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (pow[k] < a.pow[k]) throw std::logic_error("lift: target power too small");
    for (int e = a.pow[k]; e < pow[k]; ++e) mult = mult * factors_[k];
  }
  FracMatrix m = a;
  m.pow = pow;
  for (auto& x : m.num) x = x * mult;
  return m;
}

FracMatrix SeminormalRep::add(const FracMatrix& a, const FracMatrix& b) const {
  std::vector<int> pow(factors_.size());
  for (std::size_t k = 0; k < pow.size(); ++k) pow[k] = std::max(a.pow[k], b.pow[k]);
  FracMatrix x = lift(a, pow), y = lift(b, pow);
  for (std::size_t i = 0; i < x.num.size(); ++i) x.num[i] += y.num[i];
  return x;
}

FracMatrix SeminormalRep::scale(const FracMatrix& a, const LaurentElt& c) const {
  FracMatrix m = a;
  for (auto& x : m.num) x = x * c;
  return m;
}

bool SeminormalRep::equal(const FracMatrix& a, const FracMatrix& b) const {
  std::vector<int> pow(factors_.size());
  for (std::size_t k = 0; k < pow.size(); ++k) pow[k] = std::max(a.pow[k], b.pow[k]);
  FracMatrix x = lift(a, pow), y = lift(b, pow);
  return x.num == y.num;
}

LaurentElt SeminormalRep::den_poly(const std::vector<int>& pow) const {
  LaurentElt r = LaurentElt::constant(1, L_.dim());
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (int e = 0; e < pow[k]; ++e) r = r * factors_[k];
  return r;
}

RatioElt SeminormalRep::entry(const FracMatrix& m, int i, int j) const { return {m.at(i, j), den_poly(m.pow)}; }

Valuation SeminormalRep::entry_valuation(const FracMatrix& m, int i, int j) const {
  const LaurentElt& x = m.at(i, j);
  if (x.is_zero()) return {};
  Rational r(x.lowest().coef);
  GammaVec g = x.lowest().exp;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (int e = 0; e < m.pow[k]; ++e) {
      r /= factor_low_[k].first;
      g = g - factor_low_[k].second;
    }
  return {r, g};
}

FracMatrix SeminormalRep::of_word(const std::vector<int>& gens) const {
  FracMatrix m = identity();
  for (int g : gens) m = mul(m, gens_[g]);
  return m;
}

std::vector<FracMatrix> SeminormalRep::all_T(const CoxeterGroup& G) const {
  if (!G.is_full() || G.rank() != L_.n) throw UsageError("all_T needs the full group of matching rank");
  std::vector<FracMatrix> T(G.size());
  T[0] = identity();
  for (int w = 1; w < G.size(); ++w) {
    int k = G.reduced_word(w).back();
    T[w] = mul(T[G.rmul(k, w)], gens_[G.gens()[k]]);
  }
  return T;
}

FracMatrix SeminormalRep::of_element(const HeckeVec& h, const std::vector<FracMatrix>& T) const {
  std::vector<int> pow(factors_.size(), 0);
  for (std::size_t y = 0; y < h.size(); ++y)
    if (!h[y].is_zero())
      for (std::size_t k = 0; k < pow.size(); ++k) pow[k] = std::max(pow[k], T[y].pow[k]);
  FracMatrix m = identity();
  m.pow = pow;
  for (auto& x : m.num) x = LaurentElt::zero(L_.dim());
  for (std::size_t y = 0; y < h.size(); ++y) {
    if (h[y].is_zero()) continue;
    FracMatrix t = lift(T[y], pow);
    for (std::size_t i = 0; i < m.num.size(); ++i) m.num[i].add_product(h[y], t.num[i]);
  }
  return m;
}

void SeminormalRep::build_gram() {
  int d = dim(), gd = L_.dim();
  std::vector<char> seen(d, 0);
  gram_.assign(d, RatioElt(LaurentElt::constant(1, gd)));
  seen[0] = 1;
  std::deque<int> queue{0};
  auto check_edges = [&](int t) {
    for (int s = 1; s < L_.n; ++s) {
      const FracMatrix& m = gens_[s];
      for (int u = 0; u < d; ++u) {
        if (u == t || m.at(u, t).is_zero()) continue;
        // (O1) on T_s: X[t,u] p_t = X[u,t] p_u
        RatioElt pu = gram_[t] * RatioElt(m.at(t, u), m.at(u, t));
        if (!seen[u]) {
          seen[u] = 1;
          gram_[u] = pu;
          queue.push_back(u);
        } else if (!(gram_[u] == pu)) {
          gram_problems_.push_back("inconsistent P on edge s" + std::to_string(s) + " between basis vectors " +
                                   std::to_string(t) + " and " + std::to_string(u));
        }
      }
    }
  };
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    check_edges(t);
  }
  for (int t = 0; t < d; ++t)
    if (!seen[t]) gram_problems_.push_back("basis vector " + std::to_string(t) + " not reached");
}

RatioElt schur_element(const SeminormalRep& rep, const std::vector<FracMatrix>& T, const CoxeterGroup& G) {
  std::size_t F = rep.factors().size();
  std::vector<int> pow(F, 0);
  for (int w = 0; w < G.size(); ++w)
    for (std::size_t k = 0; k < F; ++k) pow[k] = std::max(pow[k], T[w].pow[k] + T[G.inverse(w)].pow[k]);
  LaurentElt sum = LaurentElt::zero(rep.weights().dim());
  for (int w = 0; w < G.size(); ++w) {
    const FracMatrix& a = T[w];
    const FracMatrix& b = T[G.inverse(w)];
    if (a.at(0, 0).is_zero() || b.at(0, 0).is_zero()) continue;
    std::vector<int> extra(F);
    for (std::size_t k = 0; k < F; ++k) extra[k] = pow[k] - a.pow[k] - b.pow[k];
    sum += a.at(0, 0) * b.at(0, 0) * rep.den_poly(extra);
  }
  return {sum, rep.den_poly(pow)};
}

// ---- LeadingCoeffTable ----

LeadingCoeffTable::LeadingCoeffTable(std::shared_ptr<const CoxeterGroup> G, const WeightFunction& L)
    : G_(std::move(G)), L_(L) {
  if (!G_->is_full()) throw UsageError("leading coefficients need the full group");
  lams_ = bipartitions(G_->rank());
  int N = G_->size();
  cell_of_.assign(N, {-1, -1, -1});
  std::vector<int> hits(N, 0);
  for (std::size_t li = 0; li < lams_.size(); ++li) {
    reps_.push_back(std::make_unique<SeminormalRep>(lams_[li], L_));
    const SeminormalRep& R = *reps_.back();
    T_.push_back(R.all_T(*G_));
    alpha_.push_back(alpha_invariant(lams_[li], L_));
    int d = R.dim();
    std::vector<int> c(static_cast<std::size_t>(N) * d * d, 0);
    std::vector<int> wof(static_cast<std::size_t>(d) * d, -1);
    for (int w = 0; w < N; ++w) {
      int eps = G_->len(w) % 2 ? -1 : 1;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Valuation val = R.entry_valuation(T_[li][w], i, j);
          if (val.infinite()) continue;
          GammaVec g = *val.gamma + alpha_[li];
          if (g.sign() < 0)
            throw NotInValuationRing("e^alpha X(T_w) not in O for " + bipartition_text(lams_[li]) + " at " +
                                     window_text(G_->elem(w)));
          if (g.sign() > 0) continue;
          Rational r = val.r * eps;
          if (r.denominator() != 1 || r.numerator() < -1 || r.numerator() > 1) {
            problems_.push_back("leading coefficient outside {0,1,-1} at " + window_text(G_->elem(w)));
            continue;
          }
          int cv = static_cast<int>(r.numerator());
          c[(static_cast<std::size_t>(w) * d + i) * d + j] = cv;
          int& slot = wof[static_cast<std::size_t>(i) * d + j];
          if (slot == -1) {
            slot = w;
          } else {
            slot = -2;
            problems_.push_back("several elements support (" + bipartition_text(lams_[li]) + "," +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
          }
        }
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int& w = wof[static_cast<std::size_t>(i) * d + j];
        if (w == -1)
          problems_.push_back("no element supports (" + bipartition_text(lams_[li]) + "," + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ")");
        if (w < 0) {
          w = -1;
          continue;
        }
        ++hits[w];
        cell_of_[w] = {static_cast<int>(li), i, j};
      }
    c_.push_back(std::move(c));
    w_of_.push_back(std::move(wof));
  }
  for (int w = 0; w < N; ++w)
    if (hits[w] != 1) problems_.push_back("element " + window_text(G_->elem(w)) + " labelled " + std::to_string(hits[w]) + " times");
}

int LeadingCoeffTable::lambda_index(const Bipartition& lam) const {
  for (std::size_t i = 0; i < lams_.size(); ++i)
    if (lams_[i] == lam) return static_cast<int>(i);
  return -1;
}

int LeadingCoeffTable::c(int w, int li, int i, int j) const {
  int d = dim(li);
  return c_[li][(static_cast<std::size_t>(w) * d + i) * d + j];
}

int LeadingCoeffTable::w_of(int li, int i, int j) const { return w_of_[li][static_cast<std::size_t>(i) * dim(li) + j]; }

std::tuple<int, int, int> LeadingCoeffTable::cell_of(int w) const { return cell_of_[w]; }

std::vector<int> LeadingCoeffTable::t_set(int li) const {
  std::vector<int> out;
  for (int w : w_of_[li])
    if (w >= 0) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> LeadingCoeffTable::star(int x, int y) const {
  auto [lx, i0, j0] = cell_of_[x];
  auto [ly, k0, l0] = cell_of_[y];
  if (lx < 0 || lx != ly || j0 != k0) return std::nullopt;
  int z = w_of(lx, l0, i0);
  if (z < 0) return std::nullopt;
  return z;
}

int LeadingCoeffTable::n_triple(int x, int y, int z) const {
  auto s = star(x, y);
  if (!s || *s != z) return 0;
  auto [li, i0, j0] = cell_of_[x];
  auto [ly, k0, l0] = cell_of_[y];
  (void)ly;
  (void)k0;
  return c(x, li, i0, j0) * c(y, li, j0, l0) * c(z, li, l0, i0);
}

bool LeadingCoeffTable::schur_relations_check(int li, int mi) const {
  int dl = dim(li), dm = dim(mi), N = G_->size();
  for (int i = 0; i < dl; ++i)
    for (int j = 0; j < dl; ++j)
      for (int k = 0; k < dm; ++k)
        for (int l = 0; l < dm; ++l) {
          long s = 0;
          for (int w = 0; w < N; ++w) s += c(w, li, i, j) * c(w, mi, k, l);
          long expect = (li == mi && i == k && j == l) ? 1 : 0;
          if (s != expect) return false;
        }
  return true;
}

bool LeadingCoeffTable::second_orthogonality_check(int y, int w) const {
  long s = 0;
  for (int li = 0; li < num_lambdas(); ++li)
    for (int i = 0; i < dim(li); ++i)
      for (int j = 0; j < dim(li); ++j) s += c(y, li, i, j) * c(w, li, i, j);
  return s == (y == w ? 1 : 0);
}

}  // namespace hecke
