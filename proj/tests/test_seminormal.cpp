#include <random>

#include "doctest.h"
#include "hecke/seminormal.hpp"

using namespace hecke;

namespace {

using u64 = std::uint64_t;
constexpr u64 P = 2147483647ULL;  // 2^31 - 1
u64 mulm(u64 a, u64 b) { return a * b % P; }
u64 powm(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulm(a, a))
    if (e & 1) r = mulm(r, a);
  return r;
}
u64 invm(u64 a) { return powm(a, P - 2); }

// matrices over Z/P at a random point (V, v)
struct ModEval {
  std::vector<u64> pt;
  u64 operator()(const LaurentElt& x) const {
    u64 s = 0;
    for (const auto& t : x.terms()) {
      u64 m = (t.coef % static_cast<Coef>(P) + static_cast<Coef>(P)) % P;
      for (int i = 0; i < t.exp.dim(); ++i) {
        int e = t.exp[i];
        m = mulm(m, powm(e >= 0 ? pt[i] : invm(pt[i]), static_cast<u64>(e >= 0 ? e : -e)));
      }
      s = (s + m) % P;
    }
    return s;
  }
  u64 operator()(const RatioElt& r) const { return mulm((*this)(r.num()), invm((*this)(r.den()))); }
};

using Mat = std::vector<std::vector<u64>>;

Mat mmul(const Mat& a, const Mat& b) {
  std::size_t d = a.size();
  Mat c(d, std::vector<u64>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] = (c[i][j] + mulm(a[i][k], b[k][j])) % P;
  return c;
}

Mat lin(const Mat& a, u64 x, const Mat& b, u64 y) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = (mulm(a[i][j], x) + mulm(b[i][j], y)) % P;
  return c;
}

Mat eye(std::size_t d) {
  Mat m(d, std::vector<u64>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Mat eval(const SeminormalRep& R, const FracMatrix& m, const ModEval& ev) {
  Mat out(R.dim(), std::vector<u64>(R.dim()));
  for (int i = 0; i < R.dim(); ++i)
    for (int j = 0; j < R.dim(); ++j) out[i][j] = ev(R.entry(m, i, j));
  return out;
}

RatioElt ratio(const char* num, const char* den) { return RatioElt(parse_laurent(num, 2), parse_laurent(den, 2)); }

int idx(const CoxeterGroup& G, const char* word) { return G.index_of(from_word(parse_word(word, G.rank()), G.rank())); }

}  // namespace

TEST_CASE("B2 two-dimensional representation has the reference matrices exactly") {
  SeminormalRep R({{1}, {1}}, WeightFunction::generic(2));
  REQUIRE(R.dim() == 2);
  const FracMatrix &t = R.gen(0), &s = R.gen(1);
  CHECK(R.entry(t, 0, 0) == ratio("V", "1"));
  CHECK(R.entry(t, 0, 1) == ratio("0", "1"));
  CHECK(R.entry(t, 1, 0) == ratio("0", "1"));
  CHECK(R.entry(t, 1, 1) == ratio("-V^-1", "1"));
  CHECK(R.entry(s, 0, 0) == ratio("v - v^-1", "V^2 + 1"));
  CHECK(R.entry(s, 0, 1) == ratio("1 + V^2*v^-2", "V^2 + 1"));
  CHECK(R.entry(s, 1, 0) == ratio("1 + V^2*v^2", "V^2 + 1"));
  CHECK(R.entry(s, 1, 1) == ratio("V^2*v - V^2*v^-1", "V^2 + 1"));
}

TEST_CASE("one-dimensional representations") {
  for (int n = 1; n <= 3; ++n) {
    auto L = WeightFunction::generic(n);
    SeminormalRep idx_rep({{n}, {}}, L), sgn({{}, Partition(n, 1)}, L);
    for (int g = 0; g < n; ++g) {
      CHECK(idx_rep.entry(idx_rep.gen(g), 0, 0) == RatioElt(g == 0 ? parse_laurent("V", 2) : parse_laurent("v", 2)));
      CHECK(sgn.entry(sgn.gen(g), 0, 0) == RatioElt(g == 0 ? parse_laurent("-V^-1", 2) : parse_laurent("-v^-1", 2)));
    }
  }
}

TEST_CASE("alpha invariants") {
  auto L = WeightFunction::generic(2);
  CHECK(alpha_invariant({{2}, {}}, L) == GammaVec{0, 0});
  CHECK(alpha_invariant({{1}, {1}}, L) == GammaVec{1, 0});
  CHECK(alpha_invariant({{}, {1, 1}}, L) == GammaVec{2, 2});
}

TEST_CASE("relations hold at a random point, n <= 3") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> pick(2, P - 2);
  for (int n = 1; n <= 3; ++n) {
    auto L = WeightFunction::generic(n);
    for (const auto& lam : bipartitions(n)) {
      SeminormalRep R(lam, L);
      ModEval ev{{pick(rng), pick(rng)}};
      u64 V = ev.pt[0], v = ev.pt[1];
      std::vector<Mat> X;
      for (int g = 0; g < n; ++g) X.push_back(eval(R, R.gen(g), ev));
      auto I = eye(R.dim());
      for (int g = 0; g < n; ++g) {
        u64 q = g == 0 ? V : v;
        // (X - q)(X + q^-1) = 0
        Mat a = lin(X[g], 1, I, P - q), b = lin(X[g], 1, I, invm(q));
        CHECK(mmul(a, b) == lin(I, 0, I, 0));
      }
      if (n >= 2) CHECK(mmul(mmul(mmul(X[0], X[1]), X[0]), X[1]) == mmul(mmul(mmul(X[1], X[0]), X[1]), X[0]));
      for (int g = 1; g + 1 < n; ++g)
        CHECK(mmul(mmul(X[g], X[g + 1]), X[g]) == mmul(mmul(X[g + 1], X[g]), X[g + 1]));
      for (int g = 0; g < n; ++g)
        for (int h = g + 2; h < n; ++h) CHECK(mmul(X[g], X[h]) == mmul(X[h], X[g]));
    }
  }
}

TEST_CASE("Gram matrix makes the generators symmetric") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& lam : bipartitions(n)) {
      SeminormalRep R(lam, WeightFunction::generic(n));
      CHECK(R.gram_problems().empty());
      const auto& p = R.gram();
      for (int g = 0; g < n; ++g)
        for (int i = 0; i < R.dim(); ++i)
          for (int j = 0; j < R.dim(); ++j) CHECK(R.entry(R.gen(g), i, j) * p[i] == R.entry(R.gen(g), j, i) * p[j]);
    }
}

TEST_CASE("Schur elements have valuation 1 * e^{-2 alpha}") {
  for (int n = 1; n <= 3; ++n) {
    auto L = WeightFunction::generic(n);
    auto G = CoxeterGroup::type_b(n);
    for (const auto& lam : bipartitions(n)) {
      SeminormalRep R(lam, L);
      Valuation v = valuation(schur_element(R, R.all_T(*G), *G));
      CHECK(v.r == Rational(1));
      CHECK(*v.gamma == -alpha_invariant(lam, L).scaled(2));
    }
  }
  auto G1 = CoxeterGroup::type_b(1);
  SeminormalRep R1({{1}, {}}, WeightFunction::generic(1));
  CHECK(schur_element(R1, R1.all_T(*G1), *G1) == RatioElt(parse_laurent("1 + V^2", 2)));
}

TEST_CASE("B2 leading coefficients") {
  auto G = CoxeterGroup::type_b(2);
  LeadingCoeffTable T(G, WeightFunction::generic(2));
  CHECK(T.problems().empty());
  int li = T.lambda_index({{1}, {1}});
  CHECK(T.c(idx(*G, "t"), li, 1, 1) == 1);
  CHECK(T.c(idx(*G, "s1 t s1"), li, 0, 0) == 1);
  CHECK(T.c(idx(*G, "t s1"), li, 1, 0) == -1);
  CHECK(T.c(idx(*G, "s1 t"), li, 0, 1) == -1);
  CHECK(T.w_of(li, 0, 0) == idx(*G, "s1 t s1"));
  CHECK(T.w_of(li, 0, 1) == idx(*G, "s1 t"));
  CHECK(T.w_of(li, 1, 0) == idx(*G, "t s1"));
  CHECK(T.w_of(li, 1, 1) == idx(*G, "t"));
  CHECK(T.star(T.w_of(li, 1, 0), T.w_of(li, 0, 1)) == T.w_of(li, 1, 1));
  CHECK_FALSE(T.star(idx(*G, ""), idx(*G, "t")).has_value());
  for (int y = 0; y < G->size(); ++y)
    for (int w = 0; w < G->size(); ++w) CHECK(T.second_orthogonality_check(y, w));
}

TEST_CASE("leading coefficient structure, n = 3") {
  auto G = CoxeterGroup::type_b(3);
  LeadingCoeffTable T(G, WeightFunction::generic(3));
  CHECK(T.problems().empty());
  long total = 0;
  for (int li = 0; li < T.num_lambdas(); ++li) {
    total += static_cast<long>(T.t_set(li).size());
    for (int mi = 0; mi < T.num_lambdas(); ++mi) CHECK(T.schur_relations_check(li, mi));
    for (int i = 0; i < T.dim(li); ++i)
      for (int j = 0; j < T.dim(li); ++j) {
        int w = T.w_of(li, i, j);
        REQUIRE(w >= 0);
        CHECK(T.w_of(li, j, i) == G->inverse(w));
        CHECK(T.c(w, li, i, j) == T.c(G->inverse(w), li, j, i));
        int nz = 0;
        for (int u = 0; u < G->size(); ++u) {
          int c = T.c(u, li, i, j);
          CHECK((c == 0 || c == 1 || c == -1));
          nz += c != 0;
        }
        CHECK(nz == 1);
      }
  }
  CHECK(total == 48);
  for (int w = 0; w < G->size(); ++w) {
    auto [li, i, j] = T.cell_of(w);
    Bipartition rs = shape_of(G->elem(w));
    CHECK(T.lambda(li) == Bipartition{rs.first, conjugate(rs.second)});
    for (int x = 0; x < G->size(); x += 5)
      if (auto z = T.star(x, w)) {
        CHECK(T.star(w, *z) == x);
        CHECK(T.star(*z, x) == w);
        CHECK(T.n_triple(x, w, *z) == T.n_triple(w, *z, x));
      }
  }
}
