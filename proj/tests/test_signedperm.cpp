#include <set>

#include "doctest.h"
#include "hecke/signedperm.hpp"
#include "oracle.hpp"

using namespace hecke;

TEST_CASE("group orders and canonical order") {
  long fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    auto ws = enumerate(n);
    CHECK(static_cast<long>(ws.size()) == (1L << n) * fact);
    CHECK(std::is_sorted(ws.begin(), ws.end(), canonical_less));
  }
}

TEST_CASE("length agrees with breadth-first distance") {
  for (int n = 1; n <= 4; ++n) {
    oracle::Group O = oracle::make_group(n, {1}, {1});
    for (std::size_t i = 0; i < O.elems.size(); ++i) {
      SignedPerm w(O.elems[i]);
      CHECK(length(w) == O.len[i]);
      GenWord word = to_reduced_word(w);
      CHECK(static_cast<int>(word.size()) == O.len[i]);
      CHECK(from_word(word, n) == w);
      int t = 0;
      for (int g : word) t += g == 0;
      CHECK(t_length(w) == t);
    }
  }
}

TEST_CASE("composition and generator actions") {
  SignedPerm x = parse_window("[2,-1,3]"), y = parse_window("[-3,1,2]");
  SignedPerm xy = mul(x, y);
  for (int i = 1; i <= 3; ++i) CHECK(xy(i) == x(y(i)));
  for (int g = 0; g < 3; ++g) {
    CHECK(x.right_mul_gen(g) == mul(x, SignedPerm::generator(3, g)));
    CHECK(x.left_mul_gen(g) == mul(SignedPerm::generator(3, g), x));
  }
  CHECK(mul(x, inv(x)).is_identity());
  CHECK(parse_window("[2,-1,3]").right_mul_gen(0) == parse_window("[-2,-1,3]"));
  CHECK(parse_window("[2,-1,3]").left_mul_gen(0) == parse_window("[2,1,3]"));
}

TEST_CASE("descents") {
  for (const auto& w : enumerate(3))
    for (int g = 0; g < 3; ++g) {
      CHECK(has_right_descent(w, g) == (length(w.right_mul_gen(g)) < length(w)));
      CHECK(has_left_descent(w, g) == (length(w.left_mul_gen(g)) < length(w)));
    }
}

TEST_CASE("Bruhat order by the subword property") {
  // u <= w iff u is a subword of a reduced word of w
  for (int n = 2; n <= 3; ++n) {
    auto ws = enumerate(n);
    for (const auto& w : ws) {
      GenWord word = to_reduced_word(w);
      std::set<std::vector<int>> below;
      std::size_t k = word.size();
      for (std::size_t mask = 0; mask < (1u << k); ++mask) {
        GenWord sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) sub.push_back(word[i]);
        below.insert(from_word(sub, n).window());
      }
      for (const auto& u : ws) CHECK(bruhat_leq(u, w) == (below.count(u.window()) > 0));
    }
  }
}

TEST_CASE("longest elements") {
  SignedPerm w0 = longest_element(3, {0, 1, 2});
  CHECK(w0 == parse_window("[-1,-2,-3]"));
  CHECK(length(w0) == 9);
  CHECK(longest_element(3, {1, 2}) == parse_window("[3,2,1]"));
  CHECK(a_element(3, 0).is_identity());
}

TEST_CASE("coset decomposition reassembles w") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : enumerate(n)) {
      CosetDecomposition d = coset_decompose(w);
      CHECK(mul(mul(mul(d.a_w, a_element(n, d.l)), d.sigma), inv(d.b_w)) == w);
      CHECK(length(w) == length(d.a_w) + length(a_element(n, d.l)) + length(d.sigma) + length(d.b_w));
    }
}

TEST_CASE("text forms") {
  CHECK(window_text(parse_window("[2,-1,3]")) == "[2,-1,3]");
  CHECK(word_text(parse_word("t s1 s2", 3)) == "t s1 s2");
  CHECK(from_word(parse_word("s1 t s1 t", 2), 2) == parse_window("[-1,-2]"));
  CHECK_THROWS(parse_window("[1,1]"));
  CHECK_THROWS(parse_word("s3", 3));
}

TEST_CASE("element tables") {
  auto G = CoxeterGroup::type_b(3);
  CHECK(G->size() == 48);
  for (int i = 0; i < G->size(); ++i) {
    CHECK(G->index_of(G->elem(i)) == i);
    CHECK(G->mul(i, G->inverse(i)) == 0);
    for (int k = 0; k < 3; ++k) {
      CHECK(G->elem(G->rmul(k, i)) == G->elem(i).right_mul_gen(k));
      CHECK(G->elem(G->lmul(k, i)) == G->elem(i).left_mul_gen(k));
    }
  }
  auto P = CoxeterGroup::parabolic(3, {1, 2});
  CHECK(P->size() == 6);
  CHECK_THROWS_AS(CoxeterGroup::type_b(6), ResourceError);
}

TEST_CASE("small known values") {
  CHECK(from_word({}, 3).is_identity());
  CHECK(from_word({0}, 2) == parse_window("[-1,2]"));
  CHECK(length(from_word({0, 1, 0, 1}, 2)) == 4);
  CHECK(t_length(parse_window("[-1,-2]")) == 2);
  for (int l = 0; l <= 3; ++l) CHECK(t_length(a_element(3, l)) == l);
  CHECK(a_element(2, 2) == from_word({0, 1, 0}, 2));
  CHECK(a_element(3, 1) == parse_window("[-1,2,3]"));
  // s1 is the middle letter of t s1 t
  CHECK(bruhat_leq(from_word({1}, 2), from_word({0, 1, 0}, 2)));
  CHECK_FALSE(bruhat_leq(from_word({1}, 2), from_word({0}, 2)));
  CHECK_FALSE(bruhat_leq(from_word({0, 1}, 2), from_word({1, 0}, 2)));
  for (const auto& x : enumerate(2)) {
    CHECK(bruhat_leq(SignedPerm::identity(2), x));
    CHECK(bruhat_leq(x, parse_window("[-1,-2]")));
    CHECK(t_length(inv(x)) == t_length(x));
  }
  CosetDecomposition d = coset_decompose(parse_window("[-1,2,3]"));
  CHECK(d.l == 1);
  CHECK(d.a_w.is_identity());
  CHECK(d.sigma.is_identity());
  CHECK(d.b_w.is_identity());
  CHECK(involutions(2).size() == 6);
  CHECK(involutions(3).size() == 20);
  CHECK(longest_element(4, {1, 2, 3}) == parse_window("[4,3,2,1]"));
}

TEST_CASE("Y a_l are the minimal left coset representatives of S_n, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<int>> minimal, built;
    for (const auto& w : enumerate(n)) {
      bool min = true;
      for (int g = 1; g < n; ++g) min = min && !has_right_descent(w, g);
      if (min) minimal.insert(w.window());
    }
    for (int l = 0; l <= n; ++l)
      for (const auto& y : coset_reps_Y(n, l)) built.insert(mul(y, a_element(n, l)).window());
    CHECK(built == minimal);
  }
}
