#include "hecke/signedperm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace hecke {

SignedPerm::SignedPerm(std::vector<int> window) : w_(std::move(window)) {
  int n = rank();
  std::vector<char> seen(n + 1, 0);
  for (int x : w_) {
    int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) throw MalformedError("not a signed permutation window");
    seen[a] = 1;
  }
}

SignedPerm SignedPerm::identity(int n) {
  if (n < 1) throw UsageError("rank must be >= 1");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::generator(int n, int g) { return identity(n).right_mul_gen(g); }

SignedPerm SignedPerm::right_mul_gen(int g) const {
  if (g < 0 || g >= rank()) throw UsageError("generator index out of range");
  SignedPerm r = *this;
  if (g == 0)
    r.w_[0] = -r.w_[0];
  else
    std::swap(r.w_[g - 1], r.w_[g]);
  return r;
}

SignedPerm SignedPerm::left_mul_gen(int g) const {
  if (g < 0 || g >= rank()) throw UsageError("generator index out of range");
  SignedPerm r = *this;
  for (int& x : r.w_) {
    int a = std::abs(x), s = x < 0 ? -1 : 1;
    if (g == 0) {
      if (a == 1) x = -x;
    } else if (a == g) {
      x = s * (g + 1);
    } else if (a == g + 1) {
      x = s * g;
    }
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

SignedPerm mul(const SignedPerm& x, const SignedPerm& y) {
  if (x.rank() != y.rank()) throw UsageError("rank mismatch");
  std::vector<int> w(x.rank());
  for (int i = 1; i <= x.rank(); ++i) w[i - 1] = x(y(i));
  return SignedPerm(std::move(w));
}

SignedPerm inv(const SignedPerm& x) {
  std::vector<int> w(x.rank());
  for (int i = 1; i <= x.rank(); ++i) {
    int v = x(i);
    w[std::abs(v) - 1] = v < 0 ? -i : i;
  }
  return SignedPerm(std::move(w));
}

int length(const SignedPerm& w) {
  int n = w.rank(), l = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i < j && w(i) > w(j)) ++l;
      if (w(i) + w(j) < 0) ++l;
    }
  return l;
}

int t_length(const SignedPerm& w) {
  int c = 0;
  for (int x : w.window()) c += x < 0;
  return c;
}

bool has_right_descent(const SignedPerm& w, int g) {
  if (g < 0 || g >= w.rank()) throw UsageError("generator index out of range");
  return g == 0 ? w(1) < 0 : w(g) > w(g + 1);
}

bool has_left_descent(const SignedPerm& w, int g) { return has_right_descent(inv(w), g); }

SignedPerm from_word(const GenWord& word, int n) {
  SignedPerm w = SignedPerm::identity(n);
  for (int g : word) w = w.right_mul_gen(g);
  return w;
}

GenWord to_reduced_word(const SignedPerm& w) {
  GenWord word;
  SignedPerm x = w;
  while (!x.is_identity()) {
    int g = 0;
    while (!has_right_descent(x, g)) ++g;
    word.push_back(g);
    x = x.right_mul_gen(g);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool bruhat_leq(const SignedPerm& x0, const SignedPerm& y0) {
  if (x0.rank() != y0.rank()) throw UsageError("rank mismatch");
  SignedPerm x = x0, y = y0;
  for (;;) {
    int lx = length(x), ly = length(y);
    if (lx > ly) return false;
    if (ly == 0) return lx == 0;
    int g = 0;
    while (!has_right_descent(y, g)) ++g;
    if (has_right_descent(x, g)) x = x.right_mul_gen(g);
    y = y.right_mul_gen(g);
  }
}

bool canonical_less(const SignedPerm& x, const SignedPerm& y) {
  int lx = length(x), ly = length(y);
  if (lx != ly) return lx < ly;
  return x.window() < y.window();
}

std::vector<SignedPerm> enumerate(int n) {
  if (n < 1) throw UsageError("rank must be >= 1");
  if (n > kMaxEnumRank) throw ResourceError("enumerate: rank " + std::to_string(n) + " exceeds the enumeration cap");
  std::vector<SignedPerm> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = p;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) w[i] = -w[i];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SignedPerm> involutions(int n) {
  std::vector<SignedPerm> out;
  for (auto& w : enumerate(n))
    if (mul(w, w).is_identity()) out.push_back(w);
  return out;
}

SignedPerm longest_element(int n, const std::vector<int>& gens) {
  SignedPerm w = SignedPerm::identity(n);
  for (bool grew = true; grew;) {
    grew = false;
    for (int g : gens)
      if (!has_right_descent(w, g)) {
        w = w.right_mul_gen(g);
        grew = true;
      }
  }
  return w;
}

SignedPerm a_element(int n, int l) {
  if (l < 0 || l > n) throw UsageError("a_element: l out of range");
  GenWord word;
  for (int k = 0; k < l; ++k) {
    for (int i = k; i >= 1; --i) word.push_back(i);
    word.push_back(0);
  }
  return from_word(word, n);
}

namespace {

bool in_young_ln(const SignedPerm& s, int l) {
  for (int i = 1; i <= s.rank(); ++i) {
    int v = s(i);
    if (v < 0 || (i <= l) != (v <= l)) return false;
  }
  return true;
}

std::vector<SignedPerm> symmetric_group(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<SignedPerm> coset_reps_Y(int n, int l) {
  std::vector<SignedPerm> out;
  for (auto& y : symmetric_group(n)) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (i != l && has_right_descent(y, i)) ok = false;
    if (ok) out.push_back(y);
  }
  return out;
}

CosetDecomposition coset_decompose(const SignedPerm& w) {
  int n = w.rank(), l = t_length(w);
  auto sn = symmetric_group(n);
  SignedPerm d = w;
  int best = length(w);
  for (auto& s : sn) {
    SignedPerm c = mul(w, s);
    int lc = length(c);
    if (lc < best) best = lc, d = c;
  }
  SignedPerm al = a_element(n, l);
  CosetDecomposition r;
  r.l = l;
  r.a_w = mul(d, inv(al));
  SignedPerm u = mul(inv(d), w);
  for (auto& b : coset_reps_Y(n, l)) {
    SignedPerm s = mul(u, b);
    if (in_young_ln(s, l)) {
      r.sigma = s;
      r.b_w = b;
      return r;
    }
  }
  throw std::logic_error("coset_decompose: no decomposition found");
}

std::string window_text(const SignedPerm& w) {
  std::string s = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.window()[i]);
  }
  return s + "]";
}

std::string word_text(const GenWord& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += word[i] == 0 ? "t" : "s" + std::to_string(word[i]);
  }
  return s;
}

SignedPerm parse_window(std::string_view text) {
  std::string t(text);
  auto a = t.find('['), b = t.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a) throw MalformedError("window must look like [2,-1,3]");
  std::vector<int> w;
  std::stringstream ss(t.substr(a + 1, b - a - 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    long v = std::strtol(item.c_str(), &end, 10);
    while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
    if (end == item.c_str() || (end && *end)) throw MalformedError("bad window entry '" + item + "'");
    w.push_back(static_cast<int>(v));
  }
  if (w.empty()) throw MalformedError("empty window");
  return SignedPerm(std::move(w));
}

GenWord parse_word(std::string_view text, int n) {
  std::stringstream ss{std::string(text)};
  std::string tok;
  GenWord word;
  while (ss >> tok) {
    int g;
    if (tok == "1" || tok == "e") continue;
    if (tok == "t" || tok == "s0") {
      g = 0;
    } else if (tok.size() >= 2 && tok[0] == 's' &&
               std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      g = std::stoi(tok.substr(1));
    } else {
      throw MalformedError("bad generator '" + tok + "'");
    }
    if (g >= n) throw UsageError("generator " + tok + " out of range for rank " + std::to_string(n));
    word.push_back(g);
  }
  return word;
}

std::uint64_t perm_code(const SignedPerm& w) {
  std::uint64_t c = 0;
  std::uint64_t base = 2 * static_cast<std::uint64_t>(w.rank()) + 1;
  for (int x : w.window()) c = c * base + static_cast<std::uint64_t>(x + w.rank());
  return c;
}

// ---- CoxeterGroup ----

std::shared_ptr<const CoxeterGroup> CoxeterGroup::type_b(int n) {
  std::vector<int> g(n);
  std::iota(g.begin(), g.end(), 0);
  return parabolic(n, std::move(g));
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::parabolic(int n, std::vector<int> gens) {
  return std::shared_ptr<const CoxeterGroup>(new CoxeterGroup(n, std::move(gens)));
}

CoxeterGroup::CoxeterGroup(int n, std::vector<int> gens) : n_(n), gens_(std::move(gens)) {
  if (n < 1) throw UsageError("rank must be >= 1");
  if (n > 5) throw ResourceError("element tables are capped at rank 5");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (int g : gens_)
    if (g < 0 || g >= n) throw UsageError("generator index out of range");

  std::vector<SignedPerm> found{SignedPerm::identity(n)};
  std::unordered_map<std::uint64_t, int> seen{{perm_code(found[0]), 0}};
  for (std::size_t i = 0; i < found.size(); ++i)
    for (int g : gens_) {
      SignedPerm y = found[i].right_mul_gen(g);
      if (seen.emplace(perm_code(y), 0).second) found.push_back(y);
    }
  std::sort(found.begin(), found.end(), canonical_less);
  elems_ = std::move(found);
  int N = size();
  for (int i = 0; i < N; ++i) index_[perm_code(elems_[i])] = i;

  len_.resize(N);
  tlen_.resize(N);
  inv_.resize(N);
  for (int i = 0; i < N; ++i) {
    len_[i] = length(elems_[i]);
    tlen_[i] = t_length(elems_[i]);
    inv_[i] = index_of(inv(elems_[i]));
  }
  int G = num_gens();
  lmul_.assign(G, std::vector<int>(N));
  rmul_.assign(G, std::vector<int>(N));
  for (int k = 0; k < G; ++k)
    for (int i = 0; i < N; ++i) {
      lmul_[k][i] = index_of(elems_[i].left_mul_gen(gens_[k]));
      rmul_[k][i] = index_of(elems_[i].right_mul_gen(gens_[k]));
    }
  words_.assign(N, {});
  for (int i = 1; i < N; ++i) {
    int k = 0;
    while (len_[rmul_[k][i]] > len_[i]) ++k;
    words_[i] = words_[rmul_[k][i]];
    words_[i].push_back(k);
  }
  bruhat_.assign(static_cast<std::size_t>(N) * N, 0);
  bruhat_[0] = 1;
  for (int y = 1; y < N; ++y) {
    int k = words_[y].back();
    int ys = rmul_[k][y];
    for (int x = 0; x < N; ++x) {
      if (len_[x] > len_[y]) break;
      int xs = rmul_[k][x];
      bool r = len_[xs] < len_[x] ? bruhat(xs, ys) : bruhat(x, ys);
      bruhat_[static_cast<std::size_t>(x) * N + y] = r;
    }
  }
}

int CoxeterGroup::index_of(const SignedPerm& w) const {
  if (w.rank() != n_) return -1;
  auto it = index_.find(perm_code(w));
  return it == index_.end() ? -1 : it->second;
}

int CoxeterGroup::mul(int i, int j) const {
  int r = i;
  for (int k : words_[j]) r = rmul_[k][r];
  return r;
}

int CoxeterGroup::gen_index(int g) const {
  for (int k = 0; k < num_gens(); ++k)
    if (gens_[k] == g) return k;
  return -1;
}

}  // namespace hecke
