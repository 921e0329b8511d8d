// The hyperoctahedral group W_n as signed permutations, with element tables
// for W_n and its standard parabolic subgroups.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hecke/ordgamma.hpp"

namespace hecke {

constexpr int kMaxEnumRank = 7;

// 0 is t, i >= 1 is s_i
using GenWord = std::vector<int>;

class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> window);
  static SignedPerm identity(int n);
  static SignedPerm generator(int n, int g);

  int rank() const { return static_cast<int>(w_.size()); }
  // 1-based, w(-i) = -w(i)
  int operator()(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }
  const std::vector<int>& window() const { return w_; }

  // positions i, i+1 swapped (s_i) or position 1 negated (t)
  SignedPerm right_mul_gen(int g) const;
  // values i, i+1 swapped (s_i) or value 1 negated (t)
  SignedPerm left_mul_gen(int g) const;
  bool is_identity() const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.w_ == b.w_; }
  friend auto operator<=>(const SignedPerm& a, const SignedPerm& b) { return a.w_ <=> b.w_; }

 private:
  std::vector<int> w_;
};

SignedPerm mul(const SignedPerm& x, const SignedPerm& y);
SignedPerm inv(const SignedPerm& x);
int length(const SignedPerm& w);
int t_length(const SignedPerm& w);
bool has_right_descent(const SignedPerm& w, int g);
bool has_left_descent(const SignedPerm& w, int g);

SignedPerm from_word(const GenWord& word, int n);
GenWord to_reduced_word(const SignedPerm& w);
bool bruhat_leq(const SignedPerm& x, const SignedPerm& y);
// canonical order: length, then window lexicographic
bool canonical_less(const SignedPerm& x, const SignedPerm& y);

std::vector<SignedPerm> enumerate(int n);
std::vector<SignedPerm> involutions(int n);
SignedPerm longest_element(int n, const std::vector<int>& gens);
SignedPerm a_element(int n, int l);

// w = a_w * a_l * sigma_w * b_w^{-1}
struct CosetDecomposition {
  SignedPerm a_w;
  int l = 0;
  SignedPerm sigma;
  SignedPerm b_w;
};
CosetDecomposition coset_decompose(const SignedPerm& w);
// Y_{l,n-l}: permutations in S_n minimal in their left coset y S_{l,n-l}
std::vector<SignedPerm> coset_reps_Y(int n, int l);

std::string window_text(const SignedPerm& w);
std::string word_text(const GenWord& word);
SignedPerm parse_window(std::string_view text);
GenWord parse_word(std::string_view text, int n);

// Indexed elements of W_n or of a standard parabolic W_I, with
// multiplication tables by the generators of I.
class CoxeterGroup {
 public:
  static std::shared_ptr<const CoxeterGroup> type_b(int n);
  static std::shared_ptr<const CoxeterGroup> parabolic(int n, std::vector<int> gens);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  bool is_full() const { return static_cast<int>(gens_.size()) == n_; }

  const SignedPerm& elem(int i) const { return elems_[i]; }
  const std::vector<SignedPerm>& elements() const { return elems_; }
  // -1 when not in the group
  int index_of(const SignedPerm& w) const;
  int identity() const { return 0; }
  int longest() const { return size() - 1; }
  int len(int i) const { return len_[i]; }
  int tlen(int i) const { return tlen_[i]; }
  int inverse(int i) const { return inv_[i]; }
  // k indexes gens()
  int lmul(int k, int i) const { return lmul_[k][i]; }
  int rmul(int k, int i) const { return rmul_[k][i]; }
  int mul(int i, int j) const;
  // word in positions of gens()
  const std::vector<int>& reduced_word(int i) const { return words_[i]; }
  bool bruhat(int x, int y) const { return bruhat_[static_cast<std::size_t>(x) * size() + y] != 0; }
  int gen_index(int g) const;

 private:
  CoxeterGroup(int n, std::vector<int> gens);

  int n_;
  std::vector<int> gens_;
  std::vector<SignedPerm> elems_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> len_, tlen_, inv_;
  std::vector<std::vector<int>> lmul_, rmul_, words_;
  std::vector<std::uint8_t> bruhat_;
};

std::uint64_t perm_code(const SignedPerm& w);

}  // namespace hecke
