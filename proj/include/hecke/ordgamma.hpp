// Exact arithmetic in Z[Gamma] for Gamma = Z^k under lex order, plus
// ratios with valuation data.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace hecke {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MalformedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInValuationRing : std::domain_error {
  using std::domain_error::domain_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Coef = std::int64_t;
using Rational = boost::rational<std::int64_t>;

class GammaVec {
 public:
  static constexpr int kMaxDim = 4;

  GammaVec() = default;
  explicit GammaVec(int dim);
  GammaVec(std::initializer_list<int> xs);

  int dim() const { return dim_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  bool is_zero() const;
  // sign under lex order: -1, 0, 1
  int sign() const;

  GammaVec operator+(const GammaVec& o) const;
  GammaVec operator-(const GammaVec& o) const;
  GammaVec operator-() const;
  GammaVec scaled(int k) const;

  // unchecked lex compare, both operands padded with zeros
  static int raw_cmp(const GammaVec& a, const GammaVec& b) {
    for (int i = 0; i < kMaxDim; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    return 0;
  }

 private:
  std::array<std::int32_t, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

std::strong_ordering lex_cmp(const GammaVec& a, const GammaVec& b);
inline std::strong_ordering operator<=>(const GammaVec& a, const GammaVec& b) {
  return lex_cmp(a, b);
}
inline bool operator==(const GammaVec& a, const GammaVec& b) {
  return lex_cmp(a, b) == 0;
}
GammaVec max(const GammaVec& a, const GammaVec& b);
// (a, b) as one vector of length dim(a)+dim(b)
GammaVec concat(const GammaVec& a, const GammaVec& b);
std::string to_string(const GammaVec& g);

struct Term {
  GammaVec exp;
  Coef coef;
};

class LaurentElt {
 public:
  // zero of unspecified dimension; adopts the dimension of the other operand
  LaurentElt() = default;
  static LaurentElt zero(int dim);
  static LaurentElt constant(Coef c, int dim);
  static LaurentElt monomial(const GammaVec& g, Coef c = 1);
  // sums duplicate exponents, drops zeros
  static LaurentElt from_terms(std::vector<Term> terms, int dim);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Coef coeff(const GammaVec& g) const;
  const Term& lowest() const;
  const Term& highest() const;
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentElt operator-() const;
  LaurentElt& operator+=(const LaurentElt& o);
  LaurentElt& operator-=(const LaurentElt& o);
  LaurentElt& operator*=(const LaurentElt& o);
  // this += a*b without a temporary product when either is a monomial
  void add_product(const LaurentElt& a, const LaurentElt& b);
  LaurentElt shifted(const GammaVec& g) const;
  LaurentElt scaled(Coef c) const;

  friend LaurentElt operator+(LaurentElt a, const LaurentElt& b) { return a += b; }
  friend LaurentElt operator-(LaurentElt a, const LaurentElt& b) { return a -= b; }
  friend LaurentElt operator*(const LaurentElt& a, const LaurentElt& b);
  friend bool operator==(const LaurentElt& a, const LaurentElt& b);

 private:
  void adopt_dim(const LaurentElt& o);
  void axpy(const LaurentElt& o, Coef sign);

  std::vector<Term> terms_;  // strictly increasing in lex order
  int dim_ = 0;
};

LaurentElt bar(const LaurentElt& a);
bool in_A_geq0(const LaurentElt& a);
bool in_A_gt0(const LaurentElt& a);
bool in_A_lt0(const LaurentElt& a);
// e^(g,h) basis of Z[Gamma x Gamma]
LaurentElt tensor(const LaurentElt& a, const LaurentElt& b);
// terms with exponent > 0, == 0, < 0
LaurentElt positive_part(const LaurentElt& a);
LaurentElt negative_part(const LaurentElt& a);

std::string to_string(const LaurentElt& a);
LaurentElt parse_laurent(std::string_view text, int dim);

struct Valuation {
  Rational r{0};
  std::optional<GammaVec> gamma;  // nullopt stands for +infinity
  bool infinite() const { return !gamma.has_value(); }
};

class RatioElt {
 public:
  RatioElt() = default;
  RatioElt(LaurentElt num);
  RatioElt(LaurentElt num, LaurentElt den);

  const LaurentElt& num() const { return num_; }
  const LaurentElt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatioElt operator-() const { return {-num_, den_}; }
  friend RatioElt operator+(const RatioElt& a, const RatioElt& b);
  friend RatioElt operator-(const RatioElt& a, const RatioElt& b);
  friend RatioElt operator*(const RatioElt& a, const RatioElt& b);
  friend RatioElt operator/(const RatioElt& a, const RatioElt& b);
  friend bool operator==(const RatioElt& a, const RatioElt& b);

 private:
  LaurentElt num_;
  LaurentElt den_;
};

Valuation valuation(const LaurentElt& x);
Valuation valuation(const RatioElt& x);
// r_x if gamma_x = 0, 0 if gamma_x > 0; throws NotInValuationRing otherwise
Rational constant_term(const RatioElt& x);
Rational constant_term(const LaurentElt& x);

}  // namespace hecke
