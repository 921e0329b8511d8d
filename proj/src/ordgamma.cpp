#include "hecke/ordgamma.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hecke {

namespace {

Coef checked_add(Coef a, Coef b) {
  Coef r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

Coef checked_mul(Coef a, Coef b) {
  Coef r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

bool term_less(const Term& a, const Term& b) { return GammaVec::raw_cmp(a.exp, b.exp) < 0; }

void normalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    Term t = ts[i];
    std::size_t j = i + 1;
    while (j < ts.size() && GammaVec::raw_cmp(ts[j].exp, t.exp) == 0) t.coef = checked_add(t.coef, ts[j++].coef);
    if (t.coef != 0) ts[out++] = t;
    i = j;
  }
  ts.resize(out);
}

}  // namespace

GammaVec::GammaVec(int dim) {
  if (dim < 1 || dim > kMaxDim) throw UsageError("GammaVec dimension out of range");
  dim_ = static_cast<std::uint8_t>(dim);
}

GammaVec::GammaVec(std::initializer_list<int> xs) : GammaVec(static_cast<int>(xs.size())) {
  int i = 0;
  for (int x : xs) c_[i++] = x;
}

bool GammaVec::is_zero() const {
  for (int i = 0; i < dim_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

int GammaVec::sign() const {
  for (int i = 0; i < dim_; ++i)
    if (c_[i] != 0) return c_[i] > 0 ? 1 : -1;
  return 0;
}

GammaVec GammaVec::operator+(const GammaVec& o) const {
  if (dim_ != o.dim_) throw UsageError("GammaVec dimension mismatch");
  GammaVec r = *this;
  for (int i = 0; i < dim_; ++i) r.c_[i] += o.c_[i];
  return r;
}

GammaVec GammaVec::operator-(const GammaVec& o) const { return *this + (-o); }

GammaVec GammaVec::operator-() const {
  GammaVec r = *this;
  for (int i = 0; i < dim_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

GammaVec GammaVec::scaled(int k) const {
  GammaVec r = *this;
  for (int i = 0; i < dim_; ++i) r.c_[i] *= k;
  return r;
}

std::strong_ordering lex_cmp(const GammaVec& a, const GammaVec& b) {
  if (a.dim() != b.dim()) throw UsageError("lex_cmp: dimension mismatch");
  int c = GammaVec::raw_cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

GammaVec max(const GammaVec& a, const GammaVec& b) { return a < b ? b : a; }

GammaVec concat(const GammaVec& a, const GammaVec& b) {
  GammaVec r(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i];
  for (int i = 0; i < b.dim(); ++i) r[a.dim() + i] = b[i];
  return r;
}

std::string to_string(const GammaVec& g) {
  std::string s = "(";
  for (int i = 0; i < g.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

// ---- LaurentElt ----

LaurentElt LaurentElt::zero(int dim) {
  LaurentElt r;
  r.dim_ = GammaVec(dim).dim();
  return r;
}

LaurentElt LaurentElt::constant(Coef c, int dim) { return monomial(GammaVec(dim), c); }

LaurentElt LaurentElt::monomial(const GammaVec& g, Coef c) {
  LaurentElt r = zero(g.dim());
  if (c != 0) r.terms_.push_back({g, c});
  return r;
}

LaurentElt LaurentElt::from_terms(std::vector<Term> terms, int dim) {
  LaurentElt r = zero(dim);
  for (auto& t : terms)
    if (t.exp.dim() != dim) throw UsageError("LaurentElt: term dimension mismatch");
  normalize(terms);
  r.terms_ = std::move(terms);
  return r;
}

Coef LaurentElt::coeff(const GammaVec& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{g, 0}, term_less);
  if (it != terms_.end() && GammaVec::raw_cmp(it->exp, g) == 0) return it->coef;
  return 0;
}

const Term& LaurentElt::lowest() const {
  if (terms_.empty()) throw UsageError("lowest term of zero");
  return terms_.front();
}

const Term& LaurentElt::highest() const {
  if (terms_.empty()) throw UsageError("highest term of zero");
  return terms_.back();
}

void LaurentElt::adopt_dim(const LaurentElt& o) {
  if (o.dim_ == 0) return;
  if (dim_ == 0) {
    dim_ = o.dim_;
    return;
  }
  if (dim_ != o.dim_) throw UsageError("LaurentElt dimension mismatch");
}

LaurentElt LaurentElt::operator-() const {
  LaurentElt r = *this;
  for (auto& t : r.terms_) t.coef = checked_mul(t.coef, -1);
  return r;
}

void LaurentElt::axpy(const LaurentElt& o, Coef sign) {
  adopt_dim(o);
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    int c = a == ae ? 1 : b == be ? -1 : GammaVec::raw_cmp(a->exp, b->exp);
    if (c < 0) {
      out.push_back(*a++);
    } else if (c > 0) {
      out.push_back({b->exp, checked_mul(b->coef, sign)});
      ++b;
    } else {
      Coef s = checked_add(a->coef, checked_mul(b->coef, sign));
      if (s != 0) out.push_back({a->exp, s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentElt& LaurentElt::operator+=(const LaurentElt& o) {
  axpy(o, 1);
  return *this;
}

LaurentElt& LaurentElt::operator-=(const LaurentElt& o) {
  axpy(o, -1);
  return *this;
}

LaurentElt& LaurentElt::operator*=(const LaurentElt& o) {
  *this = *this * o;
  return *this;
}

void LaurentElt::add_product(const LaurentElt& a, const LaurentElt& b) {
  if (a.is_zero() || b.is_zero()) {
    adopt_dim(a);
    adopt_dim(b);
    return;
  }
  *this += a * b;
}

LaurentElt LaurentElt::shifted(const GammaVec& g) const {
  LaurentElt r = *this;
  r.adopt_dim(LaurentElt::zero(g.dim()));
  for (auto& t : r.terms_) t.exp = t.exp + g;
  return r;
}

LaurentElt LaurentElt::scaled(Coef c) const {
  if (c == 0) return zero(dim_ ? dim_ : 1);
  LaurentElt r = *this;
  for (auto& t : r.terms_) t.coef = checked_mul(t.coef, c);
  return r;
}

LaurentElt operator*(const LaurentElt& a, const LaurentElt& b) {
  LaurentElt r;
  r.adopt_dim(a);
  r.adopt_dim(b);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentElt& m = a.terms_.size() == 1 ? a : b;
    const LaurentElt& p = a.terms_.size() == 1 ? b : a;
    const Term& t = m.terms_[0];
    r.terms_.reserve(p.terms_.size());
    for (const auto& s : p.terms_) r.terms_.push_back({s.exp + t.exp, checked_mul(s.coef, t.coef)});
    return r;  // shifting preserves order
  }
  std::vector<Term> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) ts.push_back({s.exp + t.exp, checked_mul(s.coef, t.coef)});
  normalize(ts);
  r.terms_ = std::move(ts);
  return r;
}

bool operator==(const LaurentElt& a, const LaurentElt& b) {
  if (a.dim_ && b.dim_ && a.dim_ != b.dim_) throw UsageError("LaurentElt dimension mismatch");
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coef != b.terms_[i].coef || GammaVec::raw_cmp(a.terms_[i].exp, b.terms_[i].exp) != 0)
      return false;
  return true;
}

LaurentElt bar(const LaurentElt& a) {
  if (a.dim() == 0) return LaurentElt();
  std::vector<Term> ts(a.terms().rbegin(), a.terms().rend());
  for (auto& t : ts) t.exp = -t.exp;
  return LaurentElt::from_terms(std::move(ts), a.dim());
}

bool in_A_geq0(const LaurentElt& a) { return a.is_zero() || a.lowest().exp.sign() >= 0; }
bool in_A_gt0(const LaurentElt& a) { return a.is_zero() || a.lowest().exp.sign() > 0; }
bool in_A_lt0(const LaurentElt& a) { return a.is_zero() || a.highest().exp.sign() < 0; }

LaurentElt tensor(const LaurentElt& a, const LaurentElt& b) {
  if (a.dim() == 0 || b.dim() == 0) return LaurentElt();
  std::vector<Term> ts;
  ts.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) ts.push_back({concat(s.exp, t.exp), s.coef * t.coef});
  return LaurentElt::from_terms(std::move(ts), a.dim() + b.dim());
}

LaurentElt positive_part(const LaurentElt& a) {
  std::vector<Term> ts;
  for (const auto& t : a.terms())
    if (t.exp.sign() > 0) ts.push_back(t);
  return a.dim() ? LaurentElt::from_terms(std::move(ts), a.dim()) : LaurentElt();
}

LaurentElt negative_part(const LaurentElt& a) {
  std::vector<Term> ts;
  for (const auto& t : a.terms())
    if (t.exp.sign() < 0) ts.push_back(t);
  return a.dim() ? LaurentElt::from_terms(std::move(ts), a.dim()) : LaurentElt();
}

// ---- text form ----

namespace {

std::string monomial_text(const GammaVec& g) {
  if (g.dim() == 2) {
    std::string s;
    auto factor = [&](char sym, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += sym;
      if (e != 1) s += "^" + std::to_string(e);
    };
    factor('V', g[0]);
    factor('v', g[1]);
    return s;
  }
  if (g.is_zero()) return "";
  return "e^" + to_string(g);
}

struct Lexer {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  long long integer() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw MalformedError("expected integer in '" + std::string(s) + "'");
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
};

}  // namespace

std::string to_string(const LaurentElt& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    Coef c = t.coef;
    std::string mono = monomial_text(t.exp);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Coef ac = c < 0 ? -c : c;
    if (mono.empty()) {
      out += std::to_string(ac);
    } else {
      if (ac != 1) out += std::to_string(ac) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

LaurentElt parse_laurent(std::string_view text, int dim) {
  Lexer lx{text};
  std::vector<Term> ts;
  if (lx.done()) throw MalformedError("empty Laurent polynomial");
  bool first = true;
  while (!lx.done()) {
    Coef sign = 1;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      throw MalformedError("expected + or - in '" + std::string(text) + "'");
    }
    first = false;
    Coef coef = 1;
    GammaVec g(dim);
    bool any = false;
    if (lx.peek_digit()) {
      coef = lx.integer();
      any = true;
      if (!lx.eat('*')) {
        ts.push_back({g, sign * coef});
        continue;
      }
    }
    for (;;) {
      lx.skip();
      if (lx.i >= text.size()) throw MalformedError("dangling factor in '" + std::string(text) + "'");
      char c = text[lx.i];
      if ((c == 'V' || c == 'v') && dim == 2) {
        ++lx.i;
        int e = lx.eat('^') ? static_cast<int>(lx.integer()) : 1;
        g[c == 'V' ? 0 : 1] += e;
      } else if (c == 'e') {
        ++lx.i;
        if (!lx.eat('^') || !lx.eat('(')) throw MalformedError("expected e^( in '" + std::string(text) + "'");
        for (int k = 0; k < dim; ++k) {
          if (k && !lx.eat(',')) throw MalformedError("expected , in exponent");
          g[k] += static_cast<int>(lx.integer());
        }
        if (!lx.eat(')')) throw MalformedError("expected ) in exponent");
      } else {
        throw MalformedError("unexpected character in '" + std::string(text) + "'");
      }
      any = true;
      if (!lx.eat('*')) break;
    }
    if (!any) throw MalformedError("empty term");
    ts.push_back({g, sign * coef});
  }
  return LaurentElt::from_terms(std::move(ts), dim);
}

// ---- RatioElt ----

RatioElt::RatioElt(LaurentElt num) : num_(std::move(num)) {
  den_ = LaurentElt::constant(1, num_.dim() ? num_.dim() : 1);
}

RatioElt::RatioElt(LaurentElt num, LaurentElt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MalformedError("RatioElt with zero denominator");
}

RatioElt operator+(const RatioElt& a, const RatioElt& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatioElt operator-(const RatioElt& a, const RatioElt& b) { return a + (-b); }

RatioElt operator*(const RatioElt& a, const RatioElt& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatioElt operator/(const RatioElt& a, const RatioElt& b) {
  if (b.is_zero()) throw MalformedError("division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RatioElt& a, const RatioElt& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

Valuation valuation(const LaurentElt& x) {
  if (x.is_zero()) return {};
  const Term& t = x.lowest();
  return {Rational(t.coef), t.exp};
}

Valuation valuation(const RatioElt& x) {
  if (x.den().is_zero()) throw MalformedError("RatioElt with zero denominator");
  if (x.is_zero()) return {};
  const Term& n = x.num().lowest();
  const Term& d = x.den().lowest();
  return {Rational(n.coef, d.coef), n.exp - d.exp};
}

namespace {
Rational ct_of(const Valuation& v) {
  if (v.infinite()) return Rational(0);
  int s = v.gamma->sign();
  if (s < 0) throw NotInValuationRing("constant_term: element not in O (gamma = " + to_string(*v.gamma) + ")");
  return s > 0 ? Rational(0) : v.r;
}
}  // namespace

Rational constant_term(const RatioElt& x) { return ct_of(valuation(x)); }
Rational constant_term(const LaurentElt& x) { return ct_of(valuation(x)); }

}  // namespace hecke
