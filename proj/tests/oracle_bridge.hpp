// Conversions between library values and the test oracle.
#pragma once

#include "hecke/kl.hpp"
#include "oracle.hpp"

inline oracle::Poly to_oracle(const hecke::LaurentElt& a) {
  oracle::Poly p;
  for (const auto& t : a.terms()) {
    oracle::Exp e(t.exp.dim());
    for (int i = 0; i < t.exp.dim(); ++i) e[i] = t.exp[i];
    p[e] = t.coef;
  }
  return p;
}

inline oracle::Exp to_oracle(const hecke::GammaVec& g) {
  oracle::Exp e(g.dim());
  for (int i = 0; i < g.dim(); ++i) e[i] = g[i];
  return e;
}

// library element index of an oracle element
inline int lib_index(const hecke::CoxeterGroup& G, const oracle::Window& w) { return G.index_of(hecke::SignedPerm(w)); }

inline oracle::KL make_oracle(int n, const hecke::WeightFunction& L, bool with_h = true) {
  return oracle::KL(n, to_oracle(L.b), to_oracle(L.a), with_h);
}
