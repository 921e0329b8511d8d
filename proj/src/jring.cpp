#include "hecke/jring.hpp"

#include <random>

namespace hecke {

JRing::JRing(std::shared_ptr<const AfunTable> af) : af_(std::move(af)) {
  for (int d : af_->distinguished()) one_[d] = af_->n(d);
}

JElement JRing::mul(const JElement& x, const JElement& y) const {
  const CoxeterGroup& G = af_->ctx().group();
  JElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [z, g] : af_->gamma_row(a, b)) out[G.inverse(z)] += ca * cb * g;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

JElement JRing::add(const JElement& x, const JElement& y) const {
  JElement out = x;
  for (const auto& [w, c] : y) out[w] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

JElement JRing::scale(const JElement& x, Coef c) const {
  if (c == 0) return {};
  JElement out = x;
  for (auto& kv : out) kv.second *= c;
  return out;
}

std::vector<JElement> matrix_units(const LeadingCoeffTable& lct, int li) {
  int d = lct.dim(li);
  std::vector<JElement> E(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int w = lct.w_of(li, i, j);
      if (w < 0) continue;
      E[static_cast<std::size_t>(i) * d + j] = {{w, lct.c(w, li, i, j)}};
    }
  return E;
}

std::string jelement_text(const JElement& x, const CoxeterGroup& G) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : x) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Coef m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m) + "*";
    s += "t" + window_text(G.elem(w));
  }
  return s;
}

BlockReport verify_block_structure(const JRing& J, const LeadingCoeffTable& lct, long assoc_samples,
                                   std::uint64_t seed) {
  BlockReport rep;
  const AfunTable& af = J.afun();
  const CoxeterGroup& G = af.ctx().group();
  const CellPartition& left = af.ctx().cells(Side::Left);
  int N = G.size();
  auto wt = [&](int w) { return window_text(G.elem(w)); };
  auto fail = [&](std::string msg) {
    if (rep.violations.size() < 50) rep.violations.push_back(std::move(msg));
  };

  long total = 0;
  for (int li = 0; li < lct.num_lambdas(); ++li) {
    int d = lct.dim(li);
    int size = static_cast<int>(lct.t_set(li).size());
    rep.block_sizes.push_back(size);
    total += size;
    ++rep.checks;
    if (size != d * d) fail("block " + bipartition_text(lct.lambda(li)) + " has " + std::to_string(size) + " elements");
    auto E = matrix_units(lct, li);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            ++rep.checks;
            JElement got = J.mul(E[i * d + j], E[k * d + l]);
            JElement want = j == k ? E[i * d + l] : JElement{};
            if (got != want)
              fail("E" + std::to_string(i + 1) + std::to_string(j + 1) + "*E" + std::to_string(k + 1) +
                   std::to_string(l + 1) + " wrong in block " + bipartition_text(lct.lambda(li)));
          }
  }
  ++rep.checks;
  if (total != N) fail("blocks cover " + std::to_string(total) + " of " + std::to_string(N) + " elements");

  const JElement& one = J.identity();
  ++rep.checks;
  if (J.mul(one, one) != one) fail("1_J is not idempotent");
  for (int w = 0; w < N; ++w) {
    rep.checks += 2;
    if (J.mul(one, J.basis(w)) != J.basis(w)) fail("1_J t_w != t_w at " + wt(w));
    if (J.mul(J.basis(w), one) != J.basis(w)) fail("t_w 1_J != t_w at " + wt(w));
  }

  auto sim = [&](int a, int b) { return left.cell_of[a] == left.cell_of[b]; };
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      ++rep.checks;
      if (af.gamma_row(x, y).size() > 1) fail("t_x t_y has several terms at " + wt(x) + "," + wt(y));
      for (int z = 0; z < N; ++z) {
        int g = af.gamma(x, y, z);
        bool rule = sim(x, G.inverse(y)) && sim(y, G.inverse(z)) && sim(z, G.inverse(x));
        if ((g != 0) != rule) fail("support rule fails at " + wt(x) + "," + wt(y) + "," + wt(z));
        if (g != 0 && g != 1 && g != -1) fail("gamma outside {0,1,-1} at " + wt(x) + "," + wt(y) + "," + wt(z));
        if (g != lct.n_triple(x, y, z)) fail("gamma differs from star prediction at " + wt(x) + "," + wt(y) + "," + wt(z));
      }
    }

  auto assoc = [&](int x, int y, int z) {
    ++rep.checks;
    JElement l = J.mul(J.mul(J.basis(x), J.basis(y)), J.basis(z));
    JElement r = J.mul(J.basis(x), J.mul(J.basis(y), J.basis(z)));
    if (l != r) fail("associativity fails at " + wt(x) + "," + wt(y) + "," + wt(z));
  };
  if (static_cast<long>(N) * N * N <= assoc_samples) {
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y)
        for (int z = 0; z < N; ++z) assoc(x, y, z);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, N - 1);
    std::vector<std::vector<int>> blocks;
    for (int li = 0; li < lct.num_lambdas(); ++li) blocks.push_back(lct.t_set(li));
    // every other triple is drawn inside one block, where products are nonzero
    for (long i = 0; i < assoc_samples; ++i) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      if (i % 2) {
        const auto& b = blocks[std::get<0>(lct.cell_of(x))];
        std::uniform_int_distribution<std::size_t> in(0, b.size() - 1);
        y = b[in(rng)];
        z = b[in(rng)];
      }
      assoc(x, y, z);
    }
  }
  return rep;
}

}  // namespace hecke
