// hecke: command-line front end. Every number printed here comes from a
// library call; this file only parses options and lays out tables.
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hecke/afun.hpp"
#include "hecke/bitab.hpp"
#include "hecke/jring.hpp"
#include "hecke/kl.hpp"
#include "hecke/seminormal.hpp"
#include "hecke/verify.hpp"
#include "table.hpp"

using namespace hecke;
using cli::json;

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kResource = 3 };

struct Config {
  std::string command;
  int n = 0;  // 0: not given
  std::string weights = "generic";
  int b = 0, a = 0;
  std::string format = "pretty";
  std::uint64_t seed = 20050601;
  int max_rank = 4;
  bool allow_n5 = false;
  bool long_run = false;
  bool timing = false;
  double time_cap = 0;

  std::string side = "left";
  std::string window, word, lambda, x, y, props = "all";
  bool unpruned = false;
  long p15_samples = 100000;
  long assoc_samples = 10000;
};

// commands that need the full h tensor
bool needs_h(const std::string& cmd) { return cmd == "afun" || cmd == "jring" || cmd == "verify" || cmd == "djm"; }
bool asymptotic_only(const std::string& cmd) { return cmd == "jring" || cmd == "reps" || cmd == "djm"; }

WeightFunction weights_of(const Config& c) {
  if (c.weights == "generic") {
    if (c.b || c.a) throw UsageError("--b/--a apply to --weights integer only");
    return WeightFunction::generic(c.n);
  }
  if (!c.b || !c.a) throw UsageError("--weights integer needs --b and --a");
  return WeightFunction::integer(c.n, c.b, c.a);
}

void check_budget(const Config& c, const WeightFunction& L) {
  if (c.n < 1) throw UsageError("rank must be >= 1");
  if (c.max_rank > 4) throw UsageError("--max-rank is at most 4; rank 5 needs --allow-n5");
  if (c.n == 5 && c.command == "rs" && c.allow_n5) return;
  if (c.n == 5 && c.allow_n5) throw ResourceError("rank 5 is available for rs only");
  if (c.n > c.max_rank) throw ResourceError("rank " + std::to_string(c.n) + " exceeds the cap " + std::to_string(c.max_rank));
  if (c.n == 4 && needs_h(c.command) && !c.long_run)
    throw ResourceError(c.command + " at rank 4 builds the full structure-constant tensor; pass --long-run");
  if (asymptotic_only(c.command) && !L.asymptotic())
    throw UsageError(c.command + " needs b > (n-1)a > 0");
}

std::string win(const CoxeterGroup& G, int w) { return window_text(G.elem(w)); }
std::string word(const CoxeterGroup& G, int w) { return word_text(to_reduced_word(G.elem(w))); }

std::string ratio_text(const RatioElt& r) {
  if (r.den() == LaurentElt::constant(1, r.den().dim())) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::string valuation_text(const Valuation& v) {
  if (v.infinite()) return "inf";
  std::ostringstream s;
  if (v.r.denominator() == 1) s << v.r.numerator();
  else s << v.r;
  s << "*e^" << to_string(*v.gamma);
  return s.str();
}

std::string gen_text(int g) { return g == 0 ? "t" : "s" + std::to_string(g); }

int element_of(const CoxeterGroup& G, const std::string& text) {
  int i = G.index_of(parse_window(text));
  if (i < 0) throw UsageError("not an element of W_" + std::to_string(G.rank()) + ": " + text);
  return i;
}

int cmd_cells(const Config& c, const WeightFunction& L, cli::Document& doc) {
  auto kl = KLContext::type_b(c.n, L);
  const auto& G = kl->group();
  Side side = c.side == "left" ? Side::Left : c.side == "right" ? Side::Right : Side::TwoSided;
  auto& t = doc.table("cells", {"cell", "size", "shape", "elements", "words"});
  const auto& P = kl->cells(side);
  for (std::size_t i = 0; i < P.cells.size(); ++i) {
    json elems = json::array(), words = json::array();
    std::string shape;
    for (int w : P.cells[i]) {
      elems.push_back(win(G, w));
      words.push_back(word(G, w));
      std::string s = bipartition_text(shape_of(G.elem(w)));
      shape = shape.empty() || shape == s ? s : "mixed";
    }
    t.add({static_cast<int>(i + 1), P.cells[i].size(), shape, elems, words});
  }
  return kOk;
}

int cmd_afun(const Config& c, const WeightFunction& L, cli::Document& doc) {
  auto kl = KLContext::type_b(c.n, L);
  AfunTable af(kl, !c.unpruned);
  const auto& G = kl->group();
  auto& t = doc.table("afun", {"window", "word", "shape", "a", "delta", "n", "in_D"});
  for (int w = 0; w < G.size(); ++w)
    t.add({win(G, w), word(G, w), bipartition_text(shape_of(G.elem(w))), to_string(af.a(w)), to_string(af.delta(w)),
           af.n(w), af.in_D(w)});
  doc.notes.push_back(std::string("a from the ") + (c.unpruned ? "unpruned" : "cell-pruned") + " scan of h_{x,y,z}");
  return kOk;
}

int cmd_rs(Config& c, cli::Document& doc) {
  std::vector<SignedPerm> ws;
  if (!c.window.empty() || !c.word.empty()) {
    if (!c.window.empty() && !c.word.empty()) throw UsageError("give --window or --word, not both");
    if (!c.window.empty()) {
      SignedPerm w = parse_window(c.window);
      if (c.n && c.n != w.rank()) throw UsageError("window length differs from -n");
      c.n = w.rank();
      ws.push_back(w);
    } else {
      if (!c.n) throw UsageError("--word needs -n");
      ws.push_back(from_word(parse_word(c.word, c.n), c.n));
    }
  }
  doc.n = c.n;
  check_budget(c, WeightFunction::generic(c.n));
  if (ws.empty()) ws = enumerate(c.n);
  std::sort(ws.begin(), ws.end(), canonical_less);
  auto& t = doc.table("rs", {"window", "word", "shape", "insertion", "recording", "t_length"});
  for (const auto& w : ws) {
    RSPair p = rs_correspondence(w);
    t.add({window_text(w), word_text(to_reduced_word(w)), bipartition_text(p.A.shape()), bitableau_text(p.A),
           bitableau_text(p.B), t_length(w)});
  }
  return kOk;
}

int cmd_klpoly(const Config& c, const WeightFunction& L, cli::Document& doc) {
  auto kl = KLContext::type_b(c.n, L);
  const auto& G = kl->group();
  int only_w = c.x.empty() ? -1 : element_of(G, c.x);
  int only_y = c.y.empty() ? -1 : element_of(G, c.y);
  auto& t = doc.table("klpoly", {"y", "w", "pstar"});
  for (int w = 0; w < G.size(); ++w) {
    if (only_w >= 0 && w != only_w) continue;
    for (const auto& [y, p] : kl->cprime_support(w))
      if (only_y < 0 || y == only_y) t.add({win(G, y), win(G, w), to_string(p)});
  }
  doc.notes.push_back("C'_w = sum_y pstar(y,w) T_y");
  return kOk;
}

int cmd_jring(const Config& c, const WeightFunction& L, cli::Document& doc) {
  auto ctx = VerifyContext::build(c.n, L);
  const auto& G = *ctx->G;
  const auto& lct = *ctx->lct;
  const JRing& J = *ctx->J;
  auto& blocks = doc.table("blocks", {"lambda", "d", "block_size", "elements"});
  for (int li = 0; li < lct.num_lambdas(); ++li) {
    json elems = json::array();
    for (int w : lct.t_set(li)) elems.push_back(win(G, w));
    blocks.add({bipartition_text(lct.lambda(li)), lct.dim(li), elems.size(), elems});
  }
  auto& units = doc.table("units", {"window", "lambda", "i", "j", "c"});
  for (int w = 0; w < G.size(); ++w) {
    auto [li, i, j] = lct.cell_of(w);
    units.add({win(G, w), bipartition_text(lct.lambda(li)), i + 1, j + 1, lct.c(w, li, i, j)});
  }
  auto& one = doc.table("identity", {"window", "coefficient"});
  for (const auto& [w, k] : J.identity()) one.add({win(G, w), k});
  if (!c.x.empty() || !c.y.empty()) {
    if (c.x.empty() || c.y.empty()) throw UsageError("--x and --y go together");
    auto& prod = doc.table("product", {"window", "coefficient"});
    for (const auto& [w, k] : J.mul(J.basis(element_of(G, c.x)), J.basis(element_of(G, c.y))))
      prod.add({win(G, w), k});
  }
  BlockReport rep = verify_block_structure(J, lct, c.assoc_samples, c.seed);
  auto& chk = doc.table("checks", {"checks", "violations", "status"});
  chk.add({rep.checks, rep.violations.size(), rep.ok() ? "pass" : "fail"});
  doc.extra["violations"] = rep.violations;
  for (const auto& v : rep.violations) std::cerr << "violation: " << v << "\n";
  return rep.ok() ? kOk : kPropertyFailure;
}

int cmd_reps(const Config& c, const WeightFunction& L, cli::Document& doc) {
  std::vector<Bipartition> lams;
  if (c.lambda.empty()) {
    lams = bipartitions(c.n);
  } else {
    Bipartition lam = parse_bipartition(c.lambda);
    if (lam.size() != c.n) throw UsageError("bipartition size differs from -n");
    lams.push_back(lam);
  }
  auto G = CoxeterGroup::type_b(c.n);
  bool schur = c.n <= 3;
  auto& sum = doc.table("summary", {"lambda", "dim", "alpha", "schur", "schur_valuation"});
  for (const auto& lam : lams) {
    SeminormalRep rep(lam, L);
    json s = nullptr, sv = nullptr;
    if (schur) {
      RatioElt r = schur_element(rep, rep.all_T(*G), *G);
      s = ratio_text(r);
      sv = valuation_text(valuation(r));
    }
    sum.add({bipartition_text(lam), rep.dim(), to_string(alpha_invariant(lam, L)), s, sv});
    if (c.lambda.empty()) continue;
    auto& basis = doc.table("basis", {"index", "bitableau"});
    for (int i = 0; i < rep.dim(); ++i) basis.add({i + 1, bitableau_text(rep.basis()[i])});
    auto& gens = doc.table("generators", {"generator", "i", "j", "entry"});
    for (int g = 0; g < c.n; ++g)
      for (int i = 0; i < rep.dim(); ++i)
        for (int j = 0; j < rep.dim(); ++j)
          if (!rep.gen(g).at(i, j).is_zero()) gens.add({gen_text(g), i + 1, j + 1, ratio_text(rep.entry(rep.gen(g), i, j))});
  }
  if (!schur) doc.notes.push_back("Schur elements are computed for n <= 3 only");
  return kOk;
}

int cmd_verify(const Config& c, const WeightFunction& L, cli::Document& doc) {
  std::vector<std::string> ids;
  if (c.props == "all") {
    ids = property_ids();
  } else {
    std::stringstream ss(c.props);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) {
        if (!is_property_id(id)) throw UsageError("unknown property " + id);
        ids.push_back(id);
      }
  }
  VerifyOptions opt;
  opt.p15_samples = c.p15_samples;
  opt.assoc_samples = c.assoc_samples;
  opt.seed = c.seed;
  auto ctx = VerifyContext::build(c.n, L);
  auto reports = run_suite(ids, *ctx, opt);
  std::vector<std::string> cols = {"id", "status", "checked", "witnesses", "note"};
  if (c.timing) cols.push_back("seconds");
  auto& t = doc.table("summary", cols);
  json full = json::array();
  bool failed = false;
  for (const auto& r : reports) {
    failed = failed || r.failed();
    std::vector<json> row = {r.id, status_text(r.status), r.checked, r.witnesses.size(), r.note};
    if (c.timing) row.push_back(r.runtime);
    t.add(row);
    json o = {{"id", r.id},           {"n", r.n},     {"regime", r.regime}, {"status", status_text(r.status)},
              {"checked", r.checked}, {"note", r.note}, {"witnesses", r.witnesses}};
    if (c.timing) o["runtime"] = r.runtime;
    full.push_back(std::move(o));
  }
  doc.extra["reports"] = std::move(full);
  for (const auto& r : reports)
    for (const auto& w : r.witnesses) std::cerr << r.id << ": " << w << "\n";
  return failed ? kPropertyFailure : kOk;
}

int cmd_djm(const Config& c, const WeightFunction& L, cli::Document& doc) {
  auto kl = KLContext::type_b(c.n, L);
  std::vector<Bipartition> lams;
  if (c.lambda.empty()) {
    lams = bipartitions(c.n);
  } else {
    Bipartition lam = parse_bipartition(c.lambda);
    if (lam.size() != c.n) throw UsageError("bipartition size differs from -n");
    lams.push_back(lam);
  }
  auto& t = doc.table("djm", {"lambda", "m_size", "sum_d2", "n_rank", "containment", "ideal", "status"});
  bool failed = false;
  for (const auto& lam : lams) {
    DjmResult d = djm_ideal(*kl, lam, c.seed);
    failed = failed || !d.ok();
    t.add({bipartition_text(lam), d.m_set.size(), d.m_rank_formula, d.n_rank, d.containment, d.ideal,
           d.ok() ? "pass" : "fail"});
    for (const auto& w : d.witnesses) std::cerr << bipartition_text(lam) << ": " << w << "\n";
  }
  doc.notes.push_back(
      "verified (containment + rank + ideal); rank of N certified by exact evaluation modulo 2^61-1; "
      "A-span equality beyond containment + rank is not independently certified");
  return failed ? kPropertyFailure : kOk;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("-n,--rank", c.n, "rank n of W_n");
  sub->add_option("--weights", c.weights, "generic (Gamma = Z^2) or integer")->check(CLI::IsMember({"generic", "integer"}));
  sub->add_option("--b", c.b, "L(t) for integer weights");
  sub->add_option("--a", c.a, "L(s_i) for integer weights");
  sub->add_option("--format", c.format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  sub->add_option("--seed", c.seed, "seed for sampled checks");
  sub->add_option("--max-rank", c.max_rank, "rank cap, at most 4");
  sub->add_flag("--allow-n5", c.allow_n5, "acknowledge rank 5 (rs only)");
  sub->add_flag("--long-run", c.long_run, "allow rank 4 for commands that need all structure constants");
  sub->add_option("--time-cap", c.time_cap, "abort with exit code 3 after this many seconds (0: none)");
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Exact computations in type B Hecke algebras with unequal parameters"};
  app.require_subcommand(1);
  auto* cells = app.add_subcommand("cells", "left, right or two-sided cells");
  cells->add_option("--side", c.side, "left, right or two-sided")->check(CLI::IsMember({"left", "right", "two-sided"}));
  auto* afun = app.add_subcommand("afun", "a-function, Delta, n_z and membership in D");
  afun->add_flag("--unpruned", c.unpruned, "scan every (x,y) instead of pruning by the cell order");
  auto* rs = app.add_subcommand("rs", "Robinson-Schensted bitableaux");
  rs->add_option("--window", c.window, "element in window notation, e.g. [2,-1,3]");
  rs->add_option("--word", c.word, "element as a word, e.g. \"t s1 s2\"");
  auto* klpoly = app.add_subcommand("klpoly", "coefficients of C'_w in the T basis");
  klpoly->add_option("--w", c.x, "restrict to this w (window)");
  klpoly->add_option("--y", c.y, "restrict to this y (window)");
  auto* jring = app.add_subcommand("jring", "the ring J: blocks, matrix units, identity and products");
  jring->add_option("--x", c.x, "left factor t_x (window)");
  jring->add_option("--y", c.y, "right factor t_y (window)");
  jring->add_option("--assoc-samples", c.assoc_samples, "sampled associativity triples");
  auto* reps = app.add_subcommand("reps", "seminormal representations and Schur elements");
  reps->add_option("--lambda", c.lambda, "bipartition, e.g. (2,1|1)");
  auto* verify = app.add_subcommand("verify", "run property checks");
  verify->add_option("--props", c.props, "all, or a comma separated list of ids");
  verify->add_option("--p15-samples", c.p15_samples, "sampled quadruples for P15 above the exhaustive rank");
  verify->add_option("--assoc-samples", c.assoc_samples, "sampled associativity triples");
  verify->add_flag("--timing", c.timing, "include runtimes (output is then not reproducible byte for byte)");
  auto* djm = app.add_subcommand("djm", "ideals spanned by C'_w over shape conditions");
  djm->add_option("--lambda", c.lambda, "only this bipartition");
  for (auto* s : {cells, afun, rs, klpoly, jring, reps, verify, djm}) add_common(s, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  std::atomic<bool> done{false};
  if (c.time_cap > 0) {
    std::thread([&done, cap = c.time_cap] {
      std::this_thread::sleep_for(std::chrono::duration<double>(cap));
      if (!done) {
        std::cerr << "error: time cap of " << cap << " s exceeded\n";
        std::_Exit(kResource);
      }
    }).detach();
  }

  cli::Document doc;
  doc.command = c.command;
  int code = kOk;
  try {
    if (c.command == "rs") {
      doc.regime = "none";
      code = cmd_rs(c, doc);
    } else {
      if (!c.n) c.n = 2;
      doc.n = c.n;
      WeightFunction L = weights_of(c);
      doc.regime = L.text();
      check_budget(c, L);
      if (c.command == "cells") code = cmd_cells(c, L, doc);
      else if (c.command == "afun") code = cmd_afun(c, L, doc);
      else if (c.command == "klpoly") code = cmd_klpoly(c, L, doc);
      else if (c.command == "jring") code = cmd_jring(c, L, doc);
      else if (c.command == "reps") code = cmd_reps(c, L, doc);
      else if (c.command == "verify") code = cmd_verify(c, L, doc);
      else if (c.command == "djm") code = cmd_djm(c, L, doc);
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResource;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  done = true;
  cli::Format f = c.format == "json" ? cli::Format::Json : c.format == "tsv" ? cli::Format::Tsv : cli::Format::Pretty;
  cli::render(doc, f, std::cout);
  return code;
}
