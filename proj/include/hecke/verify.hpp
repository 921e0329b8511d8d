// Machine checks of P1-P15, the cell cross-checks, monotonicity, the
// leading-coefficient and J-ring structure, and the DJM ideals.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecke/afun.hpp"
#include "hecke/jring.hpp"
#include "hecke/kl.hpp"
#include "hecke/seminormal.hpp"

namespace hecke {

enum class Status { Pass, Fail, Skipped };
std::string status_text(Status s);

struct PropertyReport {
  std::string id;
  int n = 0;
  std::string regime;
  Status status = Status::Pass;
  std::vector<std::string> witnesses;
  long checked = 0;
  double runtime = 0;  // seconds
  std::string note;

  void witness(std::string w);
  bool failed() const { return status == Status::Fail; }
};

struct VerifyOptions {
  long p15_samples = 100000;
  std::uint64_t seed = 20050601;
  long assoc_samples = 10000;
  int p15_exhaustive_max_n = 2;
};

// frozen tables for one (n, L)
struct VerifyContext {
  int n = 0;
  WeightFunction L;
  std::shared_ptr<const CoxeterGroup> G;
  std::shared_ptr<const KLContext> kl;
  std::shared_ptr<const AfunTable> af;
  std::shared_ptr<const LeadingCoeffTable> lct;
  std::shared_ptr<const JRing> J;

  static std::shared_ptr<VerifyContext> build(int n, const WeightFunction& L);
  std::string elem(int w) const;
};

// P1 ... P15, CELLS-RS, MONO, DJM, TYPEA, AFORMULA, ALPHA, LEADING, REPS,
// JRING, RS, CONSISTENCY
const std::vector<std::string>& property_ids();
bool is_property_id(const std::string& id);

PropertyReport check_P(int k, const VerifyContext& c, const VerifyOptions& opt = {});
PropertyReport cross_check_cells(const VerifyContext& c);
PropertyReport monotonicity(const VerifyContext& c);
PropertyReport check_a_formula(const VerifyContext& c);
PropertyReport check_alpha(const VerifyContext& c);
PropertyReport check_leading(const VerifyContext& c);
PropertyReport check_jring(const VerifyContext& c, const VerifyOptions& opt = {});
// no KL data needed
PropertyReport check_reps(int n, const WeightFunction& L);
PropertyReport check_rs(int n);
PropertyReport type_a_facts(int n, const WeightFunction& L);

struct DjmResult {
  Bipartition lambda;
  std::vector<int> m_set;      // w with (l1,l2) <= (nu2, nu1*), nu the RS shape of w
  long m_rank_formula = 0;     // sum of d_nu^2 over nu dominating lambda
  int n_rank = 0;              // certified lower bound for rank N over the fraction field
  bool containment = true;     // every generator lies in M, exactly over A
  bool ideal = true;           // M closed under C'_s on both sides
  std::vector<std::string> witnesses;
  bool ok() const {
    return witnesses.empty() && containment && ideal && n_rank == static_cast<int>(m_set.size()) &&
           m_rank_formula == static_cast<long>(m_set.size());
  }
};
// x~_mu = T_{sigma_l} C'_{a_l w_mu} in T coordinates, l = |mu_1|
HeckeVec djm_generator(const KLContext& ctx, const Bipartition& mu);
DjmResult djm_ideal(const KLContext& ctx, const Bipartition& lambda, std::uint64_t seed = 1);
PropertyReport djm_ideals(const VerifyContext& c, const VerifyOptions& opt = {});

PropertyReport run_property(const std::string& id, const VerifyContext& c, const VerifyOptions& opt = {});
// reports sorted by id order of property_ids(); adds CONSISTENCY when P4, P11
// and MONO are all requested
std::vector<PropertyReport> run_suite(const std::vector<std::string>& ids, const VerifyContext& c,
                                      const VerifyOptions& opt = {});

}  // namespace hecke
