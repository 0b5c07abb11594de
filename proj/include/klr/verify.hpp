#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "klr/crystal.hpp"
#include "klr/table.hpp"

namespace klr {

// One named, reproducible pass/fail artifact. The wall time is printed to the
// console but never serialized, so identical runs produce identical reports.
struct CheckReport {
  std::string name;
  nlohmann::json params;
  bool pass = false;
  nlohmann::json witness;  // counterexample on failure, summary stats on pass
  double wall_ms = 0.0;

  nlohmann::json to_json() const;
};

// Transport bijection between the module-theoretic and combinatorial models:
// the trivial top maps to the highest element, and appending the letter i on
// the module side matches the star lowering operator.
struct ModelMatch {
  bool ok = false;
  std::string error;
  std::map<Weight, std::vector<int>> module_to_crystal;
  std::map<Weight, std::vector<int>> crystal_to_module;

  int crystal_of(const Weight& beta, int entry) const;
  int module_of(const Weight& beta, int crystalIdx) const;
};

ModelMatch match_models(TableContext& ctx, const CrystalModel& cm, const CrystalTable& ct, int n);

CheckReport check_orientation_independence(const Quiver& q, const Weight& beta, int degreeBound,
                                           bool corruptQ = false);
CheckReport check_quotient_simples(TableContext& ctx, const Weight& beta, int i, int k,
                                   int degreeBound);
CheckReport check_tcorr(TableContext& ctx, const CrystalModel& cm, const CrystalTable& ct, int i,
                        int n);
CheckReport check_saito_on_simples(TableContext& ctx, const CrystalModel& cm,
                                   const CrystalTable& ct, const ModelMatch& match, int i, int n);
CheckReport check_braid(const CrystalModel& cm, int n);
CheckReport check_monoidality(TableContext& ctx, const CrystalModel& cm, const CrystalTable& ct,
                              const ModelMatch& match, int i, const Weight& beta1,
                              const Weight& beta2);
CheckReport crosscheck_crystal_models(TableContext& ctx, const CrystalModel& cm,
                                      const CrystalTable& ct, int n);

// Suite orchestration used by the CLI and the acceptance harness.
struct VerifyOptions {
  int degree_bound = 8;
  int height = 4;
  int braid_height = 6;
  bool corrupt_q = false;
  std::string cache_dir;  // empty disables the disk cache
  int jobs = 1;
};

std::vector<CheckReport> run_suite(const Quiver& q, const std::string& suite,
                                   const VerifyOptions& opt);
// exit code contract: 0 all pass, 1 any fail (2 = resource abort, raised as
// CapError by the callee)
int suite_exit_code(const std::vector<CheckReport>& reports);

}  // namespace klr
