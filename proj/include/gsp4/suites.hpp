#ifndef GSP4_SUITES_HPP
#define GSP4_SUITES_HPP

#include <string>
#include <vector>

#include "gsp4/report.hpp"
#include "gsp4/zeta.hpp"

namespace gsp4 {

// Parameter sweep for a verification or table run.
struct RunConfig {
  std::vector<long> ps{3, 5};
  std::vector<long> ds{4, 7};
  long l_max = 4, m_max = 4;
  int order = 40;
  std::vector<int> aps{1, -1};
  std::vector<int> wps{1, -1};
  std::vector<CaseTag> cases{UnramPi_StSigma, StPi_StSigma, StPi_UnramSigma};
  int workers = 1;
};

// Discriminant plumbing: d -> quadratic-form parameters, inert test.
SParams params_from_d(long d);
bool is_inert(long p, long d);

// Throws Error("ConfigError", ...) on any invalid entry, in particular when a
// (d, p) pair is not inert.
void validate_config(const RunConfig& cfg);

// Module suites; each aggregates one child per swept parameter tuple, in a
// deterministic order (workers only parallelize the evaluation).
VerifyReport suite_cosets(const RunConfig& cfg);
VerifyReport suite_volumes(const RunConfig& cfg);
VerifyReport suite_bessel(const RunConfig& cfg);
VerifyReport suite_whittaker(const RunConfig& cfg);
VerifyReport suite_zeta(const RunConfig& cfg);

// target in {cosets, volumes, bessel, whittaker, zeta, all}.
VerifyReport run_verify(const std::string& target, const RunConfig& cfg);

// target in {bessel, volumes, whittaker}; format in {json, tsv, text}.
// Rows are (m, t_index) with one exact-string column per l; all-zero rows are
// omitted.
std::string render_table(const std::string& target, const RunConfig& cfg,
                         const std::string& format);

}  // namespace gsp4

#endif
