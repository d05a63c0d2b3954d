#include "gsp4/suites.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "gsp4/bessel.hpp"
#include "gsp4/cosets.hpp"
#include "gsp4/volumes.hpp"
#include "gsp4/whittaker.hpp"

namespace gsp4 {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

long pow_mod(long b, long e, long p) {
  long r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Evaluate a fixed list of report jobs, optionally in parallel; the result
// order is the job order regardless of scheduling.
std::vector<VerifyReport> run_jobs(
    const std::vector<std::function<VerifyReport()>>& jobs, int workers) {
  std::vector<VerifyReport> out(jobs.size());
  if (workers <= 1 || jobs.size() <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i]();
  };
  std::vector<std::thread> pool;
  int n = std::min<int>(workers, static_cast<int>(jobs.size()));
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

std::vector<std::pair<long, long>> inert_pairs(const RunConfig& cfg) {
  std::vector<std::pair<long, long>> out;
  for (long p : cfg.ps)
    for (long d : cfg.ds)
      if (is_inert(p, d)) out.emplace_back(p, d);
  return out;
}

VerifyReport gather(const std::string& name,
                    const std::vector<std::function<VerifyReport()>>& jobs,
                    int workers) {
  VerifyReport rep;
  rep.check = name;
  for (auto& child : run_jobs(jobs, workers)) rep.add(std::move(child));
  return rep;
}

}  // namespace

SParams params_from_d(long d) { return SParams::from_d(d); }

bool is_inert(long p, long d) {
  long r = ((-d) % p + p) % p;
  if (r == 0) return false;
  return pow_mod(r, (p - 1) / 2, p) == p - 1;
}

void validate_config(const RunConfig& cfg) {
  auto reject = [](const std::string& msg) { throw Error("ConfigError", msg); };
  if (cfg.ps.empty()) reject("empty prime list");
  for (long p : cfg.ps)
    if (!is_odd_prime(p)) reject("p = " + std::to_string(p) + " is not an odd prime");
  if (cfg.ds.empty()) reject("empty discriminant list");
  // Non-inert (p, d) pairs are skipped by the discriminant-dependent suites;
  // a config whose cross product leaves nothing to run is rejected.
  bool any_inert = false;
  for (long d : cfg.ds) {
    if (d <= 0 || (d % 4 != 0 && d % 4 != 3))
      reject("d = " + std::to_string(d) + " is not 0 or 3 mod 4");
    for (long p : cfg.ps) any_inert = any_inert || is_inert(p, d);
  }
  if (!any_inert) reject("no (p, d) pair satisfies the inert condition");
  if (cfg.l_max < 0 || cfg.m_max < 0) reject("negative l_max / m_max");
  if (cfg.order < 10) reject("series order must be >= 10");
  auto check_signs = [&](const std::vector<int>& v, const char* name) {
    if (v.empty()) reject(std::string("empty ") + name + " list");
    for (int s : v)
      if (s != 1 && s != -1) reject(std::string(name) + " must be +-1");
  };
  check_signs(cfg.aps, "a_p");
  check_signs(cfg.wps, "w_p");
  if (cfg.cases.empty()) reject("empty case list");
  for (CaseTag c : cfg.cases)
    if (c < UnramPi_StSigma || c > StPi_UnramSigma) reject("invalid case tag");
  if (cfg.workers < 1) reject("workers must be >= 1");
}

VerifyReport suite_cosets(const RunConfig& cfg) {
  std::vector<std::function<VerifyReport()>> jobs;
  for (long p : cfg.ps)
    jobs.push_back([p] { return verify_distinct_cosets(p); });
  for (auto [p, d] : inert_pairs(cfg))
    jobs.push_back([p = p, d = d, &cfg] {
      return verify_claim_identities(p, params_from_d(d), cfg.l_max, cfg.m_max);
    });
  return gather("suite-cosets", jobs, cfg.workers);
}

VerifyReport suite_volumes(const RunConfig& cfg) {
  std::vector<std::function<VerifyReport()>> jobs;
  for (auto [p, d] : inert_pairs(cfg))
    jobs.push_back([p = p, d = d, &cfg] {
      return verify_volumes(p, params_from_d(d), cfg.l_max, cfg.m_max);
    });
  return gather("suite-volumes", jobs, cfg.workers);
}

VerifyReport suite_bessel(const RunConfig& cfg) {
  std::vector<std::function<VerifyReport()>> jobs;
  for (long p : cfg.ps)
    for (int wp : cfg.wps)
      jobs.push_back([=, &cfg] { return certify(p, wp, cfg.l_max, cfg.m_max); });
  for (auto [p, d] : inert_pairs(cfg))
    jobs.push_back([p = p, d = d, &cfg] {
      return verify_hecke_matrix_identities(p, params_from_d(d), cfg.l_max,
                                            cfg.m_max);
    });
  return gather("suite-bessel", jobs, cfg.workers);
}

VerifyReport suite_whittaker(const RunConfig& cfg) {
  std::vector<std::function<VerifyReport()>> jobs;
  for (CaseTag c : cfg.cases)
    for (auto [p, d] : inert_pairs(cfg))
      jobs.push_back([c, p = p, d = d, &cfg] {
        return verify_decompositions(c, p, params_from_d(d), cfg.l_max,
                                     cfg.m_max);
      });
  return gather("suite-whittaker", jobs, cfg.workers);
}

VerifyReport suite_zeta(const RunConfig& cfg) {
  std::vector<std::function<VerifyReport()>> jobs;
  for (CaseTag c : cfg.cases)
    for (long p : cfg.ps)
      for (int ap : cfg.aps)
        for (int wp : cfg.wps)
          jobs.push_back([=, &cfg] { return verify_theorem(c, p, ap, wp, cfg.order); });
  for (CaseTag c : cfg.cases)
    for (long p : cfg.ps)
      for (int ap : cfg.aps)
        for (int wp : cfg.wps)
          jobs.push_back([=, &cfg] {
            return verify_cancellation(c, p, ap, wp, cfg.l_max, cfg.m_max);
          });
  return gather("suite-zeta", jobs, cfg.workers);
}

VerifyReport run_verify(const std::string& target, const RunConfig& cfg) {
  validate_config(cfg);
  if (target == "cosets") return suite_cosets(cfg);
  if (target == "volumes") return suite_volumes(cfg);
  if (target == "bessel") return suite_bessel(cfg);
  if (target == "whittaker") return suite_whittaker(cfg);
  if (target == "zeta") return suite_zeta(cfg);
  if (target == "all") {
    VerifyReport rep;
    rep.check = "suite-all";
    rep.add(suite_cosets(cfg));
    rep.add(suite_volumes(cfg));
    rep.add(suite_bessel(cfg));
    rep.add(suite_whittaker(cfg));
    rep.add(suite_zeta(cfg));
    return rep;
  }
  throw Error("ConfigError", "unknown verify target: " + target);
}

namespace {

std::string whittaker_cell_string(const WhittakerValue& w) {
  if (w.is_zero()) return "0";
  std::string s = "T^" + std::to_string(w.texp) + " * (" + to_string(w.coeff) + ")";
  if (w.half_pow != 0) s += " * p^(" + std::to_string(w.half_pow) + "/2)";
  return s;
}

struct TableRow {
  long m = 0;
  int t = 0;
  std::vector<std::string> values;  // one per l
  bool all_zero = true;
};

std::string render_rows(const std::string& target, const RunConfig& cfg, long p,
                        const std::vector<TableRow>& rows,
                        const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << "{\"table\":\"" << target << "\",\"p\":" << p << ",\"rows\":[";
    bool first = true;
    for (const auto& r : rows) {
      if (!first) os << ",";
      first = false;
      os << "{\"m\":" << r.m << ",\"t\":" << r.t << ",\"values\":[";
      for (size_t i = 0; i < r.values.size(); ++i)
        os << (i ? "," : "") << "\"" << r.values[i] << "\"";
      os << "]}";
    }
    os << "]}\n";
    return os.str();
  }
  const char* sep = (format == "tsv") ? "\t" : "  ";
  os << "m" << sep << "t";
  for (long l = 0; l <= cfg.l_max; ++l) os << sep << "l=" << l;
  os << "\n";
  for (const auto& r : rows) {
    os << r.m << sep << "t" << r.t;
    for (const auto& v : r.values) os << sep << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_table(const std::string& target, const RunConfig& cfg,
                         const std::string& format) {
  validate_config(cfg);
  if (format != "json" && format != "tsv" && format != "text")
    throw Error("ConfigError", "unknown format: " + format);
  long p = cfg.ps.front();
  int wp = cfg.wps.front();
  int ap = cfg.aps.front();
  CaseTag tag = cfg.cases.front();

  std::vector<TableRow> rows;
  for (long m = 0; m <= cfg.m_max; ++m)
    for (int i : cells(m)) {
      TableRow row;
      row.m = m;
      row.t = i;
      for (long l = 0; l <= cfg.l_max; ++l) {
        std::string v;
        if (target == "volumes") {
          v = to_string(volume(l, m, i, p));
          row.all_zero = false;
        } else if (target == "bessel") {
          SymPoly b = closed_form_value(p, wp, l, m, i);
          v = to_string(b);
          if (!b.is_zero()) row.all_zero = false;
        } else if (target == "whittaker") {
          WhittakerValue w = whittaker_value(tag, p, l, m, i, ap, wp);
          v = whittaker_cell_string(w);
          if (!w.is_zero()) row.all_zero = false;
        } else {
          throw Error("ConfigError", "unknown table target: " + target);
        }
        row.values.push_back(std::move(v));
      }
      if (!row.all_zero) rows.push_back(std::move(row));
    }
  return render_rows(target, cfg, p, rows, format);
}

}  // namespace gsp4
