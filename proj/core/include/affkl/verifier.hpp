#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affkl/bernstein.hpp"
#include "affkl/kazhdan_lusztig.hpp"
#include "affkl/primitive.hpp"

namespace affkl {

enum class VerifyStatus { kMatch, kMismatch, kSkipped };
const char* to_string(VerifyStatus s);

struct VerifyOptions {
  int interval_cap = kDefaultIntervalCap;
  /// Largest allowed lambda coordinate; negative means unbounded.
  int max_lambda = 2;
  int weight_cap = kDefaultWeightCap;
  /// Handed to every worker cache; empty disables persistence.
  std::string persist_dir;
};

/// Outcome of comparing C_w with chi_lambda(Y) C'<-_{v1} C_{w_0} C'->_{v2}.
struct VerificationReport {
  std::string datum;
  std::string w;
  int length = 0;
  std::string v1;
  std::vector<std::int64_t> lambda;
  std::string v2;
  VerifyStatus status = VerifyStatus::kSkipped;
  std::string reason;
  std::string lhs_digest;
  std::string rhs_digest;
  /// lhs - rhs, only on mismatch.
  std::optional<HeckeElt> difference;
  double elapsed_ms = 0;
};

/// Right-hand side of the factorization for a given cell factorization.
HeckeElt factorized_side(const CellFactorization& cf, KLCache& cache, int weight_cap = kDefaultWeightCap);

VerificationReport verify_factorization(const GroupElement& w, KLCache& cache, const VerifyOptions& opts = {});

struct VerifySummary {
  int total = 0;
  int matched = 0;
  int mismatched = 0;
  int skipped = 0;
};
VerifySummary summarize(const std::vector<VerificationReport>& results);

/// Verifies every element of the lowest cell up to max_len with `jobs`
/// workers.  Each worker owns a KL cache; when `merged` is given the worker
/// caches are merged into it afterwards.  Results come back in enumeration
/// order regardless of jobs.
std::vector<VerificationReport> verify_lowest_cell(const RootDatum& d, int max_len, int jobs,
                                                   const VerifyOptions& opts, KLCache* merged = nullptr);

struct ReportConfig {
  std::string datum;
  int max_len = 0;
  int jobs = 1;
  int max_lambda = 2;
  bool timing = false;
};
/// {"config":{...},"results":[...],"summary":{...}}; timings only when
/// config.timing is set so that reports are reproducible byte for byte.
std::string report_to_json(const ReportConfig& config, const std::vector<VerificationReport>& results,
                           int indent = 2);

}  // namespace affkl
