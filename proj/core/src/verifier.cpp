#include "affkl/verifier.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "affkl/notation.hpp"
#include "affkl/serialize.hpp"

namespace affkl {

const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kMatch:
      return "match";
    case VerifyStatus::kMismatch:
      return "mismatch";
    case VerifyStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

HeckeElt factorized_side(const CellFactorization& cf, KLCache& cache, int weight_cap) {
  const RootDatum& d = cf.w.datum();
  const GroupElement& w0 = longest_finite(d);
  const HeckeElt left = arrow_basis(cf.v1, Side::kLeft, cache).elt;
  const HeckeElt right = arrow_basis(cf.v2, Side::kRight, cache).elt;
  HeckeElt rhs = t_multiply(t_multiply(left, kl_basis(w0, cache)->element), right);
  if (!cf.lambda.is_zero()) rhs = t_multiply(chi(d, cf.lambda, cache.bars(), weight_cap), rhs);
  return rhs;
}

VerificationReport verify_factorization(const GroupElement& w, KLCache& cache, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const RootDatum& d = w.datum();
  VerificationReport r;
  r.datum = d.descriptor();
  r.w = format_element(w);
  r.length = w.length();
  auto finish = [&]() {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  const auto cf = lowest_cell_factorize(w);
  if (!cf) {
    r.reason = "element is not in the lowest two-sided cell";
    return finish();
  }
  r.v1 = format_element(cf->v1);
  r.v2 = format_element(cf->v2);
  for (int i = 0; i < d.dim(); ++i) r.lambda.push_back(cf->lambda[i]);
  if (opts.max_lambda >= 0)
    for (auto c : r.lambda)
      if (c > opts.max_lambda) {
        r.reason = "lambda coordinate exceeds " + std::to_string(opts.max_lambda);
        return finish();
      }
  if (w.length() > opts.interval_cap) {
    r.reason = "length exceeds interval cap " + std::to_string(opts.interval_cap);
    return finish();
  }
  try {
    const HeckeElt& lhs = kl_basis(w, cache)->element;
    const HeckeElt rhs = factorized_side(*cf, cache, opts.weight_cap);
    r.lhs_digest = hecke_digest(lhs);
    r.rhs_digest = hecke_digest(rhs);
    if (lhs == rhs) {
      r.status = VerifyStatus::kMatch;
    } else {
      r.status = VerifyStatus::kMismatch;
      r.difference = lhs - rhs;
    }
  } catch (const CapExceeded& e) {
    r.status = VerifyStatus::kSkipped;
    r.reason = e.what();
  }
  return finish();
}

VerifySummary summarize(const std::vector<VerificationReport>& results) {
  VerifySummary s;
  for (const auto& r : results) {
    ++s.total;
    if (r.status == VerifyStatus::kMatch) ++s.matched;
    if (r.status == VerifyStatus::kMismatch) ++s.mismatched;
    if (r.status == VerifyStatus::kSkipped) ++s.skipped;
  }
  return s;
}

std::vector<VerificationReport> verify_lowest_cell(const RootDatum& d, int max_len, int jobs,
                                                   const VerifyOptions& opts, KLCache* merged) {
  const auto cell = enumerate_lowest_cell(d, max_len);
  std::vector<VerificationReport> results(cell.size());
  jobs = std::max(1, jobs);
  std::vector<KLCache> caches;
  caches.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    caches.emplace_back(opts.interval_cap);
    caches.back().set_persist_dir(opts.persist_dir);
  }
  std::atomic<std::size_t> next{0};
  auto work = [&](int worker) {
    for (std::size_t i = next++; i < cell.size(); i = next++)
      results[i] = verify_factorization(cell[i].w, caches[static_cast<std::size_t>(worker)], opts);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  if (merged)
    for (const auto& c : caches) merged->merge_from(c);
  return results;
}

std::string report_to_json(const ReportConfig& config, const std::vector<VerificationReport>& results, int indent) {
  using json = nlohmann::ordered_json;
  json j;
  j["config"] = {{"datum", config.datum},
                 {"max_len", config.max_len},
                 {"jobs", config.jobs},
                 {"max_lambda", config.max_lambda}};
  j["results"] = json::array();
  for (const auto& r : results) {
    json e;
    e["datum"] = r.datum;
    e["w"] = r.w;
    e["length"] = r.length;
    if (!r.v1.empty()) e["factorization"] = {{"v1", r.v1}, {"lambda", r.lambda}, {"v2", r.v2}};
    e["status"] = to_string(r.status);
    if (!r.reason.empty()) e["reason"] = r.reason;
    if (!r.lhs_digest.empty()) {
      e["lhs_digest"] = r.lhs_digest;
      e["rhs_digest"] = r.rhs_digest;
    }
    if (r.difference) e["difference"] = json::parse(hecke_to_json(*r.difference));
    if (config.timing) e["elapsed_ms"] = r.elapsed_ms;
    j["results"].push_back(std::move(e));
  }
  const VerifySummary s = summarize(results);
  j["summary"] = {{"total", s.total}, {"matched", s.matched}, {"mismatched", s.mismatched}, {"skipped", s.skipped}};
  return j.dump(indent);
}

}  // namespace affkl
