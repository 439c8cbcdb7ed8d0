#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "affkl/bernstein.hpp"
#include "affkl/coxeter.hpp"
#include "affkl/kazhdan_lusztig.hpp"
#include "affkl/lemmas.hpp"
#include "affkl/notation.hpp"
#include "affkl/primitive.hpp"
#include "affkl/serialize.hpp"
#include "affkl/verifier.hpp"

namespace affkl::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string cache_dir_from_env() {
  const char* dir = std::getenv("AFFINE_KL_CACHE_DIR");
  return dir ? std::string(dir) : std::string();
}

Vec parse_weight(const RootDatum& d, const std::string& text) {
  const auto coords = parse_int_list(text);
  if (static_cast<int>(coords.size()) != d.dim())
    throw UsageError("expected " + std::to_string(d.dim()) + " coordinates for " + d.descriptor() + ", got " +
                     std::to_string(coords.size()));
  Vec v;
  for (int i = 0; i < d.dim(); ++i) v[i] = coords[static_cast<std::size_t>(i)];
  return v;
}

struct PrimitiveArgs {
  std::string datum = "SL:4";
  std::string group_by;
};

int cmd_primitive(const PrimitiveArgs& a, std::ostream& out) {
  const RootDatum& d = RootDatum::parse(a.datum);
  const auto prims = enumerate_primitive(d);
  const bool type_a = d.is_type_a() && d.family() == DatumFamily::kSL;

  bool agree = true;
  auto row = [&](const PrimitiveCertificate& c) {
    const bool r = is_primitive(c.w);
    const bool g = is_primitive_geometric(c.w);
    const bool f = is_primitive_factored(c.w);
    bool ok = r && g && f;
    out << std::left << std::setw(28) << format_element(c.w);
    if (type_a) {
      const Window win = window_with_exponent(c.w, natural_exponent(c));
      ok = ok && is_primitive_word(win);
      out << std::setw(22) << format_window(win);
    }
    out << "lambda = " << format_vec(c.lambda, d.dim());
    if (!ok) out << "  [criteria disagree]";
    out << '\n';
    agree = agree && ok;
  };

  out << "# " << prims.size() << " primitive elements of " << d.descriptor() << '\n';
  if (a.group_by == "pi") {
    std::map<std::int64_t, std::vector<const PrimitiveCertificate*>> groups;
    for (const auto& c : prims) groups[pi_index(c.w)].push_back(&c);
    for (const auto& [k, list] : groups) {
      out << "\n" << format_element(pi_element(d, k)) << ":\n";
      for (const auto* c : list) row(*c);
    }
  } else {
    for (const auto& c : prims) row(c);
  }
  return agree ? kExitOk : kExitMismatch;
}

struct KlpolyArgs {
  std::string datum = "SL:3";
  std::string elt;
  bool json = false;
  int cap = kDefaultIntervalCap;
};

int cmd_klpoly(const KlpolyArgs& a, std::ostream& out) {
  const RootDatum& d = RootDatum::parse(a.datum);
  const GroupElement w = parse_element(a.elt, d);
  KLCache cache(a.cap);
  cache.set_persist_dir(cache_dir_from_env());
  const auto rec = kl_basis(w, cache);
  const LatticeCheck lc = lattice_check(rec->element);
  const bool ok = bar(rec->element, cache.bars()) == rec->element && lc.in_lattice &&
                  lc.leading == HeckeElt::basis(w) && rec->coeff(w) == LaurentInt(1);
  if (a.json) {
    nlohmann::ordered_json j;
    j["datum"] = d.descriptor();
    j["w"] = format_element(w);
    j["length"] = w.length();
    j["element"] = nlohmann::ordered_json::parse(hecke_to_json(rec->element));
    j["well_formed"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "C[" << format_element(w) << "]  (length " << w.length() << ", " << rec->element.size() << " terms)\n"
        << hecke_to_text(rec->element);
    if (!ok) out << "warning: record fails bar-invariance or lattice check\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

struct CellArgs {
  std::string datum = "SL:3";
  int max_len = 6;
};

int cmd_cell(const CellArgs& a, std::ostream& out) {
  const RootDatum& d = RootDatum::parse(a.datum);
  const auto cell = enumerate_lowest_cell(d, a.max_len);
  out << "# lowest two-sided cell of " << d.descriptor() << ", length <= " << a.max_len << ": " << cell.size()
      << " elements\n";
  for (const auto& cf : cell)
    out << std::setw(3) << cf.w.length() << "  " << std::left << std::setw(30) << format_element(cf.w)
        << " v1 = " << std::setw(18) << format_element(cf.v1) << " lambda = " << std::setw(10)
        << format_vec(cf.lambda, d.dim()) << " v2 = " << format_element(cf.v2) << std::right << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string datum = "SL:3";
  int max_len = 6;
  int jobs = 1;
  std::string json_path;
  int max_lambda = 2;
  bool timing = false;
  int cap = kDefaultIntervalCap;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const RootDatum& d = RootDatum::parse(a.datum);
  VerifyOptions opts;
  opts.interval_cap = a.cap;
  opts.max_lambda = a.max_lambda;
  opts.persist_dir = cache_dir_from_env();
  const auto results = verify_lowest_cell(d, a.max_len, a.jobs, opts);
  const VerifySummary s = summarize(results);

  for (const auto& r : results) {
    if (r.status == VerifyStatus::kMismatch)
      out << "MISMATCH " << r.w << "  lhs " << r.lhs_digest << "  rhs " << r.rhs_digest << '\n';
    else if (a.timing)
      out << to_string(r.status) << ' ' << r.w << "  " << std::fixed << std::setprecision(2) << r.elapsed_ms
          << " ms\n";
  }
  out << d.descriptor() << ", length <= " << a.max_len << ": " << s.total << " elements, " << s.matched
      << " matched, " << s.mismatched << " mismatched, " << s.skipped << " skipped\n";

  if (!a.json_path.empty()) {
    ReportConfig cfg{d.descriptor(), a.max_len, a.jobs, a.max_lambda, a.timing};
    const std::string text = report_to_json(cfg, results) + "\n";
    if (a.json_path == "-") {
      out << text;
    } else {
      std::ofstream f(a.json_path);
      if (!f) throw UsageError("cannot write " + a.json_path);
      f << text;
    }
  }
  return s.mismatched == 0 ? kExitOk : kExitMismatch;
}

struct LemmaArgs {
  std::string datum = "SL:3";
  std::uint64_t seed = 1;
  int count = 100;
  int max_word = 6;
};

int cmd_lemmas(const LemmaArgs& a, std::ostream& out) {
  const RootDatum& d = RootDatum::parse(a.datum);
  bool ok = true;
  for (const auto& r : run_lemma_suite(d, {a.seed, a.count, a.max_word})) {
    out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.name << std::right
        << " cases=" << r.cases << " vacuous=" << r.vacuous << " failures=" << r.failures << '\n';
    if (!r.passed()) out << "  counterexample: " << r.counterexample << '\n';
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitMismatch;
}

struct LusztigArgs {
  std::string datum = "SL:3";
  std::string lambda;
  int cap = kDefaultIntervalCap;
};

int cmd_lusztig(const LusztigArgs& a, std::ostream& out) {
  const RootDatum& d = RootDatum::parse(a.datum);
  const Vec lambda = parse_weight(d, a.lambda);
  if (!d.is_dominant(lambda)) throw UsageError("lambda must be dominant");
  KLCache cache(a.cap);
  cache.set_persist_dir(cache_dir_from_env());
  const LusztigCheck c = verify_lusztig(d, lambda, cache);
  const GroupElement w = longest_finite(d) * GroupElement::translation(d, lambda);
  out << "lambda = " << format_vec(lambda, d.dim()) << ", dim V(lambda) = " << weyl_dimension(d, lambda) << '\n'
      << "C[" << format_element(w) << "]: " << c.canonical.size() << " terms, digest " << hecke_digest(c.canonical)
      << '\n'
      << "chi(Y) C[w0]: digest " << hecke_digest(c.left) << '\n'
      << "C[w0] chi(Y): digest " << hecke_digest(c.right) << '\n'
      << (c.ok ? "match" : "MISMATCH") << '\n';
  return c.ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig computations in extended affine Weyl groups", "affkl"};
  app.require_subcommand(1);
  const std::string datum_help = "root datum: SL:n, GL:n or cartan:[[...]]";

  PrimitiveArgs pa;
  auto* primitive = app.add_subcommand("primitive", "list the primitive elements");
  primitive->add_option("--datum", pa.datum, datum_help)->capture_default_str();
  primitive->add_option("--group-by", pa.group_by, "group rows by their length-zero part")
      ->check(CLI::IsMember({"pi"}));

  KlpolyArgs ka;
  auto* klpoly = app.add_subcommand("klpoly", "print the canonical basis element C_w");
  klpoly->add_option("--datum", ka.datum, datum_help)->capture_default_str();
  klpoly->add_option("--elt", ka.elt, "element, e.g. \"pi^2 s2 s0 s1\" or [5,2,4,7]")->required();
  klpoly->add_flag("--json", ka.json, "print JSON");
  klpoly->add_option("--cap", ka.cap, "Bruhat interval length cap")->capture_default_str();

  CellArgs ca;
  auto* cell = app.add_subcommand("cell", "enumerate the lowest two-sided cell");
  cell->add_option("--datum", ca.datum, datum_help)->capture_default_str();
  cell->add_option("--max-len", ca.max_len, "maximal length")->required()->check(CLI::NonNegativeNumber);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check the canonical basis factorization on the lowest cell");
  verify->add_option("--datum", va.datum, datum_help)->capture_default_str();
  verify->add_option("--max-len", va.max_len, "maximal length")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", va.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--json", va.json_path, "write a JSON report to this path (- for stdout)");
  verify->add_option("--max-lambda", va.max_lambda, "largest lambda coordinate, negative for no bound")
      ->capture_default_str();
  verify->add_flag("--timing", va.timing, "report per-element timings");
  verify->add_option("--cap", va.cap, "Bruhat interval length cap")->capture_default_str();

  LemmaArgs la;
  auto* lemmas = app.add_subcommand("lemmas", "run the randomized lemma suite and the SL:5 golden tables");
  lemmas->add_option("--datum", la.datum, datum_help)->capture_default_str();
  lemmas->add_option("--seed", la.seed, "random seed")->capture_default_str();
  lemmas->add_option("--count", la.count, "instances per lemma")->capture_default_str()->check(CLI::NonNegativeNumber);
  lemmas->add_option("--max-word", la.max_word, "maximal random word length")->capture_default_str();

  LusztigArgs lua;
  auto* lusztig = app.add_subcommand("lusztig", "compare C_{w0 y^lambda} with chi_lambda(Y) C_{w0}");
  lusztig->add_option("--datum", lua.datum, datum_help)->capture_default_str();
  lusztig->add_option("--lambda", lua.lambda, "dominant weight c1,..,cn")->required();
  lusztig->add_option("--cap", lua.cap, "Bruhat interval length cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (primitive->parsed()) return cmd_primitive(pa, out);
    if (klpoly->parsed()) return cmd_klpoly(ka, out);
    if (cell->parsed()) return cmd_cell(ca, out);
    if (verify->parsed()) return cmd_verify(va, out);
    if (lemmas->parsed()) return cmd_lemmas(la, out);
    if (lusztig->parsed()) return cmd_lusztig(lua, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Datum, element and window syntax errors all derive from invalid_argument.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace affkl::cli
