#include "affkl/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "affkl/kazhdan_lusztig.hpp"
#include "affkl/notation.hpp"

namespace affkl {

namespace {

using ordered_json = nlohmann::ordered_json;
constexpr int kKLFileVersion = 1;

struct NamedTerm {
  int length;
  std::string name;
  const LaurentInt* coeff;
};

std::vector<NamedTerm> named_terms(const HeckeElt& h) {
  std::vector<NamedTerm> v;
  v.reserve(h.size());
  for (const auto& [w, c] : h.terms()) v.push_back({w.length(), format_element(w), &c});
  std::sort(v.begin(), v.end(), [](const NamedTerm& a, const NamedTerm& b) {
    return a.length != b.length ? a.length < b.length : a.name < b.name;
  });
  return v;
}

ordered_json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

ordered_json terms_json(const HeckeElt& h) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : named_terms(h)) {
    ordered_json coeff = ordered_json::object();
    for (const auto& [e, c] : t.coeff->terms()) coeff[std::to_string(e)] = coeff_json(c);
    terms.push_back({{"elt", t.name}, {"coeff", coeff}});
  }
  return terms;
}

HeckeElt terms_from_json(const ordered_json& terms, const RootDatum& d) {
  HeckeElt h;
  for (const auto& t : terms) {
    const GroupElement w = parse_element(t.at("elt").get<std::string>(), d);
    LaurentInt c;
    for (const auto& [e, v] : t.at("coeff").items()) {
      const BigInt value = v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<std::int64_t>());
      c += LaurentInt::monomial(value, std::stoi(e));
    }
    h.add_term(w, c);
  }
  return h;
}

std::string record_path(const std::string& dir, const GroupElement& w) {
  Fnv1a h;
  h.add(w.datum().descriptor());
  h.add(format_element(w));
  std::ostringstream os;
  os << "kl-v" << kKLFileVersion << '-' << std::hex << std::setw(16) << std::setfill('0') << h.value() << ".json";
  return (std::filesystem::path(dir) / os.str()).string();
}

}  // namespace

std::string hecke_to_json(const HeckeElt& h, int indent) {
  ordered_json j;
  j["terms"] = terms_json(h);
  return j.dump(indent);
}

HeckeElt hecke_from_json(const std::string& text, const RootDatum& d) {
  return terms_from_json(ordered_json::parse(text).at("terms"), d);
}

std::string hecke_digest(const HeckeElt& h) {
  Fnv1a f;
  f.add(hecke_to_json(h));
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << f.value();
  return os.str();
}

std::string hecke_to_text(const HeckeElt& h) {
  std::ostringstream os;
  for (const auto& t : named_terms(h)) os << "  (" << t.coeff->to_string() << ")  T[" << t.name << "]\n";
  if (h.is_zero()) os << "  0\n";
  return os.str();
}

void save_kl_record(const std::string& dir, const KLRecord& rec) {
  std::filesystem::create_directories(dir);
  ordered_json j;
  j["version"] = kKLFileVersion;
  j["datum"] = rec.w.datum().descriptor();
  j["w"] = format_element(rec.w);
  j["terms"] = terms_json(rec.element);
  const std::string path = record_path(dir, rec.w);
  // Per-thread temporary so concurrent writers never share a file.
  const std::string tmp = path + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

std::optional<KLRecord> load_kl_record(const std::string& dir, const GroupElement& w) {
  std::ifstream in(record_path(dir, w));
  if (!in) return std::nullopt;
  try {
    const auto j = ordered_json::parse(in);
    if (j.at("version").get<int>() != kKLFileVersion) return std::nullopt;
    if (j.at("datum").get<std::string>() != w.datum().descriptor()) return std::nullopt;
    if (j.at("w").get<std::string>() != format_element(w)) return std::nullopt;
    return KLRecord{w, terms_from_json(j.at("terms"), w.datum())};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace affkl
