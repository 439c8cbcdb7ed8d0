#pragma once

#include <optional>
#include <string>

#include "affkl/hecke.hpp"

namespace affkl {

struct KLRecord;

/// {"terms":[{"elt":"<normal form>","coeff":{"<exp>":c}}]}, terms sorted by
/// (length, normal form); coefficients beyond 64 bits are written as strings.
std::string hecke_to_json(const HeckeElt& h, int indent = -1);
HeckeElt hecke_from_json(const std::string& text, const RootDatum& d);

/// Hex FNV-1a digest of the compact serialization.
std::string hecke_digest(const HeckeElt& h);

/// Human-readable listing, one "coeff  T[elt]" line per term.
std::string hecke_to_text(const HeckeElt& h);

/// Persisted KL tables: one versioned file per record, named by a content
/// hash of datum and element.
void save_kl_record(const std::string& dir, const KLRecord& rec);
std::optional<KLRecord> load_kl_record(const std::string& dir, const GroupElement& w);

}  // namespace affkl
