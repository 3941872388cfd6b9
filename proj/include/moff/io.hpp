#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "moff/designs.hpp"
#include "moff/fusion.hpp"
#include "moff/mub.hpp"

namespace moff {

inline constexpr const char* kFormatTag = "moff/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical serialization: nlohmann objects keep keys sorted; rationals are
// "p/q" strings; exact files never contain floats.
nlohmann::json basis_set_to_json(const BasisSet& s);
BasisSet basis_set_from_json(const nlohmann::json& j);

nlohmann::json design_to_json(const BlockFamily& f);
BlockFamily design_from_json(const nlohmann::json& j);

nlohmann::json frame_to_json(const FusionFrame& ff);
FusionFrame frame_from_json(const nlohmann::json& j);

/// Certificate plus tool version, arithmetic mode, tolerance and the digest
/// of the frame file it was computed from.
nlohmann::json certificate_to_json(const Certificate& c, const std::string& input_digest);

void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

/// Rows of 0/1 values.
std::string incidence_to_csv(const IncidenceMatrix& s);
/// Rows of tr(P_i P_j); "p/q" strings in exact mode, decimal otherwise.
std::string cross_gramian_to_csv(const CrossGramian& g);

void save_text(const std::string& path, const std::string& body);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits. Content
/// fingerprint for reports, not a cryptographic hash.
std::string file_digest(const std::string& path);
std::string bytes_digest(const std::string& bytes);

}  // namespace moff
