#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace linhash {

/// Outcome of re-checking one registered claim at desk scale.
struct ClaimReport {
  enum class Status { Pass, Fail, Skipped };

  std::string claim_id;
  Status status = Status::Skipped;
  /// Measured quantities, name -> canonical value string (exact rationals as
  /// "num/den", floats via shortest round-trip form).
  std::vector<std::pair<std::string, std::string>> measured;
  std::string bound;        // the checked inequality, as text
  std::string regime_note;  // desk-scale relaxations vs the stated regime

  nlohmann::ordered_json to_json() const;
};

const char* claim_status_name(ClaimReport::Status status);

/// Registry of verifiable claims. Constants and experiment parameters come
/// from a JSON config (config/claims.json); an embedded copy of that file is
/// the default.
class ClaimRegistry {
 public:
  ClaimRegistry();  // embedded default config
  explicit ClaimRegistry(nlohmann::json config);
  static ClaimRegistry from_file(const std::string& path);

  const std::vector<std::string>& ids() const { return ids_; }
  bool has(const std::string& id) const;

  /// Runs the claim's experiment; deterministic for a fixed seed.
  ClaimReport verify(const std::string& id, uint64_t seed) const;

  /// Runs every claim in registry order.
  std::vector<ClaimReport> verify_all(uint64_t seed) const;

  const nlohmann::json& config() const { return config_; }

 private:
  nlohmann::json config_;
  std::vector<std::string> ids_;
};

namespace detail {
const char* embedded_claims_config();
}

}  // namespace linhash
