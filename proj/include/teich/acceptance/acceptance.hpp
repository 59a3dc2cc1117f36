#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace teich::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // measured quantities, or the failure reason
  double seconds;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  /// Pinned sample sizes only; otherwise randomized criteria also run with seed + 1.
  bool quick = false;
};

inline constexpr int kCriteria = 12;

/// Runs criterion `id` in [1, 12]; exceptions become failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_all(const AcceptanceOptions& options = {});

/// "[PASS]  6  KZ engine (0.41 s): detail"; the timing is dropped when
/// `with_time` is false so that the line is reproducible.
std::string format_line(const CriterionResult& r, bool with_time = true);

}  // namespace teich::acceptance
