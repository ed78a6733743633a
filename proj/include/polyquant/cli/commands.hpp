#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyquant/prequant/prequant.hpp"

namespace polyquant::cli {

enum class Format { text, json };

/// Deliberate defects used to confirm that the checks can fail.
struct Faults {
  bool flip_kappa_sign = false;
  bool skip_state_restriction = false;
  bool drop_on_shell = false;
};

struct RunConfig {
  Format format = Format::text;
  VolumeMode volume_mode = VolumeMode::symbolic_l3;
  bool on_shell = true;
  bool massless = false;
  std::uint64_t seed = 12345;
  int samples = 100;
  /// Step for the selected numeric check; each check has its own default.
  std::optional<double> h;
  int extent = 16;
  Faults faults;
};

/// Rendered output plus the process exit status.
struct Outcome {
  int exit_code = 0;
  std::string output;
};

enum class DeriveTarget { commutators, momentum, energy };
enum class CheckTarget { oracle, kg };

/// Q(f) unrestricted and restricted. Parse errors exit with status 2.
Outcome cmd_quantize(const std::string& expr, const RunConfig& cfg);
/// Derivation steps and a comparison with the stored expectation.
/// `j` selects the momentum component (1..3).
Outcome cmd_derive(DeriveTarget target, int j, const RunConfig& cfg);
Outcome cmd_check(CheckTarget target, const RunConfig& cfg);
/// Every symbolic and numeric regression check; status 1 names the first failure.
Outcome cmd_verify_all(const RunConfig& cfg);

struct NamedCheck {
  std::string name;
  std::string subject;
  bool passed = false;
  std::string detail;
};

/// The checks behind cmd_verify_all, in execution order.
std::vector<NamedCheck> run_verification_suite(const RunConfig& cfg);

}  // namespace polyquant::cli
