#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartsym/induced.hpp"

namespace cartsym {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  double residual = 0.0;
  std::string detail;
};

struct VerificationRun {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.skipped && !c.pass) return false;
    return true;
  }
};

/// Runs every module invariant suite against one (G, X, n) context.
/// Basis-dependent checks are marked skipped when the class is zero.
/// Deterministic for a fixed seed; per-check sub-seeds are fixed offsets.
VerificationRun run_verification(const SymmetrizerContext& ctx,
                                 std::uint64_t seed);

// --- seeded operator constructions shared by the verification suites ---

enum class OperatorProperty { Normal, Unitary, Hermitian, SkewHermitian, Psd, Pd };

inline constexpr OperatorProperty kAllProperties[] = {
    OperatorProperty::Normal,       OperatorProperty::Unitary,
    OperatorProperty::Hermitian,    OperatorProperty::SkewHermitian,
    OperatorProperty::Psd,          OperatorProperty::Pd};

const char* property_name(OperatorProperty p);
bool property_value(const OperatorProperties& props, OperatorProperty p);

Matrix random_unitary(Rng& rng, int n);
Matrix make_with_property(Rng& rng, int n, OperatorProperty p);
/// Best effort: at n = 1 every matrix is normal, so that recipe cannot
/// violate the property there.
Matrix make_without_property(Rng& rng, int n, OperatorProperty p);
Matrix make_with_rank(Rng& rng, int n, int rank);

}  // namespace cartsym
