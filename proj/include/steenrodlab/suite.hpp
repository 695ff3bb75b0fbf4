#pragma once

// The acceptance battery for one (p, r).

#include <cstdint>
#include <string>
#include <vector>

#include "steenrodlab/extraspecial.hpp"
#include "steenrodlab/graded.hpp"

namespace steenrodlab {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s);

struct SuiteCheck {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::size_t property_cases = 200;
};

struct SuiteReport {
  AlgebraParams params;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

// True when xs is a single vector equal to a unit multiple of target.
bool spans_exactly(const std::vector<GradedElement>& xs, const GradedElement& target);

// Σ_i a_i b_i
GradedElement symplectic_class(AlgebraParams params);

// Checks whose size guard exceeds the cap are reported as Skipped.
SuiteReport run_suite(AlgebraParams params, const SuiteOptions& options = {});

}  // namespace steenrodlab
