#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Validation failures (bad group data, bad input): CLI exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidType : ValidationError {
  explicit InvalidType(const std::string& m) : ValidationError(m) {}
};
struct InvalidLattice : ValidationError {
  explicit InvalidLattice(const std::string& m) : ValidationError(m) {}
};
struct WildRamification : ValidationError {
  explicit WildRamification(const std::string& m) : ValidationError(m) {}
};
struct DimensionMismatch : ValidationError {
  explicit DimensionMismatch(const std::string& m) : ValidationError(m) {}
};
struct MixedGroups : ValidationError {
  explicit MixedGroups(const std::string& m) : ValidationError(m) {}
};
struct NotDominant : ValidationError {
  explicit NotDominant(const std::string& m) : ValidationError(m) {}
};
struct NotComparable : ValidationError {
  explicit NotComparable(const std::string& m) : ValidationError(m) {}
};
struct UnsupportedLevel : ValidationError {
  explicit UnsupportedLevel(const std::string& m) : ValidationError(m) {}
};
struct NoRelation : ValidationError {
  explicit NoRelation(const std::string& m) : ValidationError(m) {}
};
struct WrongType : ValidationError {
  explicit WrongType(const std::string& m) : ValidationError(m) {}
};
struct NotStabilizing : ValidationError {
  explicit NotStabilizing(const std::string& m) : ValidationError(m) {}
};

// Internal consistency failure: a generated root system disagrees with the
// folding table. Never expected on valid data.
struct TableMismatch : std::logic_error {
  explicit TableMismatch(const std::string& m) : std::logic_error(m) {}
};

// Enumeration budget exhausted: CLI exit code 3.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};
struct RankCap : CapExceeded {
  explicit RankCap(const std::string& m) : CapExceeded(m) {}
};
struct LengthCap : CapExceeded {
  explicit LengthCap(const std::string& m) : CapExceeded(m) {}
};

}  // namespace schubert
