#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace classbound {

inline constexpr const char* kVersion = "0.1.0";

// Failure categories carried by every classbound::Error. Callers that want to
// branch on the cause (the campaign runner turns HypothesisFailed into a skip
// record, for instance) read the code instead of parsing the message.
enum class Errc {
  CapExceeded,
  ElementNotInGroup,
  NotASubgroup,
  NotNormal,
  NotInvariant,
  NotTransitive,
  NotAbelian,
  ExcludedDegree,
  SingularGenerator,
  SearchFailed,
  HypothesisFailed,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ElementNotInGroup: return "ElementNotInGroup";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::ExcludedDegree: return "ExcludedDegree";
    case Errc::SingularGenerator: return "SingularGenerator";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Global knobs. Everything that can blow up in time or memory checks one of
// these caps and throws CapExceeded instead of thrashing.
struct Config {
  // Hard ceiling on the number of elements any single enumeration may produce.
  std::uint64_t enumeration_cap = 20'000'000;
  // Ceiling on |G|*|V| for brute-force conjugacy on affine groups.
  std::uint64_t affine_brute_cap = 1'000'000;
  // Exhaustive subgroup lattices are only attempted up to this group order.
  std::uint64_t exhaustive_subgroup_cap = 100;
  // The quadratic averaging oracle refuses groups larger than this.
  std::uint64_t oracle_cap = 2000;
  // Structured affine class counts bail out beyond this linear-part order.
  std::uint64_t structured_linear_cap = 1'000'000;
};

inline Config& config() {
  static Config cfg = [] {
    Config c;
    if (const char* env = std::getenv("CLASSBOUND_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) c.enumeration_cap = v;
    }
    return c;
  }();
  return cfg;
}

}  // namespace classbound
