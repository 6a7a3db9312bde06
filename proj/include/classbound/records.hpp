#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

namespace classbound {

// Outcome of one lemma check on one instance. lhs/rhs are doubles because
// some bounds are transcendental; integer quantities below 2^53 stay exact.
struct LemmaCheckRecord {
  std::string lemma;
  std::string instance;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
  double slack = 0;  // rhs - lhs
  std::string mode = "exact";  // "sampled" when a universal hypothesis was subsampled
  std::map<std::string, double> extras;
  friend bool operator==(const LemmaCheckRecord&, const LemmaCheckRecord&) = default;
};

struct SkipRecord {
  std::string lemma;
  std::string instance;
  std::string reason;
  friend bool operator==(const SkipRecord&, const SkipRecord&) = default;
};

inline LemmaCheckRecord make_bound_record(std::string lemma, std::string instance, double lhs,
                                          double rhs, bool sampled = false) {
  LemmaCheckRecord r;
  r.lemma = std::move(lemma);
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs;
  r.slack = rhs - lhs;
  if (sampled) r.mode = "sampled";
  return r;
}

inline LemmaCheckRecord make_equality_record(std::string lemma, std::string instance, double lhs,
                                             double rhs, bool sampled = false) {
  LemmaCheckRecord r = make_bound_record(std::move(lemma), std::move(instance), lhs, rhs, sampled);
  r.holds = lhs == rhs;
  return r;
}

}  // namespace classbound
