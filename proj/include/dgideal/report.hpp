#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgideal/graded.hpp"

namespace dgideal {

/* First failing basis tuple of a diagram comparison, with both sides rendered
   as exact linear combinations. */
struct WitnessInfo {
  int degree = 0;
  MultiIndex atoms;                // per-factor (degree, index)
  std::vector<std::string> tuple;  // per-factor labels
  std::string lhs, rhs;
};

struct ReportEntry {
  std::string label;
  bool pass = true;
  int failure_count = 0;
  std::optional<std::string> duplicate_of;
  std::optional<WitnessInfo> witness;
};

struct DiagramReport {
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  int failure_total() const;
  const ReportEntry* find(const std::string& label) const;
  void append(const DiagramReport& other, const std::string& prefix = "");
};

/* Verification outcome: the structure is present exactly when every entry of
   the report passed. */
template <typename T>
struct Verified {
  std::optional<T> value;
  DiagramReport report;
  bool ok() const { return report.all_pass(); }
};

/* Compare two maps that must be equal for a diagram to commute. Shapes are a
   precondition (mismatch throws); inequality produces a failing entry whose
   witness is the first differing column, scanning source degrees ascending
   then columns ascending. The tuple is split into per-factor labels of the
   common source. */
ReportEntry check_equal(const std::string& label, const GradedMap& lhs, const GradedMap& rhs);

/* Same comparison but the entry passes only if both given entries pass;
   used for axioms stated as a conjunction of two diagrams. */
ReportEntry merge_entries(const std::string& label, const ReportEntry& a, const ReportEntry& b);

}  // namespace dgideal
