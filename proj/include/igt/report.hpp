#pragma once

// Named residual rows emitted by every verification command, with CSV and
// JSON serialization.  pass <=> err <= tolerance (inverted for rows marking
// designed-to-fail negative controls).

#include <iosfwd>
#include <string>
#include <vector>

namespace igt {

struct ReportRow {
  std::string check_id;
  std::string paper_anchor;
  double value = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long runtime_ms = 0;

  // value/reference comparison row
  static ReportRow compare(const std::string& id, const std::string& anchor, double value,
                           double reference, double tolerance);
  // residual-only row (reference 0)
  static ReportRow residual(const std::string& id, const std::string& anchor, double residual,
                            double tolerance);
  // negative control: passes when the raw check fails as designed
  ReportRow& expect_fail();
  ReportRow& with_runtime(long ms);
};

struct Report {
  std::vector<ReportRow> rows;

  void add(ReportRow row);
  void append(const Report& other);
  bool all_pass() const;
  int n_fail() const;
  void write_csv(std::ostream& os) const;
  std::string to_json() const;
};

}  // namespace igt
