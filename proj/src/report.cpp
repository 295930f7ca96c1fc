#include "igt/report.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace igt {

ReportRow ReportRow::compare(const std::string& id, const std::string& anchor, double value,
                             double reference, double tolerance) {
  ReportRow r;
  r.check_id = id;
  r.paper_anchor = anchor;
  r.value = value;
  r.reference = reference;
  r.abs_err = std::abs(value - reference);
  r.rel_err = (reference != 0.0) ? r.abs_err / std::abs(reference) : r.abs_err;
  r.tolerance = tolerance;
  r.pass = r.abs_err <= tolerance;
  return r;
}

ReportRow ReportRow::residual(const std::string& id, const std::string& anchor, double residual,
                              double tolerance) {
  ReportRow r;
  r.check_id = id;
  r.paper_anchor = anchor;
  r.value = residual;
  r.reference = 0.0;
  r.abs_err = std::abs(residual);
  r.rel_err = r.abs_err;
  r.tolerance = tolerance;
  r.pass = r.abs_err <= tolerance;
  return r;
}

ReportRow& ReportRow::expect_fail() {
  pass = !pass;
  check_id += "_negctl";
  return *this;
}

ReportRow& ReportRow::with_runtime(long ms) {
  runtime_ms = ms;
  return *this;
}

void Report::add(ReportRow row) { rows.push_back(std::move(row)); }

void Report::append(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

bool Report::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

int Report::n_fail() const {
  int n = 0;
  for (const auto& r : rows)
    if (!r.pass) ++n;
  return n;
}

namespace {

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(12);
  ss << x;
  return ss.str();
}

}  // namespace

void Report::write_csv(std::ostream& os) const {
  os << "check_id,paper_anchor,value,reference,abs_err,rel_err,tolerance,pass,runtime_ms\n";
  for (const auto& r : rows) {
    os << r.check_id << ',' << r.paper_anchor << ',' << fmt(r.value) << ',' << fmt(r.reference)
       << ',' << fmt(r.abs_err) << ',' << fmt(r.rel_err) << ',' << fmt(r.tolerance) << ','
       << (r.pass ? "true" : "false") << ',' << r.runtime_ms << '\n';
  }
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["all_pass"] = all_pass();
  j["n_rows"] = rows.size();
  j["n_fail"] = n_fail();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["check_id"] = r.check_id;
    row["paper_anchor"] = r.paper_anchor;
    row["value"] = r.value;
    row["reference"] = r.reference;
    row["abs_err"] = r.abs_err;
    row["rel_err"] = r.rel_err;
    row["tolerance"] = r.tolerance;
    row["pass"] = r.pass;
    row["runtime_ms"] = r.runtime_ms;
    arr.push_back(row);
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace igt
