#include "qbcap/io.hpp"

#include <cstdio>

namespace qbcap {

std::string format_number(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_records_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << "p,q,n,capacity_numeric,capacity_oracle,abs_err\n";
  for (const SweepRecord& r : records) {
    os << format_number(r.p) << ',';
    if (r.q) os << format_number(*r.q);
    os << ',' << r.n << ',' << format_number(r.capacity_numeric) << ',';
    if (r.capacity_oracle) os << format_number(*r.capacity_oracle);
    os << ',';
    if (r.abs_err) os << format_number(*r.abs_err);
    os << '\n';
  }
}

void write_records_jsonl(std::ostream& os, std::span<const SweepRecord> records) {
  for (const SweepRecord& r : records) {
    os << "{\"p\":" << format_number(r.p);
    if (r.q) os << ",\"q\":" << format_number(*r.q);
    os << ",\"n\":" << r.n << ",\"capacity_numeric\":" << format_number(r.capacity_numeric);
    if (r.capacity_oracle) os << ",\"capacity_oracle\":" << format_number(*r.capacity_oracle);
    if (r.abs_err) os << ",\"abs_err\":" << format_number(*r.abs_err);
    os << "}\n";
  }
}

void write_records(std::ostream& os, std::span<const SweepRecord> records, OutputFormat format) {
  if (format == OutputFormat::Csv)
    write_records_csv(os, records);
  else
    write_records_jsonl(os, records);
}

void write_feature_report(std::ostream& os, const FeatureReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    os << "feature,value\n";
    for (double p : report.sudden_death_points) os << "sudden_death_p," << format_number(p) << '\n';
    if (report.frozen_onset) os << "frozen_onset," << format_number(*report.frozen_onset) << '\n';
    if (report.frozen_value) os << "frozen_value," << format_number(*report.frozen_value) << '\n';
    if (report.crossing_x) os << "crossing_x," << format_number(*report.crossing_x) << '\n';
    return;
  }
  os << "{\"sudden_death_points\":[";
  for (std::size_t i = 0; i < report.sudden_death_points.size(); ++i) {
    if (i) os << ',';
    os << format_number(report.sudden_death_points[i]);
  }
  os << ']';
  if (report.frozen_onset) os << ",\"frozen_onset\":" << format_number(*report.frozen_onset);
  if (report.frozen_value) os << ",\"frozen_value\":" << format_number(*report.frozen_value);
  if (report.crossing_x) os << ",\"crossing_x\":" << format_number(*report.crossing_x);
  os << "}\n";
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << '(' << format_number(m(i, j).real()) << ',' << format_number(m(i, j).imag()) << ')';
    }
    os << '\n';
  }
}

}  // namespace qbcap
