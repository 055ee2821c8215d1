#pragma once

#include <ostream>
#include <span>
#include <string>

#include "qbcap/matrix.hpp"
#include "qbcap/sweep.hpp"

namespace qbcap {

enum class OutputFormat { Csv, Jsonl };

/// 12 significant digits, '.' decimal separator, no grouping; fixed across
/// platforms so output files are byte-deterministic.
std::string format_number(double value);

/// Header `p,q,n,capacity_numeric,capacity_oracle,abs_err`, one record per
/// line, absent fields empty, LF line endings.
void write_records_csv(std::ostream& os, std::span<const SweepRecord> records);

/// One object per line with the same field names; absent fields omitted.
void write_records_jsonl(std::ostream& os, std::span<const SweepRecord> records);

void write_records(std::ostream& os, std::span<const SweepRecord> records, OutputFormat format);

/// `feature,value` lines (csv) or a single JSON object (jsonl); absent
/// features omitted.
void write_feature_report(std::ostream& os, const FeatureReport& report, OutputFormat format);

/// One matrix row per line, entries as (re,im) pairs.
void write_matrix(std::ostream& os, const ComplexMatrix& m);

}  // namespace qbcap
