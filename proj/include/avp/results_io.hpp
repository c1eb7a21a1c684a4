#pragma once

#include "avp/experiment.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace avp {

enum class ResultFormat
{
  csv,
  json,
};

ResultFormat parse_format(const std::string& text);

//! Column order shared by the CSV header and the JSON keys.
const std::vector<std::string>& result_columns();

void write_results(const std::vector<ExperimentRecord>& records, std::ostream& out, ResultFormat format);
//! Throws IoError if the file cannot be written.
void write_results(const std::vector<ExperimentRecord>& records,
                   const std::string& path_out,
                   ResultFormat format);

//! Reads a file written by write_results; the format is detected from the
//! first non-blank character ('[' means JSON).
std::vector<ExperimentRecord> read_results(const std::string& path);

struct MethodSummary
{
  std::string method;
  std::size_t count = 0;
  double loss_q1 = 0.0;
  double loss_median = 0.0;
  double loss_q3 = 0.0;
  double wall_ms_median = 0.0;
};

//! Linear-interpolation quantile (type 7) of unsorted values.
double quantile(std::vector<double> values, double q);

//! Per-method quartiles of the loss and median wall time, sorted by method.
std::vector<MethodSummary> summarize(const std::vector<ExperimentRecord>& records);

//! Loads a response/design table: first column Y, remaining columns X. A
//! non-numeric first line is treated as a header. Columns are standardized.
Dataset load_csv_dataset(const std::string& path);

} // namespace avp
