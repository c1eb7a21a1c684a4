#include "avp/results_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace avp {

namespace {

std::string
fmt_double(double v)
{
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<std::string>
split_csv_line(const std::string& line)
{
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    if (!field.empty() && field.back() == '\r') {
      field.pop_back();
    }
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double
to_double(const std::string& s, const std::string& what)
{
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw IoError("cannot parse " + what + " value '" + s + "'");
  }
  return v;
}

ExperimentRecord
record_from_fields(const std::map<std::string, std::string>& f)
{
  const auto get = [&](const std::string& key) -> const std::string& {
    auto it = f.find(key);
    if (it == f.end()) {
      throw IoError("results file is missing column '" + key + "'");
    }
    return it->second;
  };
  ExperimentRecord rec;
  rec.method = get("method");
  rec.rep = static_cast<int>(to_double(get("rep"), "rep"));
  rec.seed = std::stoull(get("seed"));
  rec.n = static_cast<int>(to_double(get("n"), "n"));
  rec.p = static_cast<int>(to_double(get("p"), "p"));
  rec.s = static_cast<int>(to_double(get("s"), "s"));
  rec.sigma = to_double(get("sigma"), "sigma");
  rec.rho = to_double(get("rho"), "rho");
  rec.r = static_cast<int>(to_double(get("r"), "r"));
  rec.loss = to_double(get("loss"), "loss");
  rec.support_size = static_cast<int>(to_double(get("support_size"), "support_size"));
  if (const auto& o = get("oracle_size"); !o.empty()) {
    rec.oracle_size = static_cast<int>(to_double(o, "oracle_size"));
  }
  rec.wall_ms = to_double(get("wall_ms"), "wall_ms");
  rec.selected = to_double(get("selected"), "selected");
  return rec;
}

} // namespace

ResultFormat
parse_format(const std::string& text)
{
  if (text == "csv") {
    return ResultFormat::csv;
  }
  if (text == "json") {
    return ResultFormat::json;
  }
  throw InvalidArgument("unknown format '" + text + "' (expected csv or json)");
}

const std::vector<std::string>&
result_columns()
{
  static const std::vector<std::string> cols = {
    "method", "rep",  "seed", "n",            "p",           "s",       "sigma",
    "rho",    "r",    "loss", "support_size", "oracle_size", "wall_ms", "selected",
  };
  return cols;
}

void
write_results(const std::vector<ExperimentRecord>& records, std::ostream& out, ResultFormat format)
{
  const auto values = [](const ExperimentRecord& r) {
    return std::vector<std::string>{
      r.method,
      std::to_string(r.rep),
      std::to_string(r.seed),
      std::to_string(r.n),
      std::to_string(r.p),
      std::to_string(r.s),
      fmt_double(r.sigma),
      fmt_double(r.rho),
      std::to_string(r.r),
      fmt_double(r.loss),
      std::to_string(r.support_size),
      r.oracle_size ? std::to_string(*r.oracle_size) : std::string(),
      fmt_double(r.wall_ms),
      fmt_double(r.selected),
    };
  };
  const auto& cols = result_columns();

  if (format == ResultFormat::csv) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "," : "") << cols[c];
    }
    out << '\n';
    for (const auto& r : records) {
      const auto v = values(r);
      for (std::size_t c = 0; c < v.size(); ++c) {
        out << (c ? "," : "") << v[c];
      }
      out << '\n';
    }
    return;
  }

  // Written by hand so every float carries 17 significant digits.
  out << "[";
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto v = values(records[k]);
    out << (k ? ",\n " : "\n ") << '{';
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? ", " : "") << '"' << cols[c] << "\": ";
      if (c == 0) {
        out << nlohmann::json(v[c]).dump();
      } else if (v[c].empty()) {
        out << "null";
      } else {
        out << v[c];
      }
    }
    out << '}';
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

void
write_results(const std::vector<ExperimentRecord>& records,
              const std::string& path_out,
              ResultFormat format)
{
  std::ofstream out(path_out);
  if (!out) {
    throw IoError("cannot open '" + path_out + "' for writing");
  }
  write_results(records, out, format);
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path_out + "'");
  }
}

std::vector<ExperimentRecord>
read_results(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");

  std::vector<ExperimentRecord> records;
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw IoError("malformed JSON in '" + path + "': " + e.what());
    }
    for (const auto& obj : doc) {
      std::map<std::string, std::string> fields;
      for (const auto& col : result_columns()) {
        if (!obj.contains(col)) {
          throw IoError("results file is missing key '" + col + "'");
        }
        const auto& v = obj.at(col);
        if (v.is_null()) {
          fields[col] = "";
        } else if (v.is_string()) {
          fields[col] = v.get<std::string>();
        } else if (v.is_number_float()) {
          fields[col] = fmt_double(v.get<double>());
        } else {
          fields[col] = v.dump();
        }
      }
      records.push_back(record_from_fields(fields));
    }
    return records;
  }

  std::stringstream lines(text);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(lines, line)) {
    if (line.empty() || line == "\r") {
      continue;
    }
    auto fields = split_csv_line(line);
    if (header.empty()) {
      header = std::move(fields);
      continue;
    }
    if (fields.size() != header.size()) {
      throw IoError("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                    std::to_string(header.size()));
    }
    std::map<std::string, std::string> named;
    for (std::size_t c = 0; c < header.size(); ++c) {
      named[header[c]] = fields[c];
    }
    records.push_back(record_from_fields(named));
  }
  return records;
}

double
quantile(std::vector<double> values, double q)
{
  if (values.empty()) {
    throw InvalidArgument("quantile of empty sample");
  }
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<MethodSummary>
summarize(const std::vector<ExperimentRecord>& records)
{
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& r : records) {
    auto& g = groups[r.method];
    g.first.push_back(r.loss);
    g.second.push_back(r.wall_ms);
  }
  std::vector<MethodSummary> out;
  for (const auto& [method, g] : groups) {
    MethodSummary s;
    s.method = method;
    s.count = g.first.size();
    s.loss_q1 = quantile(g.first, 0.25);
    s.loss_median = quantile(g.first, 0.5);
    s.loss_q3 = quantile(g.first, 0.75);
    s.wall_ms_median = quantile(g.second, 0.5);
    out.push_back(s);
  }
  return out;
}

Dataset
load_csv_dataset(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      continue;
    }
    const auto fields = split_csv_line(line);
    std::vector<double> row;
    try {
      for (const auto& f : fields) {
        row.push_back(to_double(f, "data"));
      }
    } catch (const IoError&) {
      if (first) {
        first = false;
        continue; // header
      }
      throw;
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError("ragged CSV row in '" + path + "'");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().size() < 2) {
    throw IoError("'" + path + "' needs at least one row and two columns");
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(rows.front().size() - 1);
  Eigen::VectorXd y(n);
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    y(i) = row[0];
    for (Eigen::Index j = 0; j < p; ++j) {
      x(i, j) = row[static_cast<std::size_t>(j + 1)];
    }
  }
  return Dataset::standardize(x, std::move(y));
}

} // namespace avp
