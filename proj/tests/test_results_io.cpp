#include "avp/results_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace avp;

namespace {

ExperimentRecord
sample_record(int rep)
{
  ExperimentRecord rec;
  rec.method = "lassoAVp";
  rec.rep = rep;
  rec.seed = 18446744073709551557ull;
  rec.n = 200;
  rec.p = 100;
  rec.s = 10;
  rec.sigma = 1.0;
  rec.rho = 0.5;
  rec.r = 10;
  rec.loss = 0.1 + rep / 3.0;
  rec.support_size = 11;
  rec.oracle_size = rep % 2 == 0 ? std::optional<int>(10) : std::nullopt;
  rec.wall_ms = 12.345678901234567;
  rec.selected = 4;
  return rec;
}

std::filesystem::path
temp_file(const std::string& name)
{
  return std::filesystem::temp_directory_path() / ("avp_test_" + name);
}

std::size_t
count_lines(const std::string& text)
{
  std::size_t lines = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    ++lines;
  }
  return lines;
}

} // namespace

TEST_CASE("csv output layout")
{
  std::ostringstream empty;
  write_results({}, empty, ResultFormat::csv);
  CHECK(empty.str() == "method,rep,seed,n,p,s,sigma,rho,r,loss,support_size,oracle_size,wall_ms,selected\n");

  std::ostringstream three;
  write_results({sample_record(0), sample_record(1), sample_record(2)}, three, ResultFormat::csv);
  CHECK(count_lines(three.str()) == 4);
}

TEST_CASE("results round-trip through json and csv files")
{
  const std::vector<ExperimentRecord> records = {sample_record(0), sample_record(1)};
  for (auto format : {ResultFormat::json, ResultFormat::csv}) {
    const auto path = temp_file(format == ResultFormat::json ? "rt.json" : "rt.csv");
    write_results(records, path.string(), format);
    const auto back = read_results(path.string());
    std::filesystem::remove(path);
    REQUIRE(back.size() == records.size());
    for (std::size_t k = 0; k < records.size(); ++k) {
      CHECK(back[k].method == records[k].method);
      CHECK(back[k].rep == records[k].rep);
      CHECK(back[k].seed == records[k].seed);
      CHECK(back[k].n == records[k].n);
      CHECK(back[k].p == records[k].p);
      CHECK(back[k].s == records[k].s);
      CHECK(back[k].sigma == records[k].sigma);
      CHECK(back[k].rho == records[k].rho);
      CHECK(back[k].r == records[k].r);
      CHECK(back[k].loss == records[k].loss);
      CHECK(back[k].support_size == records[k].support_size);
      CHECK(back[k].oracle_size == records[k].oracle_size);
      CHECK(back[k].wall_ms == records[k].wall_ms);
      CHECK(back[k].selected == records[k].selected);
    }
  }
}

TEST_CASE("json output is an array of objects with the csv keys")
{
  std::ostringstream out;
  write_results({sample_record(1)}, out, ResultFormat::json);
  const auto doc = nlohmann::json::parse(out.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0].size() == result_columns().size());
  for (const auto& key : result_columns()) {
    CHECK(doc[0].contains(key));
  }
  CHECK(doc[0]["oracle_size"].is_null());
  CHECK(doc[0]["loss"].get<double>() == sample_record(1).loss);
}

TEST_CASE("io errors")
{
  CHECK_THROWS_AS(write_results({}, "/nonexistent-dir/out.csv", ResultFormat::csv), IoError);
  CHECK_THROWS_AS(read_results("/nonexistent-dir/in.csv"), IoError);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);

  const auto bad = temp_file("bad.json");
  {
    std::ofstream(bad) << "[{\"method\": 1";
  }
  CHECK_THROWS_AS(read_results(bad.string()), IoError);
  std::filesystem::remove(bad);
}

TEST_CASE("quantiles and summaries")
{
  CHECK(quantile({3, 1, 2}, 0.5) == 2.0);
  CHECK(quantile({1, 2, 3, 4}, 0.5) == 2.5);
  CHECK(quantile({1, 2, 3, 4, 5}, 0.25) == 2.0);
  CHECK(quantile({1, 2}, 0.25) == 1.25);
  CHECK(quantile({7}, 0.75) == 7.0);
  CHECK_THROWS_AS(quantile({}, 0.5), InvalidArgument);

  std::vector<ExperimentRecord> records;
  for (int k = 0; k < 5; ++k) {
    ExperimentRecord rec = sample_record(k);
    rec.loss = k + 1;
    rec.wall_ms = 10.0 * (k + 1);
    records.push_back(rec);
    rec.method = "lslassoCV";
    rec.loss = 2.0 * (k + 1);
    records.push_back(rec);
  }
  const auto summary = summarize(records);
  REQUIRE(summary.size() == 2);
  CHECK(summary[0].method == "lassoAVp");
  CHECK(summary[0].count == 5);
  CHECK(summary[0].loss_q1 == 2.0);
  CHECK(summary[0].loss_median == 3.0);
  CHECK(summary[0].loss_q3 == 4.0);
  CHECK(summary[0].wall_ms_median == 30.0);
  CHECK(summary[1].method == "lslassoCV");
  CHECK(summary[1].loss_median == 6.0);
}

TEST_CASE("load_csv_dataset standardizes the design")
{
  const auto path = temp_file("data.csv");
  {
    std::ofstream out(path);
    out << "y,x1,x2\n";
    out << "1.0,2.0,0.5\n";
    out << "2.0,1.0,1.5\n";
    out << "0.5,4.0,-1.0\n";
    out << "3.0,3.0,2.0\n";
  }
  const Dataset d = load_csv_dataset(path.string());
  std::filesystem::remove(path);
  CHECK(d.n() == 4);
  CHECK(d.p() == 2);
  CHECK_FALSE(d.truth().has_value());
  CHECK(d.y()(3) == 3.0);
  for (Eigen::Index j = 0; j < 2; ++j) {
    CHECK(d.x().col(j).norm() == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(load_csv_dataset("/nonexistent-dir/data.csv"), IoError);
}
