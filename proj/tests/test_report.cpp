#include <doctest.h>

#include <charconv>
#include <sstream>

#include "mubvqe/report.hpp"

using namespace mubvqe;

namespace {

VqeTrialResult make_trial(std::vector<double> trace) {
  VqeTrialResult r;
  r.initial_state_label = "zero";
  r.theta_final = Eigen::VectorXd::Zero(1);
  r.trace = std::move(trace);
  r.e_final = *std::min_element(r.trace.begin(), r.trace.end());
  r.iterations = static_cast<int>(r.trace.size()) - 1;
  return r;
}

}  // namespace

TEST_CASE("trace csv: single-entry trace gives iteration 0 plus best") {
  const std::string csv = trace_csv(make_trial({-0.25}));
  CHECK(csv ==
        "iteration,energy\n"
        "0,-0.25\n"
        "best,-0.25\n");
}

TEST_CASE("trace csv rejects empty traces") {
  VqeTrialResult r;
  CHECK_THROWS_AS(trace_csv(r), std::invalid_argument);
}

TEST_CASE("trace csv round-trips doubles losslessly") {
  const std::vector<double> values = {-0.1234567890123456789, 1.0 / 3.0,
                                      -0.244716678102, 5e-17};
  const std::string csv = trace_csv(make_trial(values));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  for (const double expected : values) {
    std::getline(in, line);
    const auto comma = line.find(',');
    double parsed = 0.0;
    const char* begin = line.data() + comma + 1;
    std::from_chars(begin, line.data() + line.size(), parsed);
    CHECK(parsed == expected);
  }
}

TEST_CASE("format_double survives a parse round-trip") {
  for (const double v : {0.1, -1e-300, 3.141592653589793, 2.2250738585072014e-308}) {
    const std::string s = format_double(v);
    double parsed = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), parsed);
    CHECK(parsed == v);
  }
}

TEST_CASE("ground solution serialization carries the method") {
  GroundSolution g;
  g.e0 = -1.5;
  g.method = GroundMethod::Lanczos;
  g.residual = 1e-12;
  g.iterations = 17;
  const Json j = to_json(g);
  CHECK(j["method"] == "lanczos");
  CHECK(j["e0"] == -1.5);
  CHECK(j["iterations"] == 17);
}

TEST_CASE("run records keep a fixed field order") {
  RunRecord record;
  record.subcommand = "diag";
  record.config = {{"b", 1}, {"a", 2}};
  record.outputs = {"x.json"};
  const std::string dumped = to_json(record).dump();
  // tool/version lead, config preserves insertion order.
  CHECK(dumped.find("\"tool\"") < dumped.find("\"version\""));
  CHECK(dumped.find("\"version\"") < dumped.find("\"subcommand\""));
  CHECK(dumped.find("\"b\"") < dumped.find("\"a\""));
}
