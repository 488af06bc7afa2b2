#include "adgcolor/report.hpp"

#include <charconv>
#include <json.hpp>
#include <ostream>

namespace adgcolor {
namespace {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  json j{{"check", v.check},     {"pass", v.pass},       {"observed", v.observed},
         {"bound", v.bound},     {"formula", v.formula}, {"witness", optional_json(v.witness)}};
  return j.dump();
}

Verdict verdict_from_json(const std::string& line) {
  const auto j = json::parse(line);
  Verdict v;
  v.check = j.at("check").get<std::string>();
  v.pass = j.at("pass").get<bool>();
  v.observed = j.at("observed").get<double>();
  v.bound = j.at("bound").get<double>();
  v.formula = j.at("formula").get<std::string>();
  if (!j.at("witness").is_null()) v.witness = j.at("witness").get<std::string>();
  return v;
}

void write_verdicts(std::ostream& out, std::span<const Verdict> verdicts) {
  for (const auto& v : verdicts) out << verdict_to_json(v) << '\n';
}

std::string report_to_json(const RunReport& r) {
  json j;
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["m"] = r.m;
  j["degeneracy"] = optional_json(r.degeneracy);
  j["algorithm"] = r.algorithm;
  j["epsilon"] = optional_json(r.epsilon);
  j["seed"] = r.seed;
  j["threads"] = r.threads;
  j["time_order_ns"] = r.time_order_ns;
  j["time_color_ns"] = r.time_color_ns;
  j["iterations"] = r.iterations;
  j["colors_used"] = r.colors_used;
  j["verified"] = r.verified;
  return j.dump();
}

RunReport report_from_json(const std::string& line) {
  const auto j = json::parse(line);
  RunReport r;
  r.graph = j.at("graph").get<std::string>();
  r.n = j.at("n").get<std::uint64_t>();
  r.m = j.at("m").get<std::uint64_t>();
  if (!j.at("degeneracy").is_null()) r.degeneracy = j.at("degeneracy").get<std::uint64_t>();
  r.algorithm = j.at("algorithm").get<std::string>();
  if (!j.at("epsilon").is_null()) r.epsilon = j.at("epsilon").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.threads = j.at("threads").get<int>();
  r.time_order_ns = j.at("time_order_ns").get<std::uint64_t>();
  r.time_color_ns = j.at("time_color_ns").get<std::uint64_t>();
  r.iterations = j.at("iterations").get<std::uint64_t>();
  r.colors_used = j.at("colors_used").get<std::uint64_t>();
  r.verified = j.at("verified").get<bool>();
  return r;
}

void emit(std::ostream& out, std::span<const RunReport> reports, ReportFormat format) {
  if (format == ReportFormat::json) {
    for (const auto& r : reports) out << report_to_json(r) << '\n';
    return;
  }
  out << kCsvHeader << '\n';
  for (const auto& r : reports) {
    out << csv_field(r.graph) << ',' << r.n << ',' << r.m << ','
        << (r.degeneracy ? std::to_string(*r.degeneracy) : "") << ',' << csv_field(r.algorithm) << ','
        << (r.epsilon ? format_double(*r.epsilon) : "") << ',' << r.seed << ',' << r.threads << ','
        << r.time_order_ns << ',' << r.time_color_ns << ',' << r.iterations << ',' << r.colors_used << ','
        << (r.verified ? "true" : "false") << '\n';
  }
}

}  // namespace adgcolor
