// Copyright 2026 The frftfit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace frftfit {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw NumericError("format_double failed");
  return std::string(buf, ptr);
}

void table_to_csv(const DensityTable& t, std::ostream& os) {
  os << "x,value\n";
  for (int k = 0; k < t.grid.n; ++k)
    os << format_double(t.grid.x(k)) << ',' << format_double(t.values[k]) << '\n';
}

static json grid_to_json(const GridSpec& g) {
  return json{{"a", g.a}, {"n", g.n}, {"beta", g.beta}, {"gamma", g.gamma}, {"delta", g.delta}};
}

std::string table_to_json(const DensityTable& t) {
  json j;
  j["grid"] = grid_to_json(t.grid);
  j["kind"] = table_kind_name(t.kind);
  j["values"] = t.values;
  return j.dump();
}

DensityTable table_from_json(const std::string& text) {
  json j = json::parse(text);
  DensityTable t;
  const auto& g = j.at("grid");
  t.grid = GridSpec::with_output_step(g.at("a").get<double>(), g.at("n").get<int>(),
                                      g.at("gamma").get<double>());
  t.kind = table_kind_from_name(j.at("kind").get<std::string>());
  t.values = j.at("values").get<std::vector<double>>();
  if (static_cast<int>(t.values.size()) != t.grid.n)
    throw DataError("table json: value count does not match grid n");
  return t;
}

std::string model_to_json(const CharModel& m) {
  json p;
  if (m.family() == "normal") {
    const auto& q = m.normal();
    p = {{"mu", q.mu}, {"sigma", q.sigma}};
  } else if (m.family() == "vg") {
    const auto& q = m.vg();
    p = {{"mu", q.mu}, {"drift", q.drift}, {"sigma", q.sigma}, {"alpha", q.alpha},
         {"theta", q.theta}};
  } else {
    const auto& q = m.cpn();
    p = {{"mu", q.mu}, {"sigma", q.sigma}, {"lambda", q.lambda}};
  }
  return json{{"family", m.family()}, {"params", p}}.dump();
}

CharModel model_from_json(const std::string& text) {
  json j = json::parse(text);
  const std::string family = j.at("family").get<std::string>();
  const auto& p = j.at("params");
  if (family == "normal")
    return CharModel(NormalParams{p.at("mu").get<double>(), p.at("sigma").get<double>()});
  if (family == "vg")
    return CharModel(VgParams{p.at("mu").get<double>(), p.value("drift", 0.0),
                              p.at("sigma").get<double>(), p.at("alpha").get<double>(),
                              p.at("theta").get<double>()});
  if (family == "cpn")
    return CharModel(CpnParams{p.at("mu").get<double>(), p.at("sigma").get<double>(),
                               p.at("lambda").get<double>()});
  throw DataError("model json: unknown family '" + family + "'");
}

std::string moments_to_json(const SampleMoments& m) {
  return json{{"n", m.n},
              {"mean", m.mean},
              {"variance", m.variance},
              {"skewness", m.skewness},
              {"kurtosis", m.kurtosis}}
      .dump();
}

SampleMoments moments_from_json(const std::string& text) {
  json j = json::parse(text);
  SampleMoments m;
  m.n = j.value("n", std::size_t{0});
  m.mean = j.at("mean").get<double>();
  m.variance = j.at("variance").get<double>();
  m.skewness = j.at("skewness").get<double>();
  m.kurtosis = j.at("kurtosis").get<double>();
  return m;
}

static json params_to_json(const VgParams& p) {
  return json{{"mu", p.mu}, {"drift", p.drift}, {"sigma", p.sigma}, {"alpha", p.alpha},
              {"theta", p.theta}};
}

std::string fit_output_to_json(const FitOutput& f) {
  const FitResult& r = f.result;
  json j;
  j["params"] = params_to_json(r.params);
  j["loglik"] = r.loglik;
  j["score"] = r.score;
  j["score_inf_norm"] = r.score_inf_norm;
  j["converged"] = r.converged;
  j["reason"] = stop_reason_name(r.reason);
  j["iterations"] = r.iterations;
  j["out_of_range"] = r.out_of_range;
  j["floored"] = r.floored;
  j["frozen"] = r.frozen;
  json cov = json::array();
  for (const auto& row : r.covariance) cov.push_back(row);
  j["covariance"] = cov;
  j["std_errors"] = r.std_errors;
  json trace = json::array();
  for (const auto& row : f.trace.rows) {
    trace.push_back(json{{"iteration", row.iteration},
                         {"params", params_to_json(row.params)},
                         {"loglik", row.loglik},
                         {"score_inf_norm", row.score_inf_norm},
                         {"damping", row.damping}});
  }
  j["trace"] = trace;
  return j.dump();
}

void trace_to_csv(const FitTrace& t, std::ostream& os, bool include_drift) {
  os << "iteration,mu";
  if (include_drift) os << ",drift";
  os << ",sigma,alpha,theta,loglik,score_inf_norm,damping\n";
  for (const auto& row : t.rows) {
    os << row.iteration << ',' << format_double(row.params.mu);
    if (include_drift) os << ',' << format_double(row.params.drift);
    os << ',' << format_double(row.params.sigma) << ',' << format_double(row.params.alpha) << ','
       << format_double(row.params.theta) << ',' << format_double(row.loglik) << ','
       << format_double(row.score_inf_norm) << ',' << format_double(row.damping) << '\n';
  }
}

std::string gof_report_to_json(const GofReport& r, const std::string& method,
                               const std::string& model) {
  json j;
  j["method"] = method;
  j["model"] = model;
  j["n"] = r.n;
  j["ks_stat"] = r.ks_stat;
  j["ks_plus"] = r.ks_plus;
  j["ks_minus"] = r.ks_minus;
  j["ks_pvalue"] = r.ks_pvalue;
  j["ks_pvalue_asymptotic"] = r.ks_pvalue_asymptotic;
  j["lr_stat"] = r.lr_stat;
  j["lr_dof"] = r.lr_dof;
  j["lr_pvalue"] = r.lr_pvalue;
  return j.dump();
}

void gof_report_to_csv_row(const GofReport& r, const std::string& method,
                           const std::string& model, std::ostream& os) {
  os << method << ',' << model << ',' << format_double(r.ks_stat) << ','
     << format_double(r.ks_pvalue) << '\n';
}

void returns_to_csv(const ReturnSeries& r, std::ostream& os) {
  os << "date,return,excluded_flag,reason\n";
  for (std::size_t i = 0; i < r.returns.size(); ++i)
    os << r.dates[i] << ',' << format_double(r.returns[i]) << ",0,\n";
  for (const auto& e : r.excluded)
    os << e.date << ',' << format_double(e.value) << ",1," << e.reason << '\n';
}

std::string returns_to_json(const ReturnSeries& r) {
  json j;
  j["scale"] = r.scale;
  j["dates"] = r.dates;
  j["returns"] = r.returns;
  json ex = json::array();
  for (const auto& e : r.excluded)
    ex.push_back(json{{"date", e.date}, {"return", e.value}, {"reason", e.reason}});
  j["excluded"] = ex;
  return j.dump();
}

ReturnSeries returns_from_csv(std::istream& in, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(origin + ": empty file");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) {
      while (!f.empty() && (f.back() == '\r' || f.back() == ' ')) f.pop_back();
      header.push_back(f);
    }
  }
  auto col = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  };
  const int ret_idx = col("return");
  if (ret_idx < 0) throw DataError(origin + ": missing 'return' column");
  const int date_idx = col("date");
  const int flag_idx = col("excluded_flag");
  const int reason_idx = col("reason");

  ReturnSeries r;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) {
      while (!f.empty() && f.back() == '\r') f.pop_back();
      fields.push_back(f);
    }
    while (fields.size() < header.size()) fields.emplace_back();
    double value = 0.0;
    {
      const std::string& s = fields[static_cast<std::size_t>(ret_idx)];
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || p != s.data() + s.size())
        throw DataError(origin + ":" + std::to_string(line_no) + ": bad return '" + s + "'");
    }
    const std::string date = date_idx >= 0 ? fields[static_cast<std::size_t>(date_idx)] : "";
    const bool excluded =
        flag_idx >= 0 && fields[static_cast<std::size_t>(flag_idx)] == "1";
    if (excluded) {
      r.excluded.push_back(
          {date, value, reason_idx >= 0 ? fields[static_cast<std::size_t>(reason_idx)] : ""});
    } else {
      r.dates.push_back(date);
      r.returns.push_back(value);
    }
  }
  if (r.returns.empty()) throw DataError(origin + ": no retained returns");
  return r;
}

ReturnSeries returns_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return returns_from_csv(in, path);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw DataError("write failed for " + path);
}

}  // namespace frftfit
