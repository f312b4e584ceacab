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

#include "data_pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace frftfit {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  out.push_back(field);
  for (auto& f : out) {
    while (!f.empty() && (f.back() == '\r' || f.back() == ' ')) f.pop_back();
    std::size_t i = 0;
    while (i < f.size() && f[i] == ' ') ++i;
    f.erase(0, i);
  }
  return out;
}

bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e && std::isfinite(out);
}

// Accepts YYYY-MM-DD; tolerates YYYY/MM/DD by normalizing the separator.
bool normalize_date(std::string& s) {
  if (s.size() != 10) return false;
  for (std::size_t i = 0; i < 10; ++i) {
    if (i == 4 || i == 7) {
      if (s[i] == '/') s[i] = '-';
      if (s[i] != '-') return false;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

std::string rule_description(const OutlierRule& rule) {
  std::ostringstream os;
  switch (rule.kind) {
    case OutlierRule::Kind::none: return "none";
    case OutlierRule::Kind::abs_threshold: os << "|r| > " << rule.value; break;
    case OutlierRule::Kind::zscore: os << "|z| > " << rule.value; break;
  }
  return os.str();
}

}  // namespace

PriceSeries load_prices_stream(std::istream& in, const std::string& date_column,
                               const std::string& price_column, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(origin + ": empty file");
  const auto header = split_csv_line(line);
  auto find_col = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw DataError(origin + ": missing column '" + name + "'");
  };
  const std::size_t date_idx = find_col(date_column);
  const std::size_t price_idx = find_col(price_column);

  std::vector<std::pair<std::string, double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() <= std::max(date_idx, price_idx))
      throw DataError(origin + ":" + std::to_string(line_no) + ": too few fields");
    std::string date = fields[date_idx];
    if (!normalize_date(date))
      throw DataError(origin + ":" + std::to_string(line_no) + ": bad date '" +
                      fields[date_idx] + "'");
    double price = 0.0;
    if (!parse_double(fields[price_idx], price))
      throw DataError(origin + ":" + std::to_string(line_no) + ": bad price '" +
                      fields[price_idx] + "'");
    if (!(price > 0.0))
      throw DataError(origin + ":" + std::to_string(line_no) + ": non-positive price");
    rows.emplace_back(std::move(date), price);
  }
  if (rows.size() < 2) throw DataError(origin + ": need at least two price rows");

  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].first == rows[i - 1].first)
      throw DataError(origin + ": duplicate date " + rows[i].first);

  PriceSeries s;
  s.dates.reserve(rows.size());
  s.prices.reserve(rows.size());
  for (auto& [d, p] : rows) {
    s.dates.push_back(std::move(d));
    s.prices.push_back(p);
  }
  return s;
}

PriceSeries load_prices(const std::string& path, const std::string& date_column,
                        const std::string& price_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return load_prices_stream(in, date_column, price_column, path);
}

ReturnSeries log_returns(const PriceSeries& s, double scale) {
  if (s.prices.size() < 2) throw DataError("log_returns: need at least two prices");
  if (scale != 1.0 && scale != 100.0)
    throw InvalidArgument("log_returns: scale must be 1 (raw) or 100 (percent)");
  ReturnSeries r;
  r.scale = scale;
  r.dates.assign(s.dates.begin() + 1, s.dates.end());
  r.returns.resize(s.prices.size() - 1);
  for (std::size_t i = 1; i < s.prices.size(); ++i)
    r.returns[i - 1] = scale * std::log(s.prices[i] / s.prices[i - 1]);
  return r;
}

ReturnSeries filter_outliers(const ReturnSeries& r, const OutlierRule& rule) {
  if (rule.kind == OutlierRule::Kind::none) return r;
  if (!(rule.value > 0.0)) throw InvalidArgument("filter_outliers: rule parameter must be positive");

  double center = 0.0, spread = 1.0;
  if (rule.kind == OutlierRule::Kind::zscore) {
    const double n = static_cast<double>(r.returns.size());
    center = std::accumulate(r.returns.begin(), r.returns.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : r.returns) ss += (v - center) * (v - center);
    spread = std::sqrt(ss / (n - 1.0));
    if (!(spread > 0.0)) throw DataError("filter_outliers: zero spread");
  }

  const std::string why = rule_description(rule);
  ReturnSeries out;
  out.scale = r.scale;
  out.excluded = r.excluded;  // keep prior exclusions
  for (std::size_t i = 0; i < r.returns.size(); ++i) {
    const double v = r.returns[i];
    const bool drop = rule.kind == OutlierRule::Kind::abs_threshold
                          ? std::abs(v) > rule.value
                          : std::abs(v - center) / spread > rule.value;
    if (drop) {
      out.excluded.push_back({r.dates[i], v, why});
    } else {
      out.dates.push_back(r.dates[i]);
      out.returns.push_back(v);
    }
  }
  if (out.returns.size() * 2 < r.returns.size())
    throw DataError("filter_outliers: rule removed more than 50% of the data");
  return out;
}

double calibrate_abs_threshold(const ReturnSeries& r, std::size_t k) {
  if (k == 0) throw InvalidArgument("calibrate_abs_threshold: k must be positive");
  if (k >= r.returns.size())
    throw InvalidArgument("calibrate_abs_threshold: k must be below the sample size");
  std::vector<double> mag(r.returns.size());
  std::transform(r.returns.begin(), r.returns.end(), mag.begin(),
                 [](double v) { return std::abs(v); });
  std::sort(mag.begin(), mag.end(), std::greater<>());
  if (mag[k - 1] == mag[k])
    throw DataError("calibrate_abs_threshold: tie at the cut, no threshold excludes exactly k");
  return 0.5 * (mag[k - 1] + mag[k]);
}

SampleMoments summarize(const ReturnSeries& r) { return sample_moments(r.returns); }

}  // namespace frftfit
