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

#ifndef FRFTFIT_DATA_PIPELINE_HPP
#define FRFTFIT_DATA_PIPELINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "moments.hpp"

namespace frftfit {

/// Date-ordered adjusted close prices. Dates are ISO YYYY-MM-DD strings,
/// strictly increasing; prices strictly positive.
struct PriceSeries {
  std::vector<std::string> dates;
  std::vector<double> prices;
};

struct ExcludedReturn {
  std::string date;
  double value = 0.0;
  std::string reason;
};

/// Log returns with an explicit record of anything the outlier filter
/// removed. `scale` is 1 for raw log units or 100 for percent.
struct ReturnSeries {
  std::vector<std::string> dates;  // one per retained return
  std::vector<double> returns;     // retained values
  std::vector<ExcludedReturn> excluded;
  double scale = 100.0;
};

/// Outlier rule: drop nothing, |r| > abs_threshold, or |r - mean| > z * sd.
struct OutlierRule {
  enum class Kind { none, abs_threshold, zscore } kind = Kind::none;
  double value = 0.0;

  static OutlierRule none() { return {}; }
  static OutlierRule abs_threshold(double v) { return {Kind::abs_threshold, v}; }
  static OutlierRule zscore(double v) { return {Kind::zscore, v}; }
};

/// Parse a CSV with at least a date column and a price column (defaults
/// "Date" and "Adj Close"). Rows are sorted by date. DataError with the line
/// number on parse failures, duplicate dates, or non-positive prices.
PriceSeries load_prices(const std::string& path, const std::string& date_column = "Date",
                        const std::string& price_column = "Adj Close");
PriceSeries load_prices_stream(std::istream& in, const std::string& date_column,
                               const std::string& price_column, const std::string& origin);

/// y_j = scale * log(S_j / S_{j-1}); output is one shorter than the input.
ReturnSeries log_returns(const PriceSeries& s, double scale = 100.0);

/// Apply an outlier rule; removed observations land in `excluded` with the
/// rule spelled out. Removing more than half the data raises DataError.
ReturnSeries filter_outliers(const ReturnSeries& r, const OutlierRule& rule);

/// Absolute threshold that excludes exactly k observations (midpoint between
/// the k-th and (k+1)-th largest magnitudes). DataError when ties make an
/// exact count impossible.
double calibrate_abs_threshold(const ReturnSeries& r, std::size_t k);

SampleMoments summarize(const ReturnSeries& r);

}  // namespace frftfit

#endif  // FRFTFIT_DATA_PIPELINE_HPP
