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

#ifndef FRFTFIT_SERIALIZE_HPP
#define FRFTFIT_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "char_models.hpp"
#include "data_pipeline.hpp"
#include "gof.hpp"
#include "grid.hpp"
#include "mle.hpp"
#include "moments.hpp"

namespace frftfit {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

// DensityTable: CSV with header "x,value"; JSON with the grid, kind and
// values.
void table_to_csv(const DensityTable& t, std::ostream& os);
std::string table_to_json(const DensityTable& t);
DensityTable table_from_json(const std::string& json);

// Parameter records: {"family": "normal"|"vg"|"cpn", "params": {...}}.
std::string model_to_json(const CharModel& m);
CharModel model_from_json(const std::string& json);

std::string moments_to_json(const SampleMoments& m);
SampleMoments moments_from_json(const std::string& json);

std::string fit_output_to_json(const FitOutput& f);
void trace_to_csv(const FitTrace& t, std::ostream& os, bool include_drift = true);

std::string gof_report_to_json(const GofReport& r, const std::string& method,
                               const std::string& model);
/// One row in the published comparison-table layout:
/// Method,Model,KS-Statistics,P_values.
void gof_report_to_csv_row(const GofReport& r, const std::string& method,
                           const std::string& model, std::ostream& os);

// ReturnSeries: CSV "date,return,excluded_flag,reason" (retained rows first,
// then excluded) and a JSON equivalent.
void returns_to_csv(const ReturnSeries& r, std::ostream& os);
std::string returns_to_json(const ReturnSeries& r);
/// Reads the CSV written by returns_to_csv (rows flagged excluded are kept in
/// `excluded`); also accepts any CSV with a "return" column.
ReturnSeries returns_from_csv(std::istream& in, const std::string& origin);
ReturnSeries returns_from_csv_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace frftfit

#endif  // FRFTFIT_SERIALIZE_HPP
