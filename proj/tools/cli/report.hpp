// Copyright 2026 The horizon-channels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HORIZON_TOOLS_REPORT_HPP
#define HORIZON_TOOLS_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "horizon/capacity.hpp"
#include "horizon/linalg.hpp"

namespace horizon::cli {

using Json = nlohmann::ordered_json;

/// Skeleton with the fixed top-level keys channel, params, blocks, capacity,
/// checks.
Json report(const std::string& channel, Json params);

/// Two-space indented dump with a trailing newline.
std::string render(const Json& doc);

/// {"real": rows, "imag": rows}.
Json matrix_json(const Matrix& m);

Json ppt_json(const PptResult& r);

/// printf "%.15e".
std::string format_double(double x);

}  // namespace horizon::cli

#endif  // HORIZON_TOOLS_REPORT_HPP
