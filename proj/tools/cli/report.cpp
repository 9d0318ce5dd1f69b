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

#include "report.hpp"

#include <cstdio>

namespace horizon::cli {

Json report(const std::string& channel, Json params) {
  Json doc = Json::object();
  doc["channel"] = channel;
  doc["params"] = std::move(params);
  doc["blocks"] = Json::array();
  doc["capacity"] = nullptr;
  doc["checks"] = Json::array();
  return doc;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

Json matrix_json(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    Json c = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return Json{{"real", std::move(re)}, {"imag", std::move(im)}};
}

Json ppt_json(const PptResult& r) {
  return Json{{"is_ppt", r.is_ppt}, {"min_pt_eigenvalue", r.min_pt_eigenvalue}};
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

}  // namespace horizon::cli
