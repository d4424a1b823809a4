// Copyright 2026 The robustlab Authors
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

#include "robustlab/state_json.hpp"

#include "robustlab/error.hpp"

namespace robustlab {

namespace {

double as_number(const nlohmann::json& v, const char* where) {
  if (!v.is_number()) throw ParseError(std::string(where) + ": expected a number");
  return v.get<double>();
}

Vec3 as_vec3(const nlohmann::json& v, const char* where) {
  if (!v.is_array() || v.size() != 3)
    throw ParseError(std::string(where) + ": expected an array of 3 numbers");
  return {as_number(v[0], where), as_number(v[1], where), as_number(v[2], where)};
}

std::vector<double> as_matrix(const nlohmann::json& v, std::size_t n, const char* where) {
  if (!v.is_array() || v.size() != n)
    throw ParseError(std::string(where) + ": expected " + std::to_string(n) + " rows");
  std::vector<double> out;
  out.reserve(n * n);
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != n)
      throw ParseError(std::string(where) + ": expected " + std::to_string(n) + " columns per row");
    for (const auto& e : row) out.push_back(as_number(e, where));
  }
  return out;
}

DensityMatrix dense_from_json(const nlohmann::json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
    throw ParseError("state: \"dims\" must be a non-empty array");
  std::vector<std::size_t> dims;
  std::size_t d = 1;
  for (const auto& e : j["dims"]) {
    if (!e.is_number_integer() || e.get<long long>() <= 0)
      throw ParseError("state: \"dims\" entries must be positive integers");
    dims.push_back(e.get<std::size_t>());
    d *= dims.back();
  }
  if (d > kMaxDim) throw ParseError("state: total dimension exceeds " + std::to_string(kMaxDim));
  if (!j.contains("re")) throw ParseError("state: missing \"re\"");
  const std::vector<double> re = as_matrix(j["re"], d, "state.re");
  std::vector<double> im(d * d, 0.0);
  if (j.contains("im")) im = as_matrix(j["im"], d, "state.im");
  std::vector<Complex> entries(d * d);
  for (std::size_t k = 0; k < d * d; ++k) entries[k] = Complex(re[k], im[k]);
  return DensityMatrix(HermitianOperator(ComplexMatrix(d, d, std::move(entries))), dims);
}

}  // namespace

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("state: expected a JSON object");
  const int forms = static_cast<int>(j.contains("bds")) + static_cast<int>(j.contains("bloch")) +
                    static_cast<int>(j.contains("re") || j.contains("dims"));
  if (forms != 1)
    throw ParseError("state: expected exactly one of \"bds\", \"bloch\" or dense {\"dims\",\"re\",\"im\"}");
  if (j.contains("bds")) {
    const Vec3 c = as_vec3(j["bds"], "state.bds");
    return bell_diagonal({c[0], c[1], c[2]});
  }
  if (j.contains("bloch")) {
    const auto& b = j["bloch"];
    if (!b.is_object()) throw ParseError("state.bloch: expected an object");
    BlochTwoQubit q;
    if (b.contains("x")) q.x = as_vec3(b["x"], "state.bloch.x");
    if (b.contains("y")) q.y = as_vec3(b["y"], "state.bloch.y");
    if (b.contains("T")) {
      const std::vector<double> t = as_matrix(b["T"], 3, "state.bloch.T");
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) q.T[i][k] = t[3 * i + k];
    }
    return bloch_compose(q);
  }
  return dense_from_json(j);
}

DensityMatrix parse_state(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("state: invalid JSON: ") + e.what());
  }
  return state_from_json(j);
}

nlohmann::ordered_json state_to_json(const DensityMatrix& rho) {
  nlohmann::ordered_json j;
  j["dims"] = rho.dims();
  const std::size_t d = rho.dim();
  auto re = nlohmann::ordered_json::array();
  auto im = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < d; ++r) {
    auto rr = nlohmann::ordered_json::array();
    auto ri = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < d; ++c) {
      rr.push_back(rho.matrix()(r, c).real());
      ri.push_back(rho.matrix()(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

std::string serialize_state(const DensityMatrix& rho) { return state_to_json(rho).dump(); }

}  // namespace robustlab
