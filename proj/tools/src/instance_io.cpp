//
// Copyright 2026 The fairlip Authors
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
//

#include "instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fairlip/error.hpp"

namespace fairlip::cli {

using nlohmann::json;

namespace {

constexpr double kMappingRowTol = 1e-6;

[[noreturn]] void fail(const std::string& msg) { throw InvalidArgument(msg); }

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

std::vector<std::string> id_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of strings");
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (const auto& v : j) {
    if (!v.is_string()) fail(std::string(what) + " must be an array of strings");
    if (!seen.insert(v.get<std::string>()).second) {
      fail(std::string(what) + ": duplicate id \"" + v.get<std::string>() + "\"");
    }
    ids.push_back(v.get<std::string>());
  }
  return ids;
}

std::vector<double> number_array(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) {
    fail(what + " must be an array of " + std::to_string(n) + " numbers");
  }
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) fail(what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Matrix number_matrix(const json& j, std::size_t rows, std::size_t cols,
                     const std::string& what) {
  if (!j.is_array() || j.size() != rows) {
    fail(what + " must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = number_array(j[r], cols, what + " row " + std::to_string(r));
    std::copy(row.begin(), row.end(), m.row(r).begin());
  }
  return m;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

const GroupDistribution& NamedGroup::distribution(const std::string& name) const {
  if (!weights) fail("group \"" + name + "\" is empty");
  return *weights;
}

const NamedGroup& InstanceFile::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) fail("unknown group \"" + name + "\"");
  return it->second;
}

InstanceFile parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("instance must be a JSON object");
  std::vector<std::string> ids = id_array(require(doc, "individuals"), "individuals");
  const std::size_t n = ids.size();
  if (n == 0) fail("instance has no individuals");
  std::vector<std::string> outcomes = id_array(require(doc, "outcomes"), "outcomes");
  Matrix metric = number_matrix(require(doc, "metric"), n, n, "metric");
  Matrix loss = number_matrix(require(doc, "loss"), n, outcomes.size(), "loss");
  std::optional<GroupDistribution> base;
  if (doc.contains("base_weights")) {
    base = GroupDistribution(number_array(doc["base_weights"], n, "base_weights"));
  }

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[ids[i]] = i;

  std::map<std::string, NamedGroup> groups;
  if (doc.contains("groups")) {
    const json& g = doc["groups"];
    if (!g.is_object()) fail("groups must be an object");
    for (const auto& [name, spec] : g.items()) {
      NamedGroup group;
      if (spec.contains("members")) {
        IndexSet members;
        for (const auto& id : id_array(spec["members"], "members")) {
          auto it = index.find(id);
          if (it == index.end()) {
            fail("group \"" + name + "\": unknown individual \"" + id + "\"");
          }
          members.push_back(it->second);
        }
        if (!members.empty()) {
          group.weights = GroupDistribution::uniform_over(n, members);
        }
        group.members = std::move(members);
      } else if (spec.contains("weights")) {
        group.weights =
            GroupDistribution(number_array(spec["weights"], n, "group " + name));
      } else {
        fail("group \"" + name + "\" needs \"members\" or \"weights\"");
      }
      groups.emplace(name, std::move(group));
    }
  }

  MetricSpace space = MetricSpace(std::move(ids), std::move(metric)).verified();
  return InstanceFile{
      FairnessInstance(std::move(space), std::move(outcomes), std::move(loss),
                       std::move(base)),
      std::move(groups)};
}

InstanceFile load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text(path));
}

MappingFile parse_mapping(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("mapping must be a JSON object");
  std::vector<std::string> ids = id_array(require(doc, "individuals"), "individuals");
  std::vector<std::string> outcomes = id_array(require(doc, "outcomes"), "outcomes");
  if (outcomes.empty()) fail("mapping has no outcomes");
  Matrix rows = number_matrix(require(doc, "rows"), ids.size(), outcomes.size(), "rows");
  for (std::size_t x = 0; x < rows.rows(); ++x) {
    double sum = 0.0;
    for (double v : rows.row(x)) {
      if (!(v >= 0.0) || !std::isfinite(v)) fail("rows: invalid probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kMappingRowTol) {
      fail("rows: row " + std::to_string(x) + " sums to " + format_number(sum));
    }
    for (double& v : rows.row(x)) v /= sum;
  }
  return MappingFile{std::move(ids), std::move(outcomes), StochasticMap(std::move(rows))};
}

MappingFile load_mapping(const std::filesystem::path& path) {
  return parse_mapping(read_text(path));
}

std::string mapping_to_json(const MappingFile& m) {
  json rows = json::array();
  for (std::size_t x = 0; x < m.map.size(); ++x) {
    json row = json::array();
    for (double v : m.map.row(x)) row.push_back(round12(v));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["individuals"] = m.individuals;
  doc["outcomes"] = m.outcomes;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("cannot write " + path.string());
  out << text;
  if (!out) fail("write failed for " + path.string());
}

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  return std::stod(format_number(v));
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace fairlip::cli
