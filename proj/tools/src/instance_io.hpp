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

#ifndef FAIRLIP_TOOLS_INSTANCE_IO_HPP_
#define FAIRLIP_TOOLS_INSTANCE_IO_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairlip/types.hpp"

namespace fairlip::cli {

// A named group from the "groups" object. Member-based groups keep their
// index list; weight-based groups only have a distribution.
struct NamedGroup {
  std::optional<IndexSet> members;
  std::optional<GroupDistribution> weights;  // empty for a member list of size 0

  const GroupDistribution& distribution(const std::string& name) const;
};

struct InstanceFile {
  FairnessInstance instance;
  std::map<std::string, NamedGroup> groups;

  const NamedGroup& group(const std::string& name) const;
};

struct MappingFile {
  std::vector<std::string> individuals;
  std::vector<std::string> outcomes;
  StochasticMap map;
};

// Both loaders throw InvalidArgument on malformed or inconsistent input.
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::filesystem::path& path);
MappingFile parse_mapping(const std::string& text);
MappingFile load_mapping(const std::filesystem::path& path);

std::string mapping_to_json(const MappingFile& m);
void write_text(const std::filesystem::path& path, const std::string& text);

// Rounds to 12 significant digits.
double round12(double v);
// "%.12g"
std::string format_number(double v);

}  // namespace fairlip::cli

#endif  // FAIRLIP_TOOLS_INSTANCE_IO_HPP_
