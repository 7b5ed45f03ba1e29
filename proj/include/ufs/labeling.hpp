// Copyright 2026 The UFS Authors
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

#pragma once

#include <cstddef>
#include <vector>

#include "ufs/types.hpp"

namespace ufs {

/// True when both labelings cover the same nodes and group them identically,
/// regardless of which node represents each group.
bool same_partition(const ComponentLabeling& a, const ComponentLabeling& b);

/// label(label(x)) == label(x) for every x.
bool is_star(const ComponentLabeling& labeling);

/// Component sizes, largest first.
std::vector<std::size_t> component_sizes(const ComponentLabeling& labeling);

std::size_t largest_component(const ComponentLabeling& labeling);

}  // namespace ufs
