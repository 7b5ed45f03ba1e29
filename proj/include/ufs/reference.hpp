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

// Serial reference for the union-find shuffle. Groups records in a global
// ordered map instead of hashed buckets, keeps everything in memory and runs
// on one thread. Used by tests and the kernel benchmark to cross-check the
// OpenMP engine; not meant for large inputs.

#pragma once

#include <span>

#include "ufs/engine.hpp"

namespace ufs::reference {

/// Same contract as ufs::run. Honors partitions, election, local_uf,
/// local_emission and max_rounds; ignores workers, hashing and spilling.
RunResult run(std::span<const Edge> edges, const EngineConfig& config);

}  // namespace ufs::reference
