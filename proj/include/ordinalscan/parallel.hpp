// Copyright 2026 The ordinalscan Authors
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
#include <functional>

namespace ordinalscan {

/// Worker count to use: `requested` when positive, otherwise the
/// ORDINAL_SCAN_THREADS environment variable, otherwise the hardware
/// concurrency. Always at least 1.
unsigned resolve_threads(unsigned requested);

/// Run fn(i) for i in [begin, end) on `threads` workers. Items must be
/// independent; each worker pulls from a shared atomic counter, so results
/// written to disjoint slots are identical to the sequential run.
void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace ordinalscan
