// Copyright 2026 The wvprivacy Authors
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

#ifndef WVP_CLI_WORKER_POOL_H_
#define WVP_CLI_WORKER_POOL_H_

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wvp {

// Runs task(i) for i in [0, count) on up to `threads` workers. Tasks pick
// indices from a shared counter; callers write results into slot i, so
// output order never depends on scheduling. The first exception thrown by
// any task is rethrown after all workers stop.
void ParallelFor(size_t count, size_t threads,
                 const std::function<void(size_t)>& task);

}  // namespace wvp

#endif  // WVP_CLI_WORKER_POOL_H_
