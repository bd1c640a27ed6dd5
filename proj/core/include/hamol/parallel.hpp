// Copyright 2026 The hamol Authors
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
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <vector>

namespace hamol {

/// Worker count for parameter sweeps. Reads HAMOL_THREADS; falls back to
/// std::thread::hardware_concurrency(), and never returns less than 1.
std::size_t sweep_thread_count();

namespace detail {
void run_indexed(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& body);
}  // namespace detail

/// Maps `fn` over `inputs` on up to `threads` workers. Output order matches
/// input order, so results do not depend on scheduling. The first exception
/// thrown by any task is rethrown after all workers join.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn&& fn,
                  std::size_t threads = sweep_thread_count()) {
  using Out = std::invoke_result_t<Fn&, const In&>;
  std::vector<std::optional<Out>> slots(inputs.size());
  detail::run_indexed(inputs.size(), threads,
                      [&](std::size_t i) { slots[i].emplace(fn(inputs[i])); });
  std::vector<Out> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace hamol
