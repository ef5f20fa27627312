/*
   Copyright 2026 The tdlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TDLAB_PARALLEL_HPP
#define TDLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace tdlab {

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = hardware concurrency).
// Work is handed out by an atomic counter; results must be written to slot i so the
// outcome does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

unsigned resolve_threads(unsigned requested) noexcept;

}  // namespace tdlab

#endif  // TDLAB_PARALLEL_HPP
