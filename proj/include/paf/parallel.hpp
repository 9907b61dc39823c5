// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_PARALLEL_HPP
#define PAF_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace paf {

/// Caps the number of worker threads used by parallelizable library loops
/// (0 restores the default of one thread per logical processor).
void set_max_threads(unsigned n);
unsigned max_threads();

namespace detail {
/// Runs fn(i) for i in [0, count) across up to max_threads() workers.  All
/// library uses are pure per-index computations, so no synchronization beyond
/// the final join is needed.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);
}  // namespace detail

}  // namespace paf

#endif  // PAF_PARALLEL_HPP
