#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace condorcet {

// Thrown when an exact exhaustive operation would exceed its search-space
// guard. Guards refuse instead of silently sampling or truncating.
class guard_exceeded : public std::runtime_error {
public:
    explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Default bound on exhaustive sweeps (profile spaces, subset sweeps).
// Overridable via the CONDORCET_LAB_GUARD environment variable.
std::size_t default_guard();

// Number of workers to use when a caller does not pin one.
unsigned default_jobs();

// Splits [0, count) into at most `jobs` contiguous chunks and runs `work`
// on each, possibly on separate threads. Chunks are disjoint, cover the
// range, and are indexed in order, so callers can merge per-chunk results
// deterministically.
void parallel_chunks(std::size_t count, unsigned jobs,
                     const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& work);

}  // namespace condorcet
