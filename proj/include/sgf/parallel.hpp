#ifndef SGF_PARALLEL_HPP
#define SGF_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <optional>

namespace sgf {

// Number of worker threads for law sweeps. Capped by the
// SEMIGROUP_FORGE_THREADS environment variable when set.
std::size_t worker_count();

// Smallest index in [0, total) satisfying `pred`, or nullopt. The tuple
// space is scanned in chunks by several workers; the minimal hit wins, so
// the result is independent of scheduling. Exceptions thrown by `pred`
// are rethrown in the calling thread.
std::optional<std::uint64_t> parallel_find_first(
    std::uint64_t total, const std::function<bool(std::uint64_t)>& pred);

// How a law sweep covers its tuple space. Auto mode goes exhaustive up to
// kAutoExhaustiveLimit tuples and falls back to seeded sampling above it.
struct SweepPolicy {
  enum class Mode { kAuto, kExhaustive, kSampled };

  Mode mode = Mode::kAuto;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000000;

  static constexpr std::uint64_t kAutoExhaustiveLimit = 100000000ULL;

  bool sampled_for(std::uint64_t total) const {
    if (mode == Mode::kExhaustive) return false;
    if (mode == Mode::kSampled) return true;
    return total > kAutoExhaustiveLimit;
  }
};

struct SweepOutcome {
  bool holds = true;
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> violation;  // tuple index within [0, total)
  bool sampled = false;
  std::uint64_t seed = 0;
};

// Searches the tuple space [0, total) for a violation. Exhaustive sweeps
// report the minimal violating tuple; sampled sweeps draw `samples` tuple
// indices from mt19937_64(seed) and report the first violating draw.
SweepOutcome run_sweep(std::uint64_t total, const SweepPolicy& policy,
                       const std::function<bool(std::uint64_t)>& violates);

}  // namespace sgf

#endif  // SGF_PARALLEL_HPP
