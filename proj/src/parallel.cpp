#include "sgf/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace sgf {

std::size_t worker_count() {
  static const std::size_t cached = [] {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SEMIGROUP_FORGE_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) hw = std::min<std::size_t>(hw, static_cast<std::size_t>(v));
    }
    return hw;
  }();
  return cached;
}

std::optional<std::uint64_t> parallel_find_first(
    std::uint64_t total, const std::function<bool(std::uint64_t)>& pred) {
  if (total == 0) return std::nullopt;

  const std::size_t workers =
      std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, total / 1024));
  if (workers <= 1 || total < 4096) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }

  const std::uint64_t block = std::clamp<std::uint64_t>(total / (workers * 64), 1024, 1 << 16);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(block);
        if (begin >= total || begin >= best.load()) return;
        const std::uint64_t end = std::min(total, begin + block);
        for (std::uint64_t i = begin; i < end; ++i) {
          if (i >= best.load()) break;
          if (pred(i)) {
            std::uint64_t seen = best.load();
            while (i < seen && !best.compare_exchange_weak(seen, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);  // make everyone stop early
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  if (error) std::rethrow_exception(error);
  const std::uint64_t hit = best.load();
  if (hit < total) return hit;
  return std::nullopt;
}

SweepOutcome run_sweep(std::uint64_t total, const SweepPolicy& policy,
                       const std::function<bool(std::uint64_t)>& violates) {
  SweepOutcome out;
  if (total == 0) return out;

  if (!policy.sampled_for(total)) {
    const auto hit = parallel_find_first(total, violates);
    out.holds = !hit.has_value();
    out.violation = hit;
    out.checked = hit ? *hit + 1 : total;
    return out;
  }

  out.sampled = true;
  out.seed = policy.seed;
  std::mt19937_64 rng(policy.seed);
  std::vector<std::uint64_t> draws(policy.samples);
  for (auto& d : draws) d = rng() % total;

  const auto hit = parallel_find_first(
      draws.size(), [&](std::uint64_t pos) { return violates(draws[pos]); });
  out.holds = !hit.has_value();
  if (hit) {
    out.violation = draws[*hit];
    out.checked = *hit + 1;
  } else {
    out.checked = draws.size();
  }
  return out;
}

}  // namespace sgf
