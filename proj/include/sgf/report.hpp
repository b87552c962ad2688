#ifndef SGF_REPORT_HPP
#define SGF_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sgf {

// Outcome of a single law check. When `holds` is false, `counterexample`
// carries the rendered tuple that violated the law, in the order the law
// quantifies over, so the violation can be re-evaluated independently.
struct VerificationReport {
  std::string law;
  bool holds = true;
  std::vector<std::string> counterexample;
  std::uint64_t checked = 0;
  bool sampled = false;       // exhaustive sweep when false
  std::uint64_t seed = 0;     // meaningful only when sampled
  std::string note;           // optional free-form detail
};

}  // namespace sgf

#endif  // SGF_REPORT_HPP
