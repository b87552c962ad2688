#include "sgf/report_json.hpp"

namespace sgf {

nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json j{
      {"law", rep.law},
      {"holds", rep.holds},
      {"mode", rep.sampled ? "sampled" : "exhaustive"},
      {"checked", rep.checked},
  };
  if (rep.sampled) j["seed"] = rep.seed;
  if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

}  // namespace sgf
