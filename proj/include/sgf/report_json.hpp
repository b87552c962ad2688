#ifndef SGF_REPORT_JSON_HPP
#define SGF_REPORT_JSON_HPP

#include "json.hpp"
#include "sgf/report.hpp"

namespace sgf {

// {law, holds, mode, checked, seed?, counterexample?, note?}; `seed` only
// appears for sampled sweeps, `counterexample` and `note` only when set.
nlohmann::json to_json(const VerificationReport& rep);

}  // namespace sgf

#endif  // SGF_REPORT_JSON_HPP
