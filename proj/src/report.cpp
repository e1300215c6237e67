#include "jackpos/report.hpp"

namespace jackpos {

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j{{"claim", r.claim},
                     {"bounds", r.bounds},
                     {"pass", r.pass},
                     {"counterexamples", r.counterexamples},
                     {"elapsed_ms", r.elapsed_ms},
                     {"stats", r.stats}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace jackpos
