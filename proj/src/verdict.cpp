#include "weylcheck/verdict.hpp"

namespace weylcheck {

void to_json(Json& j, const Verdict& v) {
    j = Json{{"claim_id", v.claim_id},
             {"params", v.params},
             {"holds", v.holds},
             {"witness", v.witness},
             {"elapsed_ms", v.elapsed_ms}};
}

void from_json(const Json& j, Verdict& v) {
    j.at("claim_id").get_to(v.claim_id);
    v.params = j.at("params");
    j.at("holds").get_to(v.holds);
    v.witness = j.at("witness");
    j.at("elapsed_ms").get_to(v.elapsed_ms);
}

} // namespace weylcheck
