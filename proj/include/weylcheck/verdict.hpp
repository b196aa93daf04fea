#pragma once

#include "json.hpp"

#include <chrono>
#include <string>

namespace weylcheck {

using Json = nlohmann::json;

// Outcome of one structural check. A false verdict carries the offending data in the witness.
struct Verdict {
    std::string claim_id;
    Json params = Json::object();
    bool holds = false;
    Json witness = Json::object();
    double elapsed_ms = 0;
};

void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace weylcheck
