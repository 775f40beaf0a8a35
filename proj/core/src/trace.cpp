#include "bes/trace.hpp"

#include <json.hpp>

namespace bes {

std::string RunTrace::to_jsonl() const {
    std::string out;
    for (const auto& r : records_) {
        nlohmann::ordered_json line;
        line["version"] = version;
        line["stage"] = r.stage;
        auto params = nlohmann::ordered_json::object();
        for (const auto& [key, value] : r.params) {
            std::visit([&](const auto& v) { params[key] = v; }, value);
        }
        line["params"] = std::move(params);
        line["outcome"] = r.outcome;
        line["wall_ms"] = r.wall_ms;
        line["seed"] = r.seed;
        out += line.dump();
        out += '\n';
    }
    return out;
}

}  // namespace bes
