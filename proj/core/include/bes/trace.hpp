#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bes {

using TraceValue = std::variant<std::int64_t, std::string>;

struct TraceRecord {
    std::string stage;
    std::vector<std::pair<std::string, TraceValue>> params;
    std::string outcome;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
};

/// Append-only list of stage records.
class RunTrace {
public:
    static constexpr int version = 1;

    void add(TraceRecord record) { records_.push_back(std::move(record)); }
    const std::vector<TraceRecord>& records() const noexcept { return records_; }
    bool empty() const noexcept { return records_.empty(); }

    /// One JSON object per line, each carrying "version": 1.
    std::string to_jsonl() const;

private:
    std::vector<TraceRecord> records_;
};

/// Measures one stage and appends it on finish().
class StageTimer {
public:
    StageTimer(RunTrace& trace, std::string stage, std::uint64_t seed)
        : trace_(trace), start_(std::chrono::steady_clock::now()) {
        record_.stage = std::move(stage);
        record_.seed = seed;
    }

    StageTimer& param(std::string key, TraceValue value) {
        record_.params.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    void finish(std::string outcome) {
        record_.outcome = std::move(outcome);
        record_.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        trace_.add(std::move(record_));
    }

private:
    RunTrace& trace_;
    std::chrono::steady_clock::time_point start_;
    TraceRecord record_;
};

}  // namespace bes
