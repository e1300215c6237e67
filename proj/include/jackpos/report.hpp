#pragma once

#include "json.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace jackpos {

/// Outcome of one verification sweep. `pass` is false exactly when the
/// counterexample list is nonempty.
struct VerificationReport {
    std::string claim;
    nlohmann::json bounds = nlohmann::json::object();
    bool pass = true;
    std::vector<nlohmann::json> counterexamples;
    double elapsed_ms = 0;
    // Free-form label, e.g. "sampling probe, not a proof".
    std::string note;
    nlohmann::json stats = nlohmann::json::object();

    void add_counterexample(nlohmann::json c) {
        counterexamples.push_back(std::move(c));
        pass = false;
    }
};

// {claim, bounds, pass, counterexamples, elapsed_ms, note, stats}
nlohmann::json to_json(const VerificationReport& r);

// Measures wall time into report.elapsed_ms on destruction.
class ReportTimer {
public:
    explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        report_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    ReportTimer(const ReportTimer&) = delete;
    ReportTimer& operator=(const ReportTimer&) = delete;

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace jackpos
