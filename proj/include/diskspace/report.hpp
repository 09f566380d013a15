#pragma once

#include <string>
#include <vector>

#include "diskspace/geometry.hpp"

namespace diskspace {

// Outcome of any executable check. Numerical evidence cannot certify
// sup-over-all-radii claims, so membership-style checks are three-valued;
// HypothesisViolated means the statement under test does not apply to the
// inputs and no Pass/Fail verdict was produced.
enum class Verdict {
    Pass,
    Fail,
    Inconclusive,
    HypothesisViolated,
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "Pass";
        case Verdict::Fail: return "Fail";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::HypothesisViolated: return "HypothesisViolated";
    }
    return "Unknown";
}

// One evaluated comparison: lhs vs rhs at a sample point. violation > 0
// means the inequality under test failed there by that margin.
struct CheckSample {
    Complex point{0.0, 0.0};
    double lhs = 0.0;
    double rhs = 0.0;
    double violation = 0.0;
};

struct CheckReport {
    std::string id;
    Verdict verdict = Verdict::Inconclusive;
    // max over samples of (lhs - rhs - slack); <= 0 means pass.
    double maxViolation = 0.0;
    CheckSample worst;
    std::vector<CheckSample> samples;
    std::string detail;

    bool passed() const { return verdict == Verdict::Pass; }
};

inline CheckReport make_pass(std::string id, double maxViolation = 0.0,
                             std::string detail = {}) {
    CheckReport r;
    r.id = std::move(id);
    r.verdict = Verdict::Pass;
    r.maxViolation = maxViolation;
    r.detail = std::move(detail);
    return r;
}

inline CheckReport make_fail(std::string id, const CheckSample& worst,
                             std::string detail = {}) {
    CheckReport r;
    r.id = std::move(id);
    r.verdict = Verdict::Fail;
    r.maxViolation = worst.violation;
    r.worst = worst;
    r.detail = std::move(detail);
    return r;
}

inline CheckReport make_inconclusive(std::string id, std::string reason) {
    CheckReport r;
    r.id = std::move(id);
    r.verdict = Verdict::Inconclusive;
    r.detail = std::move(reason);
    return r;
}

inline CheckReport make_hypothesis_violated(std::string id, std::string reason) {
    CheckReport r;
    r.id = std::move(id);
    r.verdict = Verdict::HypothesisViolated;
    r.detail = std::move(reason);
    return r;
}

} // namespace diskspace
