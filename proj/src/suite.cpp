#include "diskspace/suite.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "diskspace/compop.hpp"
#include "diskspace/errors.hpp"
#include "diskspace/majorant.hpp"
#include "diskspace/parallel.hpp"
#include "diskspace/theorems.hpp"

namespace diskspace {

namespace battery {

DiskFunction identity_fn() {
    return DiskFunction::power_series({{0.0, 0.0}, {1.0, 0.0}});
}

DiskFunction square_fn() {
    return DiskFunction::power_series({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
}

DiskFunction constant_fn(Complex c) { return DiskFunction::constant(c); }

DiskFunction log_series(double rho, int terms) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(terms) + 1, {0.0, 0.0});
    double rn = rho;
    for (int n = 1; n <= terms; ++n) {
        coeffs[static_cast<std::size_t>(n)] = {rn / n, 0.0};
        rn *= rho;
    }
    return DiskFunction::power_series(std::move(coeffs));
}

DiskFunction truncated_log(int terms) { return log_series(1.0, terms); }

DiskFunction re_z() {
    return DiskFunction::harmonic_pair({{0.0, 0.0}, {0.5, 0.0}},
                                       {{0.0, 0.0}, {0.5, 0.0}});
}

DiskFunction re_z3() {
    return DiskFunction::harmonic_pair(
        {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.5, 0.0}},
        {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.5, 0.0}});
}

DiskFunction z_plus_half_conj() {
    return DiskFunction::harmonic_pair({{0.0, 0.0}, {1.0, 0.0}},
                                       {{0.0, 0.0}, {0.5, 0.0}});
}

DiskFunction abs2_numeric() {
    return DiskFunction::numeric([](Complex z) -> Complex {
        return {std::norm(z), 0.0};
    });
}

DiskFunction abs4_numeric() {
    return DiskFunction::numeric([](Complex z) -> Complex {
        double n = std::norm(z);
        return {n * n, 0.0};
    });
}

} // namespace battery

namespace {

CheckReport bool_report(std::string id, bool pass, std::string detail,
                        double violation = 0.0) {
    CheckReport r;
    r.id = std::move(id);
    r.verdict = pass ? Verdict::Pass : Verdict::Fail;
    r.maxViolation = pass ? std::min(violation, 0.0) : std::max(violation, 1e-30);
    r.detail = std::move(detail);
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
    return g;
}

// ---------------------------------------------------------------------------
// Named checks
// ---------------------------------------------------------------------------

std::vector<CheckReport> check_green_identity(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    struct Entry {
        const char* name;
        DiskFunction f;
    };
    std::vector<Entry> entries;
    entries.push_back({"abs2", battery::abs2_numeric()});
    entries.push_back({"abs4", battery::abs4_numeric()});
    entries.push_back({"re_z3", battery::re_z3()});
    entries.push_back({"yukawa1", DiskFunction::yukawa_exp(1.0)});
    for (auto& e : entries) {
        double worst = 0.0, worstR = 0.0;
        for (double r : {0.3, 0.6, 0.9}) {
            double res = green_identity_residual(e.f, r, o.quad);
            if (res > worst) {
                worst = res;
                worstR = r;
            }
        }
        out.push_back(bool_report(std::string("green_identity[") + e.name + "]",
                                  worst < 1e-7,
                                  "max residual " + fmt(worst) + " at r=" + fmt(worstR),
                                  worst - 1e-7));
    }
    return out;
}

std::vector<std::pair<std::string, DiskFunction>> monotone_battery() {
    std::vector<std::pair<std::string, DiskFunction>> fs;
    fs.emplace_back("z", battery::identity_fn());
    fs.emplace_back("z2", battery::square_fn());
    fs.emplace_back("2+z", DiskFunction::power_series({{2.0, 0.0}, {1.0, 0.0}}));
    fs.emplace_back("z+z3", DiskFunction::power_series(
                                {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}));
    fs.emplace_back("poly5",
                    DiskFunction::power_series({{0.5, 0.3},
                                                {0.7, 0.0},
                                                {0.0, 0.0},
                                                {0.0, 0.0},
                                                {0.0, 0.0},
                                                {0.2, 0.0}}));
    fs.emplace_back("log08", battery::log_series(0.8, 80));
    fs.emplace_back("yukawa1", DiskFunction::yukawa_exp(1.0));
    return fs;
}

std::vector<CheckReport> check_mean_monotonicity(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    auto grid = linear_grid(0.02, 0.98, 50);
    for (auto& [name, f] : monotone_battery()) {
        for (double p : {2.0, 3.0, 4.0}) {
            CheckReport r = monotone_means_verify(f, p, grid, o.quad);
            r.id = "mean_monotonicity[" + name + ",p=" + fmt(p) + "]";
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckReport> check_log_weight_bound(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    struct Entry {
        const char* name;
        DiskFunction f;
        double p, r;
    };
    std::vector<Entry> entries;
    entries.push_back({"const", battery::constant_fn({1.0, 0.5}), 2.0, 0.8});
    entries.push_back({"z", battery::identity_fn(), 2.0, 0.8});
    entries.push_back({"z2", battery::square_fn(), 3.0, 0.5});
    entries.push_back({"yukawa1", DiskFunction::yukawa_exp(1.0), 2.0, 0.8});
    for (auto& e : entries) {
        CheckReport r = log_weight_bound_verify(e.f, e.p, e.r, o.quad);
        r.id = std::string("log_weight_bound[") + e.name + "]";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_subharmonicity(const SuiteOptions&) {
    std::vector<CheckReport> out;
    auto samples = hypothesis_grid(8, 16);
    struct Entry {
        const char* name;
        DiskFunction f;
    };
    std::vector<Entry> entries;
    entries.push_back({"harmonic_pair", DiskFunction::harmonic_pair(
                                            {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},
                                            {{0.0, 0.0}, {1.0, 0.0}})});
    entries.push_back({"z2", battery::square_fn()});
    entries.push_back({"yukawa1", DiskFunction::yukawa_exp(1.0)});
    entries.push_back({"yukawa4", DiskFunction::yukawa_exp(4.0)});
    for (auto& e : entries) {
        CheckReport r = subharmonic_verify(e.f, samples);
        r.id = std::string("subharmonicity[") + e.name + "]";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_power_mean(const SuiteOptions& o) {
    std::mt19937_64 rng(o.search.seed);
    std::uniform_real_distribution<double> mag(0.0, 100.0);
    std::uniform_real_distribution<double> qdist(1e-6, 5.0);
    double worst = -std::numeric_limits<double>::infinity();
    double wa = 0, wb = 0, wq = 0;
    bool pass = true;
    for (int i = 0; i < 10000; ++i) {
        double a = mag(rng), b = mag(rng), q = qdist(rng);
        CheckReport r = power_mean_inequality_check(a, b, q);
        if (!r.passed()) pass = false;
        if (r.maxViolation > worst) {
            worst = r.maxViolation;
            wa = a;
            wb = b;
            wq = q;
        }
    }
    std::ostringstream os;
    os << "1e4 seeded triples; worst margin " << worst << " at (a,b,q)=(" << wa
       << "," << wb << "," << wq << ")";
    return {bool_report("power_mean_inequality", pass, os.str(), worst)};
}

std::vector<std::pair<std::string, Majorant>> majorant_battery() {
    return {{"identity", Majorant::identity()},
            {"power05", Majorant::power(0.5)},
            {"power025", Majorant::power(0.25)},
            {"logsmoothed", Majorant::log_smoothed()},
            {"table", Majorant::table({{0.5, 0.45}, {1.0, 0.8}, {2.0, 1.2}, {5.0, 1.5}})}};
}

std::vector<CheckReport> check_majorant_axioms(const SuiteOptions&) {
    std::vector<CheckReport> out;
    std::vector<double> grid;
    for (int i = 1; i <= 200; ++i) grid.push_back(0.05 * i);
    for (auto& [name, w] : majorant_battery()) {
        CheckReport r = validate_majorant(w, grid);
        r.id = "majorant_axioms[" + name + "]";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_majorant_scaling(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    for (auto& [name, w] : majorant_battery()) {
        std::mt19937_64 rng(o.search.seed);
        std::uniform_real_distribution<double> nud(1e-6, 1.0);
        std::uniform_real_distribution<double> td(1e-6, 10.0);
        bool pass = true;
        double worst = 0.0, wnu = 0, wt = 0;
        for (int i = 0; i < 10000; ++i) {
            double nu = nud(rng), t = td(rng);
            CheckReport r = scaling_law_check(w, nu, t);
            if (!r.passed()) {
                pass = false;
                if (r.maxViolation > worst) {
                    worst = r.maxViolation;
                    wnu = nu;
                    wt = t;
                }
            }
        }
        std::ostringstream os;
        os << "1e4 seeded (nu,t) pairs";
        if (!pass) os << "; worst at (" << wnu << "," << wt << ")";
        out.push_back(bool_report("majorant_scaling[" + name + "]", pass, os.str(), worst));
    }
    return out;
}

std::vector<CheckReport> check_eta_monotonicity(const SuiteOptions&) {
    std::vector<CheckReport> out;
    std::vector<double> grid;
    for (int i = 1; i <= 100; ++i) grid.push_back(i / 101.0);
    struct P {
        double alpha, beta;
    };
    for (P p : {P{1.0, 0.0}, P{1.0, 1.0}, P{0.5, 0.5}, P{1.0, -1.0}}) {
        for (auto& [name, w] : majorant_battery()) {
            CheckReport r = eta_monotonicity_check(w, p.alpha, p.beta, grid);
            std::ostringstream os;
            os << "eta_monotonicity[" << name << ",a=" << p.alpha << ",b=" << p.beta
               << "]";
            r.id = os.str();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckReport> check_harmonic_gradient(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    struct Entry {
        const char* name;
        DiskFunction f;
    };
    std::vector<Entry> fs;
    fs.push_back({"const", battery::constant_fn({0.7, -0.1})});
    fs.push_back({"z", battery::identity_fn()});
    fs.push_back({"re_z", battery::re_z()});
    fs.push_back({"z+conj/2", battery::z_plus_half_conj()});
    struct Probe {
        Complex a;
        double r;
    };
    std::vector<Probe> probes = {{{0.0, 0.0}, 0.5}, {{0.2, 0.0}, 0.3}, {{0.1, 0.3}, 0.4}};
    for (auto& e : fs) {
        CheckReport worst;
        bool first = true;
        for (auto& p : probes) {
            CheckReport r = harmonic_gradient_bound_verify(e.f, p.a, p.r, o.quad);
            if (first || r.maxViolation > worst.maxViolation) {
                worst = r;
                first = false;
            }
        }
        worst.id = std::string("harmonic_gradient_bound[") + e.name + "]";
        out.push_back(std::move(worst));
    }
    return out;
}

std::vector<CheckReport> check_growth_bound(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    BlochParams params(2.0, 1.0, 0.0);
    Majorant id = Majorant::identity();
    struct Entry {
        const char* name;
        DiskFunction f;
        HeinzCoefficients coeffs;
    };
    std::vector<Entry> entries;
    entries.push_back({"z", battery::identity_fn(), HeinzCoefficients::zero()});
    entries.push_back(
        {"yukawa1", DiskFunction::yukawa_exp(1.0), HeinzCoefficients::constants(0.0, 1.0, 0.0)});
    entries.push_back({"lacunary10", DiskFunction::lacunary(10), HeinzCoefficients::zero()});
    for (auto& e : entries) {
        for (double r : {0.5, 0.9, 0.99}) {
            CheckReport rep = growth_bound_verify(e.f, params, id, e.coeffs, r, o.quad, o.search);
            rep.id = std::string("growth_bound[") + e.name + ",r=" + fmt(r) + "]";
            out.push_back(std::move(rep));
        }
    }
    return out;
}

std::vector<CheckReport> check_yukawa_growth(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    BlochParams params(2.0, 1.0, 0.0);
    Majorant id = Majorant::identity();
    {
        CheckReport r = yukawa_growth_verify(battery::constant_fn({1.0, 0.0}), params, id, 0.0,
                                    0.5, o.quad, o.search);
        r.id = "yukawa_growth[const,r=0.5]";
        out.push_back(std::move(r));
    }
    for (double r : {0.5, 0.9}) {
        CheckReport rep = yukawa_growth_verify(DiskFunction::yukawa_exp(1.0), params, id, 1.0,
                                      r, o.quad, o.search);
        rep.id = "yukawa_growth[yukawa1,r=" + fmt(r) + "]";
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<CheckReport> check_lacunary_sharpness(const SuiteOptions&) {
    std::vector<double> grid{0.9};
    for (int k = 4; k <= 13; ++k) grid.push_back(1.0 - std::ldexp(1.0, -k));
    SharpnessReport rep = sharpness_fit(14, grid);
    CheckReport r = rep.check;
    bool exponentOk = rep.fittedExponent > 0.4 && rep.fittedExponent < 0.6;
    if (r.verdict == Verdict::Pass && !exponentOk) {
        r.verdict = Verdict::Fail;
        r.detail += "; exponent outside [0.4, 0.6]";
    }
    r.id = "lacunary_sharpness[N=14]";
    return {r};
}

std::vector<CheckReport> check_gradient_decay(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    struct Entry {
        const char* name;
        DiskFunction f;
    };
    std::vector<Entry> fs;
    fs.push_back({"z", battery::identity_fn()});
    fs.push_back({"z2", battery::square_fn()});
    fs.push_back({"re_z", battery::re_z()});
    for (auto& e : fs) {
        for (double gamma : {0.5, 1.0}) {
            CheckReport r = gradient_decay_verify(e.f, gamma, o.quad, o.search);
            r.id = std::string("gradient_decay[") + e.name + ",gamma=" + fmt(gamma) + "]";
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckReport> check_hardy_membership(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    {
        CheckReport r = hardy_membership_estimate(
            battery::constant_fn({1.0, 0.0}), 1.0,
            HeinzCoefficients::constants(0.0, 0.0, 0.1), o.quad, o.search);
        r.id = "hardy_membership[const,gamma=1]";
        out.push_back(std::move(r));
    }
    {
        CheckReport r = hardy_membership_estimate(
            DiskFunction::yukawa_exp(1.0), 1.0,
            HeinzCoefficients::constants(0.0, 1.0, 0.0), o.quad, o.search);
        r.id = "hardy_membership[yukawa1,gamma=1]";
        out.push_back(std::move(r));
    }
    {
        CheckReport r = hardy_membership_estimate(
            battery::re_z(), 0.5, HeinzCoefficients::constants(0.0, 0.0, 0.1),
            o.quad, o.search);
        r.id = "hardy_membership[re_z,gamma=0.5]";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_lipschitz_characterization(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    Majorant id = Majorant::identity();
    struct Fn {
        const char* name;
        DiskFunction f;
        int radialCount; // resolvable schedule for truncated series
    };
    std::vector<Fn> fs;
    fs.push_back({"z", battery::identity_fn(), o.search.radialCount});
    fs.push_back({"z2", battery::square_fn(), o.search.radialCount});
    fs.push_back({"z+z3", DiskFunction::power_series(
                              {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                  o.search.radialCount});
    fs.push_back({"z+conj/2", battery::z_plus_half_conj(), o.search.radialCount});
    fs.push_back({"trunclog", battery::truncated_log(200), 6});
    fs.push_back({"const", battery::constant_fn({2.0, 1.0}), o.search.radialCount});
    struct P {
        double s, alpha;
    };
    for (auto& fn : fs) {
        SupSearchConfig search = o.search;
        search.radialCount = fn.radialCount;
        for (P p : {P{0.0, 0.5}, P{0.5, 0.5}, P{0.25, 0.8}, P{0.5, 1.2}}) {
            CheckReport r = characterization_verify(CharacterizationMode::LipschitzQuotient, fn.f,
                                                    id, p.s, p.alpha, o.quad, search);
            std::ostringstream os;
            os << "lipschitz_characterization[" << fn.name << ",s=" << p.s
               << ",a=" << p.alpha << "]";
            r.id = os.str();
            out.push_back(std::move(r));
        }
        // (s, alpha) = (0, 1) sits outside the theorem's admissible range
        // s <= alpha < s+1; the operation must refuse it.
        bool refused = false;
        try {
            characterization_verify(CharacterizationMode::LipschitzQuotient, fn.f, id, 0.0, 1.0,
                                    o.quad, search);
        } catch (const Error& e) {
            refused = e.code() == ErrorCode::ConstraintViolated;
        }
        std::ostringstream os;
        os << "lipschitz_characterization[" << fn.name << ",s=0,a=1:range]";
        out.push_back(bool_report(os.str(), refused,
                                  "pair outside s <= alpha < s+1 must raise ConstraintViolated"));
    }
    return out;
}

std::vector<std::pair<std::string, DiskFunction>> harmonic_battery() {
    std::vector<std::pair<std::string, DiskFunction>> fs;
    fs.emplace_back("const", battery::constant_fn({0.4, 0.3}));
    fs.emplace_back("z", battery::identity_fn());
    fs.emplace_back("re_z", battery::re_z());
    fs.emplace_back("z+conj/2", battery::z_plus_half_conj());
    return fs;
}

std::vector<CheckReport> check_oscillation_characterization(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    Majorant id = Majorant::identity();
    for (auto& [name, f] : harmonic_battery()) {
        CheckReport r = characterization_verify(CharacterizationMode::MeanOscillation, f, id,
                                                0.0, 1.0, o.quad, o.search);
        r.id = "oscillation_characterization[" + name + "]";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_little_bloch_characterization(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    Majorant id = Majorant::identity();
    for (auto& [name, f] : harmonic_battery()) {
        CheckReport r = characterization_verify(CharacterizationMode::BoundaryLimit, f, id,
                                                0.5, 1.0, o.quad, o.search);
        r.id = "little_bloch_characterization[" + name + "]";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_composition_criterion(const SuiteOptions& o) {
    std::vector<CheckReport> out;
    SelfMap identity = SelfMap::identity_map();
    SelfMap shrunk = SelfMap::create(
        DiskFunction::power_series({{0.0, 0.0}, {0.9, 0.0}}));

    struct Case {
        const char* name;
        const SelfMap* phi;
        double alpha, beta;
        bool expectBounded;
    };
    std::vector<Case> cases = {
        {"identity,a=1,b=0", &identity, 1.0, 0.0, false},
        {"identity,a=1,b=1", &identity, 1.0, 1.0, true},
        {"identity,a=0.5,b=0", &identity, 0.5, 0.0, true},
        {"0.9z,a=1,b=0", &shrunk, 1.0, 0.0, true},
        {"0.9z,a=1,b=1", &shrunk, 1.0, 1.0, true},
        {"0.9z,a=0.5,b=0", &shrunk, 0.5, 0.0, true},
    };
    for (auto& c : cases) {
        BoundednessReport rep = boundedness_verdict(*c.phi, c.alpha, c.beta, o.quad);
        bool ok = rep.bounded == c.expectBounded &&
                  (!rep.batteryAvailable || rep.batteryAgreed);
        out.push_back(bool_report(std::string("composition_criterion[") + c.name + "]",
                                  ok, rep.detail));
    }
    // Criterion value pinned where the integrand is identically 1.
    IntegralResult half = criterion_integral(identity, 0.5, 0.0, o.quad);
    out.push_back(bool_report("composition_criterion[identity,a=0.5 value]",
                              half.converged() && std::abs(half.value - 1.0) <= 1e-6,
                              "value " + fmt(half.value),
                              std::abs(half.value - 1.0) - 1e-6));
    return out;
}

using CheckFn = std::vector<CheckReport> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"green_identity", &check_green_identity},
        {"mean_monotonicity", &check_mean_monotonicity},
        {"log_weight_bound", &check_log_weight_bound},
        {"subharmonicity", &check_subharmonicity},
        {"power_mean_inequality", &check_power_mean},
        {"majorant_axioms", &check_majorant_axioms},
        {"majorant_scaling", &check_majorant_scaling},
        {"eta_monotonicity", &check_eta_monotonicity},
        {"harmonic_gradient_bound", &check_harmonic_gradient},
        {"growth_bound", &check_growth_bound},
        {"yukawa_growth", &check_yukawa_growth},
        {"lacunary_sharpness", &check_lacunary_sharpness},
        {"gradient_decay", &check_gradient_decay},
        {"hardy_membership", &check_hardy_membership},
        {"lipschitz_characterization", &check_lipschitz_characterization},
        {"oscillation_characterization", &check_oscillation_characterization},
        {"little_bloch_characterization", &check_little_bloch_characterization},
        {"composition_criterion", &check_composition_criterion},
    };
    return reg;
}

} // namespace

std::vector<std::string> suite_check_names() {
    std::vector<std::string> names;
    for (auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::vector<CheckReport> run_suite_check(const std::string& name,
                                         const SuiteOptions& opts) {
    for (auto& [n, fn] : registry())
        if (n == name) return fn(opts);
    raise(ErrorCode::MalformedSpec, "unknown suite check: " + name);
}

std::vector<CheckReport> run_full_suite(const SuiteOptions& opts) {
    const auto& reg = registry();
    auto results = parallel_map<std::vector<CheckReport>>(
        reg.size(), [&](std::size_t i) { return reg[i].second(opts); });
    std::vector<CheckReport> merged;
    for (auto& group : results)
        for (auto& r : group) merged.push_back(std::move(r));
    return merged;
}

} // namespace diskspace
