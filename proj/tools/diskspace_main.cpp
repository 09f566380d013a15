// Command-line surface: function/majorant specs in, norm values and
// theorem reports out, as CSV rows stamped with the config hash.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "diskspace/compop.hpp"
#include "diskspace/errors.hpp"
#include "diskspace/norms.hpp"
#include "diskspace/spec_json.hpp"
#include "diskspace/suite.hpp"
#include "diskspace/theorems.hpp"

namespace {

using namespace diskspace;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitInconclusive = 3;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string point(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", z.real(), z.imag());
    return buf;
}

struct Output {
    std::optional<std::string> path;

    void write(const std::string& text) const {
        if (path) {
            std::ofstream os(*path);
            if (!os) {
                std::cerr << "cannot open output file " << *path << "\n";
                std::exit(kExitError);
            }
            os << text;
        } else {
            std::cout << text;
        }
    }
};

struct CommonOptions {
    QuadratureConfig quad;
    SupSearchConfig search;

    std::string hash() const {
        std::ostringstream os;
        os << quad.canonical_string() << ";radii=" << search.radialCount
           << ";angles=" << search.angularCount << ";refine=" << search.refineRounds
           << ";pairs=" << search.pairSamples << ";seed=" << search.seed;
        return config_hash(os.str());
    }
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--angular-nodes", opts.quad.angularNodes,
                    "trapezoid points on the circle (>=16, even)");
    cmd->add_option("--schedule-k", opts.quad.scheduleK,
                    "boundary schedule depth: radii 1 - 2^-k, k = 1..K");
    cmd->add_option("--abs-tol", opts.quad.absTol, "absolute quadrature tolerance");
    cmd->add_option("--gauss-nodes", opts.quad.gaussNodes, "Gauss nodes per panel");
    cmd->add_option("--radial-count", opts.search.radialCount,
                    "sup-search schedule radii");
    cmd->add_option("--angular-count", opts.search.angularCount,
                    "sup-search angles per radius");
    cmd->add_option("--refine-rounds", opts.search.refineRounds,
                    "golden-section refinement rounds");
    cmd->add_option("--pairs", opts.search.pairSamples,
                    "pair samples for the Lipschitz quotient");
    cmd->add_option("--seed", opts.search.seed, "seed for all randomized sampling");
}

double parse_p(const std::string& text) {
    if (text == "inf" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    std::istringstream is(text);
    double v;
    if (!(is >> v)) raise(ErrorCode::MalformedSpec, "cannot parse p: " + text);
    return v;
}

// ---------------------------------------------------------------------------
// norm subcommand
// ---------------------------------------------------------------------------

struct NormArgs {
    std::string functional;
    std::string functionSpec;
    std::string majorantSpec = "identity";
    std::string pText = "inf";
    double alpha = 1.0;
    double beta = 0.0;
    double s = 0.0;
    double gamma = 1.0;
    double mu = 2.0;
};

int run_norm(const NormArgs& args, const CommonOptions& opts, const Output& out) {
    DiskFunction f = parse_function_spec(args.functionSpec);
    Majorant w = parse_majorant_spec(args.majorantSpec);
    double p = parse_p(args.pText);

    std::ostringstream csv;
    csv << "functional,value,verdict,attainedAt,errorEstimate,confighash\n";
    std::string hash = opts.hash();

    auto normRow = [&](const std::string& name, const NormValue& nv) {
        csv << name << "," << num(nv.value) << "," << boundedness_name(nv.verdict)
            << "," << (nv.attainedAt.empty() ? std::string("-") : point(nv.attainedAt[0]))
            << "," << num(nv.errorEstimate) << "," << hash << "\n";
    };

    if (args.functional == "hardy") {
        normRow("hardy", hardy_norm(f, p, opts.quad, opts.search));
    } else if (args.functional == "bloch") {
        BlochParams params(p, args.alpha, args.beta);
        normRow("bloch", bloch_norm(f, params, w, opts.quad, opts.search));
    } else if (args.functional == "little-bloch") {
        BlochParams params(std::numeric_limits<double>::infinity(), args.alpha,
                           args.beta);
        CheckReport r = little_bloch_limit(f, params, w, opts.quad, opts.search);
        double last = r.samples.empty() ? 0.0 : r.samples.back().lhs;
        csv << "little-bloch," << num(last) << "," << verdict_name(r.verdict)
            << ",-," << num(0.0) << "," << hash << "\n";
        out.write(csv.str());
        return r.verdict == Verdict::Fail ? kExitFail
               : r.verdict == Verdict::Pass ? kExitOk
                                            : kExitInconclusive;
    } else if (args.functional == "dirichlet") {
        normRow("dirichlet", dirichlet_norm(f, args.gamma, args.mu, opts.quad));
    } else if (args.functional == "lipschitz") {
        normRow("lipschitz",
                lipschitz_quotient_sup(f, w, args.s, args.alpha, opts.search, opts.quad));
    } else if (args.functional == "oscillation") {
        normRow("oscillation",
                oscillation_profile(f, w, args.alpha, opts.quad, opts.search));
    } else {
        raise(ErrorCode::MalformedSpec, "unknown functional: " + args.functional);
    }
    out.write(csv.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify subcommand
// ---------------------------------------------------------------------------

int run_verify(const std::string& checkName, bool all, const CommonOptions& opts,
               const Output& out) {
    SuiteOptions sopts{opts.quad, opts.search};
    std::vector<CheckReport> reports =
        all ? run_full_suite(sopts) : run_suite_check(checkName, sopts);

    std::ostringstream csv;
    csv << "theoremId,verdict,maxViolation,worstSample,confighash\n";
    std::string hash = opts.hash();
    bool anyFail = false, anyInconclusive = false;
    for (const auto& r : reports) {
        csv << r.id << "," << verdict_name(r.verdict) << "," << num(r.maxViolation)
            << "," << point(r.worst.point) << "," << hash << "\n";
        if (r.verdict == Verdict::Fail) anyFail = true;
        if (r.verdict == Verdict::Inconclusive ||
            r.verdict == Verdict::HypothesisViolated)
            anyInconclusive = true;
    }
    out.write(csv.str());
    if (anyFail) return kExitFail;
    if (anyInconclusive) return kExitInconclusive;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// compop subcommand
// ---------------------------------------------------------------------------

int run_compop(const std::string& phiSpec, double alpha, double beta,
               bool requireBattery, const CommonOptions& opts, const Output& out) {
    DiskFunction phiFn = parse_function_spec(phiSpec);
    SelfMap phi = SelfMap::create(std::move(phiFn), opts.search);
    BoundednessReport rep =
        boundedness_verdict(phi, alpha, beta, opts.quad, requireBattery);

    std::ostringstream csv;
    csv << "verdict,criterionValue,criterionVerdict,errorEstimate,batteryAgreed,"
           "confighash\n";
    csv << (rep.bounded ? "Bounded" : "Unbounded") << ","
        << num(rep.criterion.value) << ","
        << (rep.criterion.converged() ? "Converged" : "Divergent") << ","
        << num(rep.criterion.errorEstimate) << ","
        << (rep.batteryAvailable ? (rep.batteryAgreed ? "yes" : "NO") : "unavailable")
        << "," << opts.hash() << "\n";
    out.write(csv.str());
    // The verdict is data, not a failure; disagreement of the cross-check is.
    if (rep.batteryAvailable && !rep.batteryAgreed) return kExitFail;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep subcommand
// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string quantity = "mean";
    std::string functionSpec = "identity";
    std::string pText = "2";
    double rmin = 0.5;
    double rmax = 0.999;
    int points = 20;
    std::string spacing = "log";
    int lacunaryTerms = 14;
};

int run_sweep(const SweepArgs& args, const CommonOptions& opts, const Output& out) {
    if (!(args.rmin > 0.0) || !(args.rmax < 1.0) || !(args.rmin < args.rmax) ||
        args.points < 2)
        raise(ErrorCode::MalformedSpec, "sweep needs 0 < rmin < rmax < 1 and points >= 2");
    std::vector<double> radii;
    for (int i = 0; i < args.points; ++i) {
        double t = static_cast<double>(i) / (args.points - 1);
        if (args.spacing == "linear") {
            radii.push_back(args.rmin + (args.rmax - args.rmin) * t);
        } else if (args.spacing == "log") {
            // log-uniform in 1 - r
            double lo = std::log(1.0 - args.rmax), hi = std::log(1.0 - args.rmin);
            radii.push_back(1.0 - std::exp(hi + (lo - hi) * t));
        } else {
            raise(ErrorCode::MalformedSpec, "spacing must be linear or log");
        }
    }

    std::ostringstream csv;
    std::string hash = opts.hash();
    if (args.quantity == "mean") {
        DiskFunction f = parse_function_spec(args.functionSpec);
        double p = parse_p(args.pText);
        csv << "r,value,confighash\n";
        for (double r : radii)
            csv << num(r) << "," << num(circle_mean(f, r, p, opts.quad)) << ","
                << hash << "\n";
    } else if (args.quantity == "sharpness-ratio") {
        SharpnessReport rep = sharpness_fit(args.lacunaryTerms, radii);
        csv << "r,ratio,confighash\n";
        for (auto& [r, ratio] : rep.ratios)
            csv << num(r) << "," << num(ratio) << "," << hash << "\n";
    } else {
        raise(ErrorCode::MalformedSpec, "unknown sweep quantity: " + args.quantity);
    }
    out.write(csv.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"diskspace: function-space functionals and theorem checks on the unit disk"};
    app.require_subcommand(1);

    CommonOptions opts;
    Output out;
    std::string outPath;

    // norm
    NormArgs normArgs;
    auto* normCmd = app.add_subcommand("norm", "evaluate one functional, emit a CSV row");
    normCmd->add_option("--functional", normArgs.functional,
                        "hardy|bloch|little-bloch|dirichlet|lipschitz|oscillation")
        ->required();
    normCmd->add_option("--function", normArgs.functionSpec, "function spec (JSON)")
        ->required();
    normCmd->add_option("--majorant", normArgs.majorantSpec, "majorant spec (JSON or name)");
    normCmd->add_option("--p", normArgs.pText, "exponent p (number or 'inf')");
    normCmd->add_option("--alpha", normArgs.alpha, "alpha");
    normCmd->add_option("--beta", normArgs.beta, "beta");
    normCmd->add_option("--s", normArgs.s, "Lipschitz split exponent s");
    normCmd->add_option("--gamma", normArgs.gamma, "Dirichlet weight exponent");
    normCmd->add_option("--mu", normArgs.mu, "Dirichlet derivative power");

    // verify
    std::string checkName;
    bool suiteAll = false;
    auto* verifyCmd = app.add_subcommand("verify", "run theorem/lemma checks");
    verifyCmd->add_option("--check", checkName, "named check");
    verifyCmd->add_flag("--suite", suiteAll, "run the full suite (use with 'all')");
    std::string suiteName;
    verifyCmd->add_option("--suite-name", suiteName, "alias: --suite-name all");

    // compop
    std::string phiSpec = "identity";
    double alpha = 1.0, beta = 0.0;
    bool requireBattery = false;
    auto* compopCmd = app.add_subcommand("compop", "composition-operator boundedness");
    compopCmd->add_option("--phi", phiSpec, "self-map spec (JSON or 'identity')");
    compopCmd->add_option("--alpha", alpha, "alpha > 0")->required();
    compopCmd->add_option("--beta", beta, "beta <= alpha")->required();
    compopCmd->add_flag("--require-battery", requireBattery,
                        "fail if no adapted battery exists for (alpha, beta)");

    // sweep
    SweepArgs sweepArgs;
    auto* sweepCmd = app.add_subcommand("sweep", "radial profiles as CSV");
    sweepCmd->add_option("--quantity", sweepArgs.quantity, "mean|sharpness-ratio");
    sweepCmd->add_option("--function", sweepArgs.functionSpec, "function spec (JSON)");
    sweepCmd->add_option("--p", sweepArgs.pText, "exponent p");
    sweepCmd->add_option("--rmin", sweepArgs.rmin, "smallest radius");
    sweepCmd->add_option("--rmax", sweepArgs.rmax, "largest radius");
    sweepCmd->add_option("--points", sweepArgs.points, "grid size");
    sweepCmd->add_option("--spacing", sweepArgs.spacing, "linear|log");
    sweepCmd->add_option("--terms", sweepArgs.lacunaryTerms,
                         "lacunary terms for sharpness-ratio");

    for (auto* cmd : {normCmd, verifyCmd, compopCmd, sweepCmd}) {
        add_common_flags(cmd, opts);
        cmd->add_option("--out", outPath, "output CSV path (default stdout)");
    }

    CLI11_PARSE(app, argc, argv);
    if (!outPath.empty()) out.path = outPath;

    try {
        if (normCmd->parsed()) return run_norm(normArgs, opts, out);
        if (verifyCmd->parsed()) {
            bool all = suiteAll || suiteName == "all" || checkName == "all" ||
                       (checkName.empty() && suiteName.empty());
            return run_verify(checkName, all, opts, out);
        }
        if (compopCmd->parsed())
            return run_compop(phiSpec, alpha, beta, requireBattery, opts, out);
        if (sweepCmd->parsed()) return run_sweep(sweepArgs, opts, out);
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what()
                  << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
