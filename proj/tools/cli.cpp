#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qmf/forms.hpp"
#include "qmf/identities.hpp"
#include "qmf/jst.hpp"
#include "qmf/level.hpp"
#include "qmf/theta.hpp"

namespace {

using namespace qmf;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

// Levels whose JST3 system stays small enough for an interactive run.
const std::vector<long> kDeskLevels = {1,  2,  3,  5,  6,  7,  10, 11, 13,
                                       14, 15, 17, 21, 22, 26, 30, 33, 34,
                                       35, 39, 55, 66, 70, 78, 105, 110, 119};
constexpr long kLargeEqThreshold = 320;

std::string default_cache_dir(const std::string& flagValue) {
    if (!flagValue.empty()) return flagValue;
    if (const char* env = std::getenv("QMF_CACHE_DIR")) return env;
    return "";
}

void print_series(const QSeries& s, bool asJson) {
    if (asJson)
        std::cout << qseries_to_json(s) << "\n";
    else
        std::cout << s.to_string(24) << "\n";
}

std::vector<std::pair<long, long>> parse_eta_spec(const std::string& spec) {
    // "1:24,2:-24" means eta(z)^24 * eta(2z)^-24
    std::vector<std::pair<long, long>> factors;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("eta spec", "expected v:e pairs, got '" + item + "'");
        factors.emplace_back(std::stol(item.substr(0, colon)),
                             std::stol(item.substr(colon + 1)));
    }
    if (factors.empty()) throw CLI::ValidationError("eta spec", "empty spec");
    return factors;
}

int do_run(const std::vector<long>& levels, const std::string& variantName, long trunc,
           const std::string& format, const std::string& outputDir,
           const std::string& cacheDir, bool allowLarge) {
    const Variant variant = variantName == "jst2" ? Variant::Jst2 : Variant::Jst3;
    std::cout << "N\tM\t#eqs\tpole\n";
    for (long N : levels) {
        const LevelRecord* rec = find_level_record(N);
        if (!rec) {
            std::cerr << "level " << N << " is not a supported genus-zero level\n";
            return kExitUsage;
        }
        const long expectedEqs = variant == Variant::Jst2 ? rec->jst2Eqs : rec->jst3Eqs;
        if (expectedEqs > kLargeEqThreshold && !allowLarge) {
            std::cerr << "level " << N << " (" << variantName << ") needs "
                      << expectedEqs << " equations; rerun with --allow-large\n";
            return kExitGuard;
        }
        JstOptions opts;
        opts.truncOverride = trunc;
        opts.cacheDir = cacheDir;
        const JstResult r = run_jst(N, variant, opts);
        std::cout << r.level << "\t" << r.M << "\t" << r.equationCount << "\t"
                  << r.maxPole << "\n";
        std::string body;
        if (format == "json")
            body = jst_result_to_json(r);
        else if (format == "latex")
            body = r.hauptmodul.to_latex() + "\n\n" + r.kroneckerPower.to_latex();
        else
            body = r.hauptmodul.to_string() + "\n" + r.kroneckerPower.to_string();
        if (!outputDir.empty()) {
            std::filesystem::create_directories(outputDir);
            const std::string ext = format == "json" ? ".json"
                                   : format == "latex" ? ".tex"
                                                       : ".txt";
            std::ofstream(outputDir + "/" + variantName + "-N" + std::to_string(N) + ext)
                << body << "\n";
        } else if (format != "text") {
            std::cout << body << "\n";
        }
    }
    return kExitOk;
}

int do_verify(const std::string& suite, const std::string& cacheDir) {
    bool allPassed = true;
    auto report = [&allPassed](const std::string& name, bool ok,
                               const std::string& detail) {
        allPassed = allPassed && ok;
        std::cout << (ok ? "pass" : "FAIL") << "  " << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
    };

    const bool all = suite == "all";
    if (all || suite == "classical")
        for (const CheckResult& c : classical_suite(50))
            report("classical/" + c.name, c.passed, c.detail);

    if (all || suite == "divisor-sums") {
        const CheckResult c = divisor_sum_identity_check(200);
        report(c.name, c.passed, c.detail);
    }

    if (all || suite == "dimensions") {
        for (long N : {2L, 3L, 5L})
            for (long k2 = 0; k2 <= 24; k2 += 2) {
                const long rank = dimension_rank(N, k2);
                const long expected = dimension_formula(N, k2);
                report("dimension/N" + std::to_string(N) + "/weight" + std::to_string(k2),
                       rank == expected,
                       "rank " + std::to_string(rank) + " vs formula " +
                           std::to_string(expected));
            }
    }

    if (all || suite == "table3") {
        for (long N : crosscheck_levels()) {
            const LevelData lvl = level_constants(N);
            JstOptions opts;
            opts.extractIdentities = false;
            opts.cacheDir = cacheDir;
            const JstResult r = run_jst(N, Variant::Jst2, opts);
            const long hi = std::min(lvl.kappaN, 40L);
            const HauptmodulCrosscheck c =
                crosscheck_hauptmodul(N, r.hauptmodulSeries, hi);
            std::string detail = c.detail;
            if (c.passed) {
                std::ostringstream os;
                os << "constants:";
                for (const Rational& v : c.constants) os << " " << rational_to_string(v);
                detail = os.str();
            }
            report("table3/N" + std::to_string(N), c.passed, detail);
        }
        for (long N : crosscheck_skipped_levels())
            std::cout << "skip  table3/N" << N << "  (no closed formula)\n";
    }

    if (suite.rfind("level:", 0) == 0) {
        const long N = std::stol(suite.substr(6));
        JstOptions opts;
        opts.cacheDir = cacheDir;
        const JstResult r = run_jst(N, Variant::Jst3, opts);  // verifies internally
        report("level/" + std::to_string(N), true,
               "M=" + std::to_string(r.M) + ", identities verified");
        std::cout << r.hauptmodul.to_string() << "\n"
                  << r.kroneckerPower.to_string() << "\n";
    }

    return allPassed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-expansions, Hauptmodul identities, and verification suites"};
    app.require_subcommand(1);

    std::string cacheDirFlag;
    app.add_option("--cache-dir", cacheDirFlag,
                   "directory for run caching (env QMF_CACHE_DIR)");

    // expand
    auto* expand = app.add_subcommand("expand", "print one exact q-expansion");
    std::string object, etaSpec;
    long expandN = 1, expandK = 4, expandTrunc = 10;
    double thetaA = 0, thetaB = 0, thetaC = 0;
    std::string thetaParity = "all";
    expand->add_option("object", object,
                       "eisenstein | eisenstein-plus | eta-product | kronecker | theta")
        ->required();
    expand->add_option("--level", expandN, "level N");
    expand->add_option("--weight", expandK, "weight");
    expand->add_option("--spec", etaSpec, "eta factors as v:e,v:e,...");
    expand->add_option("--a", thetaA, "theta form coefficient a (halves allowed)");
    expand->add_option("--b", thetaB, "theta form coefficient b");
    expand->add_option("--c", thetaC, "theta form coefficient c");
    expand->add_option("--parity", thetaParity, "all | x-odd | y-odd");
    expand->add_option("--trunc", expandTrunc, "truncation order");
    bool expandJson = false;
    expand->add_flag("--json", expandJson, "emit JSON instead of text");

    // run
    auto* run = app.add_subcommand("run", "run the elimination algorithm");
    std::vector<long> runLevels;
    std::string runVariant = "jst3", runFormat = "text", runOutput;
    long runTrunc = -1;
    bool runAll = false, allowLarge = false;
    run->add_option("--level", runLevels, "levels to run")->delimiter(',');
    run->add_flag("--all", runAll, "run the default desk-scale level set");
    run->add_option("--variant", runVariant, "jst2 | jst3")
        ->check(CLI::IsMember({"jst2", "jst3"}));
    run->add_option("--trunc", runTrunc, "override the working truncation");
    run->add_option("--format", runFormat, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    run->add_option("--output", runOutput, "directory for formula files");
    run->add_flag("--allow-large", allowLarge, "permit levels beyond desk scale");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("suite", suite,
                       "classical | level:N | table3 | dimensions | divisor-sums | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string cacheDir = default_cache_dir(cacheDirFlag);
    try {
        if (expand->parsed()) {
            const auto half = [](double x) {
                Rational r(std::lround(x * 2), 2);
                r.canonicalize();
                return r;
            };
            if (object == "eisenstein")
                print_series(classical_eisenstein(expandK, expandTrunc), expandJson);
            else if (object == "eisenstein-plus")
                print_series(eisenstein_plus(expandN, expandK, expandTrunc), expandJson);
            else if (object == "eta-product")
                print_series(eta_quotient(parse_eta_spec(etaSpec), expandTrunc), expandJson);
            else if (object == "kronecker")
                print_series(kronecker_limit(expandN, expandTrunc), expandJson);
            else if (object == "theta") {
                ThetaSpec spec{half(thetaA), half(thetaB), half(thetaC),
                               thetaParity == "x-odd"   ? ThetaSpec::Parity::XOdd
                               : thetaParity == "y-odd" ? ThetaSpec::Parity::YOdd
                                                        : ThetaSpec::Parity::All};
                print_series(theta_series(spec, expandTrunc), expandJson);
            } else {
                std::cerr << "unknown object '" << object << "'\n";
                return kExitUsage;
            }
            return kExitOk;
        }
        if (run->parsed()) {
            std::vector<long> levels = runLevels;
            if (runAll) levels = kDeskLevels;
            if (levels.empty()) {
                std::cerr << "run: give --level or --all\n";
                return kExitUsage;
            }
            return do_run(levels, runVariant, runTrunc, runFormat, runOutput, cacheDir,
                          allowLarge);
        }
        if (verify->parsed()) return do_verify(suite, cacheDir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
