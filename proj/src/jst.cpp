#include "qmf/jst.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qmf/forms.hpp"
#include "qmf/numtheory.hpp"

namespace qmf {

namespace {

constexpr const char* kCacheVersion = "v1";
constexpr long kTruncGuard = 8;

struct Candidate {
    Monomial monomial;
    long Mb = 0;  // denominator power this row was generated with
};

// Per-iteration expansion context: Eisenstein powers by weight and inverse
// powers of the Kronecker limit function, all at one working truncation.
struct ExpansionContext {
    long N;
    long trunc;
    std::map<int, std::vector<QSeries>> eisensteinPowers;  // weight -> [E^1, E^2, ...]
    std::map<long, QSeries> invDelta;                      // Mb -> Delta^-Mb
    QSeries delta;

    ExpansionContext(long N_, long trunc_) : N(N_), trunc(trunc_) {
        delta = kronecker_limit(N, trunc);
    }

    const QSeries& eis_power(int weight, int e) {
        auto& powers = eisensteinPowers[weight];
        if (powers.empty()) powers.push_back(eisenstein_plus(N, weight, trunc));
        while (static_cast<int>(powers.size()) < e)
            powers.push_back(qs_mul(powers.back(), powers.front()));
        return powers[static_cast<std::size_t>(e - 1)];
    }

    QSeries numerator(const Monomial& b) {
        QSeries acc = QSeries::constant(Rational(1), trunc);
        for (const auto& [w, e] : b.exponents) acc = qs_mul(acc, eis_power(w, e));
        return acc;
    }

    const QSeries& inv_delta(long Mb) {
        auto it = invDelta.find(Mb);
        if (it == invDelta.end()) {
            QSeries inv = (Mb == 0) ? QSeries::constant(Rational(1), trunc)
                                    : qs_invert(qs_pow(delta, Mb));
            it = invDelta.emplace(Mb, std::move(inv)).first;
        }
        return it->second;
    }

    QSeries row(const Candidate& c) {
        if (c.Mb == 0) return QSeries::constant(Rational(1), trunc);
        return qs_mul(numerator(c.monomial), inv_delta(c.Mb));
    }
};

std::vector<Candidate> candidate_set(long N, Variant variant, long M) {
    std::vector<Candidate> out;
    if (variant == Variant::Jst2) {
        out.push_back({Monomial{}, 0});
        for (long Mb = 1; Mb <= M; ++Mb)
            for (const Monomial& b : enumerate_monomials(N, Mb)) out.push_back({b, Mb});
    } else {
        for (const Monomial& b : enumerate_monomials(N, M)) out.push_back({b, M});
    }
    return out;
}

FormulaIdentity build_identity(long N, long M, FormulaIdentity::Kind kind,
                               const std::vector<Candidate>& cands,
                               const std::vector<Rational>& combo) {
    FormulaIdentity id;
    id.level = N;
    id.M = M;
    id.kind = kind;
    Integer lcm(1);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (combo[i] == 0) continue;
        IdentityTerm t;
        t.monomial = cands[i].monomial;
        t.deltaPower = M - cands[i].Mb;
        t.coefficient = combo[i];
        id.terms.push_back(std::move(t));
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                combo[i].get_den().get_mpz_t());
    }
    id.clearedDenominator = lcm;
    for (auto& t : id.terms) {
        Rational scaled = t.coefficient * Rational(lcm);
        scaled.canonicalize();
        if (scaled.get_den() != 1)
            throw std::logic_error("build_identity: cleared coefficient not integral");
        t.cleared = scaled.get_num();
    }
    return id;
}

// Independent re-expansion of the right-hand side from the forms module.
QSeries expand_identity_rhs(const FormulaIdentity& id, ExpansionContext& ctx) {
    QSeries acc = QSeries::zero(ctx.trunc);
    for (const auto& t : id.terms) {
        QSeries term = ctx.numerator(t.monomial);
        if (t.deltaPower > 0) term = qs_mul(term, qs_pow(ctx.delta, t.deltaPower));
        acc = qs_add(acc, qs_scale(term, t.coefficient));
    }
    return acc;
}

void verify_identities(const JstResult& r, ExpansionContext& ctx) {
    const QSeries deltaM = qs_pow(ctx.delta, r.M);
    if (!qs_equal(expand_identity_rhs(r.kroneckerPower, ctx), deltaM))
        throw std::logic_error("run_jst: Kronecker-power identity failed re-expansion");
    if (!qs_equal(expand_identity_rhs(r.hauptmodul, ctx),
                  qs_mul(r.hauptmodulSeries, deltaM)))
        throw std::logic_error("run_jst: Hauptmodul identity failed re-expansion");
    if (r.hauptmodulSeries.coeff(-1) != 1 || r.hauptmodulSeries.coeff(0) != 0)
        throw std::logic_error("run_jst: Hauptmodul not normalized to q^-1 + 0 + O(q)");
}

std::string cache_path(const std::string& dir, long N, Variant variant,
                       const JstOptions& opts) {
    std::ostringstream os;
    os << dir << "/jst-" << kCacheVersion << "-N" << N << "-" << variant_name(variant)
       << "-m" << opts.mMax << "-t" << opts.truncOverride
       << (opts.extractIdentities ? "-full" : "-series") << ".json";
    return os.str();
}

using nlohmann::json;

json monomial_to_json(const Monomial& m) {
    json j = json::object();
    for (const auto& [w, e] : m.exponents) j[std::to_string(w)] = e;
    return j;
}

Monomial monomial_from_json(const json& j) {
    Monomial m;
    for (auto it = j.begin(); it != j.end(); ++it)
        m.exponents[std::stoi(it.key())] = it->get<int>();
    return m;
}

json identity_to_json(const FormulaIdentity& id) {
    json terms = json::array();
    for (const auto& t : id.terms)
        terms.push_back({{"monomial", monomial_to_json(t.monomial)},
                         {"delta_power", t.deltaPower},
                         {"coefficient", rational_to_string(t.coefficient)},
                         {"cleared", t.cleared.get_str()}});
    return {{"level", id.level},
            {"M", id.M},
            {"kind", id.kind == FormulaIdentity::Kind::HauptmodulNumerator
                         ? "hauptmodul-numerator"
                         : "kronecker-power"},
            {"cleared_denominator", id.clearedDenominator.get_str()},
            {"terms", terms}};
}

FormulaIdentity identity_from_json(const json& j) {
    FormulaIdentity id;
    id.level = j.at("level").get<long>();
    id.M = j.at("M").get<long>();
    id.kind = j.at("kind").get<std::string>() == "hauptmodul-numerator"
                  ? FormulaIdentity::Kind::HauptmodulNumerator
                  : FormulaIdentity::Kind::KroneckerPower;
    id.clearedDenominator = Integer(j.at("cleared_denominator").get<std::string>());
    for (const auto& tj : j.at("terms")) {
        IdentityTerm t;
        t.monomial = monomial_from_json(tj.at("monomial"));
        t.deltaPower = tj.at("delta_power").get<long>();
        t.coefficient = rational_from_string(tj.at("coefficient").get<std::string>());
        t.cleared = Integer(tj.at("cleared").get<std::string>());
        id.terms.push_back(std::move(t));
    }
    return id;
}

}  // namespace

std::string variant_name(Variant v) { return v == Variant::Jst2 ? "jst2" : "jst3"; }

std::string FormulaIdentity::to_string() const {
    std::ostringstream os;
    if (kind == Kind::HauptmodulNumerator) os << "j_" << level << "*";
    os << "D_" << level;
    if (M > 1) os << "^" << M;
    os << " =";
    bool first = true;
    for (const auto& t : terms) {
        const bool neg = t.coefficient < 0;
        os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
        Rational mag = abs(t.coefficient);
        const bool bare = t.monomial.exponents.empty() && t.deltaPower == 0;
        if (mag != 1 || bare) os << rational_to_string(mag);
        if (!t.monomial.exponents.empty()) {
            if (mag != 1) os << "*";
            os << t.monomial.to_string(level);
        }
        if (t.deltaPower > 0) {
            if (mag != 1 || !t.monomial.exponents.empty()) os << "*";
            os << "D_" << level;
            if (t.deltaPower > 1) os << "^" << t.deltaPower;
        }
        first = false;
    }
    return os.str();
}

std::string FormulaIdentity::to_latex() const {
    std::ostringstream os;
    if (kind == Kind::HauptmodulNumerator)
        os << "j_{" << level << "}(z)\\,";
    os << "\\Delta_{" << level << "}";
    if (M > 1) os << "^{" << M << "}";
    os << "(z) =";
    bool first = true;
    for (const auto& t : terms) {
        const bool neg = t.coefficient < 0;
        os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
        Rational mag = abs(t.coefficient);
        if (mag != 1 || (t.monomial.exponents.empty() && t.deltaPower == 0)) {
            if (mag.get_den() == 1)
                os << mag.get_num().get_str();
            else
                os << "\\tfrac{" << mag.get_num().get_str() << "}{"
                   << mag.get_den().get_str() << "}";
        }
        if (!t.monomial.exponents.empty()) os << " " << t.monomial.to_latex(level);
        if (t.deltaPower > 0) {
            os << " \\Delta_{" << level << "}";
            if (t.deltaPower > 1) os << "^{" << t.deltaPower << "}";
            os << "(z)";
        }
        first = false;
    }
    return os.str();
}

std::vector<Monomial> enumerate_monomials(long N, long M) {
    if (M < 1) throw std::invalid_argument("enumerate_monomials: M >= 1 required");
    const LevelData lvl = level_constants(N);
    const long half = M * lvl.kN / 2;
    std::vector<Monomial> out;
    for (const auto& parts : partitions_ge2(half).parts)
        out.push_back(monomial_from_half_weights(parts));
    return out;
}

QSeries modular_function(long N, const Monomial& b, long M, long trunc) {
    const LevelData lvl = level_constants(N);
    if (b.total_weight() != M * lvl.kN)
        throw std::invalid_argument("modular_function: monomial weight " +
                                    std::to_string(b.total_weight()) +
                                    " != M*k_N = " + std::to_string(M * lvl.kN));
    ExpansionContext ctx(N, trunc);
    return ctx.row({b, M});
}

JstResult run_jst(long N, Variant variant, const JstOptions& opts) {
    const LevelData lvl = level_constants(N);
    if (!lvl.genusZero)
        throw std::invalid_argument("run_jst: level " + std::to_string(N) +
                                    " is not in the supported genus-zero list");

    std::string cacheFile;
    if (!opts.cacheDir.empty()) {
        cacheFile = cache_path(opts.cacheDir, N, variant, opts);
        std::ifstream in(cacheFile);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            return jst_result_from_json(ss.str());
        }
    }

    std::string lastProfile = "no iterations run";
    for (long M = 1; M <= opts.mMax; ++M) {
        const long trunc = (opts.truncOverride > 0)
                               ? opts.truncOverride
                               : lvl.kappaN + 2 * M * lvl.vInf + kTruncGuard;
        ExpansionContext ctx(N, trunc);

        const std::vector<Candidate> cands = candidate_set(N, variant, M);
        ExpansionMatrix mat;
        mat.columnLo = -M * lvl.vInf;
        mat.columnHi = lvl.kappaN;
        for (const auto& c : cands) {
            QSeries exp = ctx.row(c);
            if (exp.trunc() < mat.columnHi)
                throw std::runtime_error(
                    "run_jst: truncation " + std::to_string(trunc) +
                    " leaves row truncated at " + std::to_string(exp.trunc()) +
                    " < " + std::to_string(mat.columnHi) +
                    "; increase the truncation override");
            mat.rows.push_back({c.monomial, std::move(exp)});
        }

        EliminationOptions eopts;
        eopts.track_combos = opts.extractIdentities;
        EchelonResult ech = rref_with_provenance(mat, eopts);

        bool haveJ = false, haveConst = false;
        for (const auto& rr : ech.reducedRows) {
            if (rr.pivotExponent == -1) haveJ = true;
            if (rr.pivotExponent == 0) haveConst = true;
        }
        {
            std::ostringstream os;
            os << "M=" << M << " rank=" << ech.rank << " pivots={";
            for (std::size_t i = 0; i < ech.reducedRows.size(); ++i)
                os << (i ? "," : "") << ech.reducedRows[i].pivotExponent;
            os << "}";
            lastProfile = os.str();
        }
        if (!haveJ || !haveConst) continue;

        JstResult r;
        r.level = N;
        r.variant = variant;
        r.M = M;
        r.equationCount = static_cast<long>(cands.size());
        r.maxPole = M * lvl.vInf;
        r.trunc = trunc;

        const ReducedRow* jRow = nullptr;
        const ReducedRow* cRow = nullptr;
        for (const auto& rr : ech.reducedRows) {
            if (rr.pivotExponent == -1) jRow = &rr;
            if (rr.pivotExponent == 0) cRow = &rr;
        }
        // The pivot-0 row must be the genuine constant 1, not merely a
        // series with constant term 1.
        if (!qs_equal(cRow->expansion, QSeries::constant(Rational(1), cRow->expansion.trunc())))
            throw std::logic_error("run_jst: pivot-0 row is not the constant function");
        r.hauptmodulSeries = jRow->expansion;

        if (opts.extractIdentities) {
            r.hauptmodul = build_identity(
                N, M, FormulaIdentity::Kind::HauptmodulNumerator, cands, jRow->combo);
            r.kroneckerPower = build_identity(
                N, M, FormulaIdentity::Kind::KroneckerPower, cands, cRow->combo);
            r.generatorWeights = generator_weights(r);
            r.identitiesExtracted = true;
            verify_identities(r, ctx);
        }

        if (!cacheFile.empty()) {
            std::filesystem::create_directories(opts.cacheDir);
            std::ofstream out(cacheFile);
            out << jst_result_to_json(r) << "\n";
        }
        return r;
    }
    throw std::runtime_error("run_jst: no stop through M=" + std::to_string(opts.mMax) +
                             " (last profile: " + lastProfile + ")");
}

std::vector<int> generator_weights(const JstResult& r) {
    std::set<int> weights;
    for (const FormulaIdentity* id : {&r.hauptmodul, &r.kroneckerPower})
        for (const auto& t : id->terms)
            if (t.coefficient != 0)
                for (const auto& [w, e] : t.monomial.exponents) weights.insert(w);
    return {weights.begin(), weights.end()};
}

std::string jst_result_to_json(const JstResult& r) {
    json j = {{"level", r.level},
              {"variant", variant_name(r.variant)},
              {"M", r.M},
              {"equation_count", r.equationCount},
              {"max_pole", r.maxPole},
              {"trunc", r.trunc},
              {"identities_extracted", r.identitiesExtracted},
              {"generator_weights", r.generatorWeights},
              {"hauptmodul_series", json::parse(qseries_to_json(r.hauptmodulSeries))}};
    if (r.identitiesExtracted) {
        j["hauptmodul"] = identity_to_json(r.hauptmodul);
        j["kronecker_power"] = identity_to_json(r.kroneckerPower);
    }
    return j.dump(2);
}

JstResult jst_result_from_json(const std::string& text) {
    const json j = json::parse(text);
    JstResult r;
    r.level = j.at("level").get<long>();
    r.variant = j.at("variant").get<std::string>() == "jst2" ? Variant::Jst2
                                                             : Variant::Jst3;
    r.M = j.at("M").get<long>();
    r.equationCount = j.at("equation_count").get<long>();
    r.maxPole = j.at("max_pole").get<long>();
    r.trunc = j.at("trunc").get<long>();
    r.identitiesExtracted = j.at("identities_extracted").get<bool>();
    r.generatorWeights = j.at("generator_weights").get<std::vector<int>>();
    r.hauptmodulSeries = qseries_from_json(j.at("hauptmodul_series").dump());
    if (r.identitiesExtracted) {
        r.hauptmodul = identity_from_json(j.at("hauptmodul"));
        r.kroneckerPower = identity_from_json(j.at("kronecker_power"));
    }
    return r;
}

}  // namespace qmf
