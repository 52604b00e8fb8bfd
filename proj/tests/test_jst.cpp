#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "qmf/forms.hpp"
#include "qmf/jst.hpp"
#include "qmf/numtheory.hpp"

using namespace qmf;

namespace {

const IdentityTerm* find_term(const FormulaIdentity& id,
                              const std::map<int, int>& exponents,
                              long deltaPower = 0) {
    for (const auto& t : id.terms)
        if (t.monomial.exponents == exponents && t.deltaPower == deltaPower) return &t;
    return nullptr;
}

}  // namespace

TEST_CASE("candidate enumeration") {
    const std::vector<Monomial> n2 = enumerate_monomials(2, 1);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0].exponents == std::map<int, int>{{8, 1}});
    CHECK(n2[1].exponents == std::map<int, int>{{4, 2}});

    CHECK(enumerate_monomials(7, 2).size() == 21);

    const std::vector<Monomial> n1 = enumerate_monomials(1, 1);
    REQUIRE(n1.size() == 4);
    CHECK(n1[0].exponents == std::map<int, int>{{12, 1}});
    CHECK(n1[1].exponents == std::map<int, int>{{8, 1}, {4, 1}});
    CHECK(n1[2].exponents == std::map<int, int>{{6, 2}});
    CHECK(n1[3].exponents == std::map<int, int>{{4, 3}});
}

TEST_CASE("candidate ratio expansions") {
    // E4^3 / Delta_1 equals the unnormalized j expansion.
    Monomial e4cubed;
    e4cubed.exponents[4] = 3;
    const QSeries f = modular_function(1, e4cubed, 1, 24);
    CHECK(f.offset() == -1);
    CHECK(f.coeff(-1) == 1);
    const QSeries delta = kronecker_limit(1, 24);
    const QSeries direct = qs_mul(qs_pow(classical_eisenstein(4, 24), 3), qs_invert(delta));
    CHECK(qs_equal(f, direct));
    CHECK(f.coeff(0) == 744);
    CHECK(f.coeff(1) == 196884);

    Monomial e4sq;
    e4sq.exponents[4] = 2;
    CHECK(modular_function(2, e4sq, 1, 12).offset() == -1);
    CHECK_THROWS(modular_function(2, e4sq, 2, 12));  // weight mismatch
}

TEST_CASE("level 2 identities") {
    const JstResult r = run_jst(2, Variant::Jst3);
    CHECK(r.M == 1);
    CHECK(r.equationCount == 2);
    CHECK(r.maxPole == 1);

    const IdentityTerm* d1 = find_term(r.kroneckerPower, {{4, 2}});
    const IdentityTerm* d2 = find_term(r.kroneckerPower, {{8, 1}});
    REQUIRE(d1);
    REQUIRE(d2);
    CHECK(d1->coefficient == make_rational(17, 1152));
    CHECK(d2->coefficient == make_rational(-17, 1152));

    const IdentityTerm* h1 = find_term(r.hauptmodul, {{4, 2}});
    const IdentityTerm* h2 = find_term(r.hauptmodul, {{8, 1}});
    REQUIRE(h1);
    REQUIRE(h2);
    CHECK(h1->coefficient == make_rational(-77, 144));
    CHECK(h2->coefficient == make_rational(221, 144));
    CHECK(r.kroneckerPower.clearedDenominator == 1152);
}

TEST_CASE("level 3 identities") {
    const JstResult r = run_jst(3, Variant::Jst3);
    CHECK(r.M == 1);
    CHECK(r.equationCount == 4);
    CHECK(r.maxPole == 2);

    CHECK(find_term(r.hauptmodul, {{4, 3}})->coefficient == make_rational(541, 1728));
    CHECK(find_term(r.hauptmodul, {{6, 2}})->coefficient == make_rational(14461, 24300));
    CHECK(find_term(r.hauptmodul, {{12, 1}})->coefficient == make_rational(-353101, 388800));
    CHECK(find_term(r.kroneckerPower, {{4, 3}})->coefficient == make_rational(-25, 3456));
    CHECK(find_term(r.kroneckerPower, {{6, 2}})->coefficient == make_rational(-1049, 72900));
    CHECK(find_term(r.kroneckerPower, {{12, 1}})->coefficient == make_rational(50443, 2332800));
}

TEST_CASE("level 5, both variants") {
    const JstResult r3 = run_jst(5, Variant::Jst3);
    CHECK(r3.M == 3);
    CHECK(r3.equationCount == 4);
    CHECK(r3.maxPole == 3);
    CHECK(find_term(r3.hauptmodul, {{4, 3}})->coefficient ==
          make_rational(10330419229, 11016000000));
    CHECK(find_term(r3.hauptmodul, {{6, 2}})->coefficient == make_rational(36659, 2448000));
    CHECK(find_term(r3.hauptmodul, {{8, 1}, {4, 1}})->coefficient ==
          make_rational(-28493266087, 11016000000));
    CHECK(find_term(r3.hauptmodul, {{12, 1}})->coefficient ==
          make_rational(2999646893, 1836000000));
    CHECK(find_term(r3.kroneckerPower, {{4, 3}})->coefficient ==
          make_rational(-9383387, 162000000));
    CHECK(find_term(r3.kroneckerPower, {{6, 2}})->coefficient == make_rational(-13, 9000));
    CHECK(find_term(r3.kroneckerPower, {{8, 1}, {4, 1}})->coefficient ==
          make_rational(3226717, 20250000));
    CHECK(find_term(r3.kroneckerPower, {{12, 1}})->coefficient ==
          make_rational(-5398783, 54000000));

    // JST2 stops at M=1: j_5 Delta_5 = E_4^(5) - 172/13 Delta_5
    const JstResult r2 = run_jst(5, Variant::Jst2);
    CHECK(r2.M == 1);
    CHECK(r2.equationCount == 2);
    const IdentityTerm* e4term = find_term(r2.hauptmodul, {{4, 1}});
    const IdentityTerm* deltaTerm = find_term(r2.hauptmodul, {}, 1);
    REQUIRE(e4term);
    REQUIRE(deltaTerm);
    CHECK(e4term->coefficient == 1);
    CHECK(deltaTerm->coefficient == make_rational(-172, 13));
}

TEST_CASE("weighted homogeneity and generator weights") {
    for (long N : {2L, 3L, 6L}) {
        const JstResult r = run_jst(N, Variant::Jst3);
        const long kN = level_constants(N).kN;
        for (const FormulaIdentity* id : {&r.hauptmodul, &r.kroneckerPower})
            for (const auto& t : id->terms)
                CHECK(t.monomial.total_weight() + t.deltaPower * kN == r.M * kN);
        CHECK(!r.generatorWeights.empty());
        CHECK(r.generatorWeights == generator_weights(r));
    }
}

TEST_CASE("serialization and caching") {
    const std::string dir = (std::filesystem::temp_directory_path() / "qmf-cache-test").string();
    std::filesystem::remove_all(dir);

    JstOptions opts;
    opts.cacheDir = dir;
    const JstResult fresh = run_jst(2, Variant::Jst3, opts);
    const std::string json1 = jst_result_to_json(fresh);

    const JstResult reparsed = jst_result_from_json(json1);
    CHECK(jst_result_to_json(reparsed) == json1);

    const JstResult cached = run_jst(2, Variant::Jst3, opts);  // served from disk
    CHECK(jst_result_to_json(cached) == json1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("text renderings") {
    const JstResult r = run_jst(2, Variant::Jst3);
    CHECK(r.hauptmodul.to_string() ==
          "j_2*D_2 = 221/144*E8^(2) - 77/144*E4^(2)^2");
    CHECK(r.kroneckerPower.to_latex().find("\\tfrac{17}{1152}") != std::string::npos);
}
