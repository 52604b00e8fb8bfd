#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/forms.hpp"
#include "qmf/numtheory.hpp"

using namespace qmf;

namespace {

// Literal telescoped product prod_{n=1}^{trunc} (1 - q^n), no pentagonal
// shortcut.
QSeries euler_oracle(long trunc) {
    QSeries acc = QSeries::constant(Rational(1), trunc);
    for (long n = 1; n <= trunc; ++n) {
        QSeries factor = QSeries::constant(Rational(1), trunc);
        factor.set_coeff(n, Rational(-1));
        acc = qs_mul(acc, factor).truncated(trunc);
    }
    return acc;
}

}  // namespace

TEST_CASE("euler product matches literal expansion") {
    CHECK(qs_equal(euler_product(30), euler_oracle(30)));
}

TEST_CASE("classical Eisenstein expansions") {
    const QSeries e4 = classical_eisenstein(4, 5);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.coeff(3) == 6720);
    const QSeries e6 = classical_eisenstein(6, 3);
    CHECK(e6.coeff(1) == -504);
    CHECK(e6.coeff(2) == -16632);
    CHECK_THROWS(classical_eisenstein(2, 5));
    CHECK_THROWS(classical_eisenstein(7, 5));
}

TEST_CASE("level Eisenstein series") {
    // E_4^(5) = (E_4(z) + 25 E_4(5z)) / 26
    const QSeries e = eisenstein_plus(5, 4, 6);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == make_rational(120, 13));
    for (long n = 0; n <= 6; ++n) {
        Rational direct = Rational(240) * Rational(sigma(n == 0 ? 1 : n, 3));
        if (n == 0) direct = 0;
        Rational dilated = (n % 5 == 0 && n > 0)
                               ? Rational(25 * 240) * Rational(sigma(n / 5, 3))
                               : Rational(0);
        Rational expected = (direct + dilated) / 26;
        if (n == 0) expected = 1;
        CHECK(e.coeff(n) == expected);
    }
    CHECK_THROWS(eisenstein_plus(12, 4, 6));  // not square-free
}

TEST_CASE("eta products") {
    // eta(z)^24 = q prod (1-q^n)^24 = (E4^3 - E6^2)/1728
    const long T = 20;
    const QSeries disc = qs_scale(
        qs_sub(qs_pow(classical_eisenstein(4, T), 3), qs_pow(classical_eisenstein(6, T), 2)),
        Rational(1, 1728));
    const QSeries eta24 = eta_product(EtaProduct{{{1, 24}}}, T);
    CHECK(qs_equal(disc, eta24));
    CHECK(eta24.offset() == 1);
    CHECK(eta24.coeff(1) == 1);
    CHECK(eta24.coeff(2) == -24);

    CHECK_THROWS_WITH_AS(eta_product(EtaProduct{{{1, 5}}}, 10),
                         doctest::Contains("mod 24"), std::invalid_argument);
}

TEST_CASE("Kronecker limit functions") {
    // Delta_2 = (eta(z) eta(2z))^8: offset 1, integer coefficients
    const QSeries d2 = kronecker_limit(2, 8);
    CHECK(d2.offset() == 1);
    CHECK(d2.coeff(1) == 1);
    CHECK(d2.coeff(2) == -8);
    CHECK(d2.coeff(3) == 12);
    const QSeries direct = eta_product(EtaProduct{{{1, 8}, {2, 8}}}, 8);
    CHECK(qs_equal(d2, direct));

    // Delta_5 = (eta(z) eta(5z))^4, weight 4, order 1
    const QSeries d5 = kronecker_limit(5, 8);
    CHECK(d5.offset() == 1);
    CHECK(qs_equal(d5, eta_product(EtaProduct{{{1, 4}, {5, 4}}}, 8)));
}

TEST_CASE("weight-two family") {
    const QSeries e2 = e2_series(5);
    CHECK(e2.coeff(0) == 1);
    CHECK(e2.coeff(1) == -24);
    CHECK(e2.coeff(2) == -72);

    CHECK_THROWS(e2_p(6, 5));
    const QSeries f = e2_p(2, 6);
    // (2 E2(2z) - E2(z))/(2-1): constant 1
    CHECK(f.coeff(0) == 1);

    // The weight-4 difference E_4^(N) - (E_{2,N})^2 is a cusp form.  At
    // N = 2, 3 the weight-4 space has no cusp forms, so it vanishes.
    for (long N : {2L, 3L, 5L, 6L}) {
        const QSeries td = tilde_delta(N, 10);
        CHECK(td.coeff(0) == 0);
        CHECK(td.is_zero() == (N == 2 || N == 3));
    }
    // At N = 5 it is a multiple of Delta_5
    CHECK(qs_equal(tilde_delta(5, 8),
                   qs_scale(kronecker_limit(5, 8), make_rational(-36, 13))));
}
