#pragma once

#include <string>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Eta quotient with integral net q-exponent: factors (v, e) mean eta(v z)^e,
// e of either sign.
QSeries eta_quotient(const std::vector<std::pair<long, long>>& factors, long trunc);

// Same quotient expanded in u = q^{1/24}, usable when the net prefactor is
// not a multiple of 24.
QSeries eta_quotient_scaled(const std::vector<std::pair<long, long>>& factors,
                            long trunc24);

// Collapses a u = q^{1/24} expansion whose support lies on multiples of 24
// back to a series in q; support off the sublattice is an error.
QSeries scaled_to_integral(const QSeries& u);

// Identities of the classical level-one theory: the discriminant as an
// Eisenstein combination and as an eta power, the small-weight relations,
// and the first j-invariant coefficients.
std::vector<CheckResult> classical_suite(long trunc);

// One classical-eta/theta Hauptmodul formula compared against the computed
// j_N: the difference must be constant, and alternative formulas for the
// same level must agree up to constants.
struct HauptmodulCrosscheck {
    long N = 0;
    bool passed = false;
    std::vector<Rational> constants;  // one per alternative formula: t_form - j_N
    std::string detail;
};

// Levels with a closed eta/theta formula; the remaining tabulated levels
// define their Hauptmodul only implicitly and are skipped.
std::vector<long> crosscheck_levels();
std::vector<long> crosscheck_skipped_levels();

// j must be the normalized Hauptmodul expansion for N with trunc >= compareHi.
HauptmodulCrosscheck crosscheck_hauptmodul(long N, const QSeries& j, long compareHi);

// Rank of the space of weight-k2 holomorphic forms, computed as the rank of
// the coefficient matrix of all weight-k2 monomials in the level's known
// generating set (supported: N = 2, 3, 5).
long dimension_rank(long N, long k2);

// The closed dimension formula for N = 2, 3, 5. The sources state each
// formula as two branches whose conditions overlap for one of the levels;
// the first branch is applied when its condition holds, the floor+1 value
// otherwise.
long dimension_formula(long N, long k2);

// sigma_9-type convolution identity: with
// A_{2k-1}(n) = sigma_{2k-1}(n) + 2^k [n even] sigma_{2k-1}(n/2),
// checks A_9(n) = 336 sum_{j<n} A_3(j) A_5(n-j) + 7 A_5(n) - 6 A_3(n).
CheckResult divisor_sum_identity_check(long nMax);

// Writes E_8^(3) = (E_4^(3))^2 (c1 j_3 + c2)/(c1 j_3 + c2 - 1), solving for
// the constants and verifying through trunc; also confirms that
// E_8^(3) - (E_4^(3))^2 and E_10^(3) - E_4^(3) E_6^(3) are cusp forms.
struct E8Level3Result {
    Rational c1, c2;
    bool passed = false;
    std::string detail;
};
E8Level3Result e8_level3_rational_check(const QSeries& j3, long trunc);

// |E_{2,N}(-1/(N i)) + N E_{2,N}(i)|: the weight-2 transformation residual
// under the Fricke involution at z = i, numeric.
double fricke_residual(long N, long trunc);

}  // namespace qmf
