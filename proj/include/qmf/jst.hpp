#pragma once

#include <string>
#include <vector>

#include "qmf/elimination.hpp"
#include "qmf/level.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

enum class Variant { Jst2, Jst3 };

std::string variant_name(Variant v);

struct IdentityTerm {
    Monomial monomial;
    long deltaPower = 0;  // power of the Kronecker limit function in the term
    Rational coefficient;
    Integer cleared;  // coefficient * clearedDenominator of the identity
};

// A weighted-homogeneous polynomial identity in the level-N Eisenstein
// series: the left-hand side is j_N * Delta_N^M or Delta_N^M, the right
// side is the stored sum. Each term's weight, counting deltaPower copies
// of Delta_N, equals M * k_N.
struct FormulaIdentity {
    enum class Kind { HauptmodulNumerator, KroneckerPower };

    long level = 0;
    long M = 0;
    Kind kind = Kind::KroneckerPower;
    std::vector<IdentityTerm> terms;
    Integer clearedDenominator;  // lcm of the term denominators

    std::string to_string() const;
    std::string to_latex() const;
};

struct JstResult {
    long level = 0;
    Variant variant = Variant::Jst3;
    long M = 0;
    long equationCount = 0;
    long maxPole = 0;
    long trunc = 0;  // working truncation of the final iteration
    bool identitiesExtracted = false;
    FormulaIdentity hauptmodul;
    FormulaIdentity kroneckerPower;
    std::vector<int> generatorWeights;
    QSeries hauptmodulSeries;  // j_N = q^-1 + 0 + O(q)
};

struct JstOptions {
    long mMax = 64;
    long truncOverride = -1;  // -1: kappa + 2*M*vInf + small guard
    // Combination tracking is what makes identity extraction possible; turn
    // it off when only the Hauptmodul expansion is wanted.
    bool extractIdentities = true;
    std::string cacheDir;  // empty: no caching
};

// All monomials in the even-weight Eisenstein series with total weight
// M * k_N, in the canonical order of partitions_ge2(M * k_N / 2).
std::vector<Monomial> enumerate_monomials(long N, long M);

// F_b = (product of Eisenstein expansions per b) / Delta_N^M, as a Laurent
// series with offset >= -M * v_inf.
QSeries modular_function(long N, const Monomial& b, long M, long trunc);

// The elimination loop: iterate M = 1, 2, ... with the variant's candidate
// set, stopping at the first M whose reduced matrix pins down both the
// Hauptmodul (pivot -1) and the constant (pivot 0). Every extracted
// identity is re-expanded and compared against its target before return.
JstResult run_jst(long N, Variant variant, const JstOptions& opts = {});

// Distinct Eisenstein weights appearing with nonzero coefficient in either
// identity.
std::vector<int> generator_weights(const JstResult& r);

std::string jst_result_to_json(const JstResult& r);
JstResult jst_result_from_json(const std::string& text);

}  // namespace qmf
