#pragma once

#include <optional>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Constants attached to a square-free level N.
struct LevelData {
    long N = 1;
    std::vector<long> primes;
    int r = 0;                 // number of prime factors
    Integer sigmaN;            // sigma(N)
    long ellN = 0;             // eta-product exponent
    long kN = 0;               // weight of the Kronecker limit function
    long kappaN = -1;          // integrality threshold; -1 when not tabulated
    long vInf = 0;             // vanishing order of the Kronecker limit function at i infinity
    Rational volOver2Pi;       // sigma(N) / (12 * 2^(r-1))
    bool genusZero = false;
};

LevelData level_constants(long N);

// Reference performance data for one level, used as test targets.
struct LevelRecord {
    long N;
    long kN;
    long kappaN;
    long jst2M, jst2Eqs, jst2Pole;
    long jst3M, jst3Eqs, jst3Pole;
    std::vector<int> generatorWeights;  // tabulated finite generating set
};

// All 44 genus-zero square-free levels (N = 1 included), ascending.
const std::vector<LevelRecord>& genus_zero_table();
const LevelRecord* find_level_record(long N);
bool is_genus_zero_level(long N);

}  // namespace qmf
