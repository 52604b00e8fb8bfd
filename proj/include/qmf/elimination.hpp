#pragma once

#include <map>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

// Exponent vector over even Eisenstein weights >= 4, used both as a row
// label in the elimination stage and as a polynomial monomial in the
// discovered identities.
struct Monomial {
    std::map<int, int> exponents;  // weight -> positive multiplicity

    long total_weight() const;
    // Weights with multiplicity, sorted descending, e.g. E8*E4^2 -> {8,4,4}.
    // This is the pivot-preference key: the monomial whose descending weight
    // sequence is lexicographically smallest is built from the lowest
    // weights and wins the pivot.
    std::vector<int> weight_sequence() const;

    bool operator==(const Monomial& other) const { return exponents == other.exponents; }
    std::string to_string(long level = 0) const;
    std::string to_latex(long level) const;
};

Monomial monomial_from_half_weights(const std::vector<int>& parts);

struct ExpansionRow {
    Monomial label;
    QSeries expansion;
};

struct ExpansionMatrix {
    std::vector<ExpansionRow> rows;
    long columnLo = 0;  // most negative q-exponent tracked
    long columnHi = 0;  // typically the integrality threshold kappa
};

struct ReducedRow {
    long pivotExponent = 0;
    QSeries expansion;
    // Dense combination over the original rows: expansion = sum combo[i] * row[i].
    std::vector<Rational> combo;
};

struct EchelonResult {
    std::vector<ReducedRow> reducedRows;  // pivot exponents strictly increasing
    long rank = 0;
};

struct EliminationOptions {
    bool track_combos = true;
};

// Row-reduced echelon form over the exact rationals with provenance.
//
// Columns are processed from the most negative exponent upward; within a
// column, the candidate row with the preferred Monomial label (see
// Monomial::weight_sequence) becomes the pivot, with the earlier row
// winning remaining ties. Rows that reduce to zero on the column window
// are dropped. Deterministic: identical input gives identical output.
EchelonResult rref_with_provenance(const ExpansionMatrix& m,
                                   const EliminationOptions& opts = {});

}  // namespace qmf
