#include "qmf/elimination.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmf {

long Monomial::total_weight() const {
    long acc = 0;
    for (const auto& [w, e] : exponents) acc += static_cast<long>(w) * e;
    return acc;
}

std::vector<int> Monomial::weight_sequence() const {
    std::vector<int> seq;
    for (auto it = exponents.rbegin(); it != exponents.rend(); ++it)
        seq.insert(seq.end(), static_cast<std::size_t>(it->second), it->first);
    return seq;
}

std::string Monomial::to_string(long level) const {
    if (exponents.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
        if (!first) os << "*";
        os << "E" << it->first;
        if (level > 0) os << "^(" << level << ")";
        if (it->second > 1) os << "^" << it->second;
        first = false;
    }
    return os.str();
}

std::string Monomial::to_latex(long level) const {
    if (exponents.empty()) return "1";
    std::ostringstream os;
    for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
        if (it->second > 1) os << "\\big(";
        os << "E^{(" << level << ")}_{" << it->first << "}(z)";
        if (it->second > 1) os << "\\big)^{" << it->second << "}";
        os << " ";
    }
    std::string s = os.str();
    s.pop_back();
    return s;
}

Monomial monomial_from_half_weights(const std::vector<int>& parts) {
    Monomial m;
    for (int p : parts) ++m.exponents[2 * p];
    return m;
}

EchelonResult rref_with_provenance(const ExpansionMatrix& m,
                                   const EliminationOptions& opts) {
    if (m.columnHi < m.columnLo)
        throw std::invalid_argument("rref_with_provenance: empty column range");
    const std::size_t nrows = m.rows.size();
    for (const auto& row : m.rows) {
        if (row.expansion.trunc() < m.columnHi)
            throw std::invalid_argument(
                "rref_with_provenance: a row does not cover the column range "
                "(trunc " + std::to_string(row.expansion.trunc()) + " < " +
                std::to_string(m.columnHi) + ")");
    }

    // Rows are carried on a common window [columnLo, window_hi]; pivots are
    // confined to [columnLo, columnHi] but the extra columns above columnHi
    // ride along so reduced expansions keep their full provable length.
    long window_hi = m.rows.empty() ? m.columnHi
                                    : m.rows.front().expansion.trunc();
    for (const auto& row : m.rows)
        window_hi = std::min(window_hi, row.expansion.trunc());
    const long lo = m.columnLo;
    const std::size_t width = static_cast<std::size_t>(window_hi - lo + 1);

    std::vector<std::vector<Rational>> work(nrows);
    std::vector<std::vector<Rational>> combos(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        work[i].resize(width);
        for (long n = lo; n <= window_hi; ++n)
            work[i][static_cast<std::size_t>(n - lo)] = m.rows[i].expansion.coeff(n);
        if (opts.track_combos) {
            combos[i].assign(nrows, Rational(0));
            combos[i][i] = Rational(1);
        }
    }

    std::vector<std::vector<int>> keys(nrows);
    for (std::size_t i = 0; i < nrows; ++i) keys[i] = m.rows[i].label.weight_sequence();

    std::vector<bool> used(nrows, false);
    std::vector<std::pair<long, std::size_t>> pivots;  // (exponent, row)

    const std::size_t pivot_cols = static_cast<std::size_t>(m.columnHi - lo + 1);
    for (std::size_t col = 0; col < pivot_cols; ++col) {
        std::size_t best = nrows;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (used[i] || work[i][col] == 0) continue;
            if (best == nrows || keys[i] < keys[best]) best = i;
        }
        if (best == nrows) continue;
        used[best] = true;

        const Rational inv = Rational(1) / work[best][col];
        for (auto& x : work[best]) x *= inv;
        if (opts.track_combos)
            for (auto& x : combos[best]) x *= inv;

        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == best || work[i][col] == 0) continue;
            const Rational f = work[i][col];
            for (std::size_t c = col; c < width; ++c)
                if (work[best][c] != 0) work[i][c] -= f * work[best][c];
            // Columns left of the pivot are already reduced for both rows.
            if (opts.track_combos)
                for (std::size_t c = 0; c < nrows; ++c)
                    if (combos[best][c] != 0) combos[i][c] -= f * combos[best][c];
        }
        pivots.emplace_back(lo + static_cast<long>(col), best);
    }

    EchelonResult out;
    out.rank = static_cast<long>(pivots.size());
    for (const auto& [exp, row] : pivots) {
        ReducedRow rr;
        rr.pivotExponent = exp;
        rr.expansion = QSeries(lo, work[row], window_hi);
        if (opts.track_combos) rr.combo = combos[row];
        out.reducedRows.push_back(std::move(rr));
    }
    return out;
}

}  // namespace qmf
