#include "qmf/forms.hpp"

#include <stdexcept>

#include "qmf/numtheory.hpp"

namespace qmf {

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace

// Pentagonal number theorem.
QSeries euler_product(long trunc) {
    std::vector<Rational> c(static_cast<std::size_t>(trunc + 1), Rational(0));
    for (long k = 0;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        const long e2 = k * (3 * k + 1) / 2;
        if (e1 > trunc && e2 > trunc) break;
        const Rational s((k % 2 == 0) ? 1 : -1);
        if (e1 <= trunc) c[static_cast<std::size_t>(e1)] += s;
        if (k > 0 && e2 <= trunc) c[static_cast<std::size_t>(e2)] += s;
    }
    return QSeries(0, std::move(c), trunc);
}

long EtaProduct::prefactor24() const {
    long acc = 0;
    for (const auto& [v, e] : factors) acc += v * e;
    return acc;
}

QSeries classical_eisenstein(long k2, long trunc) {
    if (k2 < 4 || k2 % 2 != 0)
        throw std::invalid_argument("classical_eisenstein: weight must be even and >= 4");
    const Rational factor = Rational(-2 * k2) / bernoulli(k2);
    std::vector<Rational> c(static_cast<std::size_t>(trunc + 1));
    c[0] = Rational(1);
    for (long n = 1; n <= trunc; ++n)
        c[static_cast<std::size_t>(n)] = factor * Rational(sigma(n, k2 - 1));
    return QSeries(0, std::move(c), trunc);
}

QSeries eisenstein_plus(long N, long k2, long trunc) {
    const LevelData lvl = level_constants(N);  // validates square-freeness
    const long k = k2 / 2;
    const Rational norm = make_rational(Integer(1), sigma(N, k));
    QSeries acc = QSeries::zero(trunc);
    for (long v : divisors(lvl.N)) {
        QSeries piece = qs_dilate(classical_eisenstein(k2, ceil_div(trunc, v)), v);
        if (piece.trunc() > trunc) piece = piece.truncated(trunc);
        acc = qs_add(acc, qs_scale(piece, norm * Rational(integer_pow(Integer(v), k))));
    }
    return acc;
}

QSeries eta_product(const EtaProduct& spec, long trunc) {
    const long pre = spec.prefactor24();
    if (pre % 24 != 0)
        throw std::invalid_argument(
            "eta_product: net q^{1/24} power is " + std::to_string(pre) +
            ", which is " + std::to_string(((pre % 24) + 24) % 24) +
            " mod 24; only integral exponents are representable");
    const long shift = pre / 24;
    QSeries acc = QSeries::constant(Rational(1), trunc);
    for (const auto& [v, e] : spec.factors) {
        if (v < 1 || e < 1)
            throw std::invalid_argument("eta_product: factors need v >= 1, e >= 1");
        QSeries f = qs_dilate(euler_product(ceil_div(trunc, v)), v);
        if (f.trunc() > trunc) f = f.truncated(trunc);
        acc = qs_mul(acc, qs_pow(f, e));
    }
    // Reattach the exact q^{pre/24} prefactor.
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(acc.trunc() - acc.offset() + 1));
    for (long n = acc.offset(); n <= acc.trunc(); ++n) c.push_back(acc.coeff(n));
    return QSeries(acc.offset() + shift, std::move(c), acc.trunc() + shift);
}

QSeries kronecker_limit(long N, long trunc) {
    const LevelData lvl = level_constants(N);
    EtaProduct spec;
    for (long v : divisors(N)) spec.factors.emplace_back(v, lvl.ellN);
    return eta_product(spec, trunc);
}

QSeries e2_series(long trunc) {
    std::vector<Rational> c(static_cast<std::size_t>(trunc + 1));
    c[0] = Rational(1);
    for (long n = 1; n <= trunc; ++n)
        c[static_cast<std::size_t>(n)] = Rational(-24) * Rational(sigma(n, 1));
    return QSeries(0, std::move(c), trunc);
}

QSeries e2_p(long p, long trunc) {
    if (prime_factors(p).size() != 1 || !is_square_free(p))
        throw std::invalid_argument("e2_p: p must be prime");
    QSeries dilated = qs_dilate(e2_series(ceil_div(trunc, p)), p);
    if (dilated.trunc() > trunc) dilated = dilated.truncated(trunc);
    const QSeries num =
        qs_add(qs_scale(dilated, Rational(p)), qs_scale(e2_series(trunc), Rational(-1)));
    return qs_scale(num, make_rational(1, p - 1));
}

QSeries e2_N(long N, long trunc) {
    const LevelData lvl = level_constants(N);
    const Rational norm =
        make_rational((lvl.r % 2 == 0) ? 1 : -1, euler_phi(N));
    QSeries acc = QSeries::zero(trunc);
    for (long v : divisors(N)) {
        const int mu = moebius(v);
        if (mu == 0) continue;
        QSeries piece = qs_dilate(e2_series(ceil_div(trunc, v)), v);
        if (piece.trunc() > trunc) piece = piece.truncated(trunc);
        acc = qs_add(acc, qs_scale(piece, norm * Rational(mu * v)));
    }
    return acc;
}

QSeries e4_N(long N, long trunc) { return qs_pow(e2_N(N, trunc), 2); }

QSeries tilde_delta(long N, long trunc) {
    return qs_sub(eisenstein_plus(N, 4, trunc), e4_N(N, trunc));
}

}  // namespace qmf
