#include "qmf/theta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qmf {

namespace {

// Series on the q^{1/scale} lattice: coefficient at u^n counts lattice
// points with scale * (a x^2 + b x y + c y^2)/2 = n.
QSeries theta_on_lattice(const ThetaSpec& spec, long truncScaled, long scale) {
    const Rational disc = 4 * spec.a * spec.c - spec.b * spec.b;
    if (spec.a <= 0 || disc <= 0)
        throw std::invalid_argument("theta_series: form is not positive definite");

    // a x^2 + b x y + c y^2 <= 2 T / scale confines x^2 <= 8Tc/(scale*disc)
    // and y^2 <= 8Ta/(scale*disc).
    const double T = static_cast<double>(truncScaled);
    const double d = rational_to_double(disc) * static_cast<double>(scale);
    const long xMax = static_cast<long>(std::sqrt(8.0 * T * rational_to_double(spec.c) / d)) + 2;
    const long yMax = static_cast<long>(std::sqrt(8.0 * T * rational_to_double(spec.a) / d)) + 2;

    std::vector<Rational> coeffs(static_cast<std::size_t>(truncScaled + 1));
    const Rational half(1, 2);
    for (long x = -xMax; x <= xMax; ++x) {
        if (spec.parity == ThetaSpec::Parity::XOdd && x % 2 == 0) continue;
        for (long y = -yMax; y <= yMax; ++y) {
            if (spec.parity == ThetaSpec::Parity::YOdd && y % 2 == 0) continue;
            Rational e = half * Rational(scale) *
                         (spec.a * x * x + spec.b * x * y + spec.c * y * y);
            e.canonicalize();
            if (e.get_den() != 1)
                throw std::invalid_argument(
                    "theta_series: exponent " + rational_to_string(e) + "/" +
                    std::to_string(scale) + " at (" + std::to_string(x) + "," +
                    std::to_string(y) + ") is off the q^(1/" +
                    std::to_string(scale) + ") lattice");
            if (e < 0) throw std::logic_error("theta_series: negative exponent");
            if (e.get_num() > truncScaled) continue;
            coeffs[static_cast<std::size_t>(e.get_num().get_si())] += 1;
        }
    }
    return QSeries(0, std::move(coeffs), truncScaled);
}

}  // namespace

QSeries theta_series(const ThetaSpec& spec, long trunc) {
    return theta_on_lattice(spec, trunc, 1);
}

QSeries theta_series_scaled(const ThetaSpec& spec, long trunc24) {
    return theta_on_lattice(spec, trunc24, 24);
}

}  // namespace qmf
