#pragma once

#include "qmf/qseries.hpp"

namespace qmf {

// Theta series of a binary quadratic form,
//   theta(a,b,c) = sum over (x,y) in Z^2 of q^{(a x^2 + b x y + c y^2)/2},
// optionally restricted to odd x or odd y. Parameters may be half-integral;
// the form must be positive definite.
struct ThetaSpec {
    Rational a, b, c;
    enum class Parity { All, XOdd, YOdd };
    Parity parity = Parity::All;
};

// Expansion with integral q-exponents; a lattice point producing a
// fractional exponent is an error here.
QSeries theta_series(const ThetaSpec& spec, long trunc);

// Expansion in u = q^{1/24}: exponent 24*(a x^2 + b x y + c y^2)/2 per
// lattice point, which is integral for all half-integral a, b, c.
QSeries theta_series_scaled(const ThetaSpec& spec, long trunc24);

}  // namespace qmf
