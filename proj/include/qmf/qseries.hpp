#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Truncated Laurent series in q with exact rational coefficients.
//
// Coefficients are stored densely for exponents in [offset, trunc] and are
// guaranteed correct on that window; nothing is claimed beyond trunc.
// Reading an exponent above trunc throws; reading below offset yields 0.
// Every operation propagates the provable truncation bound pessimistically,
// so a coefficient is never reported unless it is exact.
class QSeries {
public:
    QSeries() = default;
    QSeries(long offset, std::vector<Rational> coeffs, long trunc);

    static QSeries zero(long trunc);
    static QSeries constant(const Rational& c, long trunc);
    // c * q^n, correct through q^trunc
    static QSeries monomial(const Rational& c, long n, long trunc);

    long offset() const { return offset_; }
    long trunc() const { return trunc_; }

    const Rational& coeff(long n) const;
    void set_coeff(long n, const Rational& c);

    // Lowest exponent with a nonzero coefficient, or trunc+1 when the
    // represented window is identically zero.
    long order() const;
    bool is_zero() const;

    QSeries truncated(long new_trunc) const;

    std::string to_string(long max_terms = 12) const;

    friend QSeries qs_add(const QSeries& a, const QSeries& b);
    friend QSeries qs_sub(const QSeries& a, const QSeries& b);
    friend QSeries qs_scale(const QSeries& a, const Rational& c);
    friend QSeries qs_mul(const QSeries& a, const QSeries& b);
    friend QSeries qs_pow(const QSeries& a, long e);
    friend QSeries qs_dilate(const QSeries& a, long v);
    friend QSeries qs_invert(const QSeries& a);
    friend bool qs_equal(const QSeries& a, const QSeries& b);

private:
    // Drops leading zero coefficients (raising offset) so that offset tracks
    // the true order whenever the series is nonzero. Multiplication depends
    // on this for tight truncation bounds.
    void trim();

    long offset_ = 0;
    long trunc_ = -1;
    std::vector<Rational> coeffs_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const Rational& c);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_pow(const QSeries& a, long e);
QSeries qs_dilate(const QSeries& a, long v);
QSeries qs_invert(const QSeries& a);

// Equality of the two series on the intersection of their provable windows.
bool qs_equal(const QSeries& a, const QSeries& b);

struct EvalResult {
    std::complex<double> value;
    double error_bound;  // |q|^(trunc+1)/(1-|q|) * max |coeff|
};

// Numeric evaluation at a point z in the upper half plane (q = e^{2 pi i z}).
// Requires offset >= 0.
EvalResult qs_eval(const QSeries& a, std::complex<double> z);

std::string qseries_to_json(const QSeries& a);
QSeries qseries_from_json(const std::string& text);

}  // namespace qmf
