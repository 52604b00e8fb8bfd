#include "qmf/qseries.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmf {

namespace {
const Rational kZero(0);
}

QSeries::QSeries(long offset, std::vector<Rational> coeffs, long trunc)
    : offset_(offset), trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (trunc_ < offset_) throw std::invalid_argument("QSeries: trunc < offset");
    if (static_cast<long>(coeffs_.size()) != trunc_ - offset_ + 1)
        throw std::invalid_argument("QSeries: coefficient count does not match window");
    trim();
}

QSeries QSeries::zero(long trunc) {
    QSeries s;
    s.offset_ = trunc;
    s.trunc_ = trunc;
    s.coeffs_.assign(1, Rational(0));
    return s;
}

QSeries QSeries::constant(const Rational& c, long trunc) {
    return monomial(c, 0, trunc);
}

QSeries QSeries::monomial(const Rational& c, long n, long trunc) {
    if (trunc < n) throw std::invalid_argument("QSeries::monomial: trunc below exponent");
    std::vector<Rational> coeffs(static_cast<std::size_t>(trunc - n + 1), Rational(0));
    coeffs[0] = c;
    return QSeries(n, std::move(coeffs), trunc);
}

const Rational& QSeries::coeff(long n) const {
    if (n > trunc_)
        throw std::out_of_range("QSeries::coeff: exponent " + std::to_string(n) +
                                " beyond truncation " + std::to_string(trunc_));
    if (n < offset_) return kZero;
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

void QSeries::set_coeff(long n, const Rational& c) {
    if (n < offset_ || n > trunc_)
        throw std::out_of_range("QSeries::set_coeff: exponent outside window");
    coeffs_[static_cast<std::size_t>(n - offset_)] = c;
}

long QSeries::order() const {
    for (long n = offset_; n <= trunc_; ++n)
        if (coeffs_[static_cast<std::size_t>(n - offset_)] != 0) return n;
    return trunc_ + 1;
}

bool QSeries::is_zero() const { return order() > trunc_; }

QSeries QSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc_)
        throw std::invalid_argument("QSeries::truncated: cannot extend truncation");
    if (new_trunc < offset_) return QSeries::zero(new_trunc);
    std::vector<Rational> coeffs(coeffs_.begin(),
                                 coeffs_.begin() + (new_trunc - offset_ + 1));
    return QSeries(offset_, std::move(coeffs), new_trunc);
}

void QSeries::trim() {
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        offset_ += static_cast<long>(lead);
    }
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    const long off = std::min(a.offset_, b.offset_);
    const long tr = std::min(a.trunc_, b.trunc_);
    if (tr < off) return QSeries::zero(tr);
    std::vector<Rational> out(static_cast<std::size_t>(tr - off + 1), Rational(0));
    for (long n = off; n <= tr; ++n) {
        Rational c(0);
        if (n >= a.offset_ && n <= a.trunc_) c += a.coeff(n);
        if (n >= b.offset_ && n <= b.trunc_) c += b.coeff(n);
        out[static_cast<std::size_t>(n - off)] = c;
    }
    return QSeries(off, std::move(out), tr);
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
    return qs_add(a, qs_scale(b, Rational(-1)));
}

QSeries qs_scale(const QSeries& a, const Rational& c) {
    std::vector<Rational> out = a.coeffs_;
    for (auto& x : out) x *= c;
    return QSeries(a.offset_, std::move(out), a.trunc_);
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    // A window that is zero throughout still certifies vanishing to order
    // trunc+1, so the order (capped at trunc+1) drives the bound.
    const long oa = a.order();
    const long ob = b.order();
    const long tr = std::min(a.trunc_ + ob, b.trunc_ + oa);
    const long off = oa + ob;
    if (off > tr) return QSeries::zero(tr);
    std::vector<Rational> out(static_cast<std::size_t>(tr - off + 1), Rational(0));
    for (long i = oa; i <= a.trunc_ && i + ob <= tr; ++i) {
        const Rational& ai = a.coeff(i);
        if (ai == 0) continue;
        for (long j = ob; j <= b.trunc_ && i + j <= tr; ++j) {
            const Rational& bj = b.coeff(j);
            if (bj == 0) continue;
            out[static_cast<std::size_t>(i + j - off)] += ai * bj;
        }
    }
    return QSeries(off, std::move(out), tr);
}

QSeries qs_pow(const QSeries& a, long e) {
    if (e < 0) throw std::invalid_argument("qs_pow: negative exponent");
    if (e == 0) return QSeries::constant(Rational(1), a.trunc_);
    QSeries r = a;
    long msb = 63;
    while (((e >> msb) & 1) == 0) --msb;
    for (long bit = msb - 1; bit >= 0; --bit) {
        r = qs_mul(r, r);
        if ((e >> bit) & 1) r = qs_mul(r, a);
    }
    return r;
}

QSeries qs_dilate(const QSeries& a, long v) {
    if (v < 1) throw std::invalid_argument("qs_dilate: dilation must be positive");
    if (v == 1) return a;
    const long off = a.offset_ * v;
    const long tr = a.trunc_ * v;
    std::vector<Rational> out(static_cast<std::size_t>(tr - off + 1), Rational(0));
    for (long n = a.offset_; n <= a.trunc_; ++n)
        out[static_cast<std::size_t>((n - a.offset_) * v)] = a.coeff(n);
    return QSeries(off, std::move(out), tr);
}

QSeries qs_invert(const QSeries& a) {
    const long d = a.order();
    if (d > a.trunc_) throw std::invalid_argument("qs_invert: series is zero on its window");
    const std::size_t n = static_cast<std::size_t>(a.trunc_ - d + 1);
    // a = q^d * u with u a unit known to n terms; invert u by the usual
    // triangular recurrence, then shift by q^{-d}.
    std::vector<Rational> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = a.coeff(d + static_cast<long>(i));
    std::vector<Rational> v(n, Rational(0));
    v[0] = Rational(1) / u[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += u[j] * v[k - j];
        v[k] = -acc / u[0];
    }
    return QSeries(-d, std::move(v), a.trunc_ - 2 * d);
}

bool qs_equal(const QSeries& a, const QSeries& b) {
    const long tr = std::min(a.trunc_, b.trunc_);
    const long off = std::min(a.offset_, b.offset_);
    if (tr < off) return true;
    for (long n = off; n <= tr; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

EvalResult qs_eval(const QSeries& a, std::complex<double> z) {
    if (z.imag() <= 0.0)
        throw std::invalid_argument("qs_eval: point must be in the upper half plane");
    if (a.offset() < 0)
        throw std::invalid_argument("qs_eval: negative offset not supported");
    const std::complex<double> q =
        std::exp(std::complex<double>(0.0, 2.0 * M_PI) * z);
    std::complex<double> acc(0.0, 0.0);
    double max_coeff = 0.0;
    // Horner from the top coefficient down.
    for (long n = a.trunc(); n >= a.offset(); --n) {
        const double c = rational_to_double(a.coeff(n));
        max_coeff = std::max(max_coeff, std::abs(c));
        acc = acc * q + c;
    }
    acc *= std::pow(q, static_cast<double>(a.offset()));
    const double absq = std::abs(q);
    const double bound =
        std::pow(absq, static_cast<double>(a.trunc() + 1)) / (1.0 - absq) * max_coeff;
    return EvalResult{acc, bound};
}

std::string QSeries::to_string(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    bool first = true;
    for (long n = offset_; n <= trunc_ && shown < max_terms; ++n) {
        const Rational& c = coeff(n);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(c) << "*q^" << n;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << trunc_ + 1 << ")";
    return os.str();
}

std::string qseries_to_json(const QSeries& a) {
    nlohmann::json j;
    j["offset"] = a.offset();
    j["trunc"] = a.trunc();
    std::vector<std::string> coeffs;
    coeffs.reserve(static_cast<std::size_t>(a.trunc() - a.offset() + 1));
    for (long n = a.offset(); n <= a.trunc(); ++n)
        coeffs.push_back(rational_to_string(a.coeff(n)));
    j["coeffs"] = coeffs;
    return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const long offset = j.at("offset").get<long>();
    const long trunc = j.at("trunc").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs"))
        coeffs.push_back(rational_from_string(s.get<std::string>()));
    return QSeries(offset, std::move(coeffs), trunc);
}

}  // namespace qmf
