#pragma once

#include <vector>

#include "qmf/level.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

// A product of dilated Dedekind eta factors, eta(v z)^e. The q^{1/24}
// prefactors are tracked here, in units of 1/24, and only resolved to an
// integer exponent when the product is converted to a QSeries.
struct EtaProduct {
    std::vector<std::pair<long, long>> factors;  // (dilation v, exponent e)

    long prefactor24() const;  // sum of v*e
};

// prod_{n>=1} (1 - q^n), the eta expansion without its q^{1/24} prefactor.
QSeries euler_product(long trunc);

// Classical Eisenstein series E_k2 on the full modular group,
// 1 - (2 k2 / B_k2) sum sigma_{k2-1}(n) q^n, for even k2 >= 4.
QSeries classical_eisenstein(long k2, long trunc);

// E_k2 for the level-N group: (1/sigma_{k2/2}(N)) sum_{v|N} v^{k2/2} E_k2(v z).
QSeries eisenstein_plus(long N, long k2, long trunc);

// Expansion of an eta product with integral net exponent. Expanded through
// the pentagonal-number theorem, so cost is quasi-linear in trunc.
QSeries eta_product(const EtaProduct& spec, long trunc);

// Kronecker limit function Delta_N = (prod_{v|N} eta(v z))^{ell_N};
// offset v_inf(Delta_N), leading coefficient 1.
QSeries kronecker_limit(long N, long trunc);

// The weight-two family. None of these enter the polynomial bases of the
// elimination stage; they exist for the small-weight structure results and
// the numeric transformation test.
QSeries e2_series(long trunc);                 // 1 - 24 sum sigma(n) q^n
QSeries e2_p(long p, long trunc);              // (p E_2(pz) - E_2(z))/(p-1), p prime
QSeries e2_N(long N, long trunc);              // ((-1)^r/phi(N)) sum mu(v) v E_2(vz)
QSeries e4_N(long N, long trunc);              // (E_{2,N})^2
QSeries tilde_delta(long N, long trunc);       // E_4^{(N)} - E_{4,N}, weight-4 cusp form

}  // namespace qmf
