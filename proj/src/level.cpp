#include "qmf/level.hpp"

#include <numeric>
#include <stdexcept>

#include "qmf/numtheory.hpp"

namespace qmf {

LevelData level_constants(long N) {
    if (N < 1) throw std::invalid_argument("level_constants: N must be positive");
    if (!is_square_free(N))
        throw std::invalid_argument("level_constants: N = " + std::to_string(N) +
                                    " is not square-free");
    LevelData d;
    d.N = N;
    d.primes = prime_factors(N);
    d.r = static_cast<int>(d.primes.size());
    d.sigmaN = sigma(N, 1);
    const long sN = d.sigmaN.get_si();

    // k_N = lcm(4, 2^(r-1) * 24/gcd(24, sigma(N))); for N = 1 the half-power
    // 2^(r-1) = 1/2 divides 24/gcd = 24 evenly.
    const long t = 24 / std::gcd(24L, sN);
    const long t2 = (d.r == 0) ? t / 2 : t << (d.r - 1);
    d.kN = std::lcm(4L, t2);
    d.ellN = (d.r == 0) ? 2 * d.kN : (2 * d.kN) >> d.r;
    d.vInf = sN * d.ellN / 24;
    if (sN * d.ellN % 24 != 0)
        throw std::logic_error("level_constants: non-integral vanishing order");
    d.volOver2Pi = (d.r == 0) ? make_rational(sN * 2, 12)
                              : make_rational(sN, 12L << (d.r - 1));

    if (const LevelRecord* rec = find_level_record(N)) {
        d.kappaN = rec->kappaN;
        d.genusZero = true;
    }
    return d;
}

const std::vector<LevelRecord>& genus_zero_table() {
    // N, k_N, kappa_N, JST2 (M, #eqs, pole), JST3 (M, #eqs, pole), generator weights.
    static const std::vector<LevelRecord> table = {
        {1, 12, 19, 1, 5, 1, 1, 4, 1, {4, 6}},
        {2, 8, 47, 1, 3, 1, 1, 2, 1, {4, 6, 8}},
        {3, 12, 48, 1, 5, 2, 1, 4, 2, {4, 6, 12}},
        {5, 4, 19, 1, 2, 1, 3, 4, 3, {4, 6, 8, 12}},
        {6, 4, 60, 1, 2, 1, 3, 4, 3, {4, 6, 8, 12}},
        {7, 12, 19, 1, 5, 4, 2, 21, 8, {4, 6, 8, 10, 12}},
        {10, 8, 75, 2, 10, 6, 2, 7, 6, {4, 6, 8, 10, 12, 16}},
        {11, 4, 19, 3, 8, 6, 9, 88, 18, {4, 6, 8, 10, 12}},
        {13, 12, 19, 2, 26, 14, 3, 88, 21, {4, 6, 8, 10, 12}},
        {14, 4, 47, 3, 8, 6, 6, 21, 12, {4, 6, 8, 10, 12}},
        {15, 4, 96, 3, 8, 6, 5, 12, 10, {4, 6, 8, 10, 12, 14, 16}},
        {17, 4, 19, 4, 15, 12, 9, 88, 27, {4, 6, 8, 10, 12}},
        {19, 12, 19, 3, 114, 30, 4, 320, 40, {4, 6, 8, 10, 12}},
        {21, 12, 53, 2, 26, 16, 2, 21, 16, {4, 6, 8, 10, 12, 14, 16}},
        {22, 4, 47, 4, 15, 12, 6, 21, 18, {4, 6, 8, 10, 12, 14, 16, 18}},
        {23, 4, 19, 5, 27, 20, 15, 1039, 60, {4, 6, 8, 10, 12}},
        {26, 8, 47, 3, 31, 21, 4, 55, 28, {4, 6, 8, 10, 12, 14}},
        {29, 4, 19, 6, 48, 30, 15, 1039, 75, {4, 6, 8, 10, 12}},
        {30, 4, 127, 4, 15, 12, 6, 21, 18, {4, 6, 8, 10, 12, 14, 16, 18}},
        {31, 12, 19, 4, 434, 64, 5, 1039, 80, {4, 6, 8, 10, 12}},
        {33, 4, 48, 5, 27, 20, 8, 55, 32, {4, 6, 8, 10, 12, 14}},
        {34, 8, 47, 3, 31, 27, 4, 55, 36, {4, 6, 8, 10, 12, 14, 16}},
        {35, 4, 19, 5, 27, 20, 7, 34, 28, {4, 6, 8, 10, 12, 14, 16, 18}},
        {38, 4, 47, 5, 27, 25, 10, 137, 50, {4, 6, 8, 10, 12, 14}},
        {39, 12, 48, 3, 114, 42, 3, 88, 42, {4, 6, 8, 10, 12, 14}},
        {41, 4, 19, 7, 82, 49, 21, 8591, 147, {4, 6, 8, 10, 12}},
        {42, 4, 108, 5, 27, 20, 7, 34, 28, {4, 6, 8, 10, 12, 14, 16, 18}},
        {46, 4, 47, 6, 48, 36, 14, 708, 84, {4, 6, 8, 10, 12}},
        {47, 4, 19, 8, 137, 64, 27, 56224, 216, {4, 6, 8, 10, 12}},
        {51, 4, 48, 6, 48, 36, 11, 210, 66, {4, 6, 8, 10, 12, 14}},
        {55, 4, 19, 6, 48, 36, 8, 55, 48, {4, 6, 8, 10, 12, 14, 16, 18, 20, 22}},
        {59, 4, 19, 9, 225, 90, 33, 310962, 330, {4, 6, 8, 10, 12}},
        {62, 4, 47, 7, 82, 56, 18, 3094, 144, {4, 6, 8, 10, 12}},
        {66, 4, 60, 6, 48, 36, 8, 55, 48, {4, 6, 8, 10, 12, 14, 16, 18, 20, 22}},
        {69, 4, 48, 7, 82, 56, 14, 708, 112, {4, 6, 8, 10, 12}},
        {70, 4, 181, 6, 48, 36, 8, 55, 48, {4, 6, 8, 10, 12, 14, 16, 18, 20, 22}},
        {71, 4, 19, 10, 362, 120, 39, 1512301, 468, {4, 6, 8, 10, 12}},
        {78, 4, 81, 6, 48, 42, 9, 88, 63, {4, 6, 8, 10, 12, 14, 16, 18}},
        {87, 4, 48, 7, 82, 70, 17, 2167, 170, {4, 6, 8, 10, 12}},
        {94, 4, 47, 8, 137, 96, 26, 41646, 312, {4, 6, 8, 10, 12}},
        {95, 4, 19, 7, 82, 70, 11, 210, 110, {4, 6, 8, 10, 12, 14, 16}},
        {105, 4, 181, 7, 82, 56, 9, 88, 72, {4, 6, 8, 10, 12, 14, 16, 18, 20}},
        {110, 4, 89, 7, 82, 63, 9, 88, 81,
         {4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26}},
        {119, 4, 19, 8, 137, 96, 10, 137, 120,
         {4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24}},
    };
    return table;
}

const LevelRecord* find_level_record(long N) {
    for (const auto& rec : genus_zero_table())
        if (rec.N == N) return &rec;
    return nullptr;
}

bool is_genus_zero_level(long N) { return find_level_record(N) != nullptr; }

}  // namespace qmf
