#include "qmf/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qmf {

Rational bernoulli(long m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    if (m == 1) return make_rational(-1, 2);
    if (m % 2 != 0) throw std::invalid_argument("bernoulli: odd index > 1 not supported");

    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    // B_k from sum_{j=0}^{k} C(k+1,j) B_j = 0.
    while (static_cast<long>(cache.size()) <= m) {
        const long k = static_cast<long>(cache.size());
        if (k % 2 != 0) {
            cache.push_back(k == 1 ? make_rational(-1, 2) : Rational(0));
            continue;
        }
        Rational acc(0);
        for (long j = 0; j < k; ++j)
            acc += Rational(binomial(k + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(k + 1));
    }
    return cache[m];
}

Integer sigma(long n, long alpha) {
    if (n < 1) throw std::invalid_argument("sigma: n must be positive");
    Integer acc(0);
    for (long d : divisors(n)) acc += integer_pow(Integer(d), static_cast<unsigned long>(alpha));
    return acc;
}

int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int r = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++r;
        }
    }
    if (n > 1) ++r;
    return (r % 2 == 0) ? 1 : -1;
}

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long out = n;
    for (long p : prime_factors(n)) out -= out / p;
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_square_free(long n) {
    if (n < 1) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

namespace {

void enumerate_parts(long rem, long max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(rem, max_part); p >= 2; --p) {
        if (rem - p == 1) continue;  // a trailing 1 can never be completed
        cur.push_back(static_cast<int>(p));
        enumerate_parts(rem - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Integer partition_count(long n) {
    if (n < 0) return 0;
    static std::vector<Integer> cache{Integer(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // Euler's pentagonal number recurrence.
    while (static_cast<long>(cache.size()) <= n) {
        const long m = static_cast<long>(cache.size());
        Integer acc(0);
        for (long k = 1;; ++k) {
            const long g1 = m - k * (3 * k - 1) / 2;
            const long g2 = m - k * (3 * k + 1) / 2;
            if (g1 < 0 && g2 < 0) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 >= 0) acc += sign * cache[static_cast<std::size_t>(g1)];
            if (g2 >= 0) acc += sign * cache[static_cast<std::size_t>(g2)];
        }
        cache.push_back(acc);
    }
    return cache[static_cast<std::size_t>(n)];
}

Integer count_partitions_ge2(long n) {
    if (n < 0) throw std::invalid_argument("count_partitions_ge2: negative target");
    // Removing one part equal to 1 is a bijection between partitions of n
    // containing a 1 and all partitions of n-1.
    return partition_count(n) - partition_count(n - 1);
}

PartitionSet partitions_ge2(long n) {
    if (n < 0) throw std::invalid_argument("partitions_ge2: negative target");
    PartitionSet out;
    out.target = n;
    std::vector<int> cur;
    enumerate_parts(n, n, cur, out.parts);
    return out;
}

}  // namespace qmf
