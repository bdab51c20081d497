#include "wheels/counting.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

namespace wheels {

namespace {

void check_necklace_args(int n, int k) {
    if (n < 1) throw InvalidArgument("word length n must be >= 1");
    if (k < 1) throw InvalidArgument("alphabet size k must be >= 1");
}

Count128 u(std::int64_t v) { return Count128{static_cast<std::uint64_t>(v)}; }

}  // namespace

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw InvalidArgument("euler_phi(0) is undefined");
    std::uint64_t result = m;
    for (std::uint64_t d = 2; d <= m / d; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::uint64_t binomial64(int n, int k) {
    if (n < 0 || n > 64 || k < 0 || k > n) throw InvalidArgument("binomial64 needs 0 <= k <= n <= 64");
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<std::uint64_t>(n - k + i);
        acc /= static_cast<std::uint64_t>(i);
    }
    return static_cast<std::uint64_t>(acc);
}

Count128 necklaces(int n, int k) {
    check_necklace_args(n, k);
    Count128 acc{0};
    const auto un = static_cast<std::uint64_t>(n);
    for (std::uint64_t d = 1; d * d <= un; ++d) {
        if (un % d != 0) continue;
        acc += Count128{euler_phi(d)} * checked_pow(Count128{static_cast<std::uint64_t>(k)}, un / d);
        if (d != un / d)
            acc += Count128{euler_phi(un / d)} * checked_pow(Count128{static_cast<std::uint64_t>(k)}, d);
    }
    Count128 result = acc.div_exact(Count128{un});
#ifndef NDEBUG
    assert(result == necklaces_gcd_form(n, k));
#endif
    return result;
}

Count128 necklaces_gcd_form(int n, int k) {
    check_necklace_args(n, k);
    Count128 acc{0};
    const auto un = static_cast<std::uint64_t>(n);
    for (std::uint64_t i = 1; i <= un; ++i)
        acc += checked_pow(Count128{static_cast<std::uint64_t>(k)}, std::gcd(un, i));
    return acc.div_exact(Count128{un});
}

Count128 bracelets(int n, int k) {
    check_necklace_args(n, k);
    const Count128 kk{static_cast<std::uint64_t>(k)};
    Count128 reflom = (n % 2 == 1)
                          ? checked_pow(kk, static_cast<std::uint64_t>(n + 1) / 2)
                          : (Count128{static_cast<std::uint64_t>(k + 1)} *
                             checked_pow(kk, static_cast<std::uint64_t>(n) / 2))
                                .div_exact(Count128{2});
    return (necklaces(n, k) + reflom).div_exact(Count128{2});
}

Count128 partition_count(std::int64_t n, std::int64_t k) {
    if (n < 0) throw InvalidArgument("partition_count needs n >= 0");
    if (k < 1) throw InvalidArgument("partition_count needs k >= 1");
    if (n < k) return Count128{0};
    // p(m; j) = p(m-1; j-1) + p(m-j; j), rolled over j.
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<Count128> prev(size, Count128{0});  // j = 0: only p(0;0) = 1
    prev[0] = Count128{1};
    std::vector<Count128> cur(size, Count128{0});
    for (std::int64_t j = 1; j <= k; ++j) {
        for (std::size_t m = 0; m < size; ++m) {
            Count128 v = m >= 1 ? prev[m - 1] : Count128{0};
            if (m >= static_cast<std::size_t>(j)) v += cur[m - static_cast<std::size_t>(j)];
            cur[m] = v;
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(n)];
}

Count128 nearest_twelfth(Count128 m) { return (m + Count128{6}).floor_div(Count128{12}); }

bool psi_closed_defined(std::int64_t p, std::int64_t n) {
    return p >= 0 && p <= n && std::min(p, n - p) <= 4;
}

Count128 psi_closed(std::int64_t p, std::int64_t n) {
    if (n < 4) throw InvalidArgument("psi is defined for n >= 4");
    if (p < 0 || p > n) throw InvalidArgument("psi needs 0 <= p <= n");
    const std::int64_t pr = std::min(p, n - p);  // psi_p(n) = psi_{n-p}(n)
    switch (pr) {
        case 0:
        case 1:
            return Count128{1};
        case 2:
            return Count128{1} + u((n - 2) / 2);
        case 3:
            return Count128{1} + u((n - 3) / 2) + nearest_twelfth(u(n - 3) * u(n - 3));
        case 4: {
            const Count128 l = u((n - 4) / 4);
            const Count128 k = u(n / 2);  // floor; equals (n-1)/2 for odd n
            const Count128 one{1}, two{2}, three{3}, four{4};
            const Count128 a = (l + one) * k * k;
            if (n % 2 == 0) {
                const Count128 b = (two * l + three) * (l + one) * k;
                const Count128 c =
                    (four * l * l * l + Count128{15} * l * l + Count128{20} * l + Count128{9})
                        .div_exact(three);
                return a + c - b;
            }
            const Count128 b = two * (l + one) * (l + one) * k;
            const Count128 c = ((two * l + one) * (two * l + three) * (l + one)).div_exact(three);
            return a + c - b;
        }
        default:
            throw NoClosedFormError("no closed form for psi_p(n) with p=" + std::to_string(p) +
                                    ", n=" + std::to_string(n) +
                                    " (covered: min(p, n-p) <= 4); use enumeration");
    }
}

Count128 psi4_case_counts(std::int64_t n, std::int64_t r) {
    if (n < 8) throw InvalidArgument("psi4 case counts need n >= 8");
    const std::int64_t l = (n - 4) / 4;
    if (r < 0 || r > l)
        throw InvalidArgument("case distance r must be in 0..floor((n-4)/4)=" + std::to_string(l));
    const Count128 k = u(n / 2);
    const Count128 half_minus_two = u(n / 2 - 2);
    if (r == 0) {
        Count128 pairs = (n % 2 == 0) ? (k - Count128{3}) * (k - Count128{2})
                                      : (k - Count128{2}) * (k - Count128{2});
        return Count128{1} + half_minus_two + half_minus_two + pairs;
    }
    const Count128 inner = k - u(2 * r + 1);
    if (n % 2 == 1) return inner * inner;
    const Count128 outer = k - u(2 * r + 2);
    return inner + outer * outer;
}

Count128 psi_total(std::int64_t n) {
    if (n < 4) throw InvalidArgument("psi is defined for n >= 4");
    if (n > 1000000) throw InvalidArgument("psi_total: n out of supported range");
    return bracelets(static_cast<int>(n), 2);
}

}  // namespace wheels
