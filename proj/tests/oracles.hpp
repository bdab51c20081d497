#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Brute-force counting oracles, independent of the library's counting paths.
// Words over k symbols are packed 4 bits per digit (k <= 5, n <= 14), and an
// orbit is counted at its minimal packed value.

#include <cstdint>
#include <stdexcept>

namespace oracles {

inline std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

namespace detail {

inline std::uint64_t rotate_digits(std::uint64_t v, int n, int r) {
    if (r == 0) return v;
    const std::uint64_t low = v & ((1ull << (4 * r)) - 1);
    return (v >> (4 * r)) | (low << (4 * (n - r)));
}

inline std::uint64_t reverse_digits(std::uint64_t v, int n) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) out |= ((v >> (4 * i)) & 0xF) << (4 * (n - 1 - i));
    return out;
}

inline std::uint64_t pack_index(std::uint64_t idx, int n, int k) {
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
        v |= (idx % static_cast<std::uint64_t>(k)) << (4 * i);
        idx /= static_cast<std::uint64_t>(k);
    }
    return v;
}

template <bool WithReflection>
std::uint64_t count_orbits(int n, int k) {
    if (n < 1 || n > 14 || k < 1 || k > 5) throw std::invalid_argument("oracle range is n<=14, k<=5");
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(k), n);
    std::uint64_t orbits = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const std::uint64_t v = pack_index(idx, n, k);
        std::uint64_t best = v;
        const std::uint64_t rv = WithReflection ? reverse_digits(v, n) : 0;
        for (int r = 0; r < n; ++r) {
            best = std::min(best, rotate_digits(v, n, r));
            if (WithReflection) best = std::min(best, rotate_digits(rv, n, r));
        }
        if (best == v) ++orbits;
    }
    return orbits;
}

}  // namespace detail

// Orbits of k-ary length-n words under rotation.
inline std::uint64_t necklace_orbits(int n, int k) { return detail::count_orbits<false>(n, k); }

// Orbits under rotation and reflection.
inline std::uint64_t bracelet_orbits(int n, int k) { return detail::count_orbits<true>(n, k); }

// Partitions of n into exactly k parts, each in 1..max_part, nonincreasing.
inline std::uint64_t partitions_exact(int n, int k, int max_part) {
    if (k == 0) return n == 0 ? 1 : 0;
    std::uint64_t total = 0;
    for (int part = std::min(max_part, n); part >= 1; --part)
        total += partitions_exact(n - part, k - 1, part);
    return total;
}

inline std::uint64_t partitions_exact(int n, int k) { return partitions_exact(n, k, n); }

}  // namespace oracles

#endif  // TESTS_ORACLES_HPP
