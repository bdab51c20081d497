#ifndef WHEELS_COUNTING_HPP
#define WHEELS_COUNTING_HPP

#include <cstdint>

#include "wheels/count128.hpp"

namespace wheels {

std::uint64_t euler_phi(std::uint64_t m);

// C(n, k) for 0 <= n <= 64.
std::uint64_t binomial64(int n, int k);

// Number of k-ary necklaces of length n (orbits under rotation):
// N(n,k) = (1/n) * sum over d | n of phi(d) * k^(n/d).
Count128 necklaces(int n, int k);

// Same count evaluated as (1/n) * sum_{i=1..n} k^gcd(n,i); cross-check route.
Count128 necklaces_gcd_form(int n, int k);

// Number of k-ary bracelets of length n (orbits under rotation and
// reflection): N'(n,k) = (N(n,k) + R(n,k)) / 2 with
// R = k^((n+1)/2) for odd n and ((k+1)/2) * k^(n/2) for even n.
Count128 bracelets(int n, int k);

// Partitions of n into exactly k parts, each >= 1; zero when n < k.
Count128 partition_count(std::int64_t n, std::int64_t k);

// Nearest integer to m/12, as integer arithmetic: floor((m+6)/12). Ties
// cannot occur for the square arguments this is used with (squares are
// 0, 1, 4 or 9 mod 12).
Count128 nearest_twelfth(Count128 m);

// True when psi_closed covers (p, n), i.e. min(p, n-p) <= 4.
bool psi_closed_defined(std::int64_t p, std::int64_t n);

// Closed-form count of switching-isomorphism classes of signed W_n with p
// negative rim edges, for p' = min(p, n-p) in 0..4:
//   p'=0,1 -> 1
//   p'=2   -> 1 + floor((n-2)/2)
//   p'=3   -> 1 + floor((n-3)/2) + nearest_twelfth((n-3)^2)
//   p'=4   -> cubic polynomials in k and l = floor((n-4)/4), with k = n/2
//             for even n and k = (n-1)/2 for odd n.
// Throws NoClosedFormError for p' >= 5; the census module falls back to
// enumeration there.
Count128 psi_closed(std::int64_t p, std::int64_t n);

// Weight-4 classes split by the minimum pairwise distance r of the negative
// edges, 0 <= r <= floor((n-4)/4):
//   r=0          -> 1 + 2*(floor(n/2)-2) + (k-2)^2        (n odd)
//                   1 + 2*(floor(n/2)-2) + (k-3)(k-2)     (n even)
//   r>=1, n odd  -> (k-(2r+1))^2
//   r>=1, n even -> (k-(2r+1)) + (k-(2r+2))^2
// Summing over r reproduces psi_closed(4, n).
Count128 psi4_case_counts(std::int64_t n, std::int64_t r);

// Total number of switching-isomorphism classes of signed W_n: bracelets(n, 2).
Count128 psi_total(std::int64_t n);

}  // namespace wheels

#endif  // WHEELS_COUNTING_HPP
