#ifndef WHEELS_DIHEDRAL_HPP
#define WHEELS_DIHEDRAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "wheels/rimword.hpp"

namespace wheels {

// An element of D_n acting on rim positions. The 2n elements are the pairs
// (rotation, reflected); acting applies the reflection first (index i maps to
// n-1-i), then the rotation (index i maps to i+rotation mod n).
struct DihedralElement {
    int n = 0;
    int rotation = 0;
    bool reflected = false;

    static DihedralElement identity(int n);
    static DihedralElement rotation_by(int n, int r);
    static DihedralElement reflection(int n);

    bool operator==(const DihedralElement&) const = default;
};

// act(compose(a, b), w) == act(a, act(b, w))
DihedralElement compose(const DihedralElement& a, const DihedralElement& b);
DihedralElement inverse(const DihedralElement& g);

// All 2n elements, rotations first, then reflected ones.
std::vector<DihedralElement> dihedral_elements(int n);

RimWord act(const DihedralElement& g, const RimWord& word);

// Lexicographically smallest element of a D_n orbit.
struct CanonicalWord {
    RimWord word;

    std::string str() const { return word.str(); }
    bool operator==(const CanonicalWord&) const = default;
    auto operator<=>(const CanonicalWord&) const = default;
};

CanonicalWord canonical_form(const RimWord& word);
bool is_canonical(const RimWord& word);

// Number of distinct images under D_n; always divides 2n.
int orbit_size(const RimWord& word);

// True when the D_n orbit coincides with the rotation-only orbit, i.e. some
// rotation maps the word onto its reversal.
bool orbit_is_rotation_closed(const RimWord& word);

// One canonical word per D_n orbit over all words of length n (optionally
// restricted to weight p), in ascending lexicographic order. Scans the whole
// weight class and keeps the words equal to their own canonical form; the
// full scan may be split across workers without affecting the result.
std::vector<CanonicalWord> enumerate_representatives(int n);
std::vector<CanonicalWord> enumerate_representatives(int n, int p);

// Orbit counts stratified by weight: entry p is |enumerate_representatives(n, p)|.
std::vector<std::uint64_t> representative_counts_by_weight(int n);

}  // namespace wheels

#endif  // WHEELS_DIHEDRAL_HPP
