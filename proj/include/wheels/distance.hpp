#ifndef WHEELS_DISTANCE_HPP
#define WHEELS_DISTANCE_HPP

#include <string>
#include <vector>

#include "wheels/dihedral.hpp"
#include "wheels/rimword.hpp"

namespace wheels {

// Distance between two distinct rim edges of C_n: the minimum cycle distance
// over their endpoint pairs. Adjacent edges have distance 0.
int edge_distance(int n, int i, int j);

// counts[l] = number of unordered pairs of negative edges at distance l,
// for l = 0..floor(n/2); the entries sum to C(p, 2).
struct DistanceTuple {
    int n = 0;
    std::vector<int> counts;

    bool operator==(const DistanceTuple&) const = default;
    std::string str() const;
};

DistanceTuple distance_tuple(const RimWord& sig);

// Minimum edge distance over all pairs of negative edges; needs >= 2 of them.
int min_pair_distance(const RimWord& sig);

// One group of D_n orbits sharing a distance tuple. A violation-free class
// has exactly one orbit; rotation_closed then records whether that orbit is
// a single rotation orbit as well.
struct TupleClass {
    DistanceTuple tuple;
    std::vector<CanonicalWord> orbits;
    bool rotation_closed = false;

    bool is_violation() const { return orbits.size() > 1; }
};

struct KeyLemmaReport {
    int n = 0;
    int p = 0;
    std::vector<TupleClass> classes;  // sorted by tuple

    std::size_t violation_count() const;
    std::vector<const TupleClass*> violations() const;
    std::size_t rotation_closed_count() const;
    bool complete() const { return violation_count() == 0; }
};

// Partitions the weight-p words of length n by D_n orbit and by distance
// tuple. Classes holding two or more orbits are tuple-collisions between
// non-isomorphic signatures and are reported, never suppressed. The converse
// direction (one orbit, one tuple) is verified on every word and raising on
// failure, since tuples are D_n invariants.
KeyLemmaReport check_key_lemma(int n, int p);

std::string to_json(const KeyLemmaReport& report);

}  // namespace wheels

#endif  // WHEELS_DISTANCE_HPP
