#include "wheels/distance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wheels {

namespace {

int cycle_vertex_distance(int n, int a, int b) {
    int d = std::abs(a - b);
    return std::min(d, n - d);
}

std::vector<int> negative_positions(const RimWord& sig) {
    std::vector<int> pos;
    pos.reserve(static_cast<std::size_t>(sig.popcount()));
    for (int i = 0; i < sig.size(); ++i)
        if (sig.test(i)) pos.push_back(i);
    return pos;
}

void check_budget(int n) {
    if (n < 4) throw InvalidArgument("key-lemma check needs n >= 4");
    if (n > 24)
        throw BudgetError("enumeration budget is n <= 24 (got n=" + std::to_string(n) + ")");
}

}  // namespace

int edge_distance(int n, int i, int j) {
    if (n < 3) throw InvalidArgument("edge distance needs a cycle of length >= 3");
    if (i < 0 || i >= n || j < 0 || j >= n) throw InvalidArgument("edge index out of range 0..n-1");
    if (i == j) throw InvalidArgument("edge distance is defined for distinct edges only");
    // edge i has endpoints at rim positions i and i+1 (mod n)
    int best = n;
    for (int a : {i, (i + 1) % n})
        for (int b : {j, (j + 1) % n}) best = std::min(best, cycle_vertex_distance(n, a, b));
    return best;
}

std::string DistanceTuple::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) os << ',';
        os << counts[i];
    }
    os << ')';
    return os.str();
}

DistanceTuple distance_tuple(const RimWord& sig) {
    const int n = sig.size();
    if (n < 3) throw InvalidArgument("distance tuple needs a cycle of length >= 3");
    DistanceTuple t{n, std::vector<int>(static_cast<std::size_t>(n / 2) + 1, 0)};
    const std::vector<int> pos = negative_positions(sig);
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b)
            ++t.counts[static_cast<std::size_t>(edge_distance(n, pos[a], pos[b]))];
    return t;
}

int min_pair_distance(const RimWord& sig) {
    const int n = sig.size();
    if (n < 3) throw InvalidArgument("min pair distance needs a cycle of length >= 3");
    const std::vector<int> pos = negative_positions(sig);
    if (pos.size() < 2) throw InvalidArgument("min pair distance needs at least 2 negative edges");
    int best = n;
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b)
            best = std::min(best, edge_distance(n, pos[a], pos[b]));
    return best;
}

std::size_t KeyLemmaReport::violation_count() const {
    std::size_t c = 0;
    for (const auto& cls : classes)
        if (cls.is_violation()) ++c;
    return c;
}

std::vector<const TupleClass*> KeyLemmaReport::violations() const {
    std::vector<const TupleClass*> out;
    for (const auto& cls : classes)
        if (cls.is_violation()) out.push_back(&cls);
    return out;
}

std::size_t KeyLemmaReport::rotation_closed_count() const {
    std::size_t c = 0;
    for (const auto& cls : classes)
        if (!cls.is_violation() && cls.rotation_closed) ++c;
    return c;
}

KeyLemmaReport check_key_lemma(int n, int p) {
    check_budget(n);
    if (p < 0 || p > n) throw InvalidArgument("weight must be in 0..n");

    std::map<std::vector<int>, std::vector<CanonicalWord>> by_tuple;
    std::map<RimWord, std::vector<int>> tuple_of_rep;
    for (const CanonicalWord& rep : enumerate_representatives(n, p)) {
        DistanceTuple t = distance_tuple(rep.word);
        by_tuple[t.counts].push_back(rep);
        tuple_of_rep.emplace(rep.word, t.counts);
    }

    // Orbit members must share the orbit's tuple: the tuple is a D_n
    // invariant, so a mismatch here is an internal error, not a finding.
    for_each_word_of_weight(n, p, [&](const RimWord& w) {
        const auto it = tuple_of_rep.find(canonical_form(w).word);
        if (it == tuple_of_rep.end() || distance_tuple(w).counts != it->second)
            throw Error("distance tuple differs inside a dihedral orbit at word " + w.str());
    });

    KeyLemmaReport report{n, p, {}};
    for (auto& [tuple, orbits] : by_tuple) {
        std::sort(orbits.begin(), orbits.end());
        TupleClass cls{DistanceTuple{n, tuple}, orbits, false};
        if (orbits.size() == 1) cls.rotation_closed = orbit_is_rotation_closed(orbits.front().word);
        report.classes.push_back(std::move(cls));
    }
    return report;
}

std::string to_json(const KeyLemmaReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["p"] = report.p;
    j["classes"] = report.classes.size();
    j["rotation_only_classes"] = report.rotation_closed_count();
    auto violations = nlohmann::ordered_json::array();
    for (const TupleClass* cls : report.violations()) {
        nlohmann::ordered_json v;
        v["tuple"] = cls->tuple.counts;
        auto orbits = nlohmann::ordered_json::array();
        for (const CanonicalWord& w : cls->orbits) orbits.push_back(w.str());
        v["orbits"] = orbits;
        violations.push_back(v);
    }
    j["violations"] = violations;
    return j.dump(2);
}

}  // namespace wheels
