#include "wheels/dihedral.hpp"

#include <algorithm>

#include "wheels/parallel.hpp"

namespace wheels {

namespace {

void check_degree(int n) {
    if (n < 1 || n > 64) throw InvalidArgument("dihedral degree must be in 1..64");
}

void check_enumeration_budget(int n) {
    if (n < 3) throw InvalidArgument("enumeration needs n >= 3");
    if (n > 24)
        throw BudgetError("enumeration budget is n <= 24 (got n=" + std::to_string(n) + ")");
}

void check_word(const RimWord& word) {
    if (word.size() < 1) throw InvalidArgument("empty word has no dihedral action");
}

// Hot path: min over the 2n images of the packed word, early exit for the
// canonicity test. rv is the packed reversal.
bool packed_is_canonical(std::uint64_t v, int n) {
    const std::uint64_t rv = detail::reverse_word(v, n);
    for (int r = 0; r < n; ++r) {
        if (detail::rotate_word(v, n, r) < v) return false;
        if (detail::rotate_word(rv, n, r) < v) return false;
    }
    return true;
}

std::uint64_t packed_canonical(std::uint64_t v, int n) {
    std::uint64_t best = v;
    const std::uint64_t rv = detail::reverse_word(v, n);
    for (int r = 0; r < n; ++r) {
        best = std::min(best, detail::rotate_word(v, n, r));
        best = std::min(best, detail::rotate_word(rv, n, r));
    }
    return best;
}

}  // namespace

DihedralElement DihedralElement::identity(int n) {
    check_degree(n);
    return {n, 0, false};
}

DihedralElement DihedralElement::rotation_by(int n, int r) {
    check_degree(n);
    return {n, ((r % n) + n) % n, false};
}

DihedralElement DihedralElement::reflection(int n) {
    check_degree(n);
    return {n, 0, true};
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b) {
    if (a.n != b.n) throw InvalidArgument("dihedral degree mismatch");
    int r = a.reflected ? a.rotation - b.rotation : a.rotation + b.rotation;
    return {a.n, ((r % a.n) + a.n) % a.n, a.reflected != b.reflected};
}

DihedralElement inverse(const DihedralElement& g) {
    if (g.reflected) return g;  // reflections are involutions
    return {g.n, (g.n - g.rotation) % g.n, false};
}

std::vector<DihedralElement> dihedral_elements(int n) {
    check_degree(n);
    std::vector<DihedralElement> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    for (int refl = 0; refl < 2; ++refl)
        for (int r = 0; r < n; ++r) out.push_back({n, r, refl != 0});
    return out;
}

RimWord act(const DihedralElement& g, const RimWord& word) {
    if (word.size() != g.n) throw InvalidArgument("word length does not match the group degree");
    RimWord w = g.reflected ? word.reversed() : word;
    return w.rotated(g.rotation);
}

CanonicalWord canonical_form(const RimWord& word) {
    check_word(word);
    return {RimWord::from_packed(word.size(), packed_canonical(word.packed(), word.size()))};
}

bool is_canonical(const RimWord& word) {
    check_word(word);
    return packed_is_canonical(word.packed(), word.size());
}

int orbit_size(const RimWord& word) {
    // orbit-stabilizer: |orbit| = 2n / |stabilizer|
    check_word(word);
    const int n = word.size();
    const std::uint64_t v = word.packed();
    const std::uint64_t rv = detail::reverse_word(v, n);
    int stab = 0;
    for (int r = 0; r < n; ++r) {
        if (detail::rotate_word(v, n, r) == v) ++stab;
        if (detail::rotate_word(rv, n, r) == v) ++stab;
    }
    return 2 * n / stab;
}

bool orbit_is_rotation_closed(const RimWord& word) {
    check_word(word);
    const int n = word.size();
    const std::uint64_t v = word.packed();
    const std::uint64_t rv = detail::reverse_word(v, n);
    for (int r = 0; r < n; ++r)
        if (detail::rotate_word(rv, n, r) == v) return true;
    return false;
}

std::vector<CanonicalWord> enumerate_representatives(int n) {
    check_enumeration_budget(n);
    const std::uint64_t total = 1ull << n;
    const int workers = worker_count();
    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
    parallel_ranges(0, total, workers, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
        auto& local = found[static_cast<std::size_t>(chunk)];
        for (std::uint64_t v = lo; v < hi; ++v)
            if (packed_is_canonical(v, n)) local.push_back(v);
    });
    std::vector<CanonicalWord> out;
    for (const auto& part : found)
        for (std::uint64_t v : part) out.push_back({RimWord::from_packed(n, v)});
    return out;  // ascending: chunks cover ascending ranges, scans ascend
}

std::vector<CanonicalWord> enumerate_representatives(int n, int p) {
    check_enumeration_budget(n);
    if (p < 0 || p > n) throw InvalidArgument("weight must be in 0..n");
    std::vector<CanonicalWord> out;
    for_each_word_of_weight(n, p, [&](const RimWord& w) {
        if (packed_is_canonical(w.packed(), n)) out.push_back({w});
    });
    return out;
}

std::vector<std::uint64_t> representative_counts_by_weight(int n) {
    check_enumeration_budget(n);
    const std::uint64_t total = 1ull << n;
    const int workers = worker_count();
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    parallel_ranges(0, total, workers, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
        auto& local = counts[static_cast<std::size_t>(chunk)];
        for (std::uint64_t v = lo; v < hi; ++v)
            if (packed_is_canonical(v, n))
                ++local[static_cast<std::size_t>(__builtin_popcountll(v))];
    });
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n + 1), 0);
    for (const auto& part : counts)
        for (std::size_t p = 0; p < out.size(); ++p) out[p] += part[p];
    return out;
}

}  // namespace wheels
