#ifndef WHEELS_RIMWORD_HPP
#define WHEELS_RIMWORD_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "wheels/errors.hpp"

namespace wheels {

namespace detail {

inline std::uint64_t word_mask(int n) {
    return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

// Cyclic rotation on the packed form: packed index 0 is the most significant
// of the n used bits, so integer order equals lexicographic order on the text
// form. rotate_word(v, n, r) realizes t[(i+r) mod n] = s[i].
inline std::uint64_t rotate_word(std::uint64_t v, int n, int r) {
    if (r == 0) return v;
    return ((v >> r) | (v << (n - r))) & word_mask(n);
}

inline std::uint64_t reverse_bits64(std::uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
    v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
    v = ((v >> 4) & 0x0f0f0f0f0f0f0f0full) | ((v & 0x0f0f0f0f0f0f0f0full) << 4);
    return __builtin_bswap64(v);
}

// t[i] = s[n-1-i] on the packed form.
inline std::uint64_t reverse_word(std::uint64_t v, int n) {
    return reverse_bits64(v) >> (64 - n);
}

}  // namespace detail

// Length-n binary word over rim positions, 1 <= n <= 64.
//
// Text form: n characters of '0'/'1', index 0 leftmost; bit i = 1 marks rim
// edge v_{i+1} v_{i+2} (indices mod n) as negative. Packed form puts index 0
// at the most significant of the n used bits, so comparing packed values is
// exactly lexicographic comparison of the text form.
class RimWord {
  public:
    RimWord() = default;

    static RimWord zeros(int n) { return RimWord(checked_n(n), 0); }
    static RimWord ones(int n) { return RimWord(checked_n(n), detail::word_mask(n)); }

    static RimWord from_packed(int n, std::uint64_t packed) {
        checked_n(n);
        if (packed & ~detail::word_mask(n))
            throw InvalidArgument("packed word has bits beyond length " + std::to_string(n));
        return RimWord(n, packed);
    }

    static RimWord from_string(std::string_view s) {
        int n = checked_n(static_cast<int>(s.size()));
        std::uint64_t v = 0;
        for (char c : s) {
            if (c != '0' && c != '1') throw InvalidArgument("rim word must contain only '0'/'1'");
            v = (v << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return RimWord(n, v);
    }

    static RimWord from_indices(int n, std::initializer_list<int> ones) {
        RimWord w = zeros(n);
        for (int i : ones) w = w.flipped(i);
        return w;
    }

    int size() const { return n_; }
    std::uint64_t packed() const { return bits_; }

    bool test(int i) const {
        check_index(i);
        return (bits_ >> (n_ - 1 - i)) & 1;
    }

    RimWord flipped(int i) const {
        check_index(i);
        return RimWord(n_, bits_ ^ (1ull << (n_ - 1 - i)));
    }

    int popcount() const { return __builtin_popcountll(bits_); }

    // result[(i+r) mod n] = (*this)[i]
    RimWord rotated(int r) const {
        check_nonempty();
        int rr = ((r % n_) + n_) % n_;
        return RimWord(n_, detail::rotate_word(bits_, n_, rr));
    }

    // result[i] = (*this)[n-1-i]
    RimWord reversed() const {
        check_nonempty();
        return RimWord(n_, detail::reverse_word(bits_, n_));
    }

    // Position-wise sign product of two words of equal length.
    RimWord operator^(const RimWord& o) const {
        if (o.n_ != n_) throw InvalidArgument("word length mismatch");
        return RimWord(n_, bits_ ^ o.bits_);
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int i = 0; i < n_; ++i)
            if ((bits_ >> (n_ - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    bool operator==(const RimWord& o) const = default;
    std::strong_ordering operator<=>(const RimWord& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        if (bits_ < o.bits_) return std::strong_ordering::less;
        if (bits_ > o.bits_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    RimWord(int n, std::uint64_t bits) : n_(n), bits_(bits) {}

    static int checked_n(int n) {
        if (n < 1 || n > 64) throw InvalidArgument("word length must be in 1..64");
        return n;
    }

    void check_index(int i) const {
        if (i < 0 || i >= n_) throw InvalidArgument("word index out of range");
    }

    void check_nonempty() const {
        if (n_ == 0) throw InvalidArgument("operation on an empty word");
    }

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

// Visits all weight-p words of length n in ascending lexicographic order.
template <typename Fn>
void for_each_word_of_weight(int n, int p, Fn&& fn) {
    if (n < 1 || n > 64) throw InvalidArgument("word length must be in 1..64");
    if (p < 0 || p > n) throw InvalidArgument("weight must be in 0..n");
    if (p == 0) {
        fn(RimWord::zeros(n));
        return;
    }
    const std::uint64_t last = detail::word_mask(p) << (n - p);
    std::uint64_t v = detail::word_mask(p);
    for (;;) {
        fn(RimWord::from_packed(n, v));
        if (v == last) break;
        // Gosper's hack: next integer with the same popcount.
        std::uint64_t c = v & (~v + 1);
        std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

}  // namespace wheels

#endif  // WHEELS_RIMWORD_HPP
