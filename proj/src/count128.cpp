#include "wheels/count128.hpp"

#include <algorithm>
#include <ostream>

namespace wheels {

std::string Count128::str() const {
    unsigned __int128 v = value_;
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Count128 checked_pow(Count128 base, std::uint64_t exp) {
    Count128 result{1};
    Count128 acc = base;
    while (exp > 0) {
        if (exp & 1) result = result * acc;
        exp >>= 1;
        if (exp > 0) acc = acc * acc;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Count128& c) { return os << c.str(); }

}  // namespace wheels
