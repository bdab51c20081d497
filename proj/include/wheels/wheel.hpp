#ifndef WHEELS_WHEEL_HPP
#define WHEELS_WHEEL_HPP

#include <string>
#include <string_view>

#include "wheels/count128.hpp"
#include "wheels/rimword.hpp"

namespace wheels {

// Hub or rim vertex of a wheel. Rim vertices are addressed 1..n, matching the
// v_1..v_n labels used in output; the hub is a distinguished id, not index 0.
class Vertex {
  public:
    static Vertex hub() { return Vertex(0); }
    static Vertex rim(int index) {
        if (index < 1) throw InvalidArgument("rim vertex index must be >= 1");
        return Vertex(index);
    }

    bool is_hub() const { return code_ == 0; }
    int rim_index() const {
        if (is_hub()) throw InvalidArgument("hub has no rim index");
        return code_;
    }

    bool operator==(const Vertex&) const = default;

  private:
    explicit Vertex(int code) : code_(code) {}
    int code_;
};

// A wheel W_n with a sign on every edge: rim_signs bit i covers the rim edge
// v_{i+1} v_{i+2}, spoke_signs bit i covers the spoke v v_{i+1}; bit = 1
// means negative.
struct SignedWheel {
    RimWord rim_signs;
    RimWord spoke_signs;

    static SignedWheel all_positive(int n);
    static SignedWheel make(RimWord rim, RimWord spokes);

    int size() const { return rim_signs.size(); }
    bool operator==(const SignedWheel&) const = default;
};

// Flips the sign of every edge incident to u. Involutive.
SignedWheel switch_vertex(const SignedWheel& w, Vertex u);

// Switches every rim vertex whose spoke is negative, in ascending index
// order, and returns the rim word of the resulting all-spokes-positive wheel:
// the unique rim-only representative of the switching class.
RimWord normalize_to_rim(const SignedWheel& w);

// True iff every cycle is positive. Uses hub-rooted potentials: the spokes
// form the spanning tree, the rim edges are checked for consistency.
bool is_balanced(const SignedWheel& w);

// True iff the position-wise sign product of the two wheels is balanced.
bool is_switching_equivalent(const SignedWheel& a, const SignedWheel& b);

// 2^n: the number of switching classes of signed W_n (m = 2n edges, n+1
// vertices, 2^(m-(n+1)+1) classes).
Count128 count_switching_classes(int n);

// {"n": int, "rim": "<n-char 0/1 string>", "spokes": "<n-char 0/1 string>"}
std::string to_json(const SignedWheel& w);
SignedWheel signed_wheel_from_json(std::string_view text);

// Undirected DOT: hub node "v", rim nodes "v1".."vn"; positive edges solid
// with sign="+1", negative edges dashed with sign="-1".
std::string to_dot(const SignedWheel& w, std::string_view graph_name);

}  // namespace wheels

#endif  // WHEELS_WHEEL_HPP
