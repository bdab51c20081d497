#include "wheels/wheel.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace wheels {

SignedWheel SignedWheel::all_positive(int n) {
    if (n < 3) throw InvalidArgument("wheel rim length must be >= 3");
    return {RimWord::zeros(n), RimWord::zeros(n)};
}

SignedWheel SignedWheel::make(RimWord rim, RimWord spokes) {
    if (rim.size() < 3) throw InvalidArgument("wheel rim length must be >= 3");
    if (rim.size() != spokes.size()) throw InvalidArgument("rim and spoke words must have equal length");
    return {rim, spokes};
}

SignedWheel switch_vertex(const SignedWheel& w, Vertex u) {
    const int n = w.size();
    if (u.is_hub()) return {w.rim_signs, w.spoke_signs ^ RimWord::ones(n)};
    const int j = u.rim_index();
    if (j > n) throw InvalidArgument("rim vertex index out of range 1..n");
    const int j0 = j - 1;
    // v_j is an endpoint of rim edges j0-1 and j0 (mod n), plus its spoke.
    RimWord rim = w.rim_signs.flipped((j0 + n - 1) % n).flipped(j0);
    return {rim, w.spoke_signs.flipped(j0)};
}

RimWord normalize_to_rim(const SignedWheel& w) {
    SignedWheel cur = w;
    const int n = w.size();
    for (int j0 = 0; j0 < n; ++j0)
        if (cur.spoke_signs.test(j0)) cur = switch_vertex(cur, Vertex::rim(j0 + 1));
    return cur.rim_signs;
}

bool is_balanced(const SignedWheel& w) {
    // With potentials rooted at the hub via the spokes, the rim edge at
    // position i is consistent iff rim bit i == spoke bit i XOR spoke bit i+1.
    RimWord shifted = w.spoke_signs.rotated(w.size() - 1);  // shifted[i] = spokes[(i+1) mod n]
    return (w.spoke_signs ^ shifted) == w.rim_signs;
}

bool is_switching_equivalent(const SignedWheel& a, const SignedWheel& b) {
    if (a.size() != b.size()) throw InvalidArgument("wheels have different rim lengths");
    return is_balanced(SignedWheel{a.rim_signs ^ b.rim_signs, a.spoke_signs ^ b.spoke_signs});
}

Count128 count_switching_classes(int n) {
    if (n < 3) throw InvalidArgument("wheel rim length must be >= 3");
    return checked_pow(Count128{2}, static_cast<std::uint64_t>(n));
}

std::string to_json(const SignedWheel& w) {
    nlohmann::ordered_json j;
    j["n"] = w.size();
    j["rim"] = w.rim_signs.str();
    j["spokes"] = w.spoke_signs.str();
    return j.dump();
}

SignedWheel signed_wheel_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad wheel JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rim") || !j.contains("spokes"))
        throw InvalidArgument("wheel JSON needs fields n, rim, spokes");
    const int n = j.at("n").get<int>();
    RimWord rim = RimWord::from_string(j.at("rim").get<std::string>());
    RimWord spokes = RimWord::from_string(j.at("spokes").get<std::string>());
    if (rim.size() != n || spokes.size() != n)
        throw InvalidArgument("wheel JSON: rim/spokes length does not match n");
    return SignedWheel::make(rim, spokes);
}

namespace {

void emit_edge(std::ostream& os, const std::string& a, const std::string& b, bool negative) {
    os << "  " << a << " -- " << b << " [sign=\"" << (negative ? "-1" : "+1") << "\", style="
       << (negative ? "dashed" : "solid") << "];\n";
}

}  // namespace

std::string to_dot(const SignedWheel& w, std::string_view graph_name) {
    const int n = w.size();
    std::ostringstream os;
    os << "graph " << graph_name << " {\n";
    os << "  v;\n";
    for (int i = 1; i <= n; ++i) os << "  v" << i << ";\n";
    for (int i = 0; i < n; ++i) emit_edge(os, "v", "v" + std::to_string(i + 1), w.spoke_signs.test(i));
    for (int i = 0; i < n; ++i)
        emit_edge(os, "v" + std::to_string(i + 1), "v" + std::to_string((i + 1) % n + 1),
                  w.rim_signs.test(i));
    os << "}\n";
    return os.str();
}

}  // namespace wheels
