#include "wheels/census.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wheels/counting.hpp"
#include "wheels/wheel.hpp"

namespace wheels {

namespace {

void check_census_n(int n) {
    if (n < 4) throw InvalidArgument("census needs n >= 4");
    if (n > kMaxEnumerationN)
        throw BudgetError("enumeration budget is n <= " + std::to_string(kMaxEnumerationN) +
                          " (got n=" + std::to_string(n) + ")");
}

// Golden psi_p(n) values for n = 4..10 (columns) and 0 <= p <= n, verified
// against enumeration; column sums are kGoldenPsiTotal.
constexpr int kGoldenMinN = 4;
constexpr int kGoldenMaxN = 10;
constexpr std::array<std::array<int, 11>, 7> kGoldenPsi = {{
    {1, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0},           // n=4
    {1, 1, 2, 2, 1, 1, 0, 0, 0, 0, 0},           // n=5
    {1, 1, 3, 3, 3, 1, 1, 0, 0, 0, 0},           // n=6
    {1, 1, 3, 4, 4, 3, 1, 1, 0, 0, 0},           // n=7
    {1, 1, 4, 5, 8, 5, 4, 1, 1, 0, 0},           // n=8
    {1, 1, 4, 7, 10, 10, 7, 4, 1, 1, 0},         // n=9
    {1, 1, 5, 8, 16, 16, 16, 8, 5, 1, 1},        // n=10
}};
constexpr std::array<int, 7> kGoldenPsiTotal = {6, 8, 13, 18, 30, 46, 78};

// Set of p values covered by psi_closed for a given n, ascending.
std::vector<int> covered_p(int n) {
    std::set<int> ps;
    for (int p = 0; p <= 4 && p <= n; ++p) {
        ps.insert(p);
        ps.insert(n - p);
    }
    return {ps.begin(), ps.end()};
}

std::string cell_key(int p, int n) {
    return "psi(p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
}

nlohmann::ordered_json representative_json(const Representative& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["word"] = rep.word.str();
    j["distance_tuple"] = rep.tuple.counts;
    j["orbit_size"] = rep.orbit;
    return j;
}

}  // namespace

std::string_view cell_method_name(CellMethod m) {
    switch (m) {
        case CellMethod::Closed: return "closed";
        case CellMethod::Enumerated: return "enumerated";
        case CellMethod::BothAgree: return "both-agree";
    }
    return "unknown";
}

Count128 psi_enumerated(int p, int n) {
    check_census_n(n);
    if (p < 0 || p > n) throw InvalidArgument("psi needs 0 <= p <= n");
    std::uint64_t count = 0;
    for_each_word_of_weight(n, p, [&](const RimWord& w) {
        if (is_canonical(w)) ++count;
    });
    return Count128{count};
}

const CensusCell& CensusTable::cell(int p, int n) const {
    auto it = cells.find({p, n});
    if (it == cells.end()) throw InvalidArgument("no cell " + cell_key(p, n));
    return it->second;
}

bool CensusTable::verified() const {
    for (const auto& [key, cell] : cells)
        if (cell.discrepancy) return false;
    for (const auto& [n, total] : totals)
        if (!(total.sum == total.bracelet)) return false;
    return true;
}

CensusTable build_table(int min_n, int max_n) {
    if (min_n > max_n) throw InvalidArgument("min_n must be <= max_n");
    check_census_n(min_n);
    check_census_n(max_n);
    CensusTable table{min_n, max_n, {}, {}};
    for (int n = min_n; n <= max_n; ++n) {
        const std::vector<std::uint64_t> counts = representative_counts_by_weight(n);
        Count128 sum{0};
        for (int p = 0; p <= n; ++p) {
            const Count128 enumerated{counts[static_cast<std::size_t>(p)]};
            CensusCell cell{enumerated, CellMethod::Enumerated, std::nullopt};
            if (psi_closed_defined(p, n)) {
                const Count128 closed = psi_closed(p, n);
                if (closed == enumerated)
                    cell.method = CellMethod::BothAgree;
                else
                    cell.discrepancy = std::make_pair(closed, enumerated);
            }
            sum += enumerated;
            table.cells.emplace(std::make_pair(p, n), cell);
        }
        table.totals.emplace(n, ColumnTotal{sum, bracelets(n, 2)});
    }
    return table;
}

std::string to_csv(const CensusTable& t) {
    std::ostringstream os;
    os << 'p';
    for (int n = t.min_n; n <= t.max_n; ++n) os << ',' << n;
    os << '\n';
    for (int p = 0; p <= t.max_n; ++p) {
        os << p;
        for (int n = t.min_n; n <= t.max_n; ++n) {
            os << ',';
            if (p <= n) os << t.cell(p, n).value.str();
        }
        os << '\n';
    }
    os << "psi(n)";
    for (int n = t.min_n; n <= t.max_n; ++n) os << ',' << t.totals.at(n).sum.str();
    os << '\n';
    return os.str();
}

std::string to_markdown(const CensusTable& t) {
    std::ostringstream os;
    os << "| p |";
    for (int n = t.min_n; n <= t.max_n; ++n) os << ' ' << n << " |";
    os << '\n';
    os << "|---|";
    for (int n = t.min_n; n <= t.max_n; ++n) os << "---|";
    os << '\n';
    for (int p = 0; p <= t.max_n; ++p) {
        os << "| " << p << " |";
        for (int n = t.min_n; n <= t.max_n; ++n) {
            if (p <= n)
                os << ' ' << t.cell(p, n).value.str() << " |";
            else
                os << "  |";
        }
        os << '\n';
    }
    os << "| psi(n) |";
    for (int n = t.min_n; n <= t.max_n; ++n) os << ' ' << t.totals.at(n).sum.str() << " |";
    os << '\n';
    return os.str();
}

std::string to_json(const CensusTable& t) {
    nlohmann::ordered_json j;
    j["min_n"] = t.min_n;
    j["max_n"] = t.max_n;
    auto cells = nlohmann::ordered_json::array();
    for (int p = 0; p <= t.max_n; ++p) {
        for (int n = t.min_n; n <= t.max_n; ++n) {
            if (p > n) continue;
            const CensusCell& cell = t.cell(p, n);
            nlohmann::ordered_json c;
            c["p"] = p;
            c["n"] = n;
            c["value"] = cell.value.to_u64();
            c["method"] = std::string(cell_method_name(cell.method));
            if (cell.discrepancy) {
                c["discrepancy"] = {{"closed", cell.discrepancy->first.to_u64()},
                                    {"enumerated", cell.discrepancy->second.to_u64()}};
            }
            cells.push_back(c);
        }
    }
    j["cells"] = cells;
    auto totals = nlohmann::ordered_json::array();
    for (const auto& [n, total] : t.totals) {
        nlohmann::ordered_json c;
        c["n"] = n;
        c["psi"] = total.sum.to_u64();
        c["bracelets"] = total.bracelet.to_u64();
        totals.push_back(c);
    }
    j["totals"] = totals;
    return j.dump(2);
}

std::vector<Representative> class_representatives(int n, int p) {
    check_census_n(n);
    if (p < 0 || p > n) throw InvalidArgument("weight must be in 0..n");
    std::vector<Representative> out;
    for (const CanonicalWord& rep : enumerate_representatives(n, p))
        out.push_back({n, p, rep, distance_tuple(rep.word), orbit_size(rep.word)});
    return out;
}

std::vector<Document> export_representatives(int n, int p, DocFormat format) {
    std::vector<Document> docs;
    for (const Representative& rep : class_representatives(n, p)) {
        const std::string word = rep.word.str();
        if (format == DocFormat::Json) {
            docs.push_back({"rep_" + word + ".json", representative_json(rep).dump(2) + "\n"});
        } else {
            SignedWheel wheel = SignedWheel::make(rep.word.word, RimWord::zeros(n));
            docs.push_back({"rep_" + word + ".dot",
                            to_dot(wheel, "W" + std::to_string(n) + "_" + word)});
        }
    }
    return docs;
}

std::string representatives_to_json_array(int n, int p) {
    auto arr = nlohmann::ordered_json::array();
    for (const Representative& rep : class_representatives(n, p))
        arr.push_back(representative_json(rep));
    return arr.dump(2) + "\n";
}

Representative representative_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad representative JSON: ") + e.what());
    }
    Representative rep;
    rep.n = j.at("n").get<int>();
    rep.p = j.at("p").get<int>();
    rep.word = CanonicalWord{RimWord::from_string(j.at("word").get<std::string>())};
    rep.tuple = DistanceTuple{rep.n, j.at("distance_tuple").get<std::vector<int>>()};
    rep.orbit = j.at("orbit_size").get<int>();
    if (rep.word.word.size() != rep.n)
        throw InvalidArgument("representative JSON: word length does not match n");
    if (rep.word.word.popcount() != rep.p)
        throw InvalidArgument("representative JSON: word weight does not match p");
    if (rep.tuple.counts.size() != static_cast<std::size_t>(rep.n / 2) + 1)
        throw InvalidArgument("representative JSON: distance tuple has the wrong length");
    return rep;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerificationCheck& c) { return c.passed; });
}

namespace {

VerificationCheck check_golden_tables() {
    CensusTable table = build_table(kGoldenMinN, kGoldenMaxN);
    int cells_checked = 0;
    for (int n = kGoldenMinN; n <= kGoldenMaxN; ++n) {
        const auto& column = kGoldenPsi[static_cast<std::size_t>(n - kGoldenMinN)];
        for (int p = 0; p <= n; ++p) {
            ++cells_checked;
            const Count128 expected{static_cast<std::uint64_t>(column[static_cast<std::size_t>(p)])};
            if (!(table.cell(p, n).value == expected))
                return {"golden-table", false,
                        cell_key(p, n) + " = " + table.cell(p, n).value.str() + ", expected " +
                            expected.str()};
        }
        const Count128 total{
            static_cast<std::uint64_t>(kGoldenPsiTotal[static_cast<std::size_t>(n - kGoldenMinN)])};
        if (!(table.totals.at(n).sum == total))
            return {"golden-table", false,
                    "psi(" + std::to_string(n) + ") = " + table.totals.at(n).sum.str() +
                        ", expected " + total.str()};
    }
    return {"golden-table", true,
            std::to_string(cells_checked) + " cells and 7 column sums match"};
}

VerificationCheck check_closed_vs_enumerated(int max_n, const ClosedPsiFn& closed_psi) {
    int cells = 0;
    for (int n = 4; n <= max_n; ++n) {
        for (int p : covered_p(n)) {
            const Count128 closed = closed_psi(p, n);
            const Count128 enumerated = psi_enumerated(p, n);
            if (!(closed == enumerated))
                return {"closed-vs-enumerated", false,
                        "first mismatch at " + cell_key(p, n) + ": closed=" + closed.str() +
                            ", enumerated=" + enumerated.str()};
            ++cells;
        }
    }
    return {"closed-vs-enumerated", true, std::to_string(cells) + " cells agree"};
}

VerificationCheck check_bracelet_identity(int max_n) {
    const int hi = std::min(max_n, 16);
    for (int n = 4; n <= hi; ++n) {
        Count128 sum{0};
        for (std::uint64_t c : representative_counts_by_weight(n)) sum += Count128{c};
        const Count128 expected = bracelets(n, 2);
        if (!(sum == expected))
            return {"bracelet-identity", false,
                    "n=" + std::to_string(n) + ": sum=" + sum.str() + ", bracelets=" +
                        expected.str()};
    }
    return {"bracelet-identity", true, "n=4.." + std::to_string(hi) + " match bracelets(n,2)"};
}

VerificationCheck check_psi_symmetry(int max_n) {
    const int hi = std::min(max_n, 16);
    for (int n = 4; n <= hi; ++n) {
        const auto counts = representative_counts_by_weight(n);
        for (int p = 0; p <= n; ++p)
            if (counts[static_cast<std::size_t>(p)] != counts[static_cast<std::size_t>(n - p)])
                return {"psi-symmetry", false,
                        "enumerated psi_" + std::to_string(p) + "(" + std::to_string(n) +
                            ") != psi_" + std::to_string(n - p) + "(" + std::to_string(n) + ")"};
    }
    for (int n = 4; n <= max_n; ++n)
        for (int p = 0; p <= std::min(4, n); ++p)
            if (!(psi_closed(p, n) == psi_closed(n - p, n)))
                return {"psi-symmetry", false,
                        "closed psi_" + std::to_string(p) + "(" + std::to_string(n) + ") != psi_" +
                            std::to_string(n - p) + "(" + std::to_string(n) + ")"};
    return {"psi-symmetry", true, "enumerated n<=" + std::to_string(hi) + ", closed n<=" +
                                      std::to_string(max_n)};
}

VerificationCheck check_min_distance_bound(int max_n) {
    const int hi = std::min(max_n, 16);
    std::uint64_t words = 0;
    for (int n = 8; n <= hi; ++n) {
        const int bound = (n - 4) / 4;
        bool ok = true;
        RimWord offender = RimWord::zeros(n);
        for_each_word_of_weight(n, 4, [&](const RimWord& w) {
            ++words;
            if (ok && min_pair_distance(w) > bound) {
                ok = false;
                offender = w;
            }
        });
        if (!ok)
            return {"min-distance-bound", false,
                    "word " + offender.str() + " exceeds floor((n-4)/4)=" + std::to_string(bound)};
    }
    return {"min-distance-bound", true,
            std::to_string(words) + " weight-4 words within the bound"};
}

VerificationCheck check_tuple_completeness(int max_n) {
    const int hi = std::min(max_n, 18);
    for (int n = 4; n <= hi; ++n) {
        for (int p = 0; p <= std::min(4, n); ++p) {
            KeyLemmaReport report = check_key_lemma(n, p);
            if (!report.complete()) {
                const TupleClass* first = report.violations().front();
                std::string orbits;
                for (const CanonicalWord& w : first->orbits)
                    orbits += (orbits.empty() ? "" : ", ") + w.str();
                return {"distance-tuple-completeness", false,
                        "n=" + std::to_string(n) + ", p=" + std::to_string(p) + ": tuple " +
                            first->tuple.str() + " is shared by orbits " + orbits};
            }
        }
    }
    return {"distance-tuple-completeness", true,
            "tuples separate all classes for n<=" + std::to_string(hi) + ", p<=4"};
}

VerificationCheck check_partition_identity() {
    for (std::int64_t m = 0; m <= 200; ++m) {
        const Count128 lhs = partition_count(m, 3);
        const Count128 rhs = nearest_twelfth(Count128{static_cast<std::uint64_t>(m)} *
                                             Count128{static_cast<std::uint64_t>(m)});
        if (!(lhs == rhs))
            return {"partition-identity", false,
                    "m=" + std::to_string(m) + ": p(m;3)=" + lhs.str() + ", [m^2/12]=" + rhs.str()};
    }
    return {"partition-identity", true, "p(m;3) = [m^2/12] for m=0..200"};
}

VerificationCheck check_switching_classes(int max_n) {
    const int hi = std::min(max_n, 8);
    for (int n = 3; n <= hi; ++n) {
        std::set<std::uint64_t> normal_forms;
        const std::uint64_t span = 1ull << n;
        for (std::uint64_t rim = 0; rim < span; ++rim)
            for (std::uint64_t spokes = 0; spokes < span; ++spokes)
                normal_forms.insert(normalize_to_rim(SignedWheel::make(
                                        RimWord::from_packed(n, rim),
                                        RimWord::from_packed(n, spokes)))
                                        .packed());
        const Count128 expected = count_switching_classes(n);
        if (!(Count128{normal_forms.size()} == expected))
            return {"switching-classes", false,
                    "n=" + std::to_string(n) + ": " + std::to_string(normal_forms.size()) +
                        " normal forms, expected " + expected.str()};
    }
    return {"switching-classes", true,
            "normal-form count is 2^n over all sign assignments, n=3.." + std::to_string(hi)};
}

VerificationCheck check_necklace_forms(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= 4; ++k)
            if (!(necklaces(n, k) == necklaces_gcd_form(n, k)))
                return {"necklace-form-agreement", false,
                        "divisor and gcd forms differ at n=" + std::to_string(n) +
                            ", k=" + std::to_string(k)};
    return {"necklace-form-agreement", true,
            "divisor form equals gcd form for n<=" + std::to_string(max_n) + ", k<=4"};
}

}  // namespace

VerificationReport verify_all(int max_n) {
    return verify_all(max_n, [](std::int64_t p, std::int64_t n) { return psi_closed(p, n); });
}

VerificationReport verify_all(int max_n, const ClosedPsiFn& closed_psi) {
    check_census_n(max_n);
    const std::vector<std::pair<const char*, std::function<VerificationCheck()>>> checks = {
        {"golden-table", [] { return check_golden_tables(); }},
        {"closed-vs-enumerated", [&] { return check_closed_vs_enumerated(max_n, closed_psi); }},
        {"bracelet-identity", [&] { return check_bracelet_identity(max_n); }},
        {"psi-symmetry", [&] { return check_psi_symmetry(max_n); }},
        {"min-distance-bound", [&] { return check_min_distance_bound(max_n); }},
        {"distance-tuple-completeness", [&] { return check_tuple_completeness(max_n); }},
        {"partition-identity", [] { return check_partition_identity(); }},
        {"switching-classes", [&] { return check_switching_classes(max_n); }},
        {"necklace-form-agreement", [&] { return check_necklace_forms(max_n); }},
    };
    VerificationReport report{max_n, {}};
    for (const auto& [name, fn] : checks) {
        try {
            report.checks.push_back(fn());
        } catch (const std::exception& e) {
            report.checks.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return report;
}

void print_report(const VerificationReport& report, std::ostream& os) {
    std::size_t passed = 0;
    for (const VerificationCheck& check : report.checks) {
        os << (check.passed ? "PASS" : "FAIL") << ' ' << check.name << ": " << check.detail
           << '\n';
        if (check.passed) ++passed;
    }
    os << (passed == report.checks.size() ? "VERIFY PASS" : "VERIFY FAIL") << " (" << passed << '/'
       << report.checks.size() << " checks, max_n=" << report.max_n << ")\n";
}

}  // namespace wheels
