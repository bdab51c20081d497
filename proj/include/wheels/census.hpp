#ifndef WHEELS_CENSUS_HPP
#define WHEELS_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wheels/count128.hpp"
#include "wheels/dihedral.hpp"
#include "wheels/distance.hpp"

namespace wheels {

// Scan budget for enumeration-backed counts.
inline constexpr int kMaxEnumerationN = 24;

// |enumerate_representatives(n, p)|; the ground truth for every psi value.
Count128 psi_enumerated(int p, int n);

enum class CellMethod { Closed, Enumerated, BothAgree };
std::string_view cell_method_name(CellMethod m);

struct CensusCell {
    Count128 value;  // the enumerated value; the oracle wins on disagreement
    CellMethod method = CellMethod::Enumerated;
    // (closed, enumerated) when the two routes disagree.
    std::optional<std::pair<Count128, Count128>> discrepancy;
};

struct ColumnTotal {
    Count128 sum;       // sum of the column's cells
    Count128 bracelet;  // bracelets(n, 2), the independent total
};

struct CensusTable {
    int min_n = 0;
    int max_n = 0;
    std::map<std::pair<int, int>, CensusCell> cells;  // key (p, n), p <= n
    std::map<int, ColumnTotal> totals;

    const CensusCell& cell(int p, int n) const;
    bool verified() const;
};

// Fills every (p, n) cell for min_n <= n <= max_n, 0 <= p <= n: enumeration
// always, the closed form where defined, method BothAgree on a match. Column
// sums are checked against bracelets(n, 2). Disagreements are stored in the
// table, never silently dropped.
CensusTable build_table(int min_n, int max_n);

std::string to_csv(const CensusTable& t);
std::string to_markdown(const CensusTable& t);
std::string to_json(const CensusTable& t);

// One isomorphism class of weight-p signatures on C_n.
struct Representative {
    int n = 0;
    int p = 0;
    CanonicalWord word;
    DistanceTuple tuple;
    int orbit = 0;

    bool operator==(const Representative&) const = default;
};

std::vector<Representative> class_representatives(int n, int p);

enum class DocFormat { Json, Dot };

struct Document {
    std::string name;  // stable file name, e.g. "rep_0000011111.json"
    std::string body;
};

// One document per class, ordered by canonical word.
std::vector<Document> export_representatives(int n, int p, DocFormat format);

// All classes as a single JSON array (stdout form of the export).
std::string representatives_to_json_array(int n, int p);

Representative representative_from_json(std::string_view text);

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    int max_n = 0;
    std::vector<VerificationCheck> checks;

    bool all_passed() const;
};

// Closed-form hook for verify_all; the default is psi_closed. Tests inject a
// corrupted form to confirm mismatches are pinpointed, not averaged away.
using ClosedPsiFn = std::function<Count128(std::int64_t p, std::int64_t n)>;

// Runs every cross-check the census is built on: golden small-n tables,
// closed-vs-enumerated sweep, bracelet identity, psi symmetry, the weight-4
// minimum-distance bound, distance-tuple completeness at p <= 4, the
// partition identity, switching-class counts, and necklace form agreement.
// Failures are report content, not exceptions.
VerificationReport verify_all(int max_n);
VerificationReport verify_all(int max_n, const ClosedPsiFn& closed_psi);

void print_report(const VerificationReport& report, std::ostream& os);

}  // namespace wheels

#endif  // WHEELS_CENSUS_HPP
