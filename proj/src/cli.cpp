#include "wheels/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "wheels/census.hpp"
#include "wheels/counting.hpp"
#include "wheels/distance.hpp"

namespace wheels {

namespace {

int cmd_count(const std::string& kind, int n, int k, std::ostream& out) {
    const Count128 value = kind == "necklace" ? necklaces(n, k) : bracelets(n, k);
    out << value.str() << '\n';
    return kExitOk;
}

int cmd_psi(int n, int p, const std::string& method, std::ostream& out, std::ostream& err) {
    if (method == "closed") {
        try {
            out << psi_closed(p, n).str() << '\n';
        } catch (const NoClosedFormError& e) {
            err << "--method closed: " << e.what() << '\n';
            return kExitUsage;
        }
        return kExitOk;
    }
    if (method == "enumerate") {
        out << psi_enumerated(p, n).str() << '\n';
        return kExitOk;
    }
    // both: closed form where covered (enumeration is its own fallback),
    // enumeration always; nonzero exit on mismatch.
    const Count128 enumerated = psi_enumerated(p, n);
    const Count128 closed = psi_closed_defined(p, n) ? psi_closed(p, n) : enumerated;
    out << closed.str() << ", " << enumerated.str() << '\n';
    if (!(closed == enumerated)) {
        err << "closed form and enumeration disagree at p=" << p << ", n=" << n << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_table(int min_n, int max_n, const std::string& format, std::ostream& out,
              std::ostream& err) {
    const CensusTable table = build_table(min_n, max_n);
    if (format == "csv")
        out << to_csv(table);
    else if (format == "md")
        out << to_markdown(table);
    else
        out << to_json(table) << '\n';
    if (!table.verified()) {
        err << "table verification failed: closed forms and enumeration disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_enumerate(int n, int p, const std::string& format, const std::string& out_dir,
                  std::ostream& out) {
    const DocFormat doc_format = format == "dot" ? DocFormat::Dot : DocFormat::Json;
    if (out_dir.empty()) {
        if (doc_format == DocFormat::Json) {
            out << representatives_to_json_array(n, p);
        } else {
            for (const Document& doc : export_representatives(n, p, doc_format)) out << doc.body;
        }
        return kExitOk;
    }
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    for (const Document& doc : export_representatives(n, p, doc_format)) {
        const std::filesystem::path path = dir / doc.name;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot write " + path.string());
        file << doc.body;
        out << path.string() << '\n';
    }
    return kExitOk;
}

int cmd_verify(int max_n, std::ostream& out) {
    const VerificationReport report = verify_all(max_n);
    print_report(report, out);
    return report.all_passed() ? kExitOk : kExitMismatch;
}

int cmd_distance_lemma(int n, int p, std::ostream& out) {
    const KeyLemmaReport report = check_key_lemma(n, p);
    out << to_json(report) << '\n';
    return report.complete() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact census of signed wheels up to switching isomorphism"};
    app.name("wheel-census");
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Necklace or bracelet count");
    std::string count_kind;
    int count_n = 0;
    int count_k = 0;
    count->add_option("--kind", count_kind, "What to count")
        ->required()
        ->check(CLI::IsMember({"necklace", "bracelet"}));
    count->add_option("--n", count_n, "Word length")->required()->check(CLI::PositiveNumber);
    count->add_option("--k", count_k, "Alphabet size")->required()->check(CLI::PositiveNumber);

    // psi
    auto* psi = app.add_subcommand("psi", "Classes with exactly p negative rim edges");
    int psi_n = 0;
    int psi_p = 0;
    std::string psi_method = "both";
    psi->add_option("--n", psi_n, "Rim length")->required();
    psi->add_option("--p", psi_p, "Negative edge count")->required();
    psi->add_option("--method", psi_method, "closed, enumerate, or both (default both)")
        ->check(CLI::IsMember({"closed", "enumerate", "both"}));

    // table
    auto* table = app.add_subcommand("table", "psi_p(n) census table with column sums");
    int table_min = 0;
    int table_max = 0;
    std::string table_format = "csv";
    table->add_option("--min-n", table_min, "First column")->required();
    table->add_option("--max-n", table_max, "Last column")->required();
    table->add_option("--format", table_format, "csv, md, or json (default csv)")
        ->check(CLI::IsMember({"csv", "md", "json"}));

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Class representatives for (n, p)");
    int enum_n = 0;
    int enum_p = 0;
    std::string enum_format = "json";
    std::string enum_out;
    enumerate->add_option("--n", enum_n, "Rim length")->required();
    enumerate->add_option("--p", enum_p, "Negative edge count")->required();
    enumerate->add_option("--format", enum_format, "json or dot (default json)")
        ->check(CLI::IsMember({"json", "dot"}));
    enumerate->add_option("--out", enum_out, "Write one file per class into this directory");

    // verify
    auto* verify = app.add_subcommand("verify", "Run every cross-check");
    int verify_max = 10;
    verify->add_option("--max-n", verify_max, "Sweep bound (default 10)");

    // distance-lemma
    auto* lemma = app.add_subcommand("distance-lemma", "Distance-tuple completeness report");
    int lemma_n = 0;
    int lemma_p = 0;
    lemma->add_option("--n", lemma_n, "Rim length")->required();
    lemma->add_option("--p", lemma_p, "Negative edge count")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(count_kind, count_n, count_k, out);
        if (psi->parsed()) return cmd_psi(psi_n, psi_p, psi_method, out, err);
        if (table->parsed()) return cmd_table(table_min, table_max, table_format, out, err);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, enum_p, enum_format, enum_out, out);
        if (verify->parsed()) return cmd_verify(verify_max, out);
        if (lemma->parsed()) return cmd_distance_lemma(lemma_n, lemma_p, out);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace wheels
