#include "ew/cayley.hpp"
#include "ew/normal_form.hpp"
#include "ew/reflection.hpp"
#include "ew/series.hpp"
#include "ew/verify.hpp"
#include "ew/word_parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

const std::map<std::string, ew::GroupKind> kGroupNames{
    {"a11star", ew::GroupKind::A11Star},
    {"a11", ew::GroupKind::A11},
};

// Output stream selection: --out PATH or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& out() { return *os; }
};

long long to_int_entry(const ew::Rational& r) {
    // Every representation matrix is integral in the chosen bases; anything
    // else indicates corrupted tables.
    if (!r.is_integer())
        throw std::logic_error("representation matrix has a non-integer entry: " + r.str());
    return r.num().convert_to<long long>();
}

json matrix_to_json(const ew::ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_int_entry(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

int cmd_reduce(ew::GroupKind kind, const std::string& wordText, bool withMatrix,
               const std::string& format, const std::string& outPath) {
    const ew::Word word = ew::parse_word(kind, wordText);
    const ew::NormalForm nf = ew::reduce_word(kind, word);
    const long long length = ew::nf_length(nf);
    Sink sink(outPath);

    std::optional<ew::ExactMatrix> matrix;
    const ew::PairingTable table = ew::build_pairing_table(kind);
    if (withMatrix)
        matrix = ew::word_to_matrix(ew::build_reflections(table), word);

    if (format == "json") {
        json j;
        j["group"] = std::string(ew::kind_name(kind));
        j["word"] = ew::word_to_string(word);
        j["normal_form"] = {{"i", nf.i}, {"m", nf.m}, {"n", nf.n}};
        j["length"] = length;
        if (matrix) j["matrix"] = matrix_to_json(*matrix);
        sink.out() << j.dump(2) << "\n";
    } else if (format == "csv") {
        sink.out() << "group,word,i,m,n,length\n"
                   << ew::kind_name(kind) << "," << csv_quote(ew::word_to_string(word)) << ","
                   << nf.i << "," << nf.m << "," << nf.n << "," << length << "\n";
    } else {
        sink.out() << "group: " << ew::kind_name(kind) << "\n"
                   << "word: " << ew::word_to_string(word) << "\n"
                   << "normal_form: " << ew::to_string(nf) << "\n"
                   << "length: " << length << "\n";
        if (matrix) {
            sink.out() << "matrix (basis";
            for (auto name : table.basis_names()) sink.out() << " " << name;
            sink.out() << "):\n";
            for (std::size_t r = 0; r < matrix->dim(); ++r) {
                for (std::size_t c = 0; c < matrix->dim(); ++c)
                    sink.out() << (c ? " " : "  ") << to_int_entry(matrix->at(r, c));
                sink.out() << "\n";
            }
        }
    }
    return 0;
}

int cmd_series(ew::GroupKind kind, long long maxLen, const std::string& format,
               const std::string& outPath) {
    const ew::TruncatedSeries closed = ew::expand(ew::growth_series_closed_form(kind), maxLen);
    Sink sink(outPath);

    struct Row {
        long long n, closedCoeff, enumerated;
        bool match;
    };
    std::vector<Row> rows;
    for (long long n = 0; n <= maxLen; ++n) {
        const long long enumerated = static_cast<long long>(ew::sphere(kind, n).size());
        const long long closedCoeff =
            closed.coeffs[static_cast<std::size_t>(n)].convert_to<long long>();
        rows.push_back({n, closedCoeff, enumerated, closedCoeff == enumerated});
    }

    if (format == "json") {
        json j;
        j["group"] = std::string(ew::kind_name(kind));
        j["max_len"] = maxLen;
        j["rows"] = json::array();
        for (const Row& r : rows)
            j["rows"].push_back({{"n", r.n},
                                 {"closed_form", r.closedCoeff},
                                 {"enumerated", r.enumerated},
                                 {"match", r.match}});
        sink.out() << j.dump(2) << "\n";
    } else {
        const char sep = format == "csv" ? ',' : ' ';
        sink.out() << "n" << sep << "closed_form" << sep << "enumerated" << sep << "match\n";
        for (const Row& r : rows)
            sink.out() << r.n << sep << r.closedCoeff << sep << r.enumerated << sep
                       << (r.match ? "true" : "false") << "\n";
    }

    for (const Row& r : rows)
        if (!r.match) return 1;
    return 0;
}

int cmd_verify(ew::GroupKind kind, long long maxLen, const std::string& format,
               const std::string& outPath) {
    const std::vector<ew::SuiteResult> suites = ew::run_verification(kind, maxLen);
    Sink sink(outPath);
    bool allPassed = true;
    for (const auto& s : suites) allPassed = allPassed && s.passed;

    if (format == "json") {
        json j;
        j["group"] = std::string(ew::kind_name(kind));
        j["max_len"] = maxLen;
        j["suites"] = json::array();
        for (const auto& s : suites)
            j["suites"].push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
        j["all_passed"] = allPassed;
        sink.out() << j.dump(2) << "\n";
    } else {
        for (const auto& s : suites)
            sink.out() << (s.passed ? "[PASS] " : "[FAIL] ") << s.name
                       << (s.detail.empty() ? "" : ": " + s.detail) << "\n";
        sink.out() << (allPassed ? "all suites passed" : "verification FAILED") << "\n";
    }
    return allPassed ? 0 : 1;
}

int cmd_classical(const std::string& type, const std::vector<long long>& exponents,
                  long long maxLen, const std::string& format, const std::string& outPath) {
    ew::TruncatedSeries series;
    if (type == "finite") {
        long long degree = 0;
        for (long long m : exponents) degree += m;
        series = ew::expand(ew::finite_weyl_series(exponents), maxLen >= 0 ? maxLen : degree);
    } else {
        series = ew::affine_weyl_series(exponents, maxLen >= 0 ? maxLen : 200);
    }

    Sink sink(outPath);
    if (format == "json") {
        json j;
        j["type"] = type;
        j["exponents"] = exponents;
        j["coefficients"] = json::array();
        for (const auto& c : series.coeffs) j["coefficients"].push_back(c.convert_to<long long>());
        sink.out() << j.dump(2) << "\n";
    } else if (format == "csv") {
        sink.out() << "k,coefficient\n";
        for (std::size_t k = 0; k < series.coeffs.size(); ++k)
            sink.out() << k << "," << series.coeffs[k].str() << "\n";
    } else {
        for (std::size_t k = 0; k < series.coeffs.size(); ++k)
            sink.out() << (k ? "," : "") << series.coeffs[k].str();
        sink.out() << "\n";
    }
    return 0;
}

int cmd_dump_cayley(ew::GroupKind kind, long long maxLen, const std::string& outPath) {
    const std::vector<ew::CayleyEdge> edges = ew::dump_cayley(kind, maxLen);
    Sink sink(outPath);
    for (const auto& e : edges) sink.out() << ew::format_edge(e) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for the elliptic Weyl groups of type A1^(1,1) and A1^(1,1)*: "
        "normal forms, word lengths, reflection matrices, and growth series"};
    app.require_subcommand(1);

    ew::GroupKind group = ew::GroupKind::A11Star;
    std::string format = "text";
    std::string outPath;
    std::string wordText;
    bool withMatrix = false;
    long long maxLen = -1;

    const auto addCommon = [&](CLI::App* sub, bool needsGroup) {
        if (needsGroup)
            sub->add_option("--group", group, "group kind")
                ->required()
                ->transform(CLI::CheckedTransformer(kGroupNames, CLI::ignore_case));
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", outPath, "write output to a file instead of stdout");
    };

    CLI::App* reduce = app.add_subcommand("reduce", "reduce a generator word to normal form");
    addCommon(reduce, true);
    reduce->add_option("--word", wordText, "generator word, e.g. \"0 1 1'\"")->required();
    reduce->add_flag("--matrix", withMatrix, "include the reflection-representation matrix");

    CLI::App* series = app.add_subcommand(
        "series", "compare growth-series coefficients against sphere enumeration");
    addCommon(series, true);
    series->add_option("--max-len", maxLen, "largest length to tabulate (default 200)");

    CLI::App* verify =
        app.add_subcommand("verify", "run the full verification stack for one group");
    addCommon(verify, true);
    verify->add_option("--max-len", maxLen, "BFS radius for the length checks (default 12)");

    CLI::App* classical =
        app.add_subcommand("classical", "expand the classical Weyl-group growth series");
    std::string classicalType;
    std::vector<long long> exponents;
    classical->add_option("type", classicalType, "finite or affine")
        ->required()
        ->check(CLI::IsMember({"finite", "affine"}));
    classical->add_option("--exponents", exponents, "exponent list, e.g. 1,2")
        ->required()
        ->delimiter(',');
    classical->add_option("--max-len", maxLen,
                          "expansion order (finite: defaults to the polynomial degree; "
                          "affine: defaults to 200)");
    addCommon(classical, false);

    CLI::App* dump = app.add_subcommand("dump-cayley", "emit the Cayley-graph edge list");
    dump->add_option("--group", group, "group kind")
        ->required()
        ->transform(CLI::CheckedTransformer(kGroupNames, CLI::ignore_case));
    dump->add_option("--max-len", maxLen, "dump edges from elements of length < max-len "
                                          "(default 12)");
    dump->add_option("--out", outPath, "write output to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce->parsed()) return cmd_reduce(group, wordText, withMatrix, format, outPath);
        if (series->parsed())
            return cmd_series(group, maxLen >= 0 ? maxLen : 200, format, outPath);
        if (verify->parsed())
            return cmd_verify(group, maxLen >= 0 ? maxLen : 12, format, outPath);
        if (classical->parsed())
            return cmd_classical(classicalType, exponents, maxLen, format, outPath);
        if (dump->parsed()) return cmd_dump_cayley(group, maxLen >= 0 ? maxLen : 12, outPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
