// lrc: analysis, enumeration, irreducibility, encoding and repair for
// repeated-root constacyclic locally repairable codes.
//
// Exit codes: 0 success, 2 data inconsistency, 64 usage error, 65 domain error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lrc/codec.hpp"
#include "lrc/grid.hpp"
#include "lrc/irred.hpp"
#include "lrc/json_io.hpp"
#include "lrc/lrcopt.hpp"
#include "lrc/oracle.hpp"

using namespace lrc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;

long env_budget(long fallback) {
    if (const char* v = std::getenv("LRC_BUDGET")) {
        char* end = nullptr;
        long b = std::strtol(v, &end, 10);
        if (end && *end == '\0' && b > 0) return b;
    }
    return fallback;
}

struct FieldArgs {
    int p = 0;
    int m = 1;
    std::vector<int> modulus;

    const Field& resolve() const {
        if (modulus.empty()) return field_of(p, m);
        return field_of(p, m, modulus);
    }
};

void add_field_options(CLI::App* cmd, FieldArgs& fa) {
    cmd->add_option("--p", fa.p, "characteristic (prime)")->required();
    cmd->add_option("--m", fa.m, "extension degree (default 1)");
    cmd->add_option("--modulus", fa.modulus,
                    "modulus coefficients, ascending degree (default: smallest irreducible)")
        ->delimiter(',');
}

// lambda0 given either as an element repr or as a power of the smallest
// primitive element
struct ElementArg {
    std::optional<int> repr;
    std::optional<long> power;

    int resolve(const Field& f, const char* what) const {
        if (repr && power) fail(errc::invalid_params, std::string(what) + " given twice");
        if (repr) {
            if (*repr < 0 || *repr >= f.q()) fail(errc::invalid_params, "element repr out of range");
            return *repr;
        }
        if (power) return f.pow(f.generator(), *power);
        fail(errc::invalid_params, std::string(what) + " missing");
    }
};

std::string classes_text(const std::vector<ClassLabel>& classes) {
    if (classes.empty()) return "-";
    std::string s;
    for (const auto& c : classes) {
        if (!s.empty()) s += ",";
        s += std::to_string(c.id);
        if (!c.param_name.empty()) s += "(" + c.param_name + "=" + std::to_string(c.param) + ")";
    }
    return s;
}

void print_report(const OptimalityReport& rep, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return;
    }
    const LrcProfile& pr = rep.profile;
    std::cout << "n=" << pr.n << " k=" << pr.k << " d=" << pr.d << " d_dual=" << pr.d_dual
              << " r=" << pr.r << " d_bound=" << rep.d_bound
              << " optimal=" << (rep.optimal ? "yes" : "no") << " classes=" << classes_text(rep.classes)
              << "\n";
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::invalid_params, "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

int parse_symbol(const std::string& s, const Field& f) {
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (!end || *end != '\0' || v < 0 || v >= f.q())
        fail(errc::invalid_params, "bad symbol '" + s + "'");
    return (int)v;
}

CodeSpec load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::invalid_params, "cannot open " + path);
    nlohmann::json j;
    in >> j;
    return code_from_json(j);
}

void write_word(const std::vector<int>& word, const std::string& out_path) {
    if (out_path.empty()) {
        for (int x : word) std::cout << x << "\n";
        return;
    }
    std::ofstream out(out_path);
    for (int x : word) out << x << "\n";
}

// ---- tables ---------------------------------------------------------------

int run_tables(const std::string& name) {
    bool ok = true;
    if (name == "example-25") {
        const Field& f5 = field_of(5, 1);
        const std::vector<long> v_gold = {1, 2, 3, 4, 5,  2, 4, 6,  8,  10, 3, 6, 9,
                                          12, 15, 4, 8, 12, 16, 20, 5, 10, 15, 20, 25};
        const std::vector<long> d_gold = {1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4,
                                          4, 4, 4, 5, 5, 5, 5, 5, 10, 15, 20, 25};
        std::cout << "   i:  V_i  d(C_i)   C_i(1,25,-1) over GF(5)\n";
        for (int i = 0; i < 25; ++i) {
            long v = v_weight(i, 5);
            long d = min_distance_single(CodeSpec::single(f5, 1, 2, f5.neg(1), i)).d;
            bool row_ok = v == v_gold[i] && d == d_gold[i];
            ok &= row_ok;
            std::printf("  %2d:  %3ld  %5ld   %s\n", i, v, d, row_ok ? "" : "MISMATCH");
        }
    } else if (name == "example-48" || name == "example-64" || name == "example-54") {
        const Field* f;
        int eta, s, lambda0;
        std::vector<std::array<long, 4>> gold;
        if (name == "example-48") {
            f = &field_of(2, 2);
            eta = 3; s = 4; lambda0 = 2;
            gold = {{48, 45, 2, 15}, {48, 42, 2, 7}, {48, 36, 2, 3}, {48, 24, 2, 1}};
        } else if (name == "example-64") {
            f = &field_of(2, 1);
            eta = 1; s = 6; lambda0 = 1;
            gold = {{64, 63, 2, 63}, {64, 62, 2, 31}, {64, 60, 2, 15}, {64, 56, 2, 7},
                    {64, 48, 2, 3},  {64, 32, 2, 1},  {64, 31, 4, 1},  {64, 1, 64, 1}};
        } else {
            f = &field_of(3, 3);
            eta = 2; s = 3; lambda0 = f->neg(1);
            gold = {{54, 52, 2, 26}, {54, 48, 2, 8}, {54, 36, 2, 2}};
        }
        auto found = enumerate_optimal_single(*f, eta, s, lambda0);
        std::cout << "   i:   n    k    d    r   classes\n";
        std::vector<std::array<long, 4>> got;
        for (const auto& [i, rep] : found) {
            got.push_back({rep.profile.n, rep.profile.k, rep.profile.d, rep.profile.r});
            std::printf("  %2d: %4ld %4ld %4ld %4ld   %s\n", i, rep.profile.n, rep.profile.k,
                        rep.profile.d, rep.profile.r, classes_text(rep.classes).c_str());
        }
        ok = got == gold;
    } else if (name == "table1-instances") {
        struct Row {
            int cls;
            CodeSpec code;
            std::array<long, 4> expect;
        };
        const Field& f2 = field_of(2, 1);
        const Field& f3 = field_of(3, 1);
        const Field& f4 = field_of(2, 2);
        const Field& f5 = field_of(5, 1);
        std::vector<Row> rows = {
            {1, CodeSpec::single(f2, 1, 2, 1, 3), {4, 1, 4, 1}},
            {2, CodeSpec::single(f3, 1, 2, 1, 4), {9, 5, 3, 2}},
            {3, CodeSpec::single(f4, 3, 2, 2, 2), {12, 6, 2, 1}},
            {4, CodeSpec::single(f3, 1, 2, 1, 2), {9, 7, 2, 5}},
            {5, CodeSpec::single(f5, 1, 1, 1, 2), {5, 3, 3, 3}},
            {6, CodeSpec::single(f3, 1, 2, 1, 8), {9, 1, 9, 1}},
            {7, CodeSpec::pair(f3, 1, 1, 0, 3), {6, 3, 2, 1}},
            {8, CodeSpec::pair(f3, 2, 1, 0, 3), {18, 15, 2, 5}},
            {9, CodeSpec::pair(f3, 2, 1, 0, 2), {18, 16, 2, 11}},
            {10, CodeSpec::pair(f5, 1, 1, 2, 5), {10, 3, 6, 1}},
        };
        std::cout << " class:   n    k    d    r   optimal\n";
        for (const Row& row : rows) {
            OptimalityReport rep = check_optimal(row.code);
            std::array<long, 4> got = {rep.profile.n, rep.profile.k, rep.profile.d, rep.profile.r};
            bool row_ok = got == row.expect && rep.optimal;
            bool labelled = false;
            for (const auto& c : rep.classes) labelled |= c.id == row.cls;
            row_ok &= labelled;
            ok &= row_ok;
            std::printf("  %4d: %4ld %4ld %4ld %4ld   %s%s\n", row.cls, got[0], got[1], got[2],
                        got[3], rep.optimal ? "yes" : "no", row_ok ? "" : "  MISMATCH");
        }
    } else {
        fail(errc::unknown_table, "unknown table '" + name + "'");
    }
    std::cout << (ok ? "table matches the embedded golden data\n"
                     : "TABLE MISMATCH against embedded golden data\n");
    return ok ? kExitOk : kExitInconsistent;
}

// ---- oracle ----------------------------------------------------------------

int run_oracle(const std::string& check, long budget) {
    std::vector<CodeSpec> grid = default_grid();
    long checked = 0, mismatches = 0;
    if (check == "distance" || check == "dual") {
        for (const CodeSpec& code : grid) {
            bool dual_side = check == "dual";
            long dim = dual_side ? code.n() - code.k() : code.k();
            if (power_capped(code.field().q(), dim, budget) > budget) continue;
            ++checked;
            long closed = min_distance(dual_side ? code.dual() : code).d;
            long brute = dual_side ? exhaustive_dual_min_distance(code, budget)
                                   : exhaustive_min_distance(code, budget);
            if (closed != brute) ++mismatches;
        }
    } else if (check == "locality") {
        for (const CodeSpec& code : grid) {
            if (power_capped(code.field().q(), code.n() - code.k(), budget) > budget) continue;
            ++checked;
            long r = min_distance(code.dual()).d - 1;
            for (long v : exhaustive_locality_all(code, budget))
                if (v != r) ++mismatches;
        }
    } else if (check == "duality") {
        for (const CodeSpec& code : grid) {
            ++checked;
            if (!verify_duality(code)) ++mismatches;
        }
    } else if (check == "irreducible") {
        for (int p : {2, 3, 5, 7}) {
            for (int m : {1, 2}) {
                const Field& f = field_of(p, m);
                for (int a = 1; a < f.q(); ++a)
                    for (long eta = 1; eta <= 12; ++eta) {
                        ++checked;
                        if (binomial_irreducible(eta, f.elem(a)) !=
                            verify_irreducible(eta, f.elem(a), budget))
                            ++mismatches;
                    }
            }
        }
    } else {
        fail(errc::invalid_params, "unknown check '" + check + "'");
    }
    std::printf("%-12s %8ld checked %8ld mismatches   %s\n", check.c_str(), checked, mismatches,
                mismatches == 0 ? "PASS" : "FAIL");
    return mismatches == 0 ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"repeated-root constacyclic locally repairable codes"};
    app.require_subcommand(1);

    FieldArgs fa;
    ElementArg lambda0, elem_a;
    int arg_s = 1, arg_eta = 1, arg_i = 0, arg_j = -1;
    long arg_max = 30;
    bool as_json = false;
    std::string code_path, word_path, msg_path, out_path, table_name, check_name = "distance";
    long arg_eta_irred = 1;
    int arg_erased = -1;

    auto add_lambda0 = [&](CLI::App* cmd) {
        cmd->add_option("--lambda0", lambda0.repr, "lambda0 as an element repr");
        cmd->add_option("--lambda0-power", lambda0.power,
                        "lambda0 as a power of the smallest primitive element");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "profile of a single-root code");
    add_field_options(analyze, fa);
    add_lambda0(analyze);
    analyze->add_option("--s", arg_s)->required();
    analyze->add_option("--eta", arg_eta);
    analyze->add_option("--i", arg_i)->required();
    analyze->add_flag("--json", as_json);

    CLI::App* analyze_pair = app.add_subcommand("analyze-pair", "profile of a pair-root code");
    add_field_options(analyze_pair, fa);
    add_lambda0(analyze_pair);
    analyze_pair->add_option("--s", arg_s)->required();
    analyze_pair->add_option("--i", arg_i)->required();
    analyze_pair->add_option("--j", arg_j)->required();
    analyze_pair->add_flag("--json", as_json);

    CLI::App* enumerate = app.add_subcommand("enumerate", "optimal single-root codes");
    add_field_options(enumerate, fa);
    add_lambda0(enumerate);
    enumerate->add_option("--s", arg_s)->required();
    enumerate->add_option("--eta", arg_eta);
    enumerate->add_flag("--json", as_json);

    CLI::App* enumerate_pair = app.add_subcommand("enumerate-pair", "optimal pair-root codes");
    add_field_options(enumerate_pair, fa);
    add_lambda0(enumerate_pair);
    enumerate_pair->add_option("--s", arg_s)->required();
    enumerate_pair->add_flag("--json", as_json);

    CLI::App* classify_cmd = app.add_subcommand("classify", "family labels of a code");
    add_field_options(classify_cmd, fa);
    add_lambda0(classify_cmd);
    classify_cmd->add_option("--s", arg_s)->required();
    classify_cmd->add_option("--eta", arg_eta);
    classify_cmd->add_option("--i", arg_i)->required();
    classify_cmd->add_option("--j", arg_j);
    classify_cmd->add_flag("--json", as_json);

    CLI::App* irred_cmd = app.add_subcommand("irreducible", "is x^eta - a irreducible?");
    add_field_options(irred_cmd, fa);
    irred_cmd->add_option("--a", elem_a.repr, "constant as an element repr");
    irred_cmd->add_option("--a-power", elem_a.power, "constant as a generator power");
    irred_cmd->add_option("--eta", arg_eta_irred)->required();

    CLI::App* adm_cmd = app.add_subcommand("admissible-eta", "all eta with x^eta - a irreducible");
    add_field_options(adm_cmd, fa);
    adm_cmd->add_option("--a", elem_a.repr, "constant as an element repr");
    adm_cmd->add_option("--a-power", elem_a.power, "constant as a generator power");
    adm_cmd->add_option("--max", arg_max)->required();
    adm_cmd->add_flag("--json", as_json);

    CLI::App* encode_cmd = app.add_subcommand("encode", "systematic encoding");
    encode_cmd->add_option("--code", code_path, "code descriptor JSON file")->required();
    encode_cmd->add_option("--message", msg_path, "message file, one repr per line")->required();
    encode_cmd->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* repair_cmd = app.add_subcommand("repair", "single-erasure local repair");
    repair_cmd->add_option("--code", code_path, "code descriptor JSON file")->required();
    repair_cmd->add_option("--word", word_path, "codeword file, one repr per line, '?' = erased")
        ->required();
    repair_cmd->add_option("--erased", arg_erased, "erased index (alternative to '?')");
    repair_cmd->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force verification over the grid");
    oracle_cmd->add_option("--check", check_name,
                           "distance|dual|locality|duality|irreducible")
        ->required();
    std::string grid_name = "default";
    oracle_cmd->add_option("--grid", grid_name)->check(CLI::IsMember({"default"}));

    CLI::App* tables_cmd = app.add_subcommand("tables", "regenerate a reference table");
    tables_cmd->add_option("name", table_name,
                           "table1-instances|example-25|example-48|example-64|example-54")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) {
            const Field& f = fa.resolve();
            CodeSpec code = CodeSpec::single(f, arg_eta, arg_s, lambda0.resolve(f, "lambda0"), arg_i);
            print_report(check_optimal(code), as_json);
        } else if (*analyze_pair) {
            const Field& f = fa.resolve();
            CodeSpec code = CodeSpec::pair(f, arg_s, lambda0.resolve(f, "lambda0"), arg_i, arg_j);
            print_report(check_optimal(code), as_json);
        } else if (*enumerate) {
            const Field& f = fa.resolve();
            auto found = enumerate_optimal_single(f, arg_eta, arg_s, lambda0.resolve(f, "lambda0"));
            if (as_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& [i, rep] : found) {
                    ordered_json row{{"i", i},
                                     {"n", rep.profile.n},
                                     {"k", rep.profile.k},
                                     {"d", rep.profile.d},
                                     {"r", rep.profile.r}};
                    ordered_json cls = ordered_json::array();
                    for (const auto& c : rep.classes) cls.push_back(class_to_json(c));
                    row["classes"] = cls;
                    arr.push_back(row);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << "   i:   n    k    d    r   classes\n";
                for (const auto& [i, rep] : found)
                    std::printf("  %2d: %4ld %4ld %4ld %4ld   %s\n", i, rep.profile.n,
                                rep.profile.k, rep.profile.d, rep.profile.r,
                                classes_text(rep.classes).c_str());
            }
        } else if (*enumerate_pair) {
            const Field& f = fa.resolve();
            long budget = env_budget(1 << 20);
            auto found = enumerate_optimal_pair(f, arg_s, lambda0.resolve(f, "lambda0"), budget);
            if (as_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& e : found) {
                    ordered_json row{{"i", e.i},
                                     {"j", e.j},
                                     {"n", e.report.profile.n},
                                     {"k", e.report.profile.k},
                                     {"d", e.report.profile.d},
                                     {"r", e.report.profile.r}};
                    ordered_json cls = ordered_json::array();
                    for (const auto& c : e.report.classes) cls.push_back(class_to_json(c));
                    row["classes"] = cls;
                    arr.push_back(row);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << "   i   j:   n    k    d    r   classes\n";
                for (const auto& e : found)
                    std::printf("  %2d  %2d: %4ld %4ld %4ld %4ld   %s%s\n", e.i, e.j,
                                e.report.profile.n, e.report.profile.k, e.report.profile.d,
                                e.report.profile.r, classes_text(e.report.classes).c_str(),
                                e.outside_classes ? "   <- finding: outside the known classes"
                                                  : "");
            }
        } else if (*classify_cmd) {
            const Field& f = fa.resolve();
            int l0 = lambda0.resolve(f, "lambda0");
            CodeSpec code = classify_cmd->count("--j")
                                ? CodeSpec::pair(f, arg_s, l0, arg_i, arg_j)
                                : CodeSpec::single(f, arg_eta, arg_s, l0, arg_i);
            auto classes = classify(code);
            if (as_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& c : classes) arr.push_back(class_to_json(c));
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << classes_text(classes) << "\n";
            }
        } else if (*irred_cmd) {
            const Field& f = fa.resolve();
            FieldElement a = f.elem(elem_a.resolve(f, "a"));
            IrreducibilityCertificate cert = certificate(a);
            ordered_json j;
            j["eta"] = arg_eta_irred;
            j["irreducible"] = binomial_irreducible(arg_eta_irred, a);
            j["certificate"] = ordered_json{
                {"a", a.repr()},
                {"order", cert.e},
                {"q1_factorization", cert.q1_factorization},
                {"S", cert.S},
                {"e0_rule", cert.e0_rule == IrreducibilityCertificate::E0Rule::free_
                                ? "free"
                                : cert.e0_rule == IrreducibilityCertificate::E0Rule::zero_or_one
                                      ? "zero_or_one"
                                      : "zero"},
            };
            std::cout << j.dump(2) << "\n";
        } else if (*adm_cmd) {
            const Field& f = fa.resolve();
            auto v = admissible_eta(f.elem(elem_a.resolve(f, "a")), arg_max);
            if (as_json) {
                std::cout << ordered_json(v).dump() << "\n";
            } else {
                for (size_t t = 0; t < v.size(); ++t)
                    std::cout << v[t] << (t + 1 < v.size() ? "," : "\n");
            }
        } else if (*encode_cmd) {
            CodeSpec code = load_code(code_path);
            std::vector<int> msg;
            for (const std::string& line : read_lines(msg_path))
                msg.push_back(parse_symbol(line, code.field()));
            write_word(encode(code, msg).coeffs, out_path);
        } else if (*repair_cmd) {
            CodeSpec code = load_code(code_path);
            std::vector<std::string> lines = read_lines(word_path);
            if ((long)lines.size() != code.n())
                fail(errc::length_mismatch, "word file must hold n symbols");
            std::vector<int> symbols(code.n(), 0);
            int erased = -1, erasures = 0;
            for (long t = 0; t < code.n(); ++t) {
                if (lines[t] == "?") {
                    ++erasures;
                    erased = (int)t;
                } else {
                    symbols[t] = parse_symbol(lines[t], code.field());
                }
            }
            if (erasures > 1) fail(errc::too_many_erasures, "more than one '?' line");
            if (repair_cmd->count("--erased")) {
                if (erased != -1 && erased != arg_erased)
                    fail(errc::invalid_params, "--erased disagrees with the '?' line");
                erased = arg_erased;
            }
            if (erased < 0) fail(errc::invalid_params, "no erasure given ('?' line or --erased)");
            Codeword fixed = repair(code, ReceivedWord{symbols, erased});
            write_word(fixed.coeffs, out_path);
        } else if (*oracle_cmd) {
            return run_oracle(check_name, env_budget(1 << 20));
        } else if (*tables_cmd) {
            return run_tables(table_name);
        }
    } catch (const lrc_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::inconsistent_word ? kExitInconsistent : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
