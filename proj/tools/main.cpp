#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "t0form/cyclotomic.hpp"
#include "t0form/io.hpp"
#include "t0form/oracle.hpp"
#include "t0form/standard_form.hpp"
#include "t0form/standardize.hpp"

namespace {

using namespace t0form;

constexpr int kExitNotOk = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBudget = 4;

OrderSpec make_order(int k, const std::string& order_text) {
    if (order_text.empty()) return OrderSpec::default_order(k);
    return parse_order_spec(k, order_text);
}

T0Matrix load_matrix(const std::string& path) {
    try {
        return read_matrix_file(path);
    } catch (const ParseError& e) {
        std::cerr << "parse error in " << path << ": " << e.what() << "\n";
        std::exit(kExitParse);
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        std::exit(kExitParse);
    }
}

// Locations are printed 1-based.
void print_condition(Condition c, const ViolationReport& report) {
    std::cout << to_string(c) << ": ";
    if (report.empty()) {
        std::cout << "PASS\n";
        return;
    }
    const Violation& v = report.violations.front();
    std::cout << "FAIL at";
    if (v.row) std::cout << " row " << (*v.row + 1);
    if (v.col) std::cout << " column " << (*v.col + 1);
    std::cout << " (entry " << format_entry(v.found) << ")\n";
}

int cmd_verify(const std::string& path, const std::string& order_text) {
    T0Matrix a = load_matrix(path);
    OrderSpec order = make_order(a.k(), order_text);
    ViolationReport s1 = check_s1(a), s2 = check_s2(a), s3 = check_s3(a), s4 = check_s4(order, a);
    print_condition(Condition::S1, s1);
    print_condition(Condition::S2, s2);
    print_condition(Condition::S3, s3);
    print_condition(Condition::S4, s4);
    bool ok = s1.empty() && s2.empty() && s3.empty() && s4.empty();
    std::cout << "standard form: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : kExitNotOk;
}

int cmd_standardize(const std::string& path, const std::string& order_text,
                    const std::string& out_path, const std::string& cert_path, bool legacy,
                    const std::string& trace_prefix) {
    T0Matrix w = load_matrix(path);
    OrderSpec order = make_order(w.k(), order_text);

    T0Matrix result;
    Certificate cert;
    if (legacy) {
        LegacyResult r = legacy_standardize(w, order);
        if (!trace_prefix.empty())
            for (std::size_t s = 0; s < 4; ++s)
                write_file(trace_prefix + ".step" + std::to_string(s + 1) + ".t0m",
                           format_matrix(r.stage[s]));
        result = r.result();
        cert = r.cert;
        auto check = is_standard_form(order, result);
        std::cout << "legacy result is " << (check.standard ? "" : "NOT ")
                  << "in standard form\n";
        std::cout << "certificate valid: "
                  << (equivalent_by(w, result, cert.m1, cert.m2) ? "yes" : "no") << "\n";
    } else {
        StandardizeResult r = standardize(w, order);  // self-checking
        result = std::move(r.standard);
        cert = std::move(r.cert);
        std::cout << "standard form: yes\ncertificate valid: yes\n";
    }

    if (!out_path.empty()) write_file(out_path, format_matrix(result));
    else std::cout << format_matrix(result);
    if (!cert_path.empty()) write_file(cert_path, format_certificate(cert));
    return 0;
}

int cmd_gram(const std::string& path) {
    T0Matrix w = load_matrix(path);
    GramResult r = gram_weight_check(w);
    if (r.weighing) {
        std::cout << "unit weighing: w = " << r.weight << "\n";
        return 0;
    }
    const GramWitness& wit = *r.witness;
    switch (wit.reason) {
        case GramFailure::not_square:
            std::cout << "not a unit weighing matrix: not square (" << wit.row << " x "
                      << wit.col << ")\n";
            break;
        case GramFailure::off_diagonal:
            std::cout << "not a unit weighing matrix: witness rows (" << wit.row << ", "
                      << wit.col << "), gram entry = " << wit.value.to_string() << "\n";
            break;
        case GramFailure::diagonal_mismatch:
            std::cout << "not a unit weighing matrix: row " << wit.row
                      << " has weight " << wit.value.to_string()
                      << ", differing from earlier rows\n";
            break;
    }
    return kExitNotOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& order_text, bool exhaustive, std::uint64_t budget_steps) {
    T0Matrix a = load_matrix(path_a), b = load_matrix(path_b);
    if (a.k() != b.k() || a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols()) {
        std::cerr << "dimension mismatch: inputs must share k, m, n\n";
        return kExitNotOk;
    }
    if (exhaustive) {
        OracleBudget budget;
        budget.max_dim = 64;  // the step ceiling is the effective guard
        budget.max_group_order = 1 << 20;
        budget.max_steps = budget_steps;
        try {
            auto cert = brute_force_equivalent(a, b, budget);
            if (cert) {
                std::cout << "EQUIVALENT\n" << format_certificate(*cert);
                return 0;
            }
            std::cout << "NOT EQUIVALENT\n";
            return kExitNotOk;
        } catch (const BudgetExceeded& e) {
            std::cerr << "budget exceeded: " << e.what() << "\n";
            return kExitBudget;
        }
    }
    OrderSpec order = make_order(a.k(), order_text);
    StandardizeResult ra = standardize(a, order), rb = standardize(b, order);
    if (ra.standard == rb.standard) {
        std::cout << "same standard form (equivalent; certificates compose)\n";
        return 0;
    }
    std::cout << "different standard forms - equivalence undetermined\n";
    return kExitNotOk;
}

int cmd_dedup(std::vector<std::string> paths, const std::string& order_text) {
    if (paths.size() == 1 && std::filesystem::is_directory(paths[0])) {
        std::vector<std::string> found;
        for (const auto& entry : std::filesystem::directory_iterator(paths[0]))
            if (entry.is_regular_file() && entry.path().extension() == ".t0m")
                found.push_back(entry.path().string());
        std::sort(found.begin(), found.end());
        paths = std::move(found);
    }
    if (paths.empty()) {
        std::cerr << "no input files\n";
        return kExitNotOk;
    }

    std::vector<T0Matrix> inputs;
    for (const auto& p : paths) inputs.push_back(load_matrix(p));
    for (std::size_t i = 1; i < inputs.size(); ++i)
        if (inputs[i].k() != inputs[0].k() || inputs[i].num_rows() != inputs[0].num_rows() ||
            inputs[i].num_cols() != inputs[0].num_cols()) {
            std::cerr << "mixed shapes: " << paths[i] << " does not match " << paths[0] << "\n";
            return kExitNotOk;
        }

    OrderSpec order = make_order(inputs[0].k(), order_text);
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < inputs.size(); ++i)
        groups[format_matrix(standardize(inputs[i], order).standard)].push_back(i);

    // Groups in order of first appearance.
    std::vector<const std::vector<std::size_t>*> ordered;
    for (const auto& [fp, members] : groups) ordered.push_back(&members);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* x, const auto* y) { return x->front() < y->front(); });
    for (std::size_t g = 0; g < ordered.size(); ++g) {
        std::cout << "group " << (g + 1) << ":";
        for (std::size_t i : *ordered[g]) std::cout << " " << paths[i];
        std::cout << "\n";
    }
    std::cout << "note: equal fingerprints prove equivalence; distinct fingerprints do not "
                 "prove inequivalence\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard forms of matrices over roots of unity and zero"};
    app.require_subcommand(1);

    std::string path, path_b, order_text, out_path, cert_path, trace_prefix;
    bool legacy = false, exhaustive = false;
    std::uint64_t budget_steps = OracleBudget{}.max_steps;
    std::vector<std::string> paths;

    auto* verify = app.add_subcommand("verify", "check the standard form conditions");
    verify->add_option("file", path, "matrix file")->required();
    verify->add_option("--order", order_text, "unit exponents in increasing order");

    auto* standardize_cmd =
        app.add_subcommand("standardize", "reduce to standard form with a certificate");
    standardize_cmd->add_option("file", path, "matrix file")->required();
    standardize_cmd->add_option("--order", order_text, "unit exponents in increasing order");
    standardize_cmd->add_option("--out", out_path, "output matrix file (default: stdout)");
    standardize_cmd->add_option("--cert", cert_path, "certificate output file");
    auto* legacy_flag = standardize_cmd->add_flag(
        "--legacy", legacy, "run the four-step normalization instead (may fail S1-S4)");
    standardize_cmd->add_option("--trace", trace_prefix, "write <prefix>.step1..4.t0m")
        ->needs(legacy_flag);

    auto* gram = app.add_subcommand("gram", "exact unit-weighing check W W* = w I");
    gram->add_option("file", path, "matrix file")->required();

    auto* compare_cmd = app.add_subcommand("compare", "equivalence screen for two matrices");
    compare_cmd->add_option("fileA", path, "first matrix file")->required();
    compare_cmd->add_option("fileB", path_b, "second matrix file")->required();
    compare_cmd->add_option("--order", order_text, "unit exponents in increasing order");
    compare_cmd->add_flag("--exhaustive", exhaustive, "definitive monomial-pair search");
    compare_cmd->add_option("--budget", budget_steps, "search step ceiling");

    auto* dedup = app.add_subcommand("dedup", "group files by standardize fingerprint");
    dedup->add_option("paths", paths, "matrix files, or one directory of .t0m files")
        ->required();
    dedup->add_option("--order", order_text, "unit exponents in increasing order");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(path, order_text);
        if (*standardize_cmd)
            return cmd_standardize(path, order_text, out_path, cert_path, legacy, trace_prefix);
        if (*gram) return cmd_gram(path);
        if (*compare_cmd) return cmd_compare(path, path_b, order_text, exhaustive, budget_steps);
        if (*dedup) return cmd_dedup(paths, order_text);
    } catch (const MalformedOrder& e) {
        std::cerr << "invalid --order: " << e.what() << "\n";
        return kExitParse;
    } catch (const InternalCheckFailure& e) {
        std::cerr << "internal self-check failed: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotOk;
    }
    return 0;
}
