#include "isofam/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "isofam/error.hpp"
#include "isofam/export.hpp"
#include "isofam/lemmas.hpp"
#include "isofam/phimap.hpp"
#include "isofam/symfam.hpp"
#include "isofam/zbasis.hpp"

namespace isofam {

namespace {

constexpr int kHardMaxD = 12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
    }
    return "?";
}

int require_d(const RunConfig& config) {
    if (!config.d) throw UsageError("--d is required for this command");
    return *config.d;
}

void require_format(const RunConfig& config, std::initializer_list<OutputFormat> allowed) {
    if (std::find(allowed.begin(), allowed.end(), config.format) == allowed.end())
        throw UsageError(std::string("--format ") + format_name(config.format) + " is not supported by this command");
}

std::string sidecar_path(const std::string& path) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? path.substr(0, dot) : path) + ".json";
}

std::string text_join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

struct Emitted {
    std::string body;
    bool passed = true;
};

Emitted do_enumerate(const RunConfig& config) {
    const auto& family = enumerate_family(require_d(config));
    if (config.format == OutputFormat::Json) return {family_json(family).dump(2) + "\n"};
    std::ostringstream out;
    if (config.format == OutputFormat::Csv) {
        out << "index,dim,basis,alpha\n";
        for (std::size_t k = 0; k < family.size(); ++k) {
            std::vector<std::string> alpha;
            for (const auto& I : family[k].alpha()) alpha.push_back(I.to_string());
            out << k << ',' << family[k].dim() << ',' << text_join(basis_bitstrings(family[k]), ";") << ",\""
                << text_join(alpha, ";") << "\"\n";
        }
        return {out.str()};
    }
    out << "d=" << family.d() << " count=" << family.size() << '\n';
    for (const auto& X : family) {
        std::vector<std::string> alpha;
        for (const auto& I : X.alpha()) alpha.push_back(I.to_string());
        out << "  {" << text_join(basis_bitstrings(X), ", ") << "}  alpha=" << text_join(alpha, " ") << '\n';
    }
    return {out.str()};
}

Emitted do_phi(const RunConfig& config) {
    require_format(config, {OutputFormat::Json, OutputFormat::Text});
    const int d = require_d(config);
    if (config.format == OutputFormat::Json) return {phi_json(d).dump(2) + "\n"};
    const auto& family = enumerate_family(d);
    const auto& table = phi_table(d);
    std::ostringstream out;
    out << "d=" << d << " members=" << family.size() << " tilde_v_size=" << tilde_v(d).size()
        << " injective=" << (table.injective() ? "yes" : "no") << '\n';
    for (std::size_t k = 0; k < family.size(); ++k)
        out << "  {" << text_join(basis_bitstrings(family[k]), ", ") << "} -> " << table.images()[k].to_bitstring()
            << '\n';
    return {out.str(), table.injective() && family.size() == tilde_v(d).size()};
}

Emitted do_basis(const RunConfig& config) {
    const auto& cert = basis_matrix(require_d(config), config.d_max);
    if (config.format == OutputFormat::Json) return {certificate_json(cert).dump(2) + "\n"};
    if (config.format == OutputFormat::Csv) return {certificate_csv(cert)};
    std::ostringstream out;
    out << "d=" << cert.d << " size=" << cert.matrix.rows() << "x" << cert.matrix.cols()
        << " determinant=" << cert.determinant.get_str() << " unimodular=" << (cert.unimodular() ? "yes" : "no")
        << '\n';
    return {out.str(), cert.unimodular()};
}

Emitted do_kostka(const RunConfig& config) {
    require_format(config, {OutputFormat::Json, OutputFormat::Text});
    std::vector<int> degrees = config.m ? std::vector<int>{*config.m} : std::vector<int>{3, 4, 5};
    for (int m : degrees)
        if (m < 1 || m > 7) throw UsageError("--m must lie in [1,7]");
    if (config.format == OutputFormat::Json) {
        Json all = Json::array();
        for (int m : degrees) all.push_back(kostka_json(m));
        return {(config.m ? all.front() : all).dump(2) + "\n"};
    }
    std::ostringstream out;
    for (int m : degrees) {
        const auto all = partitions(m);
        out << "m=" << m << " Kostka numbers K(shape, content)\n";
        for (const auto& lambda : all) {
            out << "  " << lambda.to_string() << ':';
            for (const auto& mu : all) out << ' ' << kostka(lambda, mu);
            out << '\n';
        }
        out << "  cx rows:\n";
        for (const auto& row : cx_multiplicities(m)) {
            out << "    " << row.rho.to_string() << " <-> " << row.matched.to_string() << ':';
            for (long v : row.multiplicities) out << ' ' << v;
            out << '\n';
        }
    }
    return {out.str()};
}

Json table_bundle_json(const FamilyTable& table, const TableReport& report) {
    Json j = table_json(table);
    j["matrix"] = table.matrix;
    j["verification"] = {{"ok", report.ok},
                         {"determinant", report.determinant.get_str()},
                         {"violations", report.violations}};
    return j;
}

Emitted do_exceptional(const RunConfig& config) {
    if (!config.weyl_type) throw UsageError("--type is required for exceptional");
    const WeylType type = *config.weyl_type;
    std::vector<int> sizes = family_sizes(type);
    if (config.n_c) {
        if (std::find(sizes.begin(), sizes.end(), *config.n_c) == sizes.end())
            throw UsageError("type " + to_string(type) + " has no family of size " + std::to_string(*config.n_c));
        sizes = {*config.n_c};
    }
    const bool has_cx = type == WeylType::G2 || type == WeylType::F4 || type == WeylType::E8;
    const int cx_size = type == WeylType::G2 ? 4 : type == WeylType::F4 ? 11 : 17;

    Emitted emitted;
    if (config.format == OutputFormat::Csv) {
        if (sizes.size() != 1) throw UsageError("--format csv needs --nc to select one table");
        const FamilyTable table = family_table(type, sizes.front());
        const auto report = verify_table(table);
        emitted.passed = report.ok;
        emitted.body = table_csv(table);
        if (config.output_path) {
            std::ofstream sidecar(sidecar_path(*config.output_path));
            sidecar << table_bundle_json(table, report).dump(2) << '\n';
        }
        return emitted;
    }

    Json tables = Json::array();
    std::ostringstream text;
    for (int n : sizes) {
        const FamilyTable table = family_table(type, n);
        const auto report = verify_table(table);
        emitted.passed = emitted.passed && report.ok;
        tables.push_back(table_bundle_json(table, report));
        text << to_string(type) << " family of size " << n << '\n';
        text << "  columns: " << text_join(table.column_labels, " ") << '\n';
        for (std::size_t r = 0; r < table.matrix.size(); ++r) {
            text << "  r" << r + 1 << (r + 1 < 10 ? " " : "") << ' ';
            for (std::size_t c = 0; c < table.matrix[r].size(); ++c) {
                const bool marked = table.marks[r] == static_cast<int>(c);
                text << (marked ? "[" : " ") << table.matrix[r][c] << (marked ? "]" : " ");
            }
            text << "  " << to_string(table.row_class[r]) << '\n';
        }
        text << "  verification: " << (report.ok ? "PASS" : "FAIL") << " (determinant "
             << report.determinant.get_str() << ")\n";
        for (const auto& v : report.violations) text << "    " << v << '\n';
    }

    Json cx = nullptr;
    if (has_cx && std::find(sizes.begin(), sizes.end(), cx_size) != sizes.end()) {
        const auto check = cross_check_cx(type, cx_size);
        const auto printed = check_printed_sums(type);
        emitted.passed = emitted.passed && check.ok && printed.ok;
        Json columns = Json::object();
        for (const auto& [p, label] : check.column_for) columns[p.to_string()] = label;
        Json rows = Json::object();
        for (const auto& [r, p] : check.row_for) rows["r" + std::to_string(r + 1)] = p.to_string();
        cx = {{"ok", check.ok},
              {"m", check.m},
              {"consistent_correspondences", check.consistent_correspondences},
              {"column_for_partition", columns},
              {"row_for_partition", rows},
              {"printed_sums_ok", printed.ok},
              {"printed_sum_mismatches", printed.mismatches}};
        text << "cx cross-check (S_" << check.m << "): " << (check.ok ? "PASS" : "FAIL") << ", " << check.message
             << '\n';
        for (const auto& [p, label] : check.column_for) text << "  " << p.to_string() << " -> " << label << '\n';
        for (const auto& [r, p] : check.row_for) text << "  r" << r + 1 << " = E~_" << p.to_string() << '\n';
        text << "printed direct sums: " << (printed.ok ? "PASS" : "FAIL") << '\n';
        for (const auto& mismatch : printed.mismatches) text << "  " << mismatch << '\n';
    }

    if (config.format == OutputFormat::Json)
        emitted.body = Json{{"type", to_string(type)}, {"tables", tables}, {"cx_cross_check", cx}}.dump(2) + "\n";
    else
        emitted.body = text.str();
    return emitted;
}

SuiteOptions suite_options(const RunConfig& config) {
    SuiteOptions options;
    options.d_max = config.d_max;
    options.roundtrip_max_d = std::min(config.d_max, 4);
    options.induction_max_d = std::min(config.d_max, 3);
    options.workers = config.workers;
    return options;
}

Emitted do_verify(const RunConfig& config) {
    require_format(config, {OutputFormat::Json, OutputFormat::Text});
    const auto results = run_suite(suite_options(config));
    const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    if (config.format == OutputFormat::Json) return {checks_json(results).dump(2) + "\n", passed};
    std::ostringstream out;
    std::size_t failures = 0;
    for (const auto& r : results) {
        out << r.line() << '\n';
        for (const auto& s : r.samples) out << "    " << s << '\n';
        failures += r.passed() ? 0 : 1;
    }
    out << (passed ? "ALL CHECKS PASSED" : std::to_string(failures) + " CHECK(S) FAILED") << " (" << results.size()
        << " checks, d_max=" << config.d_max << ")\n";
    return {out.str(), passed};
}

Emitted do_report(const RunConfig& config) {
    require_format(config, {OutputFormat::Json, OutputFormat::Text});
    Json dims = Json::array();
    std::ostringstream out;
    bool passed = true;
    out << "d  members  tilde_v  phi_injective  determinant\n";
    for (int d = 0; d <= config.d_max; ++d) {
        const auto& family = enumerate_family(d);
        const auto& table = phi_table(d);
        const auto& cert = basis_matrix(d, config.d_max);
        passed = passed && table.injective() && cert.unimodular();
        dims.push_back({{"d", d},
                        {"members", family.size()},
                        {"tilde_v_size", tilde_v(d).size()},
                        {"phi_injective", table.injective()},
                        {"determinant", cert.determinant.get_str()}});
        out << d << "  " << family.size() << "  " << tilde_v(d).size() << "  " << (table.injective() ? "yes" : "no")
            << "  " << cert.determinant.get_str() << '\n';
    }
    Json tables = Json::array();
    out << "exceptional families:\n";
    for (const auto& [type, n] : all_tables()) {
        const auto report = verify_table(family_table(type, n));
        passed = passed && report.ok;
        tables.push_back({{"type", to_string(type)}, {"n_c", n}, {"ok", report.ok}});
        out << "  " << to_string(type) << " n_c=" << n << ": " << (report.ok ? "PASS" : "FAIL") << '\n';
    }
    if (config.format == OutputFormat::Json)
        return {Json{{"dimensions", dims}, {"exceptional", tables}, {"passed", passed}}.dump(2) + "\n", passed};
    return {out.str(), passed};
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.d_max < 0 || config.d_max > kHardMaxD)
            throw UsageError("--d-max must lie in [0," + std::to_string(kHardMaxD) + "]");
        if (config.d && (*config.d < 0 || *config.d > config.d_max))
            throw UsageError("--d must lie in [0," + std::to_string(config.d_max) + "]");

        Emitted emitted;
        switch (config.command) {
        case Command::Enumerate: emitted = do_enumerate(config); break;
        case Command::Phi: emitted = do_phi(config); break;
        case Command::Verify: emitted = do_verify(config); break;
        case Command::Basis: emitted = do_basis(config); break;
        case Command::Kostka: emitted = do_kostka(config); break;
        case Command::Exceptional: emitted = do_exceptional(config); break;
        case Command::Report: emitted = do_report(config); break;
        }
        if (config.output_path) {
            std::ofstream file(*config.output_path);
            if (!file) {
                err << "error: cannot open " << *config.output_path << '\n';
                return kExitCheckFailed;
            }
            file << emitted.body;
        } else {
            out << emitted.body;
        }
        return emitted.passed ? kExitOk : kExitCheckFailed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

namespace {

unsigned workers_from_env() {
    if (const char* value = std::getenv(kWorkersEnv)) {
        char* end = nullptr;
        const long n = std::strtol(value, &end, 10);
        if (end != value && *end == '\0' && n >= 1) return static_cast<unsigned>(std::min(n, 256L));
    }
    return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exhaustive checks for isotropic families over F2 and exceptional family matrices", "isofam"};
    app.require_subcommand(1);

    RunConfig config;
    config.workers = workers_from_env();
    int d = -1;
    std::string type_name;
    int n_c = 0;
    int m = 0;
    std::string format = "text";
    std::string output;

    const std::map<std::string, Command> commands{
        {"enumerate", Command::Enumerate}, {"phi", Command::Phi},       {"verify", Command::Verify},
        {"basis", Command::Basis},         {"kostka", Command::Kostka}, {"exceptional", Command::Exceptional},
        {"report", Command::Report}};
    const std::map<std::string, std::string> help{
        {"enumerate", "List the family of isotropic subspaces for one d"},
        {"phi", "Evaluate the map Phi on every family member"},
        {"verify", "Run every structural check for d <= d-max plus the exceptional tables"},
        {"basis", "Build the characteristic-function matrix and its determinant"},
        {"kostka", "Kostka tables, the unique bijection and the cx rows for S_m"},
        {"exceptional", "Print and verify the family matrices of an exceptional type"},
        {"report", "Summary table of counts and determinants"}};

    for (const auto& [name, command] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--d", d, "Half-dimension d");
        sub->add_option("--d-max", config.d_max, "Upper bound on d (default 5)");
        sub->add_option("--type", type_name, "Weyl type: G2, F4, E6, E7, E8");
        sub->add_option("--nc", n_c, "Family size");
        sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", output, "Write to this file instead of stdout");
        if (command == Command::Kostka) sub->add_option("--m", m, "Symmetric group degree (default: 3, 4, 5)");
        sub->callback([&config, command = command] { config.command = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, x;
        const int code = app.exit(e, o, x);
        out << o.str();
        err << x.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (d >= 0) config.d = d;
    if (!type_name.empty()) {
        try {
            config.weyl_type = parse_weyl_type(type_name);
        } catch (const Error& e) {
            err << "usage error: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    if (n_c > 0) config.n_c = n_c;
    if (m > 0) config.m = m;
    config.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
    if (!output.empty()) config.output_path = output;
    return run(config, out, err);
}

} // namespace isofam
