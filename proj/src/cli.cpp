#include "fibtel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibtel/lucas.hpp"
#include "fibtel/oracle.hpp"

namespace fibtel::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Command::Format parse_format(const std::string& name) {
    if (name == "text") {
        return Command::Format::text;
    }
    if (name == "json") {
        return Command::Format::json;
    }
    if (name == "csv") {
        return Command::Format::csv;
    }
    throw UsageError("unknown format '" + name + "'");
}

struct SeriesArgs {
    std::string name;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> a;
    std::optional<std::uint64_t> p;
};

void add_series_options(CLI::App* sub, SeriesArgs& args) {
    sub->add_option("series", args.name, "series name (t1..t9, r2)")->required();
    sub->add_option("--m", args.m, "parameter m");
    sub->add_option("--a", args.a, "parameter a (t2 exponent)");
    sub->add_option("--p", args.p, "parameter p");
}

std::map<std::string, std::uint64_t> parse_grid_overrides(const std::string& text) {
    std::map<std::string, std::uint64_t> grid;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw UsageError("malformed --grid entry '" + item + "' (expected key=value)");
        }
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (value.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("malformed --grid value '" + value + "'");
        }
        grid[key] = std::stoull(value);
    }
    return grid;
}

// Grid override keys accepted per identity selector.
const std::map<std::string, std::vector<std::string>>& grid_keys() {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"1", {"n"}},          {"2", {"m", "cap"}},      {"3", {"q", "m"}},
        {"4", {"m", "cap"}},   {"5", {"p", "m", "cap"}}, {"6", {"p", "m", "cap"}},
        {"7", {"p", "cap"}},   {"8", {"p", "cap"}},      {"ratio", {"l", "m"}},
    };
    return keys;
}

FuzzGrid apply_grid(const std::string& lemma, const std::map<std::string, std::uint64_t>& overrides) {
    FuzzGrid grid;
    const auto& allowed = grid_keys().at(lemma);
    for (const auto& [key, value] : overrides) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw UsageError("grid key '" + key + "' not valid for lemma " + lemma);
        }
        if (key == "cap") {
            grid.index_cap = value;
        } else if (lemma == "1") {
            grid.lemma1_n = value;
        } else if (lemma == "2") {
            grid.lemma2_m = value;
        } else if (lemma == "3") {
            (key == "q" ? grid.lemma3_q : grid.lemma3_m) = value;
        } else if (lemma == "4") {
            grid.lemma4_m = value;
        } else if (lemma == "5") {
            (key == "p" ? grid.lemma5_p : grid.lemma5_m) = value;
        } else if (lemma == "6") {
            (key == "p" ? grid.lemma6_p : grid.lemma6_m) = value;
        } else if (lemma == "7") {
            grid.lemma7_p = value;
        } else if (lemma == "8") {
            grid.lemma8_p = value;
        } else {
            (key == "l" ? grid.ratio_l : grid.ratio_m) = value;
        }
    }
    return grid;
}

// The sweeps only ever touch indices up to the grid cap, so make sure the
// global guard does not preempt an explicitly requested larger cap.
void accommodate_cap(std::uint64_t cap) {
    if (cap > index_bound()) {
        set_index_bound(cap);
    }
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    quoted += '"';
    return quoted;
}

std::string decimal(const BigRat& value, unsigned digits) { return value.to_decimal(digits); }

// ---- per-verb execution + rendering ----------------------------------

Rendered render_eval(const Command& cmd) {
    const SeriesSpec& spec = *cmd.series;
    const std::uint64_t n0 = spec.start_index();
    const QuadRat target = closed_form(spec);
    struct Row {
        std::uint64_t n;
        std::string term, partial, gap;
    };
    std::vector<Row> rows;
    BigRat partial(0);
    for (std::uint64_t i = 0; i < cmd.terms; ++i) {
        const std::uint64_t n = n0 + i;
        const BigRat term = direct_term(spec, n);
        partial += term;
        const QuadRat remaining = target - QuadRat(partial);
        rows.push_back({n, decimal(term, cmd.digits), decimal(partial, cmd.digits),
                        remaining.to_decimal(cmd.digits)});
    }
    std::ostringstream out;
    switch (cmd.format) {
        case Command::Format::text:
            out << "series " << spec.name() << "  n0=" << n0 << "\n";
            out << "target " << target.to_string() << " = " << target.to_decimal(cmd.digits)
                << "\n";
            out << "n\tterm\tpartial\tgap\n";
            for (const Row& row : rows) {
                out << row.n << "\t" << row.term << "\t" << row.partial << "\t" << row.gap << "\n";
            }
            break;
        case Command::Format::csv:
            out << "n,term,partial,gap\n";
            for (const Row& row : rows) {
                out << row.n << "," << csv_field(row.term) << "," << csv_field(row.partial) << ","
                    << csv_field(row.gap) << "\n";
            }
            break;
        case Command::Format::json: {
            ordered_json j;
            j["spec"] = spec.name();
            j["n0"] = n0;
            j["rows"] = ordered_json::array();
            for (const Row& row : rows) {
                j["rows"].push_back({{"n", row.n}, {"term", row.term}, {"partial", row.partial}});
            }
            j["target"] = {{"exact", target.to_string()}, {"decimal", target.to_decimal(cmd.digits)}};
            out << j.dump(2) << "\n";
            break;
        }
    }
    return {out.str(), kExitOk};
}

Rendered render_certify(const Command& cmd) {
    const SeriesSpec& spec = *cmd.series;
    ConvergenceReport report = certify(spec, cmd.digits);
    if (cmd.inject_bad_target) {
        // Test hook: swap in a wrong closed form and let the genuine gap
        // comparison reject it.
        report.target = report.target + QuadRat(1);
        report.gap = report.target - QuadRat(report.partial);
        report.decimal_digits_agreeing = 0;
        const QuadRat bound{BigRat(report.gap_bound)};
        if ((bound - report.gap).sign() < 0 || (bound + report.gap).sign() < 0) {
            report.certified = false;
            report.diagnostic = "exact gap exceeds the tail bound";
        }
    }
    std::ostringstream out;
    const std::string partial_text = decimal(report.partial, cmd.digits);
    const std::string target_text = report.target.to_decimal(cmd.digits);
    const std::string bound_text = decimal(report.gap_bound, cmd.digits);
    switch (cmd.format) {
        case Command::Format::text:
            out << "series " << spec.name() << "  n0=" << spec.start_index() << "\n"
                << "terms_used " << report.terms_used << "\n"
                << "partial " << partial_text << "\n"
                << "target " << report.target.to_string() << " = " << target_text << "\n"
                << "gap_bound " << bound_text << "\n"
                << "digits_agreeing " << report.decimal_digits_agreeing << "\n"
                << "certified " << (report.certified ? "true" : "false") << "\n";
            if (!report.diagnostic.empty()) {
                out << "diagnostic " << report.diagnostic << "\n";
            }
            break;
        case Command::Format::csv:
            out << "spec,terms_used,partial,target_exact,target,gap_bound,certified\n"
                << csv_field(spec.name()) << "," << report.terms_used << ","
                << csv_field(partial_text) << "," << csv_field(report.target.to_string()) << ","
                << csv_field(target_text) << "," << csv_field(bound_text) << ","
                << (report.certified ? "true" : "false") << "\n";
            break;
        case Command::Format::json: {
            ordered_json j;
            j["spec"] = spec.name();
            j["n0"] = spec.start_index();
            j["terms_used"] = report.terms_used;
            j["partial"] = partial_text;
            j["target"] = {{"exact", report.target.to_string()}, {"decimal", target_text}};
            j["gap_bound"] = bound_text;
            j["certified"] = report.certified;
            j["digits_agreeing"] = report.decimal_digits_agreeing;
            if (!report.diagnostic.empty()) {
                j["diagnostic"] = report.diagnostic;
            }
            out << j.dump(2) << "\n";
            break;
        }
    }
    return {out.str(), report.certified ? kExitOk : kExitFailed};
}

std::string fuzz_line(const FuzzReport& report) {
    std::ostringstream out;
    out << report.identity << " " << report.grid << ": "
        << (report.cases - report.failures.size()) << "/" << report.cases << " ok";
    if (!report.pass()) {
        const FuzzFailure& first = report.failures.front();
        out << ", " << report.failures.size() << " failed\n"
            << "first failure: " << first.params << ": lhs=" << first.lhs
            << " rhs=" << first.rhs;
    }
    out << "\n";
    return out.str();
}

ordered_json fuzz_json(const FuzzReport& report) {
    ordered_json j;
    j["identity"] = report.identity;
    j["grid"] = report.grid;
    j["cases"] = report.cases;
    j["failures"] = ordered_json::array();
    for (const FuzzFailure& f : report.failures) {
        j["failures"].push_back({{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return j;
}

Rendered render_reports(const Command& cmd, const std::vector<FuzzReport>& reports) {
    bool all_pass = true;
    std::ostringstream out;
    ordered_json j = ordered_json::array();
    for (const FuzzReport& report : reports) {
        all_pass = all_pass && report.pass();
        if (cmd.format == Command::Format::json) {
            j.push_back(fuzz_json(report));
        } else {
            out << fuzz_line(report);
        }
    }
    if (cmd.format == Command::Format::json) {
        out << j.dump(2) << "\n";
    }
    return {out.str(), all_pass ? kExitOk : kExitFailed};
}

Rendered render_verify(const Command& cmd) {
    const FuzzGrid grid = apply_grid(cmd.lemma, cmd.grid);
    accommodate_cap(grid.index_cap);
    const FuzzReport report =
        cmd.lemma == "ratio" ? fuzz_ratio(grid) : fuzz_lemma(std::stoi(cmd.lemma), grid);
    return render_reports(cmd, {report});
}

Rendered render_fuzz(const Command& cmd) {
    FuzzGrid grid;
    if (cmd.fuzz_bound) {
        grid.index_cap = *cmd.fuzz_bound;
    }
    accommodate_cap(grid.index_cap);
    if (cmd.lemma.empty()) {
        return render_reports(cmd, fuzz_all(grid));
    }
    const FuzzReport report =
        cmd.lemma == "ratio" ? fuzz_ratio(grid) : fuzz_lemma(std::stoi(cmd.lemma), grid);
    return render_reports(cmd, {report});
}

Rendered render_crosscheck(const Command& cmd) {
    const bool ok = decimal_crosscheck(*cmd.series, cmd.digits);
    std::ostringstream out;
    out << "crosscheck " << cmd.series->name() << " digits=" << cmd.digits << ": "
        << (ok ? "ok" : "MISMATCH") << "\n";
    return {out.str(), ok ? kExitOk : kExitFailed};
}

Rendered render_closed_form(const Command& cmd) {
    const QuadRat target = closed_form(*cmd.series);
    std::ostringstream out;
    if (cmd.format == Command::Format::json) {
        ordered_json j;
        j["spec"] = cmd.series->name();
        j["exact"] = target.to_string();
        j["decimal"] = target.to_decimal(cmd.digits);
        out << j.dump(2) << "\n";
    } else {
        out << target.to_string() << " = " << target.to_decimal(cmd.digits) << "\n";
    }
    return {out.str(), kExitOk};
}

Rendered render_fib_lucas(const Command& cmd) {
    const LucasPair pair = fib_lucas(cmd.index);
    return {(cmd.verb == Command::Verb::fib ? pair.fib : pair.lucas).str() + "\n", kExitOk};
}

Rendered render_list(const Command& cmd) {
    struct Entry {
        const char* name;
        const char* params;
        const char* summand;
        const char* target;
    };
    static const Entry entries[] = {
        {"t1", "-", "1/F(2^n), n>=0", "(7-sqrt(5))/2"},
        {"t2", "m>=1, a>=1", "(L(2^(n+1)m)^a - 1)/F(2^(n+2)m)^a, n>=0", "1/(F(m)^a L(m)^a)"},
        {"t3", "m>=1", "[(-1)^m - 1 + S3(n)]/F((2m+1)^(n+1)), n>=0", "1"},
        {"t4", "m>=1", "S4(n)/L((2m+1)^(n+1)), n>=0", "1"},
        {"t5", "m>=1", "F(2^(n+2))[(-1)^m - 1 + S5(n)]/F((2m+1)2^(n+2)), n>=0",
         "1/(F(2m+1)L(2m+1))"},
        {"t6", "p even >=2, m>=1", "[S6(n) - 1]/F(m p^(n+1)), n>=1", "1/F(mp)"},
        {"t7", "p odd >=3, m even >=2", "S7(n)/F(m p^(n+1)), n>=1", "1/F(mp)"},
        {"t8", "p odd >=3", "(-1)^(n(p-1)/2) S8(n)/F(p^(n+1)), n>=1", "1/F(p)"},
        {"t9", "p even >=2", "[S9(n)^2 - 1]/(L(p^(n+1)) - 2), n>=2", "1/(L(p^2)-2)"},
        {"r2", "-", "L(2^(n+1))/F(2^(n+2)), n>=0", "(5-sqrt(5))/2"},
    };
    std::ostringstream out;
    if (cmd.format == Command::Format::json) {
        ordered_json j = ordered_json::array();
        for (const Entry& e : entries) {
            j.push_back({{"name", e.name},
                         {"params", e.params},
                         {"summand", e.summand},
                         {"target", e.target}});
        }
        out << j.dump(2) << "\n";
    } else {
        for (const Entry& e : entries) {
            out << e.name << "\t" << e.params << "\t" << e.summand << "\t= " << e.target << "\n";
        }
        out << "\nS3(n) = sum_{k<m} (-1)^k L(2(m-k)(2m+1)^n)    "
               "S4(n) = sum_{k<m} L(2(m-k)(2m+1)^n)\n"
               "S5(n) = sum_{k<m} (-1)^k L((m-k)2^(n+2))        "
               "S6(n) = sum_{k=1}^{p/2} L((2k-1)m p^n)\n"
               "S7(n) = sum_{k=1}^{(p-1)/2} L(2km p^n)          "
               "S8(n) = sum_{k=1}^{(p-1)/2} (-1)^k L(2k p^n)\n"
               "S9(n) = sum_{k=1}^{p/2} L((2k-1)p^n/2)\n";
    }
    return {out.str(), kExitOk};
}

Rendered render_bench(const Command&) {
    using clock = std::chrono::steady_clock;
    const auto ms = [](clock::duration d) {
        return std::chrono::duration<double, std::milli>(d).count();
    };
    std::ostringstream out;
    out << "fib: fast doubling vs naive iteration\n";
    for (std::uint64_t n : {std::uint64_t{1000}, std::uint64_t{10000}, std::uint64_t{100000}}) {
        clear_lucas_cache();
        const auto t0 = clock::now();
        const BigInt doubled = fib(n);
        const auto t1 = clock::now();
        BigInt a = 0;
        BigInt b = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            BigInt next = a + b;
            a = std::move(b);
            b = std::move(next);
        }
        const auto t2 = clock::now();
        out << "  n=" << n << "  doubling " << ms(t1 - t0) << " ms  naive " << ms(t2 - t1)
            << " ms  " << (a == doubled ? "(agree)" : "(DISAGREE)") << "\n";
    }
    out << "partial_sum: direct vs telescoped at N=12\n";
    const std::uint64_t saved_bound = index_bound();
    set_index_bound(std::max<std::uint64_t>(saved_bound, 10'000'000));
    for (const SeriesSpec& spec :
         {make_series(SeriesId::t1), make_series(SeriesId::t3, std::uint64_t{1}),
          make_series(SeriesId::t9, {}, {}, std::uint64_t{2})}) {
        const auto t0 = clock::now();
        const BigRat direct = partial_sum(spec, 12, SumMode::direct);
        const auto t1 = clock::now();
        const BigRat telescoped = partial_sum(spec, 12, SumMode::telescoped);
        const auto t2 = clock::now();
        out << "  " << spec.name() << "  direct " << ms(t1 - t0) << " ms  telescoped "
            << ms(t2 - t1) << " ms  " << (direct == telescoped ? "(agree)" : "(DISAGREE)")
            << "\n";
    }
    set_index_bound(saved_bound);
    return {out.str(), kExitOk};
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
    Command cmd;
    SeriesArgs series;
    std::string format = "text";
    std::string grid_text;

    CLI::App app{"exact Fibonacci/Lucas telescoping-series toolkit"};
    app.name("fibtel");
    app.require_subcommand(1);

    CLI::App* eval = app.add_subcommand("eval", "tabulate terms, partial sums and gaps");
    add_series_options(eval, series);
    eval->add_option("--terms,-n", cmd.terms, "number of terms");
    eval->add_option("--digits,-d", cmd.digits, "decimal places")->check(CLI::PositiveNumber);
    eval->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* certify_cmd = app.add_subcommand("certify", "sum until the tail bound is below 10^-digits and verify the gap");
    add_series_options(certify_cmd, series);
    certify_cmd->add_option("--digits,-d", cmd.digits)->check(CLI::PositiveNumber);
    certify_cmd->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json", "csv"}));
    certify_cmd->add_flag("--inject-bad-target", cmd.inject_bad_target)->group("");

    CLI::App* verify = app.add_subcommand("verify", "sweep one identity over a parameter grid");
    verify->add_option("--lemma", cmd.lemma, "identity: 1..8 or ratio")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "8", "ratio"}));
    verify->add_option("--grid", grid_text, "grid bounds, e.g. q=50,m=25");
    verify->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* fuzz = app.add_subcommand("fuzz", "sweep all identities (or one) over default grids");
    fuzz->add_option("--lemma", cmd.lemma)
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "8", "ratio"}));
    fuzz->add_option("--bound", cmd.fuzz_bound, "index cap for the sweeps");
    fuzz->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* crosscheck = app.add_subcommand("crosscheck", "decimal-level cross-check of a certification");
    add_series_options(crosscheck, series);
    crosscheck->add_option("--digits,-d", cmd.digits)->check(CLI::PositiveNumber);

    CLI::App* closed = app.add_subcommand("closed-form", "print the exact value of a series");
    add_series_options(closed, series);
    closed->add_option("--digits,-d", cmd.digits)->check(CLI::PositiveNumber);
    closed->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* fib_cmd = app.add_subcommand("fib", "print F(n)");
    fib_cmd->add_option("n", cmd.index, "index")->required();
    CLI::App* lucas_cmd = app.add_subcommand("lucas", "print L(n)");
    lucas_cmd->add_option("n", cmd.index, "index")->required();

    app.add_subcommand("bench", "time fast doubling vs naive and direct vs telescoped sums");
    app.add_subcommand("list", "enumerate the series families")
        ->add_option("--format,-f", format)
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const auto chosen = app.get_subcommands().front();
    const std::string verb = chosen->get_name();
    if (verb == "eval") {
        cmd.verb = Command::Verb::eval;
    } else if (verb == "certify") {
        cmd.verb = Command::Verb::certify;
    } else if (verb == "verify") {
        cmd.verb = Command::Verb::verify;
    } else if (verb == "fuzz") {
        cmd.verb = Command::Verb::fuzz;
    } else if (verb == "crosscheck") {
        cmd.verb = Command::Verb::crosscheck;
    } else if (verb == "closed-form") {
        cmd.verb = Command::Verb::closed_form;
    } else if (verb == "fib") {
        cmd.verb = Command::Verb::fib;
    } else if (verb == "lucas") {
        cmd.verb = Command::Verb::lucas;
    } else if (verb == "bench") {
        cmd.verb = Command::Verb::bench;
    } else {
        cmd.verb = Command::Verb::list;
    }

    cmd.format = parse_format(format);
    if (!grid_text.empty()) {
        cmd.grid = parse_grid_overrides(grid_text);
        apply_grid(cmd.lemma, cmd.grid);  // validate keys up front
    }
    if (!series.name.empty()) {
        try {
            cmd.series = make_series(series.name, series.m, series.a, series.p);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return cmd;
}

Rendered render_report(const Command& cmd) {
    switch (cmd.verb) {
        case Command::Verb::eval:
            return render_eval(cmd);
        case Command::Verb::certify:
            return render_certify(cmd);
        case Command::Verb::verify:
            return render_verify(cmd);
        case Command::Verb::fuzz:
            return render_fuzz(cmd);
        case Command::Verb::crosscheck:
            return render_crosscheck(cmd);
        case Command::Verb::closed_form:
            return render_closed_form(cmd);
        case Command::Verb::fib:
        case Command::Verb::lucas:
            return render_fib_lucas(cmd);
        case Command::Verb::bench:
            return render_bench(cmd);
        case Command::Verb::list:
            return render_list(cmd);
    }
    throw std::logic_error("render_report: unreachable");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (const char* env = std::getenv("FIBTEL_INDEX_BOUND")) {
            const std::string text(env);
            if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
                throw UsageError("FIBTEL_INDEX_BOUND must be a nonnegative integer");
            }
            set_index_bound(std::stoull(text));
        }
        const Command cmd = parse_command(args);
        const Rendered rendered = render_report(cmd);
        out << rendered.text;
        return rendered.exit_code;
    } catch (const HelpRequested& help) {
        out << help.what();
        return kExitOk;
    } catch (const UsageError& usage) {
        err << "usage error: " << usage.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

}  // namespace fibtel::cli
