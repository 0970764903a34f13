#include "fqmzv/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fqmzv/suites.hpp"

namespace fqmzv {

namespace {

struct FieldFlags {
    std::uint32_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t f = 1;
};

void add_field_flags(CLI::App* cmd, FieldFlags& ff) {
    cmd->add_option("--q", ff.q, "field order q = p^f (prime power)");
    cmd->add_option("--p", ff.p, "field characteristic (alternative to --q)");
    cmd->add_option("--f", ff.f, "extension degree, with --p")->default_val(1);
}

Field resolve_field(const FieldFlags& ff) {
    if (ff.q != 0 && ff.p != 0)
        throw CLI::ValidationError("field", "give either --q or --p/--f, not both");
    if (ff.q != 0) return FieldParams::of_order(ff.q);
    if (ff.p != 0) return FieldParams::make(ff.p, ff.f);
    throw CLI::ValidationError("field", "a field is required: --q N or --p P [--f F]");
}

std::vector<std::int64_t> parse_tuple(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("--tuple", "empty tuple entry");
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--tuple", "bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--tuple", "empty tuple");
    return out;
}

void print_record(std::ostream& out, const Json& record, const std::string& format) {
    if (format == "table") {
        for (auto it = record.begin(); it != record.end(); ++it) {
            out << it.key() << ": ";
            if (it.value().is_string())
                out << it.value().get<std::string>();
            else
                out << it.value().dump();
            out << "\n";
        }
    } else {
        out << record.dump() << "\n";
    }
}

int run_powersum(std::ostream& out, const FieldFlags& ff, std::size_t d, std::int64_t s,
                 const std::string& prime_text, const std::string& method,
                 const std::string& format, std::uint64_t enum_cap) {
    Field fp = resolve_field(ff);
    std::optional<PrimeModulus> v;
    if (!prime_text.empty()) v = PrimeModulus(Polynomial::parse(fp, prime_text));

    auto formula_route = [&]() {
        return v ? twisted_power_sum(fp, d, s, *v) : power_sum_formula(fp, d, s);
    };

    if (method == "direct") {
        print_record(out, power_sum_record(power_sum_enumerate(fp, d, s, v, enum_cap)), format);
        return 0;
    }
    if (method == "formula") {
        print_record(out, power_sum_record(formula_route()), format);
        return 0;
    }
    PowerSumResult direct = power_sum_enumerate(fp, d, s, v, enum_cap);
    PowerSumResult formula = formula_route();
    const bool agree = direct.value == formula.value;
    Json record = power_sum_record(formula);
    record["method"] = "both";
    record["agree"] = agree;
    if (!agree) record["value_enumeration"] = direct.value.to_string();
    print_record(out, record, format);
    return agree ? 0 : 1;
}

int run_zeta(std::ostream& out, const FieldFlags& ff, const std::string& tuple_text,
             const std::string& prime_text, const std::string& format) {
    Field fp = resolve_field(ff);
    MZVIndex idx(parse_tuple(tuple_text));
    ZeroReport report = prime_text.empty()
                            ? zeta_at_infinity(fp, idx)
                            : zeta_v_adic(fp, idx, PrimeModulus(Polynomial::parse(fp, prime_text)));
    print_record(out, zeta_record(report, idx), format);
    return 0;
}

int run_classify(std::ostream& out, const FieldFlags& ff, const std::string& tuple_text,
                 const std::string& prime_text, bool all_primes, const std::string& format) {
    Field fp = resolve_field(ff);
    MZVIndex idx(parse_tuple(tuple_text));
    Json record;
    record["q"] = fp->q();
    if (all_primes) {
        const auto report = all_primes_trivial_zero(*fp, idx);
        record["v"] = "all-primes";
        record["s"] = idx.exponents();
        record["trivial"] = report.trivial_for_all;
        Json degrees = Json::array();
        for (const auto& [deg, w] : report.per_degree) {
            Json entry{{"deg", deg}};
            entry["witness"] = w ? witness_to_json(*w) : Json(nullptr);
            degrees.push_back(entry);
        }
        record["witnesses"] = degrees;
    } else if (!prime_text.empty()) {
        PrimeModulus v(Polynomial::parse(fp, prime_text));
        const auto w = v_adic_trivial_witness(*fp, idx, v.degree());
        record["v"] = v.to_string();
        record["s"] = idx.exponents();
        record["trivial"] = w.has_value();
        record["witness"] = w ? witness_to_json(*w) : Json(nullptr);
    } else {
        const auto w = infinity_trivial_witness(*fp, idx);
        record["v"] = nullptr;
        record["s"] = idx.exponents();
        record["trivial"] = w.has_value();
        record["witness"] = w ? witness_to_json(*w) : Json(nullptr);
    }
    print_record(out, record, format);
    return 0;
}

struct SweepFlags {
    std::vector<std::uint32_t> q_list;
    std::size_t max_d = 4;
    std::int64_t min_s = 0;
    std::int64_t max_s = 10;
    std::size_t min_depth = 1;
    std::size_t max_depth = 3;
    std::vector<std::size_t> prime_degrees;
    std::uint64_t enum_cap = kDefaultEnumerationCap;
    std::uint64_t max_cells = 10'000'000;
    int jobs = 1;
    std::string out_path;
    bool resume = false;
    std::string format = "json";
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& sf) {
    cmd->add_option("--q", sf.q_list, "field orders to sweep (repeatable)");
    cmd->add_option("--max-d", sf.max_d, "largest power-sum degree d");
    cmd->add_option("--min-s", sf.min_s, "smallest -s in the sweep")->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-s", sf.max_s, "largest -s in the sweep")->check(CLI::NonNegativeNumber);
    cmd->add_option("--min-depth", sf.min_depth, "smallest zeta depth r");
    cmd->add_option("--max-depth", sf.max_depth, "largest zeta depth r");
    cmd->add_option("--prime-degree", sf.prime_degrees, "prime degrees to include (repeatable)");
    cmd->add_option("--enum-cap", sf.enum_cap, "q^d cap for the enumeration oracle");
    cmd->add_option("--max-cells", sf.max_cells, "guard on the total number of grid cells");
    cmd->add_option("--jobs", sf.jobs, "parallel workers (cells merge in grid order)");
    cmd->add_option("--out", sf.out_path, "append JSON-lines records to this file");
    cmd->add_flag("--resume", sf.resume, "skip cells already present in --out");
    cmd->add_option("--format", sf.format)->check(CLI::IsMember({"json", "table"}));
}

GridSpec grid_from_flags(const SweepFlags& sf, std::vector<std::uint32_t> default_q,
                         std::vector<std::size_t> default_degrees, std::size_t default_min_depth) {
    GridSpec grid;
    grid.q_list = sf.q_list.empty() ? std::move(default_q) : sf.q_list;
    grid.max_d = sf.max_d;
    grid.min_minus_s = sf.min_s;
    grid.max_minus_s = sf.max_s;
    grid.min_depth = std::max(sf.min_depth, default_min_depth);
    grid.max_depth = sf.max_depth;
    grid.prime_degrees = sf.prime_degrees.empty() ? std::move(default_degrees) : sf.prime_degrees;
    grid.enum_cost_cap = sf.enum_cap;
    grid.max_cells = sf.max_cells;
    if (grid.min_minus_s > grid.max_minus_s)
        throw CLI::ValidationError("--min-s", "min exceeds max");
    return grid;
}

// Reads an existing JSON-lines file for --resume: validates the header and
// collects the cell keys already present.
std::set<std::string> read_resume_keys(const std::string& path, const std::string& suite,
                                       const GridSpec& grid) {
    std::set<std::string> keys;
    std::ifstream in(path);
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded()) throw std::runtime_error("unparseable line in resume file " + path);
        if (!saw_header) {
            if (!j.contains("suite") || !j.contains("grid"))
                throw std::runtime_error("resume file has no header line");
            if (j.at("suite") != suite || j.at("grid") != grid.to_json())
                throw std::runtime_error("resume file was written for a different suite or grid");
            saw_header = true;
            continue;
        }
        if (j.contains("cell")) keys.insert(j.at("cell").get<std::string>());
    }
    if (!saw_header) throw std::runtime_error("resume file is empty");
    return keys;
}

int run_sweep(std::ostream& out, std::ostream& err, const SweepFlags& sf, const GridSpec& grid,
              const std::string& suite_name, bool conjecture) {
    RunOptions opts;
    opts.jobs = sf.jobs;

    std::ofstream file;
    if (!sf.out_path.empty()) {
        const bool resuming = sf.resume && std::filesystem::exists(sf.out_path);
        if (resuming) {
            opts.skip_keys = read_resume_keys(sf.out_path, suite_name, grid);
            opts.emit_header = false;
            file.open(sf.out_path, std::ios::app);
        } else {
            file.open(sf.out_path, std::ios::trunc);
        }
        if (!file) throw std::runtime_error("cannot open " + sf.out_path);
        opts.emit = [&file](const std::string& line) { file << line << '\n'; };
    } else if (sf.format == "json") {
        opts.emit = [&out](const std::string& line) { out << line << '\n'; };
    }

    SuiteReport report =
        conjecture ? search_conjecture(grid, opts) : run_suite(suite_name, grid, opts);

    if (sf.format == "table") {
        out << "suite:           " << report.suite << "\n";
        out << "cells checked:   " << report.cells << "\n";
        out << "cells skipped:   " << report.skipped << "\n";
        out << "failures:        " << report.failures.size() << "\n";
        out << "counterexamples: " << report.counterexamples.size() << "\n";
        for (const auto& f : report.failures)
            out << "FAIL " << f.cell << "\n  expected: " << f.expected << "\n  actual:   " << f.actual
                << "\n";
        for (const auto& c : report.counterexamples) out << "COUNTEREXAMPLE " << c.dump() << "\n";
    }

    Json trailer{{"suite", report.suite},
                 {"cells", report.cells},
                 {"skipped", report.skipped},
                 {"failures", report.failures.size()},
                 {"counterexamples", report.counterexamples.size()},
                 {"wall_ms", report.wall_ms}};
    err << trailer.dump() << "\n";
    return report.passed() ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact v-adic multiple zeta values over F_q(t)"};
    app.require_subcommand(1);
    int rc = 0;

    // powersum
    auto* ps = app.add_subcommand("powersum", "evaluate one power sum S_d(s) or its twisted form");
    FieldFlags ps_field;
    std::size_t ps_d = 0;
    std::int64_t ps_s = 0;
    std::string ps_prime, ps_method = "both", ps_format = "json";
    std::uint64_t ps_cap = kDefaultEnumerationCap;
    add_field_flags(ps, ps_field);
    ps->add_option("--d", ps_d, "degree of the monics")->required();
    ps->add_option("--s", ps_s, "exponent (must be <= 0)")->required();
    ps->add_option("--prime", ps_prime, "monic prime v as polynomial text (twisted sum)");
    ps->add_option("--method", ps_method)->check(CLI::IsMember({"direct", "formula", "both"}));
    ps->add_option("--format", ps_format)->check(CLI::IsMember({"json", "table"}));
    ps->add_option("--enum-cap", ps_cap, "q^d cap for the direct route");
    ps->callback([&] { rc = run_powersum(out, ps_field, ps_d, ps_s, ps_prime, ps_method, ps_format, ps_cap); });

    // zeta
    auto* zt = app.add_subcommand("zeta", "evaluate a zeta value and classify its zero");
    FieldFlags zt_field;
    std::string zt_tuple, zt_prime, zt_format = "json";
    add_field_flags(zt, zt_field);
    zt->add_option("--tuple", zt_tuple, "exponents s_1,...,s_r (non-positive)")->required();
    zt->add_option("--prime", zt_prime, "monic prime v (omit for the value at infinity)");
    zt->add_option("--format", zt_format)->check(CLI::IsMember({"json", "table"}));
    zt->callback([&] { rc = run_zeta(out, zt_field, zt_tuple, zt_prime, zt_format); });

    // classify
    auto* cl = app.add_subcommand("classify", "trivial-zero classification without evaluation");
    FieldFlags cl_field;
    std::string cl_tuple, cl_prime, cl_format = "json";
    bool cl_all = false;
    add_field_flags(cl, cl_field);
    cl->add_option("--tuple", cl_tuple)->required();
    cl->add_option("--prime", cl_prime, "classify for this prime");
    cl->add_flag("--all-primes", cl_all, "classify across all primes (degrees 1..r)");
    cl->add_option("--format", cl_format)->check(CLI::IsMember({"json", "table"}));
    cl->callback([&] { rc = run_classify(out, cl_field, cl_tuple, cl_prime, cl_all, cl_format); });

    // verify
    auto* vf = app.add_subcommand("verify", "run one verification suite over a grid");
    SweepFlags vf_flags;
    std::string vf_suite;
    vf->add_option("--suite", vf_suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    add_sweep_flags(vf, vf_flags);
    vf->callback([&] {
        GridSpec grid = grid_from_flags(vf_flags, {2, 3}, {1, 2}, 1);
        rc = run_sweep(out, err, vf_flags, grid, vf_suite, /*conjecture=*/false);
    });

    // search
    auto* se = app.add_subcommand("search", "conjecture counterexample search (primes of degree >= 2)");
    SweepFlags se_flags;
    se_flags.max_s = 8;
    add_sweep_flags(se, se_flags);
    se->callback([&] {
        if (se_flags.min_s == 0) se_flags.min_s = 1;
        GridSpec grid = grid_from_flags(se_flags, {2, 3}, {2}, 2);
        rc = run_sweep(out, err, se_flags, grid, "conjecture-search", /*conjecture=*/true);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fqmzv");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace fqmzv
