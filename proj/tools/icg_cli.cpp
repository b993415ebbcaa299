// Command-line interface for the icg_energy shared library.
//
// Subcommands:
//   energy    exact energy (and optionally the spectrum) of one ICG(n, D)
//   maximise  exhaustive 2047-mask search for one order p^2 q^3
//   survey    every order p^2 q^3 <= bound, with summary counters
//   table3    built-in reference table of seven sample pairs, computed by
//             both the closed-form polynomial and the divisor-class sum
//
// Exit codes: 0 success, 1 mathematical failure (counterexample/mismatch),
// 2 usage or validation error, 3 I/O error.

#include <icg/icg_energy.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;
constexpr int kIoError = 3;

struct CliError {
    int code;
    std::string message;
};

enum class Format { human, csv, json };

Format parse_format(const std::string& name) {
    if (name == "human") return Format::human;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw CliError{kUsage, "unknown format '" + name + "' (human, csv, json)"};
}

int64_t parse_i64(const std::string& text) {
    int64_t value = 0;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw CliError{kUsage, "'" + text + "' is not an integer"};
    return value;
}

std::vector<int64_t> parse_i64_list(const std::string& text) {
    std::vector<int64_t> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        values.push_back(parse_i64(item));
    return values;
}

std::pair<int64_t, int64_t> parse_pair(const std::string& text) {
    const auto values = parse_i64_list(text);
    if (values.size() != 2)
        throw CliError{kUsage, "--pair expects P,Q (got '" + text + "')"};
    return {values[0], values[1]};
}

// Maps a library failure to a CLI exit code, keeping the library's message.
void check(icg_status status) {
    if (status == ICG_OK) return;
    const int code = status == ICG_ERR_CHECK || status == ICG_ERR_NOMEM
                         ? kMathFailure
                         : kUsage;
    throw CliError{code, std::string(icg_last_error())};
}

std::string join(const std::vector<int64_t>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

// Writes either to stdout or to --output; opening failure is an I/O error.
struct OutputTarget {
    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file.emplace(path, std::ios::out | std::ios::trunc);
        if (!*file) throw CliError{kIoError, "cannot open output file '" + path + "'"};
    }
    std::ostream& stream() { return file ? *file : std::cout; }
    void finish() {
        if (file && !(*file << std::flush))
            throw CliError{kIoError, "write failed"};
    }
    std::optional<std::ofstream> file;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ------------------------------------------------------------------
// energy
// ------------------------------------------------------------------

struct EnergyArgs {
    std::string n_text;
    std::string pair_text;
    std::string divisors_text;
    std::string mask_text;
    bool dstar = false;
    bool spectrum = false;
    std::string format = "human";
    std::string output;
};

int run_energy(const EnergyArgs& args) {
    const Format format = parse_format(args.format);
    if (args.n_text.empty() == args.pair_text.empty())
        throw CliError{kUsage, "energy needs exactly one of --n or --pair"};
    const int selectors = int(!args.divisors_text.empty()) +
                          int(!args.mask_text.empty()) + int(args.dstar);
    if (selectors != 1)
        throw CliError{kUsage,
                       "energy needs exactly one of --divisors, --mask, --dstar"};
    if (args.pair_text.empty() && (args.dstar || !args.mask_text.empty()))
        throw CliError{kUsage, "--mask and --dstar require --pair"};

    int64_t n = 0;
    int64_t p = 0, q = 0;
    std::optional<uint32_t> mask;
    std::vector<int64_t> divisors;
    if (!args.pair_text.empty()) {
        std::tie(p, q) = parse_pair(args.pair_text);
        check(icg_pair_order(p, q, &n));
        if (args.dstar) mask = icg_dstar_mask();
        if (!args.mask_text.empty()) {
            const int64_t raw = parse_i64(args.mask_text);
            if (raw < 1 || raw > 2047)
                throw CliError{kUsage, "--mask must lie in [1, 2047]"};
            mask = static_cast<uint32_t>(raw);
        }
        if (mask) {
            int64_t buffer[11];
            size_t count = 0;
            check(icg_mask_divisors(p, q, *mask, buffer, &count));
            divisors.assign(buffer, buffer + count);
        }
    } else {
        n = parse_i64(args.n_text);
    }
    if (!args.divisors_text.empty()) divisors = parse_i64_list(args.divisors_text);

    int64_t energy = 0;
    check(icg_energy_compute(n, divisors.data(), divisors.size(), &energy));

    struct Entry {
        int64_t class_divisor, eigenvalue, multiplicity;
    };
    std::vector<Entry> entries;
    if (args.spectrum) {
        icg_spectrum* spectrum = nullptr;
        check(icg_spectrum_compute(n, divisors.data(), divisors.size(), &spectrum));
        std::unique_ptr<icg_spectrum, decltype(&icg_spectrum_free)> guard(
            spectrum, icg_spectrum_free);
        for (size_t i = 0; i < icg_spectrum_size(spectrum); ++i) {
            Entry entry{};
            check(icg_spectrum_entry(spectrum, i, &entry.class_divisor,
                                     &entry.eigenvalue, &entry.multiplicity));
            entries.push_back(entry);
        }
    }

    OutputTarget target(args.output);
    std::ostream& out = target.stream();
    switch (format) {
        case Format::human:
            if (p != 0) out << "p = " << p << ", q = " << q << "\n";
            out << "n = " << n << "\n";
            if (mask) out << "mask = " << *mask << "\n";
            out << "divisors = " << join(divisors, ", ") << "\n";
            out << "energy = " << energy << "\n";
            if (args.spectrum) {
                out << "\nclass_divisor eigenvalue multiplicity\n";
                for (const auto& e : entries)
                    out << e.class_divisor << " " << e.eigenvalue << " "
                        << e.multiplicity << "\n";
            }
            break;
        case Format::csv:
            out << "n,divisors,energy\n"
                << n << "," << join(divisors, ";") << "," << energy << "\n";
            if (args.spectrum) {
                out << "\nclass_divisor,eigenvalue,multiplicity\n";
                for (const auto& e : entries)
                    out << e.class_divisor << "," << e.eigenvalue << ","
                        << e.multiplicity << "\n";
            }
            break;
        case Format::json: {
            ordered_json j;
            j["n"] = n;
            if (p != 0) {
                j["p"] = p;
                j["q"] = q;
            }
            if (mask) j["mask"] = *mask;
            j["divisors"] = divisors;
            j["energy"] = energy;
            if (args.spectrum) {
                ordered_json rows = ordered_json::array();
                for (const auto& e : entries)
                    rows.push_back({{"class_divisor", e.class_divisor},
                                    {"eigenvalue", e.eigenvalue},
                                    {"multiplicity", e.multiplicity}});
                j["spectrum"] = std::move(rows);
            }
            out << j.dump(2) << "\n";
            break;
        }
    }
    target.finish();
    return kOk;
}

// ------------------------------------------------------------------
// maximise
// ------------------------------------------------------------------

struct MaximiseArgs {
    std::string pair_text;
    std::string format = "human";
    std::string output;
};

int run_maximise(const MaximiseArgs& args) {
    const Format format = parse_format(args.format);
    if (args.pair_text.empty()) throw CliError{kUsage, "maximise requires --pair"};
    const auto [p, q] = parse_pair(args.pair_text);
    int64_t n = 0;
    check(icg_pair_order(p, q, &n));

    icg_maximiser* m = nullptr;
    check(icg_find_maximiser(p, q, &m));
    std::unique_ptr<icg_maximiser, decltype(&icg_maximiser_free)> guard(
        m, icg_maximiser_free);

    std::vector<uint32_t> masks;
    std::vector<std::vector<int64_t>> mask_divs;
    for (size_t i = 0; i < icg_maximiser_count(m); ++i) {
        const uint32_t mask = icg_maximiser_mask(m, i);
        masks.push_back(mask);
        int64_t buffer[11];
        size_t count = 0;
        check(icg_mask_divisors(p, q, mask, buffer, &count));
        mask_divs.emplace_back(buffer, buffer + count);
    }
    const bool is_unique = icg_maximiser_is_unique(m);
    const bool matches_dstar = icg_maximiser_matches_dstar(m);
    const bool kronecker_ok = icg_maximiser_kronecker_ok(m);
    const bool formula_ok = icg_maximiser_formula_ok(m);
    const int64_t max_energy = icg_maximiser_energy(m);

    OutputTarget target(args.output);
    std::ostream& out = target.stream();
    switch (format) {
        case Format::human:
            out << "p = " << p << ", q = " << q << ", n = " << n << "\n";
            out << "max_energy = " << max_energy << "\n";
            for (size_t i = 0; i < masks.size(); ++i)
                out << "maximiser = mask " << masks[i] << " = {"
                    << join(mask_divs[i], ", ") << "}\n";
            out << "is_unique = " << bool_text(is_unique) << "\n";
            out << "matches_dstar = " << bool_text(matches_dstar) << "\n";
            out << "kronecker_ok = " << bool_text(kronecker_ok) << "\n";
            out << "formula_ok = " << bool_text(formula_ok) << "\n";
            break;
        case Format::csv: {
            out << "p,q,n,max_energy,maximiser_masks,maximiser_divisors,is_unique,"
                   "matches_dstar,kronecker_ok,formula_ok\n";
            std::string mask_text, div_text;
            for (size_t i = 0; i < masks.size(); ++i) {
                if (i > 0) {
                    mask_text += ';';
                    div_text += '|';
                }
                mask_text += std::to_string(masks[i]);
                div_text += join(mask_divs[i], ";");
            }
            out << p << "," << q << "," << n << "," << max_energy << ","
                << mask_text << "," << div_text << "," << bool_text(is_unique)
                << "," << bool_text(matches_dstar) << "," << bool_text(kronecker_ok)
                << "," << bool_text(formula_ok) << "\n";
            break;
        }
        case Format::json: {
            ordered_json j;
            j["p"] = p;
            j["q"] = q;
            j["n"] = n;
            j["max_energy"] = max_energy;
            ordered_json list = ordered_json::array();
            for (size_t i = 0; i < masks.size(); ++i)
                list.push_back({{"mask", masks[i]}, {"divisors", mask_divs[i]}});
            j["maximisers"] = std::move(list);
            j["is_unique"] = is_unique;
            j["matches_dstar"] = matches_dstar;
            j["kronecker_ok"] = kronecker_ok;
            j["formula_ok"] = formula_ok;
            out << j.dump(2) << "\n";
            break;
        }
    }
    target.finish();

    const bool all_ok = is_unique && matches_dstar && kronecker_ok && formula_ok;
    if (!all_ok) {
        std::cerr << "maximise: verification failed for pair (" << p << ", " << q
                  << ")\n";
        return kMathFailure;
    }
    return kOk;
}

// ------------------------------------------------------------------
// survey
// ------------------------------------------------------------------

struct SurveyArgs {
    std::string bound_text;
    int workers = 0;
    std::string prime_limit_text = "0";
    std::string format = "human";
    std::string output;
};

void write_survey_records(std::ostream& out, const icg_survey* survey, Format format) {
    if (format == Format::json) {
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < icg_survey_order_count(survey); ++i) {
            icg_order_record r{};
            check(icg_survey_order(survey, i, &r));
            rows.push_back({{"n", r.n},
                            {"p", r.p},
                            {"q", r.q},
                            {"max_energy", r.max_energy},
                            {"maximiser_mask", r.maximiser_mask},
                            {"is_unique", r.is_unique != 0},
                            {"matches_dstar", r.matches_dstar != 0},
                            {"kronecker_ok", r.kronecker_ok != 0},
                            {"formula_ok", r.formula_ok != 0}});
        }
        out << rows.dump(2) << "\n";
        return;
    }
    out << "n,p,q,max_energy,maximiser_mask,is_unique,matches_dstar,kronecker_ok,"
           "formula_ok\n";
    for (size_t i = 0; i < icg_survey_order_count(survey); ++i) {
        icg_order_record r{};
        check(icg_survey_order(survey, i, &r));
        out << r.n << "," << r.p << "," << r.q << "," << r.max_energy << ","
            << r.maximiser_mask << "," << bool_text(r.is_unique != 0) << ","
            << bool_text(r.matches_dstar != 0) << ","
            << bool_text(r.kronecker_ok != 0) << ","
            << bool_text(r.formula_ok != 0) << "\n";
    }
}

int run_survey(const SurveyArgs& args) {
    const Format format = parse_format(args.format);
    if (args.bound_text.empty()) throw CliError{kUsage, "survey requires --bound"};
    const int64_t bound = parse_i64(args.bound_text);
    const int64_t prime_limit = parse_i64(args.prime_limit_text);

    icg_survey* survey = nullptr;
    check(icg_survey_run(bound, args.workers, prime_limit, &survey));
    std::unique_ptr<icg_survey, decltype(&icg_survey_free)> guard(survey,
                                                                  icg_survey_free);

    // Per-order records go to --output (CSV unless --format json); the
    // summary always goes to stdout.
    if (!args.output.empty()) {
        OutputTarget target(args.output);
        write_survey_records(target.stream(), survey,
                             format == Format::json ? Format::json : Format::csv);
        target.finish();
    }

    const int64_t failures = icg_survey_dstar_mismatches(survey) +
                             icg_survey_formula_failures(survey) +
                             icg_survey_kronecker_failures(survey);
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f",
                  icg_survey_elapsed_seconds(survey));

    switch (format) {
        case Format::human:
            std::cout << "bound                    " << icg_survey_bound(survey) << "\n"
                      << "orders tested            " << icg_survey_orders_tested(survey) << "\n"
                      << "distinct unordered pairs " << icg_survey_distinct_unordered_pairs(survey) << "\n"
                      << "largest prime            " << icg_survey_largest_prime(survey) << "\n"
                      << "comparisons total        " << icg_survey_comparisons_total(survey) << "\n"
                      << "dstar mismatches         " << icg_survey_dstar_mismatches(survey) << "\n"
                      << "formula failures         " << icg_survey_formula_failures(survey) << "\n"
                      << "kronecker failures       " << icg_survey_kronecker_failures(survey) << "\n"
                      << "elapsed seconds          " << elapsed << "\n";
            break;
        case Format::csv:
            std::cout << "bound,orders_tested,distinct_unordered_pairs,largest_prime,"
                         "comparisons_total,dstar_mismatches,formula_failures,"
                         "kronecker_failures,elapsed_seconds\n"
                      << icg_survey_bound(survey) << ","
                      << icg_survey_orders_tested(survey) << ","
                      << icg_survey_distinct_unordered_pairs(survey) << ","
                      << icg_survey_largest_prime(survey) << ","
                      << icg_survey_comparisons_total(survey) << ","
                      << icg_survey_dstar_mismatches(survey) << ","
                      << icg_survey_formula_failures(survey) << ","
                      << icg_survey_kronecker_failures(survey) << "," << elapsed
                      << "\n";
            break;
        case Format::json: {
            ordered_json j;
            j["bound"] = icg_survey_bound(survey);
            j["orders_tested"] = icg_survey_orders_tested(survey);
            j["distinct_unordered_pairs"] = icg_survey_distinct_unordered_pairs(survey);
            j["largest_prime"] = icg_survey_largest_prime(survey);
            j["comparisons_total"] = icg_survey_comparisons_total(survey);
            j["dstar_mismatches"] = icg_survey_dstar_mismatches(survey);
            j["formula_failures"] = icg_survey_formula_failures(survey);
            j["kronecker_failures"] = icg_survey_kronecker_failures(survey);
            j["elapsed_seconds"] = icg_survey_elapsed_seconds(survey);
            std::cout << j.dump(2) << "\n";
            break;
        }
    }

    if (failures > 0) {
        std::cerr << "survey: " << failures
                  << " verification failure(s); a counterexample candidate was "
                     "recorded\n";
        return kMathFailure;
    }
    return kOk;
}

// ------------------------------------------------------------------
// table3
// ------------------------------------------------------------------

struct Table3Args {
    std::string format = "human";
    std::string output;
};

int run_table3(const Table3Args& args) {
    const Format format = parse_format(args.format);
    static constexpr std::pair<int64_t, int64_t> kPairs[] = {
        {3, 5}, {3, 7}, {5, 7}, {5, 11}, {7, 11}, {11, 13}, {13, 17}};

    struct Row {
        int64_t p, q, n, formula, spectral;
    };
    std::vector<Row> rows;
    bool all_match = true;
    for (const auto& [p, q] : kPairs) {
        Row row{p, q, 0, 0, 0};
        check(icg_pair_order(p, q, &row.n));
        check(icg_closed_form_energy(p, q, &row.formula));
        int64_t divisors[6];
        check(icg_dstar_divisors(p, q, divisors));
        check(icg_energy_compute(row.n, divisors, 6, &row.spectral));
        if (row.formula != row.spectral) all_match = false;
        rows.push_back(row);
    }

    OutputTarget target(args.output);
    std::ostream& out = target.stream();
    switch (format) {
        case Format::human:
            out << "p q n energy_formula energy_spectral\n";
            for (const auto& r : rows)
                out << r.p << " " << r.q << " " << r.n << " " << r.formula << " "
                    << r.spectral << "\n";
            out << (all_match ? "all rows match\n" : "MISMATCH DETECTED\n");
            break;
        case Format::csv:
            out << "p,q,n,energy_formula,energy_spectral\n";
            for (const auto& r : rows)
                out << r.p << "," << r.q << "," << r.n << "," << r.formula << ","
                    << r.spectral << "\n";
            break;
        case Format::json: {
            ordered_json list = ordered_json::array();
            for (const auto& r : rows)
                list.push_back({{"p", r.p},
                                {"q", r.q},
                                {"n", r.n},
                                {"energy_formula", r.formula},
                                {"energy_spectral", r.spectral}});
            out << list.dump(2) << "\n";
            break;
        }
    }
    target.finish();

    if (!all_match) {
        std::cerr << "table3: closed form and divisor-class energies disagree\n";
        return kMathFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact energies of integral circulant graphs ICG(n, D)"};
    app.require_subcommand(1);

    EnergyArgs energy_args;
    auto* energy = app.add_subcommand("energy", "energy of one ICG(n, D)");
    energy->add_option("--n", energy_args.n_text, "order n");
    energy->add_option("--pair", energy_args.pair_text, "P,Q for n = P^2 Q^3");
    energy->add_option("--divisors", energy_args.divisors_text,
                       "comma-separated proper divisors");
    energy->add_option("--mask", energy_args.mask_text,
                       "11-bit divisor mask (requires --pair)");
    energy->add_flag("--dstar", energy_args.dstar,
                     "use D* = {1, p^2, pq, q^2, p^2q^2, pq^3} (requires --pair)");
    energy->add_flag("--spectrum", energy_args.spectrum, "also emit the spectrum");
    energy->add_option("--format", energy_args.format, "human|csv|json");
    energy->add_option("--output", energy_args.output, "write to file");

    MaximiseArgs maximise_args;
    auto* maximise =
        app.add_subcommand("maximise", "exhaustive maximiser search for one order");
    maximise->add_option("--pair", maximise_args.pair_text, "P,Q for n = P^2 Q^3");
    maximise->add_option("--format", maximise_args.format, "human|csv|json");
    maximise->add_option("--output", maximise_args.output, "write to file");

    SurveyArgs survey_args;
    auto* survey = app.add_subcommand("survey", "verify all orders up to a bound");
    survey->add_option("--bound", survey_args.bound_text, "largest order to test");
    survey->add_option("--workers", survey_args.workers,
                       "worker threads (0 = hardware)");
    survey->add_option("--prime-limit", survey_args.prime_limit_text,
                       "largest candidate prime (0 = smallest prime whose cube "
                       "exceeds the bound)");
    survey->add_option("--format", survey_args.format, "human|csv|json");
    survey->add_option("--output", survey_args.output, "per-order records file");

    Table3Args table3_args;
    auto* table3 =
        app.add_subcommand("table3", "seven reference pairs, both energy routes");
    table3->add_option("--format", table3_args.format, "human|csv|json");
    table3->add_option("--output", table3_args.output, "write to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (energy->parsed()) return run_energy(energy_args);
        if (maximise->parsed()) return run_maximise(maximise_args);
        if (survey->parsed()) return run_survey(survey_args);
        if (table3->parsed()) return run_table3(table3_args);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFailure;
    }
    return kUsage;
}
