// horopack CLI: density tables, volume, sweep CSV, and self-verification for
// horoball packings of ideal regular simplices in hyperbolic n-space.
// Links the C API only.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "horopack/horopack.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitVerifyFailed = 3;

struct OutputSpec {
    std::string format = "markdown";  // csv | json | markdown
    int precision = 6;
    std::string destination;  // empty = stdout
};

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string scientific(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

class Output {
  public:
    explicit Output(const OutputSpec& spec) {
        if (!spec.destination.empty()) {
            file_.open(spec.destination);
            if (!file_) {
                std::cerr << "error: cannot open output file '" << spec.destination
                          << "'\n";
                ok_ = false;
            }
        }
    }
    bool ok() const { return ok_; }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
    bool ok_ = true;
};

// One tabular payload, rendered as csv, json, or markdown.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void render(std::ostream& os, const std::string& format) const {
        if (format == "csv") {
            for (size_t i = 0; i < header.size(); ++i)
                os << header[i] << (i + 1 < header.size() ? "," : "\n");
            for (const auto& row : rows)
                for (size_t i = 0; i < row.size(); ++i)
                    os << row[i] << (i + 1 < row.size() ? "," : "\n");
        } else if (format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json obj;
                for (size_t i = 0; i < row.size(); ++i) obj[header[i]] = row[i];
                arr.push_back(obj);
            }
            os << arr.dump(2) << "\n";
        } else {  // markdown
            os << "|";
            for (const auto& h : header) os << " " << h << " |";
            os << "\n|";
            for (size_t i = 0; i < header.size(); ++i) os << "---|";
            os << "\n";
            for (const auto& row : rows) {
                os << "|";
                for (const auto& cell : row) os << " " << cell << " |";
                os << "\n";
            }
        }
    }
};

const char* label_name(int label) {
    switch (label) {
        case HP_ARRANGEMENT_B0: return "B0";
        case HP_ARRANGEMENT_B1: return "B1";
        default: return "Both";
    }
}

void warn_large_dim(int dim) {
    if (dim > 8)
        std::cerr << "warning: dim " << dim
                  << " is outside the calibrated range 2..8; the volume series "
                     "may be slow\n";
}

int run_volume(int dim, double rel_tol, long max_terms, const OutputSpec& spec) {
    warn_large_dim(dim);
    hp_volume_result res{};
    hp_status rc = hp_simplex_volume(dim, rel_tol, max_terms, &res);
    if (rc != HP_OK && rc != HP_ERR_NOT_CONVERGED) {
        std::cerr << "error: " << hp_status_message(rc) << "\n";
        return kExitUsage;
    }
    Output out(spec);
    if (!out.ok()) return kExitUsage;
    Table t;
    t.header = {"dim", "volume", "vol_err", "terms", "converged"};
    t.rows = {{std::to_string(dim), fmt(res.value, spec.precision),
               scientific(res.uncertainty), std::to_string(res.terms_used),
               res.converged ? "true" : "false"}};
    t.render(out.stream(), spec.format);
    if (!res.converged) {
        std::cerr << "warning: series did not reach rel_tol within "
                  << max_terms << " terms; value carries bound "
                  << scientific(res.uncertainty) << "\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

bool report_row(int dim, double rel_tol, long max_terms, int precision,
                std::vector<std::string>* row, bool table_columns,
                bool* converged) {
    hp_constants c{};
    hp_density_report rep{};
    if (hp_geometric_constants(dim, &c) != HP_OK) return false;
    if (hp_density_report_compute(dim, rel_tol, max_terms, &rep) != HP_OK)
        return false;
    *converged = rep.volume_converged != 0;
    double threshold = std::log(static_cast<double>(dim)) / (dim - 1);
    if (table_columns) {
        *row = {std::to_string(dim),
                fmt(rep.simplex_volume, precision),
                scientific(rep.volume_uncertainty),
                fmt(c.v0, precision),
                fmt(c.q, precision),
                fmt(threshold, precision),
                fmt(rep.classical, precision),
                fmt(rep.generalized, precision),
                fmt(rep.ratio, precision),
                label_name(rep.optimal)};
    } else {
        *row = {std::to_string(dim),
                fmt(rep.classical, precision),
                fmt(rep.generalized, precision),
                fmt(rep.ratio, precision),
                label_name(rep.optimal),
                fmt(rep.simplex_volume, precision),
                scientific(rep.density_uncertainty)};
    }
    return true;
}

int run_density(int dim, double rel_tol, long max_terms, const OutputSpec& spec) {
    warn_large_dim(dim);
    std::vector<std::string> row;
    bool converged = false;
    if (!report_row(dim, rel_tol, max_terms, spec.precision, &row, false,
                    &converged)) {
        std::cerr << "error: density report failed for dim " << dim << "\n";
        return kExitUsage;
    }
    Output out(spec);
    if (!out.ok()) return kExitUsage;
    Table t;
    t.header = {"dim",   "classical", "generalized", "ratio",
                "label", "volume",    "density_err"};
    t.rows = {row};
    if (spec.format == "json") {
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
        out.stream() << obj.dump(2) << "\n";
    } else {
        t.render(out.stream(), spec.format);
    }
    return converged ? kExitOk : kExitNotConverged;
}

int run_table(int lo, int hi, double rel_tol, long max_terms,
              const OutputSpec& spec) {
    warn_large_dim(hi);
    Output out(spec);
    if (!out.ok()) return kExitUsage;
    Table t;
    t.header = {"dim",       "volume",    "vol_err", "v0",    "q_n",
                "threshold", "classical", "generalized", "ratio", "label"};
    bool aborted = false;
    for (int dim = lo; dim <= hi; ++dim) {
        std::vector<std::string> row;
        bool converged = false;
        if (!report_row(dim, rel_tol, max_terms, spec.precision, &row, true,
                        &converged) ||
            !converged) {
            std::cerr << "error: row for dim " << dim
                      << (converged ? " failed" : " did not converge")
                      << "; aborting after completed rows\n";
            aborted = true;
            break;
        }
        t.rows.push_back(std::move(row));
    }
    t.render(out.stream(), spec.format);
    return aborted ? kExitNotConverged : kExitOk;
}

int run_sweep(int dim, int samples, double rel_tol, long max_terms,
              const OutputSpec& spec) {
    warn_large_dim(dim);
    std::vector<double> xs(static_cast<size_t>(samples)),
        vs(static_cast<size_t>(samples)), deltas(static_cast<size_t>(samples));
    hp_status rc = hp_density_sweep(dim, samples, rel_tol, max_terms, xs.data(),
                                    vs.data(), deltas.data());
    if (rc != HP_OK) {
        std::cerr << "error: " << hp_status_message(rc) << "\n";
        return kExitUsage;
    }
    Output out(spec);
    if (!out.ok()) return kExitUsage;
    Table t;
    t.header = {"x", "V", "delta"};
    for (int i = 0; i < samples; ++i)
        t.rows.push_back({fmt(xs[static_cast<size_t>(i)], spec.precision),
                          fmt(vs[static_cast<size_t>(i)], spec.precision),
                          fmt(deltas[static_cast<size_t>(i)], spec.precision)});
    // Sweep output is CSV unless another format is asked for explicitly.
    t.render(out.stream(), spec.format == "markdown" ? "csv" : spec.format);
    return kExitOk;
}

struct VerifyPrinter {
    std::ostream* os;
    int failures = 0;
};

void verify_print(const char* name, int passed, const char* detail, void* user) {
    auto* p = static_cast<VerifyPrinter*>(user);
    *p->os << (passed ? "PASS " : "FAIL ") << name;
    if (detail && detail[0]) *p->os << ": " << detail;
    *p->os << "\n";
    if (!passed) ++p->failures;
}

int run_verify(double perturb_classical, const OutputSpec& spec) {
    Output out(spec);
    if (!out.ok()) return kExitUsage;
    VerifyPrinter printer{&out.stream()};
    int all_passed = 0;
    hp_status rc = hp_verify(perturb_classical, verify_print, &printer, &all_passed);
    if (rc != HP_OK) {
        std::cerr << "error: " << hp_status_message(rc) << "\n";
        return kExitUsage;
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

bool parse_dims_range(const std::string& text, int* lo, int* hi) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            *lo = *hi = std::stoi(text);
        } else {
            *lo = std::stoi(text.substr(0, pos));
            *hi = std::stoi(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return *lo >= 2 && *hi >= *lo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Horoball packing densities for ideal regular simplices in "
                 "hyperbolic n-space"};
    app.require_subcommand(1);

    int dim = 3;
    int samples = 101;
    double rel_tol = 1e-7;
    long max_terms = 20000;
    std::string dims_text;
    double perturb_classical = 0.0;
    OutputSpec spec;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", spec.format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "markdown"}));
        cmd->add_option("--precision", spec.precision, "Digits after the point")
            ->check(CLI::Range(1, 15));
        cmd->add_option("--output", spec.destination, "Write to file instead of stdout");
    };
    auto add_series_flags = [&](CLI::App* cmd) {
        cmd->add_option("--rel-tol", rel_tol, "Relative tolerance of the volume series")
            ->check(CLI::Range(1e-15, 0.5));
        cmd->add_option("--max-terms", max_terms, "Series term cap")
            ->check(CLI::Range(1L, 100000000L));
    };

    auto* vol = app.add_subcommand("volume", "Ideal regular simplex volume");
    vol->add_option("--dim", dim, "Dimension n >= 2")->required()->check(CLI::Range(2, 64));
    add_series_flags(vol);
    add_output_flags(vol);

    auto* den = app.add_subcommand("density", "Classical and generalized packing density");
    den->add_option("--dim", dim, "Dimension n >= 2")->required()->check(CLI::Range(2, 64));
    add_series_flags(den);
    add_output_flags(den);

    auto* tab = app.add_subcommand("table", "Density report rows for a dimension range");
    tab->add_option("--dims", dims_text, "Dimension range A..B")->required();
    add_series_flags(tab);
    add_output_flags(tab);

    auto* swp = app.add_subcommand("sweep", "Tangency-offset sweep of V(x) on [0, q_n]");
    swp->add_option("--dim", dim, "Dimension n >= 2")->required()->check(CLI::Range(2, 64));
    swp->add_option("--samples", samples, "Sample count >= 2")->check(CLI::Range(2, 10000000));
    add_series_flags(swp);
    add_output_flags(swp);

    auto* ver = app.add_subcommand("verify", "Run the oracle and invariant suites");
    add_output_flags(ver);
    ver->add_option("--perturb-classical", perturb_classical,
                    "Fault injection for the test harness")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (vol->parsed()) return run_volume(dim, rel_tol, max_terms, spec);
    if (den->parsed()) return run_density(dim, rel_tol, max_terms, spec);
    if (tab->parsed()) {
        int lo = 0, hi = 0;
        if (!parse_dims_range(dims_text, &lo, &hi)) {
            std::cerr << "error: bad --dims range '" << dims_text << "'\n";
            return kExitUsage;
        }
        return run_table(lo, hi, rel_tol, max_terms, spec);
    }
    if (swp->parsed()) return run_sweep(dim, samples, rel_tol, max_terms, spec);
    if (ver->parsed()) return run_verify(perturb_classical, spec);
    return kExitUsage;
}
