#include "rmt/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/errors.hpp"
#include "rmt/grid.hpp"
#include "rmt/histogram.hpp"
#include "rmt/painleve2.hpp"
#include "rmt/painleve5.hpp"
#include "rmt/parallel.hpp"
#include "rmt/prolate.hpp"
#include "rmt/spacings.hpp"
#include "rmt/zeta.hpp"

namespace rmt::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    double lo, step, hi;
};

Range parse_range(const std::string& text, const char* what) {
    Range r{};
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.lo, &r.step, &r.hi, &tail) != 3 || !(r.step > 0.0) ||
        !(r.hi > r.lo))
        throw UsageError(std::string(what) + " must be lo:step:hi with step > 0 and hi > lo, got '" + text + "'");
    return r;
}

std::uint64_t parse_count(double v, const char* what) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e15)
        throw UsageError(std::string(what) + " must be a positive integer");
    return static_cast<std::uint64_t>(v);
}

int check_beta(int beta) {
    if (beta != 1 && beta != 2 && beta != 4) throw UsageError("--beta must be 1, 2 or 4");
    return beta;
}

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<const std::vector<double>*>& columns) {
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front()->size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << fmt((*columns[c])[r]);
        os << '\n';
    }
}

void write_histogram(std::ostream& os, const Histogram& h) {
    write_csv(os, {"x_mid", "density"}, {&h.midpoints, &h.density});
}

void write_samples(std::ostream& os, const std::vector<double>& v) {
    os << "value\n";
    for (double x : v) os << fmt(x) << '\n';
}

struct CsvTable {
    std::vector<std::string> header;
    std::map<std::string, std::vector<double>> columns;
};

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw DataError(path + " is empty");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= t.header.size()) throw ParseError("too many fields in " + path, line_no);
            char* end = nullptr;
            const double v = cell.empty() ? std::nan("") : std::strtod(cell.c_str(), &end);
            if (!cell.empty() && end != cell.c_str() + cell.size())
                throw ParseError("bad number '" + cell + "' in " + path, line_no);
            t.columns[t.header[c++]].push_back(v);
        }
        for (; c < t.header.size(); ++c) t.columns[t.header[c]].push_back(std::nan(""));
    }
    return t;
}

const std::vector<double>& column(const CsvTable& t, const std::string& name, const std::string& path) {
    auto it = t.columns.find(name);
    if (it == t.columns.end()) throw UsageError("column '" + name + "' not found in " + path);
    return it->second;
}

struct Common {
    std::string out_path;
    int threads = 0;
};

struct LargestArgs {
    double n = 1e9;
    double trials = 1e4;
    int beta = 2;
    std::uint64_t seed = 0;
    std::string bins = "-7:0.2:3";
    double cutoff = 0;
    bool raw = false;
};

struct SpacingArgs {
    double n = 1000;
    double trials = 1000;
    int beta = 2;
    std::uint64_t seed = 0;
    std::string bins = "0:0.05:5";
    bool raw = false;
};

struct ProlateArgs {
    double n = 100;
    std::string s = "0:0.01:5";
    bool table1 = false;
    bool extrapolate = false;
    std::vector<std::size_t> sizes{20, 40, 80, 160};
};

struct ZetaArgs {
    std::string file;
    double offset = 0.0;
    std::string bins = "0:0.05:5";
    bool raw = false;
};

struct CompareArgs {
    std::string histogram;
    std::string curve;
    std::string hist_x = "x_mid";
    std::string hist_y = "density";
    std::string curve_x;
    std::string curve_y;
};

void cmd_largest(const LargestArgs& a, std::ostream& os) {
    const std::uint64_t n = parse_count(a.n, "--n");
    const std::uint64_t trials = parse_count(a.trials, "--trials");
    const int beta = check_beta(a.beta);
    const Range bins = parse_range(a.bins, "--bins");
    EnsembleSpec spec;
    try {
        spec = n >= kLargeNThreshold
                   ? EnsembleSpec::large_n(n, beta, a.cutoff > 0 ? parse_count(a.cutoff, "--cutoff") : 0)
                   : EnsembleSpec::exact(n, beta);
    } catch (const ContractViolation& e) {
        throw UsageError(e.what());
    }
    const auto samples = simulate_largest(spec, trials, a.seed);
    if (a.raw) return write_samples(os, samples);
    write_histogram(os, histogram_density(samples, make_edges(bins.lo, bins.step, bins.hi)));
}

void cmd_tracy_widom(const Painleve2Options& o, std::ostream& os) {
    const auto tw = tracy_widom_curves(solve_painleve2(o));
    write_csv(os, {"s", "F1", "F2", "F4", "f1", "f2", "f4", "s4"},
              {&tw.s, &tw.F1, &tw.F2, &tw.F4, &tw.f1, &tw.f2, &tw.f4, &tw.s4});
}

void cmd_spacing(const SpacingArgs& a, std::ostream& os) {
    const auto n = parse_count(a.n, "--n");
    const auto trials = parse_count(a.trials, "--trials");
    if (n < 8 || n % 2) throw UsageError("--n must be even and >= 8");
    const Range bins = parse_range(a.bins, "--bins");
    const auto batch = simulate_spacing_batch(n, trials, check_beta(a.beta), a.seed);
    if (a.raw) return write_samples(os, batch.values);
    write_histogram(os, histogram_density(batch.values, make_edges(bins.lo, bins.step, bins.hi)));
}

void cmd_gaudin(const Painleve5Options& o, std::ostream& os) {
    const auto g = spacing_density(solve_painleve5(o));
    write_csv(os, {"t", "s", "sigma", "sigmap", "I", "E", "p"}, {&g.t, &g.s, &g.sigma, &g.sigmap, &g.I, &g.E, &g.p});
}

void cmd_prolate(const ProlateArgs& a, std::ostream& os) {
    const Range r = parse_range(a.s, "--s");
    const auto s = arange_inclusive(r.lo, r.step, r.hi);
    if (r.lo < 0.0) throw UsageError("--s must start at s >= 0");

    if (a.table1 || a.extrapolate) {
        if (a.sizes.size() < 2) throw UsageError("--sizes needs at least two entries");
        for (std::size_t j = 1; j < a.sizes.size(); ++j)
            if (a.sizes[j] != 2 * a.sizes[j - 1]) throw UsageError("--sizes must double");
        if (s.back() / (2.0 * static_cast<double>(a.sizes.front())) >= 0.5)
            throw UsageError("s range too large for the smallest size");
        const auto res = prolate_extrapolation(s, a.sizes);
        if (a.extrapolate) {
            std::vector<std::string> header{"s"};
            std::vector<const std::vector<double>*> cols{&res.s};
            for (std::size_t j = 0; j < res.sizes.size(); ++j) {
                header.push_back("E_n" + std::to_string(res.sizes[j]));
                cols.push_back(&res.E_by_n[j]);
            }
            header.push_back("E_extrapolated");
            cols.push_back(&res.E_extrapolated);
            return write_csv(os, header, cols);
        }
        const auto reference = gap_probability_painleve5(s);
        const auto table = richardson_error_table(res.richardson, reference);
        // Row j lists every stage that ends at size j, as in the classic layout.
        std::vector<std::string> header{"n"};
        for (std::size_t i = 0; i < table.size(); ++i) header.push_back("error" + std::to_string(i));
        std::vector<std::vector<double>> cols(table.size() + 1, std::vector<double>(a.sizes.size(), std::nan("")));
        for (std::size_t j = 0; j < a.sizes.size(); ++j) {
            cols[0][j] = static_cast<double>(a.sizes[j]);
            for (std::size_t i = 0; i < table.size() && i <= j; ++i) cols[i + 1][j] = table[i][j - i];
        }
        std::vector<const std::vector<double>*> ptrs;
        for (const auto& c : cols) ptrs.push_back(&c);
        return write_csv(os, header, ptrs);
    }

    const auto n = parse_count(a.n, "--n");
    if (s.back() / (2.0 * static_cast<double>(n)) >= 0.5) throw UsageError("s range too large for --n");
    const auto E = gap_probability_curve(s, n);
    const auto p = gradient(gradient(E, s), s);
    write_csv(os, {"s", "E", "p"}, {&s, &E, &p});
}

void cmd_zeta(const ZetaArgs& a, std::ostream& os) {
    const Range bins = parse_range(a.bins, "--bins");
    const auto d = zeta_normalized_spacings(load_zeros(a.file, a.offset));
    if (a.raw) return write_samples(os, d);
    write_histogram(os, histogram_density(d, make_edges(bins.lo, bins.step, bins.hi)));
}

void cmd_compare(const CompareArgs& a, std::ostream& os) {
    const CsvTable h = read_csv(a.histogram);
    const CsvTable c = read_csv(a.curve);
    if (c.header.size() < 2) throw UsageError("curve CSV needs at least two columns");
    const auto& hx = column(h, a.hist_x, a.histogram);
    const auto& hy = column(h, a.hist_y, a.histogram);
    const auto& cx = column(c, a.curve_x.empty() ? c.header[0] : a.curve_x, a.curve);
    const auto& cy = column(c, a.curve_y.empty() ? c.header[1] : a.curve_y, a.curve);
    double sup = 0.0, where = std::nan("");
    for (std::size_t i = 0; i < hx.size(); ++i) {
        const double diff = std::fabs(hy[i] - interpolate_linear(cx, cy, hx[i], 0.0));
        if (diff > sup || std::isnan(where)) {
            sup = diff;
            where = hx[i];
        }
    }
    os << "sup_norm,at,bins\n" << fmt(sup) << ',' << fmt(where) << ',' << hx.size() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"rmtlab: eigenvalue statistics of random-matrix beta-ensembles"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--out,-o", common.out_path, "Write CSV here instead of stdout");
    app.add_option("--threads", common.threads, "Worker threads (default: RMT_THREADS or all cores)");

    LargestArgs largest;
    auto* c_largest = app.add_subcommand("largest-sim", "Histogram of the scaled largest eigenvalue");
    c_largest->add_option("--n", largest.n, "Matrix size; n >= 1e6 uses the truncated large-n sampler")
        ->capture_default_str();
    c_largest->add_option("--trials", largest.trials, "Number of draws")->capture_default_str();
    c_largest->add_option("--beta", largest.beta, "1, 2 or 4")->capture_default_str();
    c_largest->add_option("--seed", largest.seed, "Master seed; trial i uses stream i")->capture_default_str();
    c_largest->add_option("--bins", largest.bins, "lo:step:hi bin edges")->capture_default_str();
    c_largest->add_option("--cutoff", largest.cutoff, "Truncation size (default round(10 n^(1/3)))");
    c_largest->add_flag("--raw", largest.raw, "Emit the scaled samples instead of a histogram");

    Painleve2Options p2;
    auto* c_tw = app.add_subcommand("tracy-widom", "Tracy-Widom F and f curves from Painleve II");
    c_tw->add_option("--s0", p2.s0, "Start of the backward integration")->capture_default_str();
    c_tw->add_option("--sn", p2.sn, "End of the integration")->capture_default_str();
    c_tw->add_option("--points", p2.grid_points, "Output grid points")->capture_default_str();
    c_tw->add_option("--reltol", p2.reltol)->capture_default_str();
    c_tw->add_option("--abstol", p2.abstol)->capture_default_str();

    SpacingArgs spacing;
    auto* c_sp = app.add_subcommand("spacing-sim", "Histogram of normalized bulk eigenvalue spacings");
    c_sp->add_option("--n", spacing.n, "Matrix size (even)")->capture_default_str();
    c_sp->add_option("--trials", spacing.trials)->capture_default_str();
    c_sp->add_option("--beta", spacing.beta)->capture_default_str();
    c_sp->add_option("--seed", spacing.seed)->capture_default_str();
    c_sp->add_option("--bins", spacing.bins, "lo:step:hi bin edges")->capture_default_str();
    c_sp->add_flag("--raw", spacing.raw, "Emit the spacings instead of a histogram");

    Painleve5Options p5;
    auto* c_g = app.add_subcommand("gaudin", "Gap probability E(s) and spacing density p(s) from Painleve V");
    c_g->add_option("--t0", p5.t0)->capture_default_str();
    c_g->add_option("--tn", p5.tn)->capture_default_str();
    c_g->add_option("--points", p5.grid_points)->capture_default_str();
    c_g->add_option("--reltol", p5.reltol)->capture_default_str();
    c_g->add_option("--abstol", p5.abstol)->capture_default_str();

    ProlateArgs prolate;
    auto* c_pr = app.add_subcommand("prolate", "Gap probability from prolate matrix eigenvalues");
    c_pr->add_option("--n", prolate.n, "Matrix size for the single-size curve")->capture_default_str();
    c_pr->add_option("--s", prolate.s, "lo:step:hi s-grid")->capture_default_str();
    c_pr->add_flag("--table1", prolate.table1, "Error table of Richardson stages against Painleve V");
    c_pr->add_flag("--extrapolate", prolate.extrapolate, "Curves for every size plus the extrapolation");
    c_pr->add_option("--sizes", prolate.sizes, "Doubling sizes for --table1/--extrapolate")
        ->delimiter(',')
        ->capture_default_str();

    ZetaArgs zeta;
    auto* c_z = app.add_subcommand("zeta-spacings", "Histogram of unfolded zeta-zero spacings");
    c_z->add_option("--file", zeta.file, "Zero table, one ordinate per line")->required();
    c_z->add_option("--offset", zeta.offset, "Added to stored ordinates before unfolding")->capture_default_str();
    c_z->add_option("--bins", zeta.bins, "lo:step:hi bin edges")->capture_default_str();
    c_z->add_flag("--raw", zeta.raw, "Emit the spacings instead of a histogram");

    CompareArgs compare;
    auto* c_c = app.add_subcommand("compare", "Sup-norm distance between a histogram CSV and a curve CSV");
    c_c->add_option("--histogram", compare.histogram)->required();
    c_c->add_option("--curve", compare.curve)->required();
    c_c->add_option("--hist-x", compare.hist_x)->capture_default_str();
    c_c->add_option("--hist-y", compare.hist_y)->capture_default_str();
    c_c->add_option("--curve-x", compare.curve_x, "Default: first column");
    c_c->add_option("--curve-y", compare.curve_y, "Default: second column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "rmtlab: " << e.what() << '\n';
        return 2;
    }

    try {
        if (common.threads > 0) {
            set_thread_count(common.threads);
        } else if (const char* env = std::getenv("RMT_THREADS")) {
            const int t = std::atoi(env);
            if (t < 1) throw UsageError("RMT_THREADS must be a positive integer");
            set_thread_count(t);
        }

        std::ostringstream buffer;
        if (c_largest->parsed()) cmd_largest(largest, buffer);
        else if (c_tw->parsed()) cmd_tracy_widom(p2, buffer);
        else if (c_sp->parsed()) cmd_spacing(spacing, buffer);
        else if (c_g->parsed()) cmd_gaudin(p5, buffer);
        else if (c_pr->parsed()) cmd_prolate(prolate, buffer);
        else if (c_z->parsed()) cmd_zeta(zeta, buffer);
        else if (c_c->parsed()) cmd_compare(compare, buffer);

        if (common.out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream f(common.out_path, std::ios::binary);
            if (!f) throw DataError("cannot write " + common.out_path);
            f << buffer.str();
        }
        return 0;
    } catch (const UsageError& e) {
        err << "rmtlab: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "rmtlab: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace rmt::cli
