// eigencone: verification CLI for the isoparametric-cubic cone fields.
//
// Subcommands produce machine-readable JSON/CSV reports; exit status is
// 0 on success, 1 on a verification failure, 2 on usage errors.

#include "eigencone/cone_calculus.hpp"
#include "eigencone/cubics.hpp"
#include "eigencone/field.hpp"
#include "eigencone/hyperbolicity.hpp"
#include "eigencone/json_io.hpp"
#include "eigencone/spectra.hpp"
#include "eigencone/symmetry.hpp"
#include "eigencone/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace eigencone;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
    if (text.empty() || text.back() != '\n') os << '\n';
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_verify_symbolic(const std::string& output) {
    Stopwatch sw;
    Json j;
    j["command"] = "verify-symbolic";
    j["version"] = kVersion;
    Json reports = Json::array();
    bool all_harmonic = true;
    bool p5_ok = false;
    std::string first_fail;
    const std::pair<std::string, Polynomial> cubics[] = {
        {"P5", cartan_p5()},
        {"P4", lawson_p4()},
        {"P12", quaternion_p12()},
        {"P24", octonion_p24()},
    };
    for (const auto& [name, poly] : cubics) {
        const EigencubicReport rep = analyze_cubic(poly);
        all_harmonic = all_harmonic && rep.is_harmonic;
        if (name == "P5") {
            p5_ok = rep.is_harmonic && rep.munzner_gradient_constant &&
                    *rep.munzner_gradient_constant == Scalar::integer(9) && rep.weight &&
                    *rep.weight == Scalar::integer(-54);
        }
        if (!rep.residual_zero && first_fail.empty() && !rep.residual_lead.empty())
            first_fail = name + ": residual lead term " + rep.residual_lead;
        reports.push_back(eigencubic_to_json(name, rep));
    }
    j["reports"] = std::move(reports);
    const bool pass = p5_ok && all_harmonic;
    j["pass"] = pass;
    j["wall_clock_ms"] = sw.ms();
    write_output(j.dump(2), output);
    if (!pass) {
        std::cerr << "verify-symbolic: FAILED";
        if (!first_fail.empty()) std::cerr << " (" << first_fail << ")";
        std::cerr << "\n";
        return 1;
    }
    std::cerr << "verify-symbolic: ok\n";
    return 0;
}

int cmd_spectrum(int grid, const std::vector<double>& point, double tol, const std::string& output) {
    Stopwatch sw;
    const FieldSpec& w5 = cartan_field();
    std::string csv = "p,l1,l2,l3,l4,l5,cf1,cf2,cf3,cf4,cf5,max_abs_diff\n";
    double worst = 0.0;
    Matrix h(5, 5);
    auto emit_row = [&](double p, std::span<const double> x) {
        w5.hessian(x, h);
        const auto ev = jacobi_eigenvalues_desc(h);
        const auto cf = closed_form_spectrum(p);
        double diff = 0.0;
        for (int i = 0; i < 5; ++i)
            diff = std::max(diff, std::fabs(ev[static_cast<size_t>(i)] - cf.lambda[static_cast<size_t>(i)]));
        worst = std::max(worst, diff);
        csv += fmt_double(p);
        for (double v : ev) csv += "," + fmt_double(v);
        for (double v : cf.lambda) csv += "," + fmt_double(v);
        csv += "," + fmt_double(diff) + "\n";
    };
    if (!point.empty()) {
        const NormalForm nf = normal_form_of(point);
        emit_row(nf.p, point);
    } else {
        for (int k = 0; k < grid; ++k) {
            const double p = -1.0 + 2.0 * k / (grid - 1);
            const double q = std::sqrt(std::max(0.0, 1.0 - p * p));
            const double x[5] = {p, 0.0, q, 0.0, 0.0};
            emit_row(p, x);
        }
    }
    write_output(csv, output);
    const bool pass = worst <= tol;
    std::cerr << "spectrum: max |numeric - closed_form| = " << fmt_double(worst)
              << (pass ? " <= " : " > ") << fmt_double(tol) << " [" << (pass ? "ok" : "FAILED")
              << ", " << sw.ms() << " ms]\n";
    return pass ? 0 : 1;
}

struct FamilyArgs {
    std::string field = "w5";
    uint64_t samples = 10000;
    uint64_t restarts = 0;
    uint64_t seed = 42;
    double delta = 1.0;
    double big_m = 100.0;
    double tol = 1e-8;
    std::vector<double> band{0.05, 20.0};
    int threads = 0;
    std::string output;
    std::string format = "json";
};

int cmd_certify(const FamilyArgs& a) {
    Stopwatch sw;
    const Band band{a.band[0], a.band[1]};
    Json j;
    j["command"] = "certify";
    j["version"] = kVersion;
    j["field"] = a.field;
    j["seed"] = a.seed;
    j["band"] = Json::array({band.lo, band.hi});
    j["tol"] = a.tol;

    std::string csv;
    SampleOptions sopt;
    sopt.threads = a.threads;
    sopt.prop41_tol = a.tol;
    sopt.csv = a.format == "csv" ? &csv : nullptr;

    SearchReport sample;
    if (a.field == "u10") {
        sopt.assert_signs = true;
        sample = u10_certify(a.delta, a.big_m, a.samples, a.seed, sopt);
    } else {
        FieldSpec f = a.field == "w4"      ? make_w4()
                      : a.field == "w5"    ? make_w5()
                                           : make_w5_delta(a.delta);
        sopt.check_prop41 = a.field == "w5";
        sample = sample_certify(f, a.samples, a.seed, band, sopt);
    }
    j["sample"] = search_report_to_json(sample);

    bool pass = sample.pass();
    if (a.restarts > 0 && a.field != "u10") {
        FieldSpec f = a.field == "w4"      ? make_w4()
                      : a.field == "w5"    ? make_w5()
                                           : make_w5_delta(a.delta);
        SearchOptions wopt;
        wopt.threads = a.threads;
        const SearchReport search = worst_case_search(f, a.restarts, a.seed, band, wopt);
        j["search"] = search_report_to_json(search);
        pass = pass && search.pass();
    }
    j["pass"] = pass;
    j["wall_clock_ms"] = sw.ms();
    if (a.format == "csv") {
        write_output("index,p,p_bar,lambda_top,lambda_bottom,ratio\n" + csv, a.output);
        std::cout << j.dump(2) << "\n";
    } else {
        write_output(j.dump(2), a.output);
    }
    std::cerr << "certify " << a.field << ": " << (pass ? "ok" : "FAILED") << " ["
              << sample.n_samples << " samples, " << sw.ms() << " ms]\n";
    return pass ? 0 : 1;
}

int cmd_witness_lawson(const FamilyArgs& a) {
    Stopwatch sw;
    SearchOptions wopt;
    wopt.threads = a.threads;
    const SearchReport rep = witness_search_lawson(a.restarts, a.seed, wopt);
    const bool found = !rep.violations.empty();
    Json j;
    j["command"] = "witness-lawson";
    j["version"] = kVersion;
    j["seed"] = a.seed;
    j["witness_found"] = found;
    j["report"] = search_report_to_json(rep);
    j["wall_clock_ms"] = sw.ms();
    write_output(j.dump(2), a.output);
    std::cerr << "witness-lawson: " << (found ? "witness found" : "NO WITNESS") << " ["
              << rep.restarts << " restarts, " << sw.ms() << " ms]\n";
    return found ? 0 : 1;
}

int cmd_scan_delta(const std::vector<double>& deltas, const FamilyArgs& a) {
    Stopwatch sw;
    SampleOptions sopt;
    sopt.threads = a.threads;
    const auto reports = delta_scan(deltas, a.samples, a.seed, sopt);
    if (a.format == "csv") {
        std::string csv = "delta,samples,n_excluded,n_sign_defect,min_ratio,max_ratio\n";
        for (const auto& r : reports) {
            csv += fmt_double(r.delta) + "," + std::to_string(r.n_samples) + "," +
                   std::to_string(r.n_excluded) + "," + std::to_string(r.n_sign_defect) + "," +
                   fmt_double(r.min_ratio) + "," + fmt_double(r.max_ratio) + "\n";
        }
        write_output(csv, a.output);
    } else {
        Json j;
        j["command"] = "scan-delta";
        j["version"] = kVersion;
        j["seed"] = a.seed;
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(search_report_to_json(r));
        j["reports"] = std::move(arr);
        j["wall_clock_ms"] = sw.ms();
        write_output(j.dump(2), a.output);
    }
    std::cerr << "scan-delta: " << reports.size() << " exponent(s), " << sw.ms() << " ms\n";
    return 0;
}

int cmd_u10(const FamilyArgs& a) {
    Stopwatch sw;
    SampleOptions sopt;
    sopt.threads = a.threads;
    const SearchReport rep = u10_certify(a.delta, a.big_m, a.samples, a.seed, sopt);
    Json j;
    j["command"] = "u10";
    j["version"] = kVersion;
    j["seed"] = a.seed;
    j["report"] = search_report_to_json(rep);
    j["wall_clock_ms"] = sw.ms();
    write_output(j.dump(2), a.output);
    std::cerr << "u10: " << rep.n_samples << " samples, " << rep.n_sign_defect
              << " sign defect(s), " << sw.ms() << " ms\n";
    return 0;
}

int cmd_eval(const std::string& field, const std::vector<double>& point, double delta, double big_m) {
    double value = 0.0;
    if (field == "u10") {
        if (point.size() != 10) throw CLI::ValidationError("--point", "u10 needs a 10-vector");
        value = AugmentedField(delta, big_m).eval(point);
    } else {
        FieldSpec f = field == "w4"   ? make_w4()
                      : field == "w5" ? make_w5()
                                      : make_w5_delta(delta);
        if (static_cast<int>(point.size()) != f.dim())
            throw CLI::ValidationError("--point", "point dimension does not match the field");
        value = f.eval(point);
    }
    std::cout << fmt_double(value) << "\n";
    return 0;
}

int cmd_dump(const std::string& name, const std::string& output) {
    Polynomial p = name == "p5"    ? cartan_p5()
                   : name == "p4"  ? lawson_p4()
                   : name == "p12" ? quaternion_p12()
                                   : octonion_p24();
    write_output(p.to_text(), output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for isoparametric-cubic cone fields"};
    app.require_subcommand(1);

    // verify-symbolic
    std::string vs_output;
    auto* vs = app.add_subcommand("verify-symbolic",
                                  "exact polynomial identities for the four cubics");
    vs->add_option("--output", vs_output, "report file (default: stdout)");

    // spectrum
    int sp_grid = 0;
    std::vector<double> sp_point;
    double sp_tol = 1e-9;
    std::string sp_output;
    auto* sp = app.add_subcommand("spectrum", "numeric vs closed-form Hessian spectra");
    auto* sp_grid_opt = sp->add_option("--grid", sp_grid, "grid size over p in [-1, 1]")
                            ->check(CLI::Range(2, 100000000));
    auto* sp_point_opt =
        sp->add_option("--point", sp_point, "unit 5-vector")->expected(5)->excludes(sp_grid_opt);
    sp_grid_opt->excludes(sp_point_opt);
    sp->add_option("--tol", sp_tol, "max allowed |numeric - closed form|");
    sp->add_option("--output", sp_output, "CSV file (default: stdout)");

    // shared family options builder
    FamilyArgs cert, lawson, scan, u10a;
    std::vector<double> scan_deltas;
    auto add_family_opts = [](CLI::App* cmd, FamilyArgs& a, bool with_field) {
        if (with_field)
            cmd->add_option("--field", a.field, "w5 | w4 | w5_delta | u10")
                ->check(CLI::IsMember({"w5", "w4", "w5_delta", "u10"}));
        cmd->add_option("--samples", a.samples, "number of sampled members");
        cmd->add_option("--seed", a.seed, "master seed")->envname("EIGENCONE_SEED");
        cmd->add_option("--threads", a.threads, "worker threads (0 = hardware)");
        cmd->add_option("--output", a.output, "report file (default: stdout)");
    };

    auto* ct = app.add_subcommand("certify", "sample (and optionally search) a difference family");
    add_family_opts(ct, cert, true);
    ct->add_option("--restarts", cert.restarts, "worst-case search restarts (0 = skip)");
    ct->add_option("--band", cert.band, "asserted ratio band LO HI")->expected(2);
    ct->add_option("--delta", cert.delta, "exponent for w5_delta / u10");
    ct->add_option("--big-m", cert.big_m, "quadratic coefficient for u10");
    ct->add_option("--tol", cert.tol, "tolerance for the per-sample inequality checks")
        ->check(CLI::PositiveNumber);
    ct->add_option("--format", cert.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* wl = app.add_subcommand("witness-lawson", "hunt a non-hyperbolicity witness in the R^4 family");
    lawson.restarts = 200;
    wl->add_option("--restarts", lawson.restarts, "search restarts");
    wl->add_option("--seed", lawson.seed, "master seed")->envname("EIGENCONE_SEED");
    wl->add_option("--threads", lawson.threads, "worker threads (0 = hardware)");
    wl->add_option("--output", lawson.output, "report file (default: stdout)");

    auto* sd = app.add_subcommand("scan-delta", "exploratory ratio extremes for exponents > 1");
    add_family_opts(sd, scan, false);
    sd->add_option("--delta", scan_deltas, "exponents >= 1 (repeatable)")->required()->expected(-1);
    sd->add_option("--format", scan.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* u10c = app.add_subcommand("u10", "sample the 10-dimensional augmented family");
    add_family_opts(u10c, u10a, false);
    u10a.delta = 1e-6;
    u10c->add_option("--delta", u10a.delta, "denominator exponent");
    u10c->add_option("--big-m", u10a.big_m, "quadratic coefficient");

    // eval
    std::string ev_field = "w5";
    std::vector<double> ev_point;
    double ev_delta = 1.0, ev_bigm = 100.0;
    auto* ev = app.add_subcommand("eval", "evaluate a field at a point");
    ev->add_option("--field", ev_field, "w5 | w4 | w5_delta | u10")
        ->check(CLI::IsMember({"w5", "w4", "w5_delta", "u10"}));
    ev->add_option("--point", ev_point, "point coordinates")->required()->expected(-1);
    ev->add_option("--delta", ev_delta, "exponent for w5_delta / u10");
    ev->add_option("--big-m", ev_bigm, "quadratic coefficient for u10");

    // dump
    std::string dp_name = "p5", dp_output;
    auto* dp = app.add_subcommand("dump", "exact text form of a constructor cubic");
    dp->add_option("--poly", dp_name, "p5 | p4 | p12 | p24")
        ->check(CLI::IsMember({"p5", "p4", "p12", "p24"}));
    dp->add_option("--output", dp_output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(vs)) return cmd_verify_symbolic(vs_output);
        if (app.got_subcommand(sp)) {
            if (sp_point.empty() && sp_grid < 2) {
                std::cerr << "spectrum: need --grid N (N >= 2) or --point\n";
                return 2;
            }
            if (!sp_point.empty() && std::fabs(eigencone::norm(sp_point) - 1.0) > 1e-6) {
                std::cerr << "spectrum: --point must lie on the unit sphere\n";
                return 2;
            }
            return cmd_spectrum(sp_grid, sp_point, sp_tol, sp_output);
        }
        if (app.got_subcommand(ct)) return cmd_certify(cert);
        if (app.got_subcommand(wl)) return cmd_witness_lawson(lawson);
        if (app.got_subcommand(sd)) return cmd_scan_delta(scan_deltas, scan);
        if (app.got_subcommand(u10c)) return cmd_u10(u10a);
        if (app.got_subcommand(ev)) return cmd_eval(ev_field, ev_point, ev_delta, ev_bigm);
        if (app.got_subcommand(dp)) return cmd_dump(dp_name, dp_output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
