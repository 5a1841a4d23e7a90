#pragma once

#include "eigencone/field.hpp"
#include "eigencone/matrix.hpp"
#include "eigencone/rng.hpp"
#include "eigencone/spectra.hpp"
#include "eigencone/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace eigencone {

/// Members with ||M||_F at or below this are treated as the zero matrix
/// and excluded from ratio statistics.
inline constexpr double kExcludeEps = 1e-8;

struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

/**
 * One member of the difference family M(x, y, O) = H(x) - O^T H(y) O over
 * unit x, y and orthogonal O, where H is the field Hessian. The ratio
 * -top/bottom is populated only when top > 0 > bottom.
 */
struct FamilyMember {
    std::vector<double> x, y;
    Matrix O;
    Matrix M;
    Spectrum spectrum;
    std::optional<double> ratio;
    double norm = 0.0;
    bool excluded = false;
};

namespace detail {

/// m = hx - o^T hy o, using t as scratch; no allocation when shapes match.
inline void difference_into(const Matrix& hx, const Matrix& hy, const Matrix& o, Matrix& t, Matrix& m) {
    const int n = hx.rows();
    if (t.rows() != n || t.cols() != n) t = Matrix(n, n);
    if (m.rows() != n || m.cols() != n) m = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += hy(i, k) * o(k, j);
            t(i, j) = s;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += o(k, i) * t(k, j);
            m(i, j) = hx(i, j) - s;
        }
}

}  // namespace detail

template <class Model>
FamilyMember family_member_of(const Model& model, std::span<const double> x, std::span<const double> y,
                              const Matrix& o) {
    const int n = model.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("family_member: point dimension mismatch");
    if (std::fabs(norm(x) - 1.0) > 1e-10 || std::fabs(norm(y) - 1.0) > 1e-10)
        throw std::invalid_argument("family_member: points must be unit vectors");
    if (o.rows() != n || o.cols() != n || orthogonality_defect(o) > 1e-10)
        throw std::invalid_argument("family_member: O is not orthogonal");

    FamilyMember fm;
    fm.x.assign(x.begin(), x.end());
    fm.y.assign(y.begin(), y.end());
    fm.O = o;
    Matrix hx(n, n), hy(n, n), t(n, n);
    model.hessian(x, hx);
    model.hessian(y, hy);
    detail::difference_into(hx, hy, o, t, fm.M);
    fm.norm = frobenius_norm(fm.M);
    fm.excluded = fm.norm <= kExcludeEps;
    fm.spectrum = eigenvalues(fm.M);
    const double top = fm.spectrum.top(), bot = fm.spectrum.bottom();
    if (!fm.excluded && top > 0.0 && bot < 0.0) fm.ratio = -top / bot;
    return fm;
}

/// Model adapters: anything with dim(), hessian(point, out), admissible(point).
struct FieldModel {
    const FieldSpec* field;
    [[nodiscard]] int dim() const { return field->dim(); }
    void hessian(std::span<const double> x, Matrix& h) const { field->hessian(x, h); }
    [[nodiscard]] bool admissible(std::span<const double>) const { return true; }
};

struct AugmentedModel {
    const AugmentedField* field;
    [[nodiscard]] int dim() const { return 10; }
    void hessian(std::span<const double> x, Matrix& h) const { field->hessian(x, h); }
    [[nodiscard]] bool admissible(std::span<const double> x) const { return field->admissible(x); }
};

inline FamilyMember family_member(const FieldSpec& f, std::span<const double> x, std::span<const double> y,
                                  const Matrix& o) {
    return family_member_of(FieldModel{&f}, x, y, o);
}

/**
 * The inequality chain behind the [1/20, 20] ratio bound, evaluated on one
 * member of the R^5 family. The member is mirrored (x and y exchanged,
 * which negates and reverses the spectrum) when needed so that p >= p_bar.
 * minus_l5_ge_4l1 reports the literal printed inequality of the source
 * derivation; it fails on eigenvector-aligned members and is data only.
 */
struct Prop41Record {
    double p = 0.0, p_bar = 0.0;
    bool mirrored = false;
    double lambda_top = 0.0, lambda_bottom = 0.0, trace = 0.0;
    bool lambda1_bound = false;   // lambda_top    >= 3 (p - p_bar) / 2
    bool lambda5_bound = false;   // -lambda_bottom >= 3 (p - p_bar)
    bool trace_bound = false;     // 0 <= -trace <= 24 (p - p_bar)
    bool minus_l5_ge_4l1 = false;
    [[nodiscard]] bool all_displayed_hold() const { return lambda1_bound && lambda5_bound && trace_bound; }
};

namespace detail {

inline Prop41Record prop41_from(double p, double p_bar, double top, double bottom, double trace,
                                double tol) {
    Prop41Record rec;
    rec.mirrored = p < p_bar;
    if (rec.mirrored) {
        std::swap(p, p_bar);
        const double t = top;
        top = -bottom;
        bottom = -t;
        trace = -trace;
    }
    rec.p = p;
    rec.p_bar = p_bar;
    rec.lambda_top = top;
    rec.lambda_bottom = bottom;
    rec.trace = trace;
    const double d = p - p_bar;
    rec.lambda1_bound = top >= 1.5 * d - tol;
    rec.lambda5_bound = -bottom >= 3.0 * d - tol;
    rec.trace_bound = (-trace >= -tol) && (-trace <= 24.0 * d + tol);
    rec.minus_l5_ge_4l1 = -bottom >= 4.0 * top - tol;
    return rec;
}

}  // namespace detail

inline Prop41Record prop41_inequalities(const FieldSpec& f, std::span<const double> x,
                                        std::span<const double> y, const Matrix& o,
                                        double tol = 1e-8) {
    if (f.dim() != 5 || std::fabs(f.delta() - 1.0) > 0.0)
        throw std::invalid_argument("prop41_inequalities: requires the R^5 field with delta = 1");
    const FamilyMember fm = family_member(f, x, y, o);
    if (fm.excluded) throw std::invalid_argument("prop41_inequalities: member is excluded (M ~ 0)");
    const double p = normal_form_of(x).p;
    const double pb = normal_form_of(y).p;
    return detail::prop41_from(p, pb, fm.spectrum.top(), fm.spectrum.bottom(), fm.spectrum.sum(), tol);
}

// ---------------------------------------------------------------------------
// Sampling and search reports
// ---------------------------------------------------------------------------

struct MemberSummary {
    uint64_t index = 0;
    double ratio = 0.0;
    double lambda_top = 0.0;
    double lambda_bottom = 0.0;
    double trace = 0.0;
    double p = std::numeric_limits<double>::quiet_NaN();
    double p_bar = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> spectrum;  // descending
    bool valid = false;
};

struct ViolationRecord {
    uint64_t index = 0;
    std::string kind;  // "band" | "sign" | "prop41"
    double ratio = 0.0;
    std::vector<double> spectrum;  // descending
};

struct SearchReport {
    std::string field_name;
    std::string mode;  // "sample" or "search"
    uint64_t seed = 0;
    uint64_t n_samples = 0;
    uint64_t restarts = 0;
    uint64_t evals = 0;
    double delta = 1.0;
    double big_m = 0.0;
    Band band{};
    bool band_asserted = true;
    double eps_exclude = kExcludeEps;
    uint64_t n_excluded = 0;
    uint64_t n_sign_defect = 0;
    uint64_t prop41_checked = 0;
    uint64_t prop41_failed = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = -std::numeric_limits<double>::infinity();
    MemberSummary argmin, argmax;
    std::vector<ViolationRecord> violations;

    [[nodiscard]] bool pass() const { return violations.empty(); }

    void consider(const MemberSummary& s) {
        if (!s.valid) return;
        if (!argmin.valid || s.ratio < min_ratio || (s.ratio == min_ratio && s.index < argmin.index)) {
            min_ratio = s.ratio;
            argmin = s;
        }
        if (!argmax.valid || s.ratio > max_ratio || (s.ratio == max_ratio && s.index < argmax.index)) {
            max_ratio = s.ratio;
            argmax = s;
        }
    }

    /// Associative, commutative merge; ties broken by member index.
    void merge(const SearchReport& o) {
        n_samples += o.n_samples;
        restarts += o.restarts;
        evals += o.evals;
        n_excluded += o.n_excluded;
        n_sign_defect += o.n_sign_defect;
        prop41_checked += o.prop41_checked;
        prop41_failed += o.prop41_failed;
        consider(o.argmin);
        consider(o.argmax);
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

struct SampleOptions {
    int threads = 1;
    bool assert_band = true;
    bool assert_signs = true;
    bool check_prop41 = false;
    double prop41_tol = 1e-8;
    std::string* csv = nullptr;  // per-sample "index,p,p_bar,l_top,l_bottom,ratio" rows
};

namespace detail {

inline int clamp_threads(int requested, uint64_t n) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<uint64_t>(t) > n && n > 0) t = static_cast<int>(n);
    return t;
}

inline void append_csv_row(std::string& out, uint64_t index, double p, double pb, double top,
                           double bottom, double ratio) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%llu,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  static_cast<unsigned long long>(index), p, pb, top, bottom, ratio);
    out += buf;
}

template <class Model>
void sample_chunk(const Model& model, uint64_t seed, uint64_t begin, uint64_t end, const Band& band,
                  const SampleOptions& opts, bool with_normal_form, SearchReport& rep,
                  std::string* csv) {
    const int n = model.dim();
    Matrix hx(n, n), hy(n, n), t(n, n), m(n, n);
    std::vector<double> x, y;
    for (uint64_t i = begin; i < end; ++i) {
        SampleRng rng(seed, i);
        do { x = rng.unit_vector(n); } while (!model.admissible(x));
        do { y = rng.unit_vector(n); } while (!model.admissible(y));
        const Matrix o = rng.haar_orthogonal(n);

        model.hessian(x, hx);
        model.hessian(y, hy);
        difference_into(hx, hy, o, t, m);
        ++rep.n_samples;
        if (frobenius_norm(m) <= kExcludeEps) {
            ++rep.n_excluded;
            continue;
        }
        const auto ev = jacobi_eigenvalues_desc(m);
        const double top = ev.front(), bottom = ev.back();
        double trace = 0.0;
        for (double v : ev) trace += v;

        MemberSummary s;
        s.index = i;
        s.lambda_top = top;
        s.lambda_bottom = bottom;
        s.trace = trace;
        s.spectrum = ev;

        if (!(top > 0.0 && bottom < 0.0)) {
            ++rep.n_sign_defect;
            if (opts.assert_signs)
                rep.violations.push_back({i, "sign", 0.0, ev});
            if (csv) append_csv_row(*csv, i, s.p, s.p_bar, top, bottom,
                                    std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        s.ratio = -top / bottom;
        s.valid = true;

        if (with_normal_form) {
            s.p = normal_form_of(x).p;
            s.p_bar = normal_form_of(y).p;
        }
        if (opts.check_prop41) {
            ++rep.prop41_checked;
            const auto rec = prop41_from(s.p, s.p_bar, top, bottom, trace, opts.prop41_tol);
            if (!rec.all_displayed_hold()) {
                ++rep.prop41_failed;
                rep.violations.push_back({i, "prop41", s.ratio, ev});
            }
        }
        if (opts.assert_band && !(s.ratio >= band.lo && s.ratio <= band.hi))
            rep.violations.push_back({i, "band", s.ratio, ev});

        rep.consider(s);
        if (csv) append_csv_row(*csv, i, s.p, s.p_bar, top, bottom, s.ratio);
    }
}

template <class Model>
SearchReport sample_family(const Model& model, std::string field_name, uint64_t n, uint64_t seed,
                           Band band, const SampleOptions& opts, bool with_normal_form) {
    if (n < 1) throw std::invalid_argument("sample_family: need n >= 1");
    const int threads = clamp_threads(opts.threads, n);
    std::vector<SearchReport> parts(static_cast<size_t>(threads));
    std::vector<std::string> csv_parts(static_cast<size_t>(opts.csv ? threads : 0));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        const uint64_t begin = n * static_cast<uint64_t>(t) / threads;
        const uint64_t end = n * (static_cast<uint64_t>(t) + 1) / threads;
        std::string* csv = opts.csv ? &csv_parts[static_cast<size_t>(t)] : nullptr;
        pool.emplace_back([&, t, begin, end, csv] {
            sample_chunk(model, seed, begin, end, band, opts, with_normal_form,
                         parts[static_cast<size_t>(t)], csv);
        });
    }
    for (auto& th : pool) th.join();

    SearchReport rep;
    rep.field_name = std::move(field_name);
    rep.mode = "sample";
    rep.seed = seed;
    rep.band = band;
    rep.band_asserted = opts.assert_band;
    for (const auto& part : parts) rep.merge(part);
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const ViolationRecord& a, const ViolationRecord& b) { return a.index < b.index; });
    if (opts.csv)
        for (auto& part : csv_parts) *opts.csv += part;
    return rep;
}

}  // namespace detail

inline std::string field_label(const FieldSpec& f) {
    if (f.dim() == 5 && f.delta() == 1.0) return "w5";
    if (f.dim() == 4 && f.delta() == 1.0) return "w4";
    if (f.dim() == 5) return "w5_delta";
    return "field" + std::to_string(f.dim());
}

/// Monte Carlo certification: n members with x, y uniform on the sphere and
/// O Haar on O(n), deterministic given the seed irrespective of threads.
/// For the R^5 delta = 1 field the inequality chain is checked per sample
/// when opts.check_prop41 is set.
inline SearchReport sample_certify(const FieldSpec& f, uint64_t n, uint64_t seed, Band band,
                                   SampleOptions opts = {}) {
    const bool is_w5 = f.dim() == 5 && f.delta() == 1.0;
    if (opts.check_prop41 && !is_w5)
        throw std::invalid_argument("sample_certify: prop41 checks require the R^5 delta=1 field");
    const bool with_nf = is_w5 && (opts.check_prop41 || opts.csv != nullptr);
    auto rep = detail::sample_family(FieldModel{&f}, field_label(f), n, seed, band, opts, with_nf);
    rep.delta = f.delta();
    return rep;
}

// ---------------------------------------------------------------------------
// Derivative-free worst-case search
// ---------------------------------------------------------------------------

struct SearchOptions {
    int threads = 1;
    bool assert_band = true;
    bool stop_on_witness = false;  // finish a restart once a violation is found
    uint64_t max_evals_per_start = 60000;
    double step0 = 0.3;
    double step_min = 1e-6;
};

namespace detail {

struct Probe {
    bool valid = false;
    bool sign_defect = false;
    double ratio = 0.0;
    double top = 0.0, bottom = 0.0, trace = 0.0;
    std::vector<double> spectrum;
};

/// Parameter layout: x (n) | y (n) | skew entries (n(n-1)/2); O = exp(S)
/// optionally composed with the reflection diag(-1, 1, ..., 1).
template <class Model>
Probe probe_member(const Model& model, std::span<const double> params, bool reflect, Matrix& hx,
                   Matrix& hy, Matrix& t, Matrix& m) {
    const int n = model.dim();
    Probe pr;
    std::vector<double> x(params.begin(), params.begin() + n);
    std::vector<double> y(params.begin() + n, params.begin() + 2 * n);
    const double nx = norm(x), ny = norm(y);
    if (nx < 1e-8 || ny < 1e-8) return pr;
    for (auto& v : x) v /= nx;
    for (auto& v : y) v /= ny;
    if (!model.admissible(x) || !model.admissible(y)) return pr;
    Matrix s(n, n);
    int k = 2 * n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            s(i, j) = params[static_cast<size_t>(k)];
            s(j, i) = -params[static_cast<size_t>(k)];
        }
    Matrix o = expm_skew(s);
    if (reflect)
        for (int j = 0; j < n; ++j) o(0, j) = -o(0, j);
    model.hessian(x, hx);
    model.hessian(y, hy);
    difference_into(hx, hy, o, t, m);
    if (frobenius_norm(m) <= kExcludeEps) return pr;
    pr.spectrum = jacobi_eigenvalues_desc(m);
    pr.top = pr.spectrum.front();
    pr.bottom = pr.spectrum.back();
    for (double v : pr.spectrum) pr.trace += v;
    if (!(pr.top > 0.0 && pr.bottom < 0.0)) {
        pr.sign_defect = frobenius_norm(m) > 1e-6;
        pr.valid = pr.sign_defect;
        return pr;
    }
    pr.valid = true;
    pr.ratio = -pr.top / pr.bottom;
    return pr;
}

template <class Model>
void search_restart(const Model& model, uint64_t seed, uint64_t restart, const Band& band,
                    const SearchOptions& opts, SearchReport& rep) {
    const int n = model.dim();
    const int nskew = n * (n - 1) / 2;
    const int dim = 2 * n + nskew;
    // witness short-circuiting is restart-local so reports stay independent
    // of how restarts are partitioned over threads
    const size_t viols_at_start = rep.violations.size();
    SampleRng rng(seed, (1ULL << 62) + restart);
    std::vector<double> start(static_cast<size_t>(dim));
    const auto x0 = rng.unit_vector(n);
    const auto y0 = rng.unit_vector(n);
    std::copy(x0.begin(), x0.end(), start.begin());
    std::copy(y0.begin(), y0.end(), start.begin() + n);
    for (int i = 0; i < nskew; ++i) start[static_cast<size_t>(2 * n + i)] = 0.5 * rng.gaussian();
    const bool reflect = rng.uniform01() < 0.5;

    Matrix hx(n, n), hy(n, n), t(n, n), m(n, n);
    uint64_t eval_id = 0;
    auto evaluate = [&](std::span<const double> params) {
        const Probe pr = probe_member(model, params, reflect, hx, hy, t, m);
        ++rep.evals;
        const uint64_t id = (restart << 24) | eval_id++;
        if (pr.sign_defect) {
            ++rep.n_sign_defect;
            rep.violations.push_back({id, "sign", 0.0, pr.spectrum});
        } else if (pr.valid) {
            MemberSummary s;
            s.index = id;
            s.ratio = pr.ratio;
            s.lambda_top = pr.top;
            s.lambda_bottom = pr.bottom;
            s.trace = pr.trace;
            s.spectrum = pr.spectrum;
            s.valid = true;
            rep.consider(s);
            if (opts.assert_band && !(pr.ratio >= band.lo && pr.ratio <= band.hi))
                rep.violations.push_back({id, "band", pr.ratio, pr.spectrum});
        }
        return pr;
    };

    for (const bool maximize : {true, false}) {
        std::vector<double> p = start;
        const Probe first = evaluate(p);
        if (opts.stop_on_witness && rep.violations.size() > viols_at_start) return;
        if (!first.valid || first.sign_defect) continue;
        double fbest = maximize ? first.ratio : -first.ratio;
        double step = opts.step0;
        uint64_t evals = 1;
        std::vector<double> q = p;
        while (step > opts.step_min && evals < opts.max_evals_per_start) {
            bool improved = false;
            int best_coord = -1;
            double best_delta = 0.0, best_val = fbest;
            for (int i = 0; i < dim && evals < opts.max_evals_per_start; ++i) {
                for (const double d : {step, -step}) {
                    q = p;
                    q[static_cast<size_t>(i)] += d;
                    const Probe pr = evaluate(q);
                    ++evals;
                    if (opts.stop_on_witness && rep.violations.size() > viols_at_start) return;
                    if (!pr.valid || pr.sign_defect) continue;
                    const double val = maximize ? pr.ratio : -pr.ratio;
                    if (val > best_val + 1e-14) {
                        best_val = val;
                        best_coord = i;
                        best_delta = d;
                        improved = true;
                    }
                }
            }
            if (improved) {
                p[static_cast<size_t>(best_coord)] += best_delta;
                fbest = best_val;
            } else {
                step *= 0.5;
            }
        }
    }
}

}  // namespace detail

/**
 * Multi-start pattern search for the extreme ratios of the difference
 * family: greedy coordinate probes with a halving step over (x, y, S) with
 * O = exp(S) (reflected on half the starts), from `restarts` random starts.
 * Every probed member feeds the report, so violations found along the way
 * (out-of-band ratios, sign defects) are recorded even if abandoned.
 */
template <class Model>
SearchReport worst_case_search_model(const Model& model, std::string field_name, uint64_t restarts,
                                     uint64_t seed, Band band, SearchOptions opts = {}) {
    if (restarts < 1) throw std::invalid_argument("worst_case_search: need restarts >= 1");
    const int threads = detail::clamp_threads(opts.threads, restarts);
    std::vector<SearchReport> parts(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const uint64_t begin = restarts * static_cast<uint64_t>(t) / threads;
        const uint64_t end = restarts * (static_cast<uint64_t>(t) + 1) / threads;
        pool.emplace_back([&, begin, end, t] {
            auto& part = parts[static_cast<size_t>(t)];
            for (uint64_t r = begin; r < end; ++r) {
                detail::search_restart(model, seed, r, band, opts, part);
                ++part.restarts;
            }
        });
    }
    for (auto& th : pool) th.join();
    SearchReport rep;
    rep.field_name = std::move(field_name);
    rep.mode = "search";
    rep.seed = seed;
    rep.band = band;
    rep.band_asserted = opts.assert_band;
    for (const auto& part : parts) rep.merge(part);
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const ViolationRecord& a, const ViolationRecord& b) { return a.index < b.index; });
    return rep;
}

inline SearchReport worst_case_search(const FieldSpec& f, uint64_t restarts, uint64_t seed, Band band,
                                      SearchOptions opts = {}) {
    auto rep = worst_case_search_model(FieldModel{&f}, field_label(f), restarts, seed, band, opts);
    rep.delta = f.delta();
    return rep;
}

/// Hunts a non-hyperbolicity witness in the R^4 family: a member with
/// ratio outside the wide band or with a semidefinite sign pattern.
inline SearchReport witness_search_lawson(uint64_t restarts, uint64_t seed, SearchOptions opts = {}) {
    opts.stop_on_witness = true;
    const FieldSpec w4 = make_w4();
    return worst_case_search(w4, restarts, seed, Band{0.01, 100.0}, opts);
}

/// Exploratory sweep over exponents delta >= 1; extremes recorded, nothing
/// asserted.
inline std::vector<SearchReport> delta_scan(const std::vector<double>& deltas, uint64_t n,
                                            uint64_t seed, SampleOptions opts = {}) {
    std::vector<SearchReport> out;
    out.reserve(deltas.size());
    for (double d : deltas) {
        if (d < 1.0) throw std::invalid_argument("delta_scan: deltas must be >= 1");
        const FieldSpec f = make_w5_delta(d);
        SampleOptions o = opts;
        o.assert_band = false;
        o.assert_signs = false;
        o.check_prop41 = false;
        auto rep = detail::sample_family(FieldModel{&f}, "w5_delta", n, seed, Band{0.05, 20.0}, o,
                                         /*with_normal_form=*/false);
        rep.delta = d;
        out.push_back(std::move(rep));
    }
    return out;
}

/// Sampling probe of the 10-dimensional augmented family; asserts only the
/// sign pattern top > 0 > bottom on non-excluded members.
inline SearchReport u10_certify(double delta, double big_m, uint64_t n, uint64_t seed,
                                SampleOptions opts = {}) {
    const AugmentedField u(delta, big_m);
    SampleOptions o = opts;
    o.assert_band = false;
    o.check_prop41 = false;
    auto rep = detail::sample_family(AugmentedModel{&u}, "u10", n, seed, Band{0.0, 0.0}, o,
                                     /*with_normal_form=*/false);
    rep.delta = delta;
    rep.big_m = big_m;
    return rep;
}

}  // namespace eigencone
