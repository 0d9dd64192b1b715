// ppc: mod-1 statistics of alpha*n^theta at desk scale.
//
// Subcommands: gaps, paircorr, smoothed, dual-check, count, optimize, holder.
// CSV files are the artifact of record; a JSON summary goes to stdout.  Exit
// codes: 0 ok, 1 usage/validation, 2 contract violation.  Every command is
// deterministic for fixed flags; thread count changes no emitted byte except
// the timing_ms JSON field.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppc/counting.hpp"
#include "ppc/dual.hpp"
#include "ppc/expsum.hpp"
#include "ppc/optimizer.hpp"
#include "ppc/parallel.hpp"
#include "ppc/report.hpp"
#include "ppc/sequence.hpp"
#include "ppc/stats.hpp"

using json = nlohmann::ordered_json;
namespace chrono = std::chrono;

namespace {

struct Timer {
    chrono::steady_clock::time_point t0 = chrono::steady_clock::now();
    double ms() const {
        return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
    }
};

ppc::Kernel make_kernel(const std::string& kind, double scale) {
    if (kind == "gaussian") return ppc::Kernel::gaussian(scale);
    if (kind == "triangle") return ppc::Kernel::triangle(scale);
    if (kind == "triangle2") return ppc::Kernel::triangle2(scale);
    throw CLI::ValidationError("--kernel", "unknown kernel '" + kind + "'");
}

std::vector<double> points_for(double alpha, double theta, std::int64_t n,
                               bool exclude_squares, bool synthetic_uniform) {
    if (synthetic_uniform) {
        auto p = ppc::uniform_points(n);
        std::stable_sort(p.begin(), p.end());
        return p;
    }
    return ppc::sorted_points({alpha, theta, n, exclude_squares});
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- gaps ----

int cmd_gaps(double alpha, double theta, std::int64_t n, double bin, double tmax,
             bool exclude_squares, bool synthetic, const std::string& out, bool svg) {
    Timer timer;
    auto pts = points_for(alpha, theta, n, exclude_squares, synthetic);
    ppc::Histogram h = ppc::gap_histogram(pts, bin, tmax);
    ppc::Histogram ref = ppc::poisson_reference(bin, tmax);

    ppc::CsvTable csv;
    csv.header = {"bin_lo", "bin_hi", "empirical_mass", "poisson_mass"};
    for (std::size_t i = 0; i < h.masses.size(); ++i)
        csv.add_row({ppc::format_double(static_cast<double>(i) * bin),
                     ppc::format_double(static_cast<double>(i + 1) * bin),
                     ppc::format_double(h.masses[i]), ppc::format_double(ref.masses[i])});
    if (!out.empty()) {
        csv.write(out + ".csv");
        if (svg) ppc::write_svg_histogram(out + ".svg", h, ref.masses, "scaled gaps vs e^-t");
    }

    json j;
    j["command"] = "gaps";
    j["points"] = static_cast<std::int64_t>(pts.size());
    j["sup_distance"] = ppc::histogram_distance(h, ref, ppc::HistMetric::Sup);
    j["chi2_distance"] = ppc::histogram_distance(h, ref, ppc::HistMetric::Chi2);
    j["overflow_mass"] = h.overflow_mass;
    j["csv"] = out.empty() ? json(nullptr) : json(out + ".csv");
    j["timing_ms"] = timer.ms();
    emit(j);
    return 0;
}

// ------------------------------------------------------------ paircorr ----

int cmd_paircorr(double alpha, double theta, std::int64_t n, std::vector<double> s_list,
                 double bin, double tmax, bool exclude_squares, bool synthetic,
                 const std::string& out, bool svg) {
    Timer timer;
    auto pts = points_for(alpha, theta, n, exclude_squares, synthetic);
    json j;
    j["command"] = "paircorr";
    j["points"] = static_cast<std::int64_t>(pts.size());

    if (!s_list.empty()) {
        ppc::CsvTable csv;
        csv.header = {"s", "r2", "two_s"};
        json rows = json::array();
        for (double s : s_list) {
            double r2 = ppc::pair_correlation(pts, s);
            csv.add_row({ppc::format_double(s), ppc::format_double(r2),
                         ppc::format_double(2.0 * s)});
            rows.push_back({{"s", s}, {"r2", r2}, {"abs_error", std::fabs(r2 - 2.0 * s)}});
        }
        if (!out.empty()) csv.write(out + ".csv");
        j["values"] = rows;
    } else {
        ppc::Histogram h = ppc::pair_correlation_histogram(pts, bin, tmax);
        ppc::Histogram ref = ppc::flat_pair_reference(bin, tmax);
        ppc::CsvTable csv;
        csv.header = {"bin_lo", "bin_hi", "empirical_mass", "flat_mass"};
        for (std::size_t i = 0; i < h.masses.size(); ++i)
            csv.add_row({ppc::format_double(static_cast<double>(i) * bin),
                         ppc::format_double(static_cast<double>(i + 1) * bin),
                         ppc::format_double(h.masses[i]), ppc::format_double(ref.masses[i])});
        if (!out.empty()) {
            csv.write(out + ".csv");
            if (svg)
                ppc::write_svg_histogram(out + ".svg", h, ref.masses, "pair distances vs density 2");
        }
        j["sup_distance"] = ppc::histogram_distance(h, ref, ppc::HistMetric::Sup);
        j["overflow_mass"] = h.overflow_mass;
    }
    j["csv"] = out.empty() ? json(nullptr) : json(out + ".csv");
    j["timing_ms"] = timer.ms();
    emit(j);
    return 0;
}

// ------------------------------------------------------------ smoothed ----

int cmd_smoothed(double alpha, double theta, std::vector<std::int64_t> n_list,
                 double eps, const std::string& kernel_kind, double scale,
                 const std::string& out) {
    Timer timer;
    ppc::Kernel kernel = make_kernel(kernel_kind, scale);
    ppc::CsvTable csv;
    csv.header = {"N", "fourier_side", "direct_side", "identity_residual", "f0"};
    json rows = json::array();
    for (std::int64_t N : n_list) {
        double fs = ppc::fourier_side(N, eps, kernel, alpha, theta);
        double ds = ppc::direct_side(N, kernel, alpha, theta);
        double resid = std::fabs(ds - (fs - kernel.f_at_0 + kernel.fhat_at_0));
        csv.add_row({std::to_string(N), ppc::format_double(fs), ppc::format_double(ds),
                     ppc::format_double(resid), ppc::format_double(kernel.f_at_0)});
        rows.push_back({{"N", N},
                        {"fourier_side", fs},
                        {"direct_side", ds},
                        {"identity_residual", resid},
                        {"convergence_gap", std::fabs(fs - kernel.f_at_0)}});
    }
    if (!out.empty()) csv.write(out + ".csv");
    json j;
    j["command"] = "smoothed";
    j["kernel"] = kernel_kind;
    j["scale"] = scale;
    j["f0"] = kernel.f_at_0;
    j["fhat0"] = kernel.fhat_at_0;
    j["rows"] = rows;
    j["csv"] = out.empty() ? json(nullptr) : json(out + ".csv");
    j["timing_ms"] = timer.ms();
    emit(j);
    return 0;
}

// ---------------------------------------------------------- dual-check ----

int cmd_dual_check(double alpha, double theta, std::vector<std::int64_t> k_list,
                   std::vector<double> y_list, const std::string& out) {
    Timer timer;
    ppc::CsvTable csv;
    csv.header = {"k", "Y", "abs_direct", "abs_dual", "residual", "bound", "ratio", "window"};
    double worst = 0.0, direct_ms = 0.0, dual_ms = 0.0;
    std::int64_t soft_violations = 0, flagged = 0;
    for (std::int64_t k : k_list)
        for (double Y : y_list) {
            auto Yi = static_cast<std::int64_t>(Y);
            Timer td;
            std::complex<double> direct =
                ppc::exp_sum({alpha, theta, k, Yi, 2 * Yi});
            direct_ms += td.ms();
            Timer tu;
            ppc::DualBlockSum dual = ppc::dual_block_sum(k, Y, alpha, theta);
            dual_ms += tu.ms();
            double resid = std::abs(direct - dual.value);
            double bound = ppc::dual_block_bound(k, Y, theta);
            double ratio = resid / bound;
            bool flag = dual.window_size <= 1;
            if (flag) ++flagged;
            if (!flag) {
                worst = std::max(worst, ratio);
                if (ratio > 5.0) ++soft_violations;
            }
            csv.add_row({std::to_string(k), ppc::format_double(Y),
                         ppc::format_double(std::abs(direct)),
                         ppc::format_double(std::abs(dual.value)), ppc::format_double(resid),
                         ppc::format_double(bound), ppc::format_double(ratio),
                         std::to_string(dual.window_size)});
        }
    if (!out.empty()) csv.write(out + ".csv");
    json j;
    j["command"] = "dual_check";
    j["grid_points"] = static_cast<std::int64_t>(k_list.size() * y_list.size());
    j["flagged_small_windows"] = flagged;
    j["soft_violations"] = soft_violations;   // ratio > 5 at unflagged points
    j["worst_ratio"] = worst;
    j["hard_constant"] = 20.0;
    j["csv"] = out.empty() ? json(nullptr) : json(out + ".csv");
    // direct block sums cost O(Y) per point, the duals O(window) ~ O(k Y^(theta-1))
    j["timing_direct_ms"] = direct_ms;
    j["timing_dual_ms"] = dual_ms;
    j["timing_ms"] = timer.ms();
    if (worst > 20.0) {
        j["status"] = "contract_violation";
        emit(j);
        return 2;
    }
    j["status"] = "ok";
    emit(j);
    return 0;
}

// --------------------------------------------------------------- count ----

// Small brute-force duplicates for the self-check field; the test oracles
// live in tests/ and are independent of these.
std::uint64_t brute_quadruples(const ppc::QuadrupleQuery& q) {
    auto n = static_cast<std::size_t>(q.m_hi - q.m_lo);
    std::vector<double> p(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = std::pow(static_cast<double>(q.m_lo) + static_cast<double>(i), q.exponent);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(p[i] + p[j]));
    double thr = q.delta * std::pow(static_cast<double>(q.m_hi), q.exponent) +
                 ppc::count_slack(scale);
    std::uint64_t c = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t cc = 0; cc < n; ++cc)
                for (std::size_t d = 0; d < n; ++d)
                    if (std::fabs((p[a] + p[b]) - (p[cc] + p[d])) <= thr) ++c;
    return c;
}

int cmd_count(const std::string& kind, json params, const std::string& out) {
    Timer timer;
    json j;
    j["command"] = "count";
    j["kind"] = kind;
    j["params"] = params;
    j["guards"] = json::array();

    if (kind == "rs") {
        ppc::QuadrupleQuery q{params["m_lo"].get<std::int64_t>(),
                              params["m_hi"].get<std::int64_t>(),
                              params["exponent"].get<double>(),
                              params["delta"].get<double>()};
        j["count"] = ppc::count_quadruples(q);
        j["bound"] = static_cast<double>(q.m_hi) * q.m_hi +
                     q.delta * std::pow(static_cast<double>(q.m_hi), 4.0);
        j["ratio"] = ppc::rs_bound_ratio(q);
        if (q.m_hi - q.m_lo <= 40) j["brute_force_count"] = brute_quadruples(q);
    } else if (kind == "cz") {
        ppc::SextupleQuery q{params["M"].get<std::int64_t>(), params["H1"].get<std::int64_t>(),
                             params["H2"].get<std::int64_t>(), params["exponent"].get<double>(),
                             params["Delta"].get<double>(),
                             params.value("mirror", false)};
        j["count"] = ppc::count_sextuples(q);
        ppc::CzBounds b = ppc::cz_bound_ratio(q, params.value("separation", 1.0));
        for (const auto& g : b.guard_violations) j["guards"].push_back(g);
        if (b.bound1) {
            j["bound1"] = *b.bound1;
            j["ratio1"] = *b.ratio1;
        }
        if (b.bound2) {
            j["bound2"] = *b.bound2;
            j["ratio2"] = *b.ratio2;
        }
    } else if (kind == "b1") {
        ppc::EtaSpacingQuery q;
        q.K = params["K"].get<double>();
        q.Y1 = params["Y1"].get<double>();
        q.Y2 = params["Y2"].get<double>();
        q.alpha = params["alpha"].get<double>();
        q.theta = params["theta"].get<double>();
        q.X = params["X"].get<double>();
        if (params.contains("R"))
            q.r_window = {{params["R"].get<double>(), 2.0 * params["R"].get<double>()}};
        if (params.contains("Z")) q.Z = params["Z"].get<double>();
        j["count"] = ppc::count_eta_spacings(q);
        j["eta_set_size"] =
            static_cast<std::int64_t>(ppc::eta_set(q.K, q.Y1, q.Y2, q.alpha, q.theta, q.r_window).size());
    } else {
        throw CLI::ValidationError("--kind", "must be rs, cz, or b1");
    }
    j["timing_ms"] = timer.ms();
    if (!out.empty()) {
        std::ofstream f(out + ".json", std::ios::binary);
        json copy = j;
        copy.erase("timing_ms");
        f << copy.dump(2) << "\n";
        j["json"] = out + ".json";
    }
    emit(j);
    return 0;
}

// ------------------------------------------------------------ optimize ----

int cmd_optimize(int grid_n, int refine, const std::string& families_csv,
                 const std::string& out) {
    Timer timer;
    std::optional<std::set<ppc::Family>> fams;
    if (!families_csv.empty() && families_csv != "all") {
        fams.emplace();
        for (char c : families_csv) {
            switch (c) {
                case 'A': fams->insert(ppc::Family::A); break;
                case 'B': fams->insert(ppc::Family::B); break;
                case 'C': fams->insert(ppc::Family::C); break;
                case 'D': fams->insert(ppc::Family::D); break;
                case 'G': fams->insert(ppc::Family::Global); break;
                case ',': break;
                default:
                    throw CLI::ValidationError("--families", "expected letters from ABCDG");
            }
        }
    }
    ppc::OptimizeResult r = ppc::optimize(grid_n, refine, fams ? &*fams : nullptr);
    json j;
    j["command"] = "optimize";
    j["theta_star"] = ppc::rational_str(r.theta_star);
    j["theta_star_decimal"] = ppc::rational_double(r.theta_star);
    j["kappa"] = {ppc::rational_str(r.kp.kappa1), ppc::rational_str(r.kp.kappa2)};
    j["active"] = r.active_ids;
    json forms = json::array();
    for (const auto& c : ppc::builtin_constraints())
        for (const auto& id : r.active_ids)
            if (c.id == id) forms.push_back(c.formula());
    j["active_formulas"] = forms;
    j["families_used"] = families_csv.empty() ? "all" : families_csv;
    j["grid_n"] = grid_n;
    j["refine_rounds"] = refine;
    j["timing_ms"] = timer.ms();
    if (!out.empty()) {
        std::ofstream f(out + ".json", std::ios::binary);
        json copy = j;
        copy.erase("timing_ms");
        f << copy.dump(2) << "\n";
    }
    emit(j);
    return 0;
}

// -------------------------------------------------------------- holder ----

int cmd_holder(std::vector<int> k_list, const std::string& out) {
    Timer timer;
    ppc::CsvTable csv;
    csv.header = {"k", "theta_k", "theta_k_decimal"};
    json rows = json::array();
    for (int k : k_list) {
        ppc::Rational t = ppc::holder_best_theta(k);
        csv.add_row({std::to_string(k), ppc::rational_str(t),
                     ppc::format_double(ppc::rational_double(t))});
        rows.push_back({{"k", k},
                        {"theta_k", ppc::rational_str(t)},
                        {"decimal", ppc::rational_double(t)}});
    }
    if (!out.empty()) csv.write(out + ".csv");
    json j;
    j["command"] = "holder";
    j["rows"] = rows;
    j["csv"] = out.empty() ? json(nullptr) : json(out + ".csv");
    j["timing_ms"] = timer.ms();
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-1 statistics of alpha*n^theta: gaps, pair correlation, "
                 "exponential-sum transforms, spacing counts, exponent optimization"};
    app.require_subcommand(1);
    app.fallthrough(true);
    // config keys are subcommand-qualified: "gaps.n=1000000"; globals plain
    app.set_config("--config", "", "key=value file; flags override");

    int threads = 0;
    std::int64_t seed = 0;
    app.add_option("--threads", threads, "worker threads (default: hardware)");
    app.add_option("--seed", seed, "seed for sampling diagnostics (reserved)");

    // shared parameters
    double alpha = 1.0, theta = 1.0 / 3.0;
    std::int64_t n = 100000;
    double bin = 0.1, tmax = 5.0;
    bool exclude_squares = false, synthetic = false, svg = false;
    std::string out;

    auto add_seq_opts = [&](CLI::App* c, bool with_hist) {
        c->add_option("--alpha", alpha, "alpha > 0")->capture_default_str();
        c->add_option("--theta", theta, "theta in (0,1)")->capture_default_str();
        c->add_option("--n", n, "number of indices")->capture_default_str();
        if (with_hist) {
            c->add_option("--bin", bin, "bin width")->capture_default_str();
            c->add_option("--t-max", tmax, "histogram upper edge")->capture_default_str();
        }
        c->add_flag("--exclude-squares", exclude_squares, "drop square indices");
        c->add_flag("--synthetic-uniform", synthetic, "use equally spaced points");
        c->add_option("--out", out, "output path prefix");
        c->add_flag("--svg", svg, "also write an SVG plot");
    };

    auto* gaps = app.add_subcommand("gaps", "scaled-gap histogram vs e^-t");
    add_seq_opts(gaps, true);

    auto* pc = app.add_subcommand("paircorr", "pair correlation R2 or pair-distance histogram");
    std::vector<double> s_list;
    add_seq_opts(pc, true);
    pc->add_option("--s", s_list, "window values s (R2 mode; omit for histogram mode)");

    auto* sm = app.add_subcommand("smoothed", "fourier/direct sides of the smoothed statistic");
    std::vector<std::int64_t> n_list{500, 1000, 2000, 4000};
    double eps = 0.1, scale = 0.3;
    std::string kernel_kind = "gaussian";
    sm->add_option("--alpha", alpha, "alpha > 0")->capture_default_str();
    sm->add_option("--theta", theta, "theta in (0,1)")->capture_default_str();
    sm->add_option("--n-list", n_list, "N ladder")->capture_default_str();
    sm->add_option("--eps", eps, "k-cutoff exponent: k <= ceil(N^(1+eps))")->capture_default_str();
    sm->add_option("--kernel", kernel_kind, "gaussian | triangle | triangle2")->capture_default_str();
    sm->add_option("--scale", scale, "kernel scale")->capture_default_str();
    sm->add_option("--out", out, "output path prefix");

    auto* dc = app.add_subcommand("dual-check", "block sums vs their stationary-phase duals");
    dc->alias("dual_check");
    std::vector<std::int64_t> k_list{100, 316, 1000, 3162, 10000};
    std::vector<double> y_list{1000, 3162, 10000, 31623, 100000};
    dc->add_option("--alpha", alpha, "alpha > 0")->capture_default_str();
    dc->add_option("--theta", theta, "theta in (0,1)")->capture_default_str();
    dc->add_option("--k", k_list, "k values")->capture_default_str();
    dc->add_option("--y", y_list, "Y block starts")->capture_default_str();
    dc->add_option("--out", out, "output path prefix");

    auto* cnt = app.add_subcommand("count", "spacing counters rs | cz | b1");
    std::string kind;
    std::int64_t m_lo = 64, m_hi = 128, M = 64, H1 = 4, H2 = 16;
    double exponent = -0.5, delta = 0.0, Delta = 0.0, K = 1e6, Y1 = 1e4, Y2 = 1e4, X = 1e3;
    double R = 0.0, Zval = 0.0, separation = 1.0;
    bool mirror = false;
    cnt->add_option("--kind", kind, "rs | cz | b1")->required();
    cnt->add_option("--m-lo", m_lo)->capture_default_str();
    cnt->add_option("--m-hi", m_hi)->capture_default_str();
    cnt->add_option("--exponent", exponent)->capture_default_str();
    cnt->add_option("--delta", delta, "rs threshold factor")->capture_default_str();
    cnt->add_option("--M", M)->capture_default_str();
    cnt->add_option("--H1", H1)->capture_default_str();
    cnt->add_option("--H2", H2)->capture_default_str();
    cnt->add_option("--Delta", Delta, "cz threshold factor")->capture_default_str();
    cnt->add_flag("--mirror", mirror, "mirror h windows to negative values");
    cnt->add_option("--separation", separation, "cz bound-2 separation factor")->capture_default_str();
    cnt->add_option("--K", K)->capture_default_str();
    cnt->add_option("--Y1", Y1)->capture_default_str();
    cnt->add_option("--Y2", Y2)->capture_default_str();
    cnt->add_option("--alpha", alpha)->capture_default_str();
    cnt->add_option("--theta", theta)->capture_default_str();
    cnt->add_option("--X", X, "b1 spacing scale")->capture_default_str();
    cnt->add_option("--R", R, "b1 dyadic difference class [R,2R)")->capture_default_str();
    cnt->add_option("--Z", Zval, "b1 eta scale override")->capture_default_str();
    cnt->add_option("--out", out, "output path prefix");

    auto* opt = app.add_subcommand("optimize", "maximize the exact theta limit");
    int grid_n = 128, refine = 3;
    std::string families = "all";
    opt->add_option("--grid-n", grid_n)->capture_default_str();
    opt->add_option("--refine", refine)->capture_default_str();
    opt->add_option("--families", families, "subset of ABCDG, e.g. AG")->capture_default_str();
    opt->add_option("--out", out, "output path prefix");

    auto* hl = app.add_subcommand("holder", "best-case exponents theta_k");
    std::vector<int> hk_list{2, 3, 4, 5, 6};
    hl->add_option("--k", hk_list, "moment orders")->capture_default_str();
    hl->add_option("--out", out, "output path prefix");

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) ppc::par::set_thread_count(threads);

    try {
        if (gaps->parsed())
            return cmd_gaps(alpha, theta, n, bin, tmax, exclude_squares, synthetic, out, svg);
        if (pc->parsed())
            return cmd_paircorr(alpha, theta, n, s_list, bin, tmax, exclude_squares,
                                synthetic, out, svg);
        if (sm->parsed())
            return cmd_smoothed(alpha, theta, n_list, eps, kernel_kind, scale, out);
        if (dc->parsed()) return cmd_dual_check(alpha, theta, k_list, y_list, out);
        if (cnt->parsed()) {
            json params;
            if (kind == "rs") {
                params = {{"m_lo", m_lo}, {"m_hi", m_hi}, {"exponent", exponent},
                          {"delta", delta}};
            } else if (kind == "cz") {
                params = {{"M", M},         {"H1", H1},       {"H2", H2},
                          {"exponent", exponent}, {"Delta", Delta}, {"mirror", mirror},
                          {"separation", separation}};
            } else {
                params = {{"K", K},     {"Y1", Y1}, {"Y2", Y2}, {"alpha", alpha},
                          {"theta", theta}, {"X", X}};
                if (R > 0.0) params["R"] = R;
                if (Zval > 0.0) params["Z"] = Zval;
            }
            return cmd_count(kind, params, out);
        }
        if (opt->parsed()) return cmd_optimize(grid_n, refine, families, out);
        if (hl->parsed()) return cmd_holder(hk_list, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
