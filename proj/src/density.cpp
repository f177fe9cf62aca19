#include "density.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lorentz.hpp"

namespace horopack {

double horocycle_arc_length(double x) {
    if (x < 0.0) throw std::invalid_argument("horocycle_arc_length: negative chord");
    return 2.0 * std::sinh(0.5 * x);
}

double horoball_sector_volume(double area, int n) {
    if (n < 2) throw std::invalid_argument("horoball_sector_volume: n must be >= 2");
    if (area < 0.0) throw std::invalid_argument("horoball_sector_volume: negative area");
    return area / (n - 1);
}

double v0(int n) {
    if (n < 2) throw std::invalid_argument("v0: n must be >= 2");
    if (n == 2) return 1.0;
    double prod = 1.0;
    for (int k = 2; k <= n - 1; ++k)
        prod *= std::pow(static_cast<double>(k - 1) / (k + 1), 0.5 * (n - k));
    return 1.0 / (n - 1) * n / std::pow(2.0, n - 1) * prod;
}

GeometricConstants geometric_constants(int n) {
    if (n < 2) throw std::invalid_argument("geometric_constants: n must be >= 2");
    GeometricConstants g;
    g.dim = n;
    g.rho = std::log(std::sqrt(static_cast<double>(n + 1) / (n - 1)));
    g.s = std::asinh(static_cast<double>(n - 1) /
                     std::sqrt(static_cast<double>(n + 1) * (n - 1)));
    g.r = std::log(std::sqrt(2.0 * n / (n + 1)));
    g.q = std::log(std::sqrt(2.0 * n / (n - 1)));  // = r + rho in closed form
    g.half_dihedral = 0.5 * dihedral_angle(n);
    g.phi = std::atan(1.0 / std::sinh(g.s));
    g.v0 = v0(n);
    return g;
}

double two_ball_exchange_volume(double v_at_zero, double x, int n) {
    if (n < 2) throw std::invalid_argument("two_ball_exchange_volume: n must be >= 2");
    if (!(v_at_zero > 0.0))
        throw std::invalid_argument("two_ball_exchange_volume: v_at_zero must be > 0");
    return 0.5 * v_at_zero * (std::exp((n - 1) * x) + std::exp(-(n - 1) * x));
}

double packing_volume(int n, double x) {
    GeometricConstants g = geometric_constants(n);
    constexpr double slack = 1e-12;
    if (x < -slack || x > g.q + slack)
        throw std::domain_error("packing_volume: x outside [0, q_n], not a packing");
    return g.v0 * (std::exp((n - 1) * x) + n * std::exp(-(n - 1) * x));
}

double classical_density(int n, double vol_tol, long max_terms) {
    if (n < 2) throw std::invalid_argument("classical_density: n must be >= 2");
    // (n+1) V0 / Vol; for n = 2 this is 3/pi since V0 = 1 and Vol = pi.
    double vol = ideal_regular_simplex_volume_value(n, vol_tol, max_terms);
    return (n + 1) * v0(n) / vol;
}

double generalized_density(int n, double vol_tol, long max_terms) {
    if (n < 2) throw std::invalid_argument("generalized_density: n must be >= 2");
    double vol = ideal_regular_simplex_volume_value(n, vol_tol, max_terms);
    double sigma = std::sqrt(2.0 * n / (n - 1));
    return v0(n) * (std::pow(sigma, n - 1) + n * std::pow(sigma, -(n - 1))) / vol;
}

double density_ratio_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("density_ratio_closed_form: n must be >= 2");
    double sigma = std::sqrt(2.0 * n / (n - 1));
    return (std::pow(sigma, n - 1) + n * std::pow(sigma, -(n - 1))) / (n + 1);
}

ArrangementLabel classify_optimal_arrangement(int n, double tol) {
    if (n < 2) throw std::invalid_argument("classify_optimal_arrangement: n must be >= 2");
    double q = std::log(std::sqrt(2.0 * n / (n - 1)));
    double threshold = std::log(static_cast<double>(n)) / (n - 1);
    if (std::fabs(q - threshold) <= tol) return ArrangementLabel::Both;
    return q > threshold ? ArrangementLabel::B1 : ArrangementLabel::B0;
}

DensityReport density_report(int n, double vol_tol, long max_terms) {
    if (n < 2) throw std::invalid_argument("density_report: n must be >= 2");
    MilnorSeriesParams p;
    p.dim = n;
    p.rel_tol = vol_tol;
    p.max_terms = max_terms;
    MilnorSeriesState vol = ideal_regular_simplex_volume(p);

    DensityReport rep;
    rep.dim = n;
    rep.simplex_volume = vol.value();
    rep.volume_uncertainty = vol.uncertainty;
    rep.volume_converged = vol.converged;
    rep.classical = (n + 1) * v0(n) / rep.simplex_volume;
    // Independent route: exchange volume evaluated at the tangency bound.
    rep.generalized =
        packing_volume(n, geometric_constants(n).q) / rep.simplex_volume;
    rep.ratio = rep.generalized / rep.classical;
    rep.optimal = classify_optimal_arrangement(n);
    // The series is the only inexact input; scale its bound into the density.
    rep.density_uncertainty =
        rep.generalized * vol.uncertainty / rep.simplex_volume;
    return rep;
}

std::vector<SweepSample> density_sweep(int n, int samples, double vol_tol,
                                       long max_terms) {
    if (samples < 2) throw std::invalid_argument("density_sweep: samples must be >= 2");
    GeometricConstants g = geometric_constants(n);
    double vol = ideal_regular_simplex_volume_value(n, vol_tol, max_terms);
    std::vector<SweepSample> out;
    out.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        SweepSample s;
        s.x = g.q * i / (samples - 1);
        if (i == samples - 1) s.x = g.q;  // exact endpoint
        s.volume = packing_volume(n, s.x);
        s.delta = s.volume / vol;
        out.push_back(s);
    }
    return out;
}

namespace {

struct CheckBuilder {
    std::vector<VerifyCheck> checks;
    bool group_ok = true;
    std::ostringstream detail;

    void fail(const std::string& msg) {
        group_ok = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << msg;
    }
    void finish(const std::string& name, const std::string& ok_msg) {
        checks.push_back({name, group_ok, group_ok ? ok_msg : detail.str()});
        group_ok = true;
        detail.str("");
        detail.clear();
    }
};

}  // namespace

std::vector<VerifyCheck> run_verification(double classical_perturbation) {
    CheckBuilder b;

    // 1. Exact coefficients: recurrence vs raw composition enumeration.
    for (int n = 2; n <= 6; ++n) {
        CompositionCoefficientStream stream(n);
        for (int k = 0; k <= 12; ++k) {
            mpz_class fast = stream.next();
            mpz_class slow = composition_coefficient_bruteforce(n, k);
            if (fast != slow) {
                std::ostringstream m;
                m << "A(" << n << "," << k << ") " << fast << " != " << slow;
                b.fail(m.str());
            }
        }
    }
    b.finish("composition-coefficients", "recurrence matches enumeration, n<=6 k<=12");

    // 2. n = 3 volume against the Lobachevsky oracle.
    {
        double series = ideal_regular_simplex_volume_value(3);
        double oracle = 2.0 * lobachevsky(std::numbers::pi / 6.0);
        if (std::fabs(series - oracle) > 1e-6) {
            std::ostringstream m;
            m << "series " << series << " vs oracle " << oracle;
            b.fail(m.str());
        }
        b.finish("volume-oracle-n3", "series agrees with the Lobachevsky value to 1e-6");
    }

    // 3. Ratio identity (volume-free): generalized/classical equals the
    //    closed form for n = 2..8.
    for (int n = 2; n <= 8; ++n) {
        double c = classical_density(n) * (1.0 + classical_perturbation);
        double g = generalized_density(n);
        double expected = density_ratio_closed_form(n);
        if (std::fabs(g / c - expected) > 1e-10) {
            std::ostringstream m;
            m << "n=" << n << " ratio " << g / c << " vs " << expected;
            b.fail(m.str());
        }
    }
    b.finish("ratio-identity", "generalized/classical matches the closed form, n=2..8");

    // 4. Threshold ordering: q_n vs log(n)/(n-1).
    for (int n = 2; n <= 20; ++n) {
        double q = geometric_constants(n).q;
        double threshold = std::log(static_cast<double>(n)) / (n - 1);
        bool ok = (n <= 3) ? std::fabs(q - threshold) <= 1e-12 : q > threshold;
        if (!ok) {
            std::ostringstream m;
            m << "n=" << n << " q=" << q << " threshold=" << threshold;
            b.fail(m.str());
        }
    }
    b.finish("threshold-ordering", "q_n = log(n)/(n-1) for n=2,3 and exceeds it for n=4..20");

    // 5. Cross-module geometry: rho and s from the Lorentz frame.
    for (int n = 2; n <= 8; ++n) {
        GeometricConstants g = geometric_constants(n);
        IdealSimplexFrame frame = build_regular_ideal_simplex(n);
        std::vector<double> oc(static_cast<size_t>(n) + 1, 0.0);
        oc[0] = 1.0;
        LorentzVector center(std::move(oc));
        double rho = distance(center, frame.incenter);
        LorentzVector pole = edge_pole_in_center_plane(frame, 0, n);
        double s = distance_to_hyperplane(frame.incenter, pole);
        if (std::fabs(rho - g.rho) > 1e-10 || std::fabs(s - g.s) > 1e-10) {
            std::ostringstream m;
            m << "n=" << n << " rho " << rho << " vs " << g.rho << ", s " << s
              << " vs " << g.s;
            b.fail(m.str());
        }
    }
    b.finish("geometry-cross-check", "frame distances match closed forms, n=2..8");

    // 6. Exchange-lemma shape of V(x): endpoint equality, convexity, minimum.
    for (int n = 2; n <= 8; ++n) {
        GeometricConstants g = geometric_constants(n);
        double threshold = std::log(static_cast<double>(n)) / (n - 1);
        double va = packing_volume(n, 0.0);
        double vb = packing_volume(n, threshold);
        if (std::fabs(va - vb) > 1e-12 * va) {
            std::ostringstream m;
            m << "n=" << n << " V(0)=" << va << " V(log n/(n-1))=" << vb;
            b.fail(m.str());
        }
        constexpr int grid = 100;
        double vmin = va;
        double xmin = 0.0;
        std::vector<double> v(grid);
        for (int i = 0; i < grid; ++i) {
            double x = g.q * i / (grid - 1);
            v[static_cast<size_t>(i)] = packing_volume(n, x);
            if (v[static_cast<size_t>(i)] < vmin) {
                vmin = v[static_cast<size_t>(i)];
                xmin = x;
            }
        }
        for (int i = 1; i + 1 < grid; ++i)
            if (v[static_cast<size_t>(i) + 1] - 2 * v[static_cast<size_t>(i)] +
                    v[static_cast<size_t>(i) - 1] <= 0.0)
                b.fail("non-positive second difference at n=" + std::to_string(n));
        double expected_min = 0.5 * threshold;
        if (std::fabs(xmin - expected_min) > g.q / (grid - 1))
            b.fail("minimum misplaced at n=" + std::to_string(n));
    }
    b.finish("packing-volume-shape", "V endpoints, convexity, and minimum as expected, n=2..8");

    return b.checks;
}

}  // namespace horopack
