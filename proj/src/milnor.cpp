#include "milnor.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace horopack {

namespace {

// Nonnegative value with a separate power-of-two exponent, for factors like
// (n+2k)! that overflow double long before the series term does.
struct ExtFloat {
    double mant = 1.0;
    long exp2 = 0;

    void mul(double f) {
        mant *= f;
        int e = 0;
        mant = std::frexp(mant, &e);
        exp2 += e;
    }
};

double hurwitz_zeta(double p, double a) {
    // Euler-Maclaurin; a is large here so a few direct terms suffice.
    constexpr int kDirect = 8;
    double s = 0.0;
    for (int j = 0; j < kDirect; ++j) s += std::pow(a + j, -p);
    double b = a + kDirect;
    s += std::pow(b, 1.0 - p) / (p - 1.0);
    s += 0.5 * std::pow(b, -p);
    s += p / 12.0 * std::pow(b, -p - 1.0);
    s -= p * (p + 1.0) * (p + 2.0) / 720.0 * std::pow(b, -p - 3.0);
    return s;
}

}  // namespace

CompositionCoefficientStream::CompositionCoefficientStream(int n) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("composition coefficients need n >= 2");
    column_.assign(static_cast<size_t>(n) + 2, mpz_class(1));  // p_{m,0} = 1
}

const mpz_class& CompositionCoefficientStream::next() {
    if (k_ > 0) {
        int k = k_;
        column_[0] = 0;  // [t^k] F^0 = 0 for k >= 1
        for (int m = 1; m <= n_ + 1; ++m) {
            // p_{m,k} = p_{m-1,k} + (4k - 4 + 2m) p_{m,k-1} / m, exact.
            scratch_ = column_[static_cast<size_t>(m)] * (4 * k - 4 + 2 * m);
            if (m > 1) {
                mpz_class rem;
                mpz_tdiv_qr(scratch_.get_mpz_t(), rem.get_mpz_t(),
                            scratch_.get_mpz_t(), mpz_class(m).get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("composition coefficient recurrence: inexact division");
            }
            column_[static_cast<size_t>(m)] =
                column_[static_cast<size_t>(m) - 1] + scratch_;
        }
    }
    ++k_;
    return column_[static_cast<size_t>(n_) + 1];
}

mpz_class composition_coefficient(int n, int k) {
    if (n < 2 || k < 0)
        throw std::invalid_argument("composition_coefficient: need n >= 2, k >= 0");
    CompositionCoefficientStream stream(n);
    mpz_class a;
    for (int i = 0; i <= k; ++i) a = stream.next();
    return a;
}

namespace {

void enumerate_compositions(int parts_left, int sum_left, const mpz_class& factor,
                            const std::vector<mpz_class>& f, mpz_class& acc) {
    if (parts_left == 1) {
        acc += factor * f[static_cast<size_t>(sum_left)];
        return;
    }
    for (int i = 0; i <= sum_left; ++i)
        enumerate_compositions(parts_left - 1, sum_left - i,
                               factor * f[static_cast<size_t>(i)], f, acc);
}

}  // namespace

mpz_class composition_coefficient_bruteforce(int n, int k) {
    if (n < 2 || k < 0)
        throw std::invalid_argument("composition_coefficient_bruteforce: need n >= 2, k >= 0");
    std::vector<mpz_class> f(static_cast<size_t>(k) + 1);  // (2i)!/i!
    for (int i = 0; i <= k; ++i) {
        mpz_class num, den;
        mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * i));
        mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(i));
        f[static_cast<size_t>(i)] = num / den;
    }
    mpz_class acc = 0;
    enumerate_compositions(n + 1, k, mpz_class(1), f, acc);
    return acc;
}

MilnorSeriesState ideal_regular_simplex_volume(const MilnorSeriesParams& params) {
    const int n = params.dim;
    if (n < 2)
        throw std::invalid_argument("ideal_regular_simplex_volume: dim must be >= 2");
    if (!(params.rel_tol > 0.0 && params.rel_tol < 1.0))
        throw std::invalid_argument("ideal_regular_simplex_volume: rel_tol must be in (0,1)");
    if (params.max_terms < 1)
        throw std::invalid_argument("ideal_regular_simplex_volume: max_terms must be >= 1");

    MilnorSeriesState state;
    if (n == 2) {
        // Ideal triangle: area pi, no series.
        state.partial_sum = std::numbers::pi;
        state.uncertainty = std::numeric_limits<double>::epsilon() * std::numbers::pi;
        state.converged = true;
        return state;
    }

    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double tail_power = 0.5 * (n + 1);  // t_k ~ c k^{-(n+1)/2}
    constexpr int kFitWindow = 20;

    CompositionCoefficientStream stream(n);
    ExtFloat rising;             // beta (beta+1) ... (beta+k-1), beta = (n+1)/2
    ExtFloat factorial;          // (n+2k)!
    for (int i = 2; i <= n; ++i) factorial.mul(i);

    double comp = 0.0;           // Kahan compensation
    long next_checkpoint = 64;
    double prev_value = std::numeric_limits<double>::quiet_NaN();

    auto fitted_tail = [&](long terms) -> double {
        long last = terms - 1;  // highest summed index k
        if (last < kFitWindow) return 0.0;
        double num = 0.0, den = 0.0;
        for (long k = last - kFitWindow + 1; k <= last; ++k) {
            double w = std::pow(static_cast<double>(k), -tail_power);
            num += state.terms[static_cast<size_t>(k)] * w;
            den += w * w;
        }
        double c = num / den;
        return c * hurwitz_zeta(tail_power, static_cast<double>(last) + 1.0);
    };

    for (long k = 0; k < params.max_terms; ++k) {
        long a_exp = 0;
        double a_mant = mpz_get_d_2exp(&a_exp, stream.next().get_mpz_t());
        double t = sqrt_n *
                   std::ldexp(rising.mant / factorial.mant * a_mant,
                              static_cast<int>(rising.exp2 - factorial.exp2 + a_exp));
        state.terms.push_back(t);
        double y = t - comp;
        double s = state.partial_sum + y;
        comp = (s - state.partial_sum) - y;
        state.partial_sum = s;
        state.terms_used = k + 1;

        rising.mul(0.5 * (n + 1 + 2 * k));
        factorial.mul(static_cast<double>(n + 2 * k + 1));
        factorial.mul(static_cast<double>(n + 2 * k + 2));

        if (k + 1 == next_checkpoint || k + 1 == params.max_terms) {
            state.tail_estimate = fitted_tail(k + 1);
            double value = state.partial_sum + state.tail_estimate;
            if (!std::isnan(prev_value)) {
                state.uncertainty = std::fabs(value - prev_value) +
                                    16.0 * std::numeric_limits<double>::epsilon() * value;
                if (state.uncertainty <= params.rel_tol * state.partial_sum) {
                    state.converged = true;
                    break;
                }
            }
            prev_value = value;
            next_checkpoint *= 2;
        }
    }
    if (!state.converged && state.uncertainty == 0.0)
        state.uncertainty = state.tail_estimate;
    return state;
}

double ideal_regular_simplex_volume_value(int dim, double rel_tol, long max_terms) {
    MilnorSeriesParams p;
    p.dim = dim;
    p.rel_tol = rel_tol;
    p.max_terms = max_terms;
    return ideal_regular_simplex_volume(p).value();
}

double lobachevsky(double theta) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(theta > 0.0) || theta > half_pi * (1.0 + 1e-14))
        throw std::domain_error("lobachevsky: theta must be in (0, pi/2]");
    // Lambda(theta) = theta - theta log(2 theta)
    //               + sum_{m>=1} zeta(2m) theta^{2m+1} / (m (2m+1) pi^{2m}),
    // from integrating the product expansion of log(2 sin t). The ratio
    // (theta/pi)^2 <= 1/4 makes this geometric.
    double r = (theta / std::numbers::pi) * (theta / std::numbers::pi);
    double sum = theta - theta * std::log(2.0 * theta);
    double pw = 1.0;
    for (int m = 1; m <= 200; ++m) {
        pw *= r;
        double term = std::riemann_zeta(2.0 * m) * theta * pw /
                      (static_cast<double>(m) * (2 * m + 1));
        sum += term;
        if (term < 1e-17) break;
    }
    return sum;
}

double lobachevsky_extended(double theta) {
    double t = theta - std::numbers::pi * std::floor(theta / std::numbers::pi);
    if (t == 0.0) return 0.0;
    if (t <= std::numbers::pi / 2.0) return lobachevsky(t);
    return -lobachevsky(std::numbers::pi - t);
}

double dihedral_angle(int n) {
    if (n < 2) throw std::invalid_argument("dihedral_angle: n must be >= 2");
    return std::acos(1.0 / (n - 1));  // 0 in the degenerate n = 2 case
}

}  // namespace horopack
