#pragma once

#include <gmpxx.h>

#include <vector>

namespace horopack {

struct MilnorSeriesParams {
    int dim = 3;
    double rel_tol = 1e-7;
    long max_terms = 20000;
};

struct MilnorSeriesState {
    std::vector<double> terms;  // t_k, all positive
    double partial_sum = 0.0;
    double tail_estimate = 0.0;  // fitted polynomial tail, added to the value
    double uncertainty = 0.0;    // bound on |value() - true volume|
    long terms_used = 0;
    bool converged = false;

    double value() const { return partial_sum + tail_estimate; }
};

// A_{n,k}: sum over (n+1)-tuples of nonnegative integers with sum k of
// prod_j (2 i_j)!/i_j! -- the degree-k coefficient of F(t)^{n+1} with
// F(t) = sum_i ((2i)!/i!) t^i. Exact.
mpz_class composition_coefficient(int n, int k);

// Streams A_{n,k} for k = 0,1,2,... without keeping the whole table.
// Columns of the power table p_{m,k} = [t^k] F(t)^m satisfy
//   m p_{m,k} = m p_{m-1,k} + (4k - 4 + 2m) p_{m,k-1},
// from the formal ODE 4t^2 F' = F(1-2t) - 1, so each new k costs O(n) exact
// big-integer operations instead of a full convolution.
class CompositionCoefficientStream {
  public:
    explicit CompositionCoefficientStream(int n);

    // A_{n,k} for the current k, then advances to k+1.
    const mpz_class& next();
    int degree() const { return k_; }  // degree of the value next() returns

  private:
    int n_;
    int k_ = 0;
    std::vector<mpz_class> column_;  // p_{m,k-1}, m = 0..n+1
    mpz_class scratch_;
};

// Independent check used by the self-verification command: direct
// enumeration of raw compositions. Exponential in k; keep n, k small.
mpz_class composition_coefficient_bruteforce(int n, int k);

// Volume of the ideal regular n-simplex. n = 2 returns pi exactly with zero
// series terms; n >= 3 sums the series with a fitted polynomial tail.
MilnorSeriesState ideal_regular_simplex_volume(const MilnorSeriesParams& params);

double ideal_regular_simplex_volume_value(int dim, double rel_tol = 1e-7,
                                          long max_terms = 20000);

// Lobachevsky function Lambda(theta) = sum_{k>=1} sin(2k theta)/(2k^2),
// theta in (0, pi/2]. Accurate to ~1e-14 absolute.
double lobachevsky(double theta);

// Odd pi-periodic extension of lobachevsky() to all real theta.
double lobachevsky_extended(double theta);

// Dihedral angle 2*alpha = arccos(1/(n-1)) of the ideal regular n-simplex;
// 0 for the degenerate n = 2 case.
double dihedral_angle(int n);

}  // namespace horopack
