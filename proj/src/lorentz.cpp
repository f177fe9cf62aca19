#include "lorentz.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace horopack {

namespace {

constexpr double kClampWindow = 1e-12;

void check_vector(const LorentzVector& v) {
    if (v.dim < 2) throw std::invalid_argument("LorentzVector: dim must be >= 2");
    if (v.coords.size() != static_cast<size_t>(v.dim) + 1)
        throw std::invalid_argument("LorentzVector: coords must have dim+1 entries");
    for (double c : v.coords)
        if (c != 0.0) return;
    throw std::invalid_argument("LorentzVector: zero vector");
}

void check_same_dim(const LorentzVector& x, const LorentzVector& y) {
    if (x.dim != y.dim)
        throw DimensionMismatchError("LorentzVector: dimension mismatch");
}

double euclidean_norm_sq(const LorentzVector& v) {
    double s = 0.0;
    for (double c : v.coords) s += c * c;
    return s;
}

}  // namespace

LorentzVector::LorentzVector(std::vector<double> c)
    : dim(static_cast<int>(c.size()) - 1), coords(std::move(c)) {}

LorentzVector::LorentzVector(std::initializer_list<double> c)
    : LorentzVector(std::vector<double>(c)) {}

double bilinear_form(const LorentzVector& x, const LorentzVector& y) {
    check_vector(x);
    check_vector(y);
    check_same_dim(x, y);
    double s = -x.coords[0] * y.coords[0];
    for (int k = 1; k <= x.dim; ++k) s += x.coords[k] * y.coords[k];
    return s;
}

PointClass classify_point(const LorentzVector& x, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("classify_point: tol must be > 0");
    double q = bilinear_form(x, x);
    // Relative tolerance against the Euclidean norm makes the check
    // scale-invariant.
    if (std::fabs(q) <= tol * euclidean_norm_sq(x)) return PointClass::Absolute;
    return q < 0.0 ? PointClass::Interior : PointClass::Outer;
}

double distance(const LorentzVector& x, const LorentzVector& y) {
    if (classify_point(x) != PointClass::Interior ||
        classify_point(y) != PointClass::Interior)
        throw std::domain_error("distance: both points must be interior");
    double xx = bilinear_form(x, x);
    double yy = bilinear_form(y, y);
    double xy = bilinear_form(x, y);
    double c = std::fabs(xy) / std::sqrt(xx * yy);
    if (c < 1.0) {
        if (c < 1.0 - kClampWindow)
            throw std::domain_error("distance: cosh argument < 1 beyond tolerance");
        c = 1.0;
    }
    return std::acosh(c);
}

LorentzVector polar_form(const LorentzVector& x) {
    check_vector(x);
    LorentzVector u = x;
    u.coords[0] = -u.coords[0];
    return u;
}

LorentzVector foot_of_perpendicular(const LorentzVector& x,
                                    const LorentzVector& u) {
    if (classify_point(x) != PointClass::Interior)
        throw std::domain_error("foot_of_perpendicular: x must be interior");
    double uu = bilinear_form(u, u);
    if (uu <= 0.0)
        throw std::domain_error("foot_of_perpendicular: improper hyperplane");
    double t = bilinear_form(x, u) / uu;
    LorentzVector y = x;
    for (int k = 0; k <= x.dim; ++k) y.coords[k] -= t * u.coords[k];
    return y;
}

double distance_to_hyperplane(const LorentzVector& x, const LorentzVector& u) {
    if (classify_point(x) != PointClass::Interior)
        throw std::domain_error("distance_to_hyperplane: x must be interior");
    double uu = bilinear_form(u, u);
    if (uu <= 0.0)
        throw std::domain_error("distance_to_hyperplane: improper hyperplane");
    double xx = bilinear_form(x, x);
    double xu = bilinear_form(x, u);
    return std::asinh(std::fabs(xu) / std::sqrt(-xx * uu));
}

namespace {

// Vertices of a regular m-simplex inscribed in the unit sphere of R^m, with
// vertex 0 on the last axis and the centroid at the origin.
std::vector<std::vector<double>> unit_simplex(int m) {
    if (m == 1) return {{1.0}, {-1.0}};
    auto base = unit_simplex(m - 1);
    double scale = std::sqrt(1.0 - 1.0 / (static_cast<double>(m) * m));
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(m) + 1);
    out.push_back(std::vector<double>(m, 0.0));
    out.back()[m - 1] = 1.0;
    for (const auto& b : base) {
        std::vector<double> v(m, -1.0 / m);
        for (int k = 0; k < m - 1; ++k) v[k] = scale * b[k];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

IdealSimplexFrame build_regular_ideal_simplex(int n) {
    if (n < 2)
        throw std::invalid_argument("build_regular_ideal_simplex: n must be >= 2");
    IdealSimplexFrame frame;
    frame.dim = n;
    frame.vertices.reserve(static_cast<size_t>(n) + 1);

    // Facet vertices: regular (n-1)-simplex on the unit sphere of the
    // chart slice {x^0 = 1, x^n = 0}, one vertex along axis n-1. Pairwise
    // Gram value is -1 - 1/(n-1) = -n/(n-1).
    auto facet = unit_simplex(n - 1);
    for (const auto& w : facet) {
        std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
        c[0] = 1.0;
        for (int k = 0; k < n - 1; ++k) c[k + 1] = w[k];
        frame.vertices.emplace_back(std::move(c));
    }

    // Apex (1,0,...,0,1), scaled by n/(n-1) so <E_i, E_n> matches the
    // facet pairs and the Gram matrix has constant off-diagonal.
    std::vector<double> apex(static_cast<size_t>(n) + 1, 0.0);
    double lambda = static_cast<double>(n) / (n - 1);
    apex[0] = lambda;
    apex[n] = lambda;
    frame.vertices.emplace_back(std::move(apex));

    std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
    c[0] = 1.0;
    c[n] = 1.0 / n;
    frame.incenter = LorentzVector(std::move(c));
    return frame;
}

LorentzVector edge_pole_in_center_plane(const IdealSimplexFrame& frame, int i,
                                        int j) {
    int n = frame.dim;
    if (i < 0 || j < 0 || i > n || j > n || i == j)
        throw std::invalid_argument("edge_pole_in_center_plane: bad vertex pair");
    std::vector<double> oc(static_cast<size_t>(n) + 1, 0.0);
    oc[0] = 1.0;
    LorentzVector center(std::move(oc));
    const LorentzVector& ei = frame.vertices[static_cast<size_t>(i)];
    const LorentzVector& ej = frame.vertices[static_cast<size_t>(j)];
    double gio = bilinear_form(ei, center);
    double gjo = bilinear_form(ej, center);
    double gij = bilinear_form(ei, ej);
    LorentzVector u = center;
    for (int k = 0; k <= n; ++k)
        u.coords[k] = gjo * ei.coords[k] + gio * ej.coords[k] - gij * center.coords[k];
    return u;
}

LorentzVector facet_form(const IdealSimplexFrame& frame, int i) {
    int n = frame.dim;
    if (i < 0 || i > n) throw std::invalid_argument("facet_form: bad vertex index");
    // Nullspace of the n x (n+1) Lorentz-Gram conditions <u, E_j> = 0, j != i,
    // written as a Euclidean system with the sign of the 0-th column flipped.
    std::vector<std::vector<double>> a;
    a.reserve(static_cast<size_t>(n));
    for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        std::vector<double> row = frame.vertices[static_cast<size_t>(j)].coords;
        row[0] = -row[0];
        a.push_back(std::move(row));
    }
    // Gaussian elimination with partial pivoting; the single free column
    // parametrizes the solution.
    int rows = n, cols = n + 1;
    std::vector<int> pivot_col(static_cast<size_t>(rows), -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        double best_abs = 1e-13;
        for (int rr = r; rr < rows; ++rr)
            if (std::fabs(a[static_cast<size_t>(rr)][static_cast<size_t>(c)]) > best_abs) {
                best_abs = std::fabs(a[static_cast<size_t>(rr)][static_cast<size_t>(c)]);
                best = rr;
            }
        if (best < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(best)]);
        double p = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (int cc = c; cc < cols; ++cc) a[static_cast<size_t>(r)][static_cast<size_t>(cc)] /= p;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == r) continue;
            double f = a[static_cast<size_t>(rr)][static_cast<size_t>(c)];
            if (f == 0.0) continue;
            for (int cc = c; cc < cols; ++cc)
                a[static_cast<size_t>(rr)][static_cast<size_t>(cc)] -= f * a[static_cast<size_t>(r)][static_cast<size_t>(cc)];
        }
        pivot_col[static_cast<size_t>(r)] = c;
        ++r;
    }
    if (r != rows) throw std::domain_error("facet_form: degenerate vertex set");
    int free_col = 0;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int rr = 0; rr < rows; ++rr) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(rr)])] = true;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) { free_col = c; break; }
    std::vector<double> sol(static_cast<size_t>(cols), 0.0);
    sol[static_cast<size_t>(free_col)] = 1.0;
    for (int rr = 0; rr < rows; ++rr)
        sol[static_cast<size_t>(pivot_col[static_cast<size_t>(rr)])] = -a[static_cast<size_t>(rr)][static_cast<size_t>(free_col)];
    return LorentzVector(std::move(sol));
}

}  // namespace horopack
