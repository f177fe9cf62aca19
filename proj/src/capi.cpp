#include "horopack/horopack.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "density.hpp"
#include "lorentz.hpp"
#include "milnor.hpp"

using namespace horopack;

struct hp_simplex {
    IdealSimplexFrame frame;
};

namespace {

hp_status translate_exception() {
    try {
        throw;
    } catch (const DimensionMismatchError&) {
        return HP_ERR_DIMENSION_MISMATCH;
    } catch (const std::invalid_argument&) {
        return HP_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error&) {
        return HP_ERR_DOMAIN;
    } catch (const std::length_error&) {
        return HP_ERR_BUFFER_TOO_SMALL;
    } catch (const std::bad_alloc&) {
        return HP_ERR_INTERNAL;
    } catch (const std::exception&) {
        return HP_ERR_INTERNAL;
    }
}

template <typename Fn>
hp_status guarded(Fn&& fn) {
    try {
        fn();
        return HP_OK;
    } catch (...) {
        return translate_exception();
    }
}

LorentzVector make_vector(int dim, const double* c) {
    if (dim < 2 || c == nullptr)
        throw std::invalid_argument("bad coordinate argument");
    return LorentzVector(std::vector<double>(c, c + dim + 1));
}

void write_coords(const LorentzVector& v, double* out) {
    if (out == nullptr) throw std::invalid_argument("null output");
    std::memcpy(out, v.coords.data(), v.coords.size() * sizeof(double));
}

}  // namespace

extern "C" {

const char* hp_status_message(hp_status status) {
    switch (status) {
        case HP_OK: return "ok";
        case HP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case HP_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case HP_ERR_DOMAIN: return "numeric domain error";
        case HP_ERR_NOT_CONVERGED: return "series did not converge within max_terms";
        case HP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case HP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

hp_status hp_bilinear_form(int dim, const double* x, const double* y,
                           double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = bilinear_form(make_vector(dim, x), make_vector(dim, y));
    });
}

hp_status hp_classify_point(int dim, const double* x, double tol,
                            int* out_class) {
    return guarded([&] {
        if (out_class == nullptr) throw std::invalid_argument("null output");
        switch (classify_point(make_vector(dim, x), tol > 0 ? tol : kAbsoluteTol)) {
            case PointClass::Interior: *out_class = HP_POINT_INTERIOR; break;
            case PointClass::Absolute: *out_class = HP_POINT_ABSOLUTE; break;
            case PointClass::Outer: *out_class = HP_POINT_OUTER; break;
        }
    });
}

hp_status hp_distance(int dim, const double* x, const double* y, double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = distance(make_vector(dim, x), make_vector(dim, y));
    });
}

hp_status hp_polar_form(int dim, const double* x, double* out) {
    return guarded([&] { write_coords(polar_form(make_vector(dim, x)), out); });
}

hp_status hp_foot_of_perpendicular(int dim, const double* x, const double* u,
                                   double* out) {
    return guarded([&] {
        write_coords(
            foot_of_perpendicular(make_vector(dim, x), make_vector(dim, u)), out);
    });
}

hp_status hp_distance_to_hyperplane(int dim, const double* x, const double* u,
                                    double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = distance_to_hyperplane(make_vector(dim, x), make_vector(dim, u));
    });
}

hp_status hp_simplex_create(int dim, hp_simplex** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        auto s = std::make_unique<hp_simplex>();
        s->frame = build_regular_ideal_simplex(dim);
        *out = s.release();
    });
}

void hp_simplex_destroy(hp_simplex* s) { delete s; }

int hp_simplex_dim(const hp_simplex* s) { return s ? s->frame.dim : 0; }

hp_status hp_simplex_vertex(const hp_simplex* s, int i, double* out) {
    return guarded([&] {
        if (s == nullptr) throw std::invalid_argument("null simplex");
        if (i < 0 || i > s->frame.dim)
            throw std::invalid_argument("vertex index out of range");
        write_coords(s->frame.vertices[static_cast<size_t>(i)], out);
    });
}

hp_status hp_simplex_incenter(const hp_simplex* s, double* out) {
    return guarded([&] {
        if (s == nullptr) throw std::invalid_argument("null simplex");
        write_coords(s->frame.incenter, out);
    });
}

hp_status hp_simplex_edge_pole(const hp_simplex* s, int i, int j, double* out) {
    return guarded([&] {
        if (s == nullptr) throw std::invalid_argument("null simplex");
        write_coords(edge_pole_in_center_plane(s->frame, i, j), out);
    });
}

hp_status hp_simplex_volume(int dim, double rel_tol, long max_terms,
                            hp_volume_result* out) {
    hp_status rc = guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        MilnorSeriesParams p;
        p.dim = dim;
        if (rel_tol > 0) p.rel_tol = rel_tol;
        if (max_terms > 0) p.max_terms = max_terms;
        MilnorSeriesState st = ideal_regular_simplex_volume(p);
        out->value = st.value();
        out->uncertainty = st.uncertainty;
        out->partial_sum = st.partial_sum;
        out->tail_estimate = st.tail_estimate;
        out->terms_used = st.terms_used;
        out->converged = st.converged ? 1 : 0;
    });
    if (rc == HP_OK && !out->converged) return HP_ERR_NOT_CONVERGED;
    return rc;
}

hp_status hp_composition_coefficient(int n, int k, char* buf, size_t buflen) {
    return guarded([&] {
        if (buf == nullptr) throw std::invalid_argument("null buffer");
        std::string s = composition_coefficient(n, k).get_str();
        if (s.size() + 1 > buflen) throw std::length_error("buffer too small");
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

hp_status hp_lobachevsky(double theta, double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = lobachevsky(theta);
    });
}

hp_status hp_dihedral_angle(int dim, double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = dihedral_angle(dim);
    });
}

hp_status hp_geometric_constants(int dim, hp_constants* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        GeometricConstants g = geometric_constants(dim);
        out->dim = g.dim;
        out->rho = g.rho;
        out->s = g.s;
        out->r = g.r;
        out->q = g.q;
        out->half_dihedral = g.half_dihedral;
        out->phi = g.phi;
        out->v0 = g.v0;
    });
}

hp_status hp_horocycle_arc_length(double x, double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = horocycle_arc_length(x);
    });
}

hp_status hp_horoball_sector_volume(double area, int dim, double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = horoball_sector_volume(area, dim);
    });
}

hp_status hp_two_ball_exchange_volume(double v_at_zero, double x, int dim,
                                      double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = two_ball_exchange_volume(v_at_zero, x, dim);
    });
}

hp_status hp_packing_volume(int dim, double x, double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        *out = packing_volume(dim, x);
    });
}

hp_status hp_density_report_compute(int dim, double rel_tol, long max_terms,
                                    hp_density_report* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output");
        DensityReport r = density_report(dim, rel_tol > 0 ? rel_tol : 1e-7,
                                         max_terms > 0 ? max_terms : 20000);
        out->dim = r.dim;
        out->classical = r.classical;
        out->generalized = r.generalized;
        out->ratio = r.ratio;
        switch (r.optimal) {
            case ArrangementLabel::B0: out->optimal = HP_ARRANGEMENT_B0; break;
            case ArrangementLabel::B1: out->optimal = HP_ARRANGEMENT_B1; break;
            case ArrangementLabel::Both: out->optimal = HP_ARRANGEMENT_BOTH; break;
        }
        out->simplex_volume = r.simplex_volume;
        out->volume_uncertainty = r.volume_uncertainty;
        out->density_uncertainty = r.density_uncertainty;
        out->volume_converged = r.volume_converged ? 1 : 0;
    });
}

hp_status hp_density_sweep(int dim, int samples, double rel_tol, long max_terms,
                           double* xs, double* vs, double* deltas) {
    return guarded([&] {
        if (xs == nullptr || vs == nullptr || deltas == nullptr)
            throw std::invalid_argument("null output");
        auto rows = density_sweep(dim, samples, rel_tol > 0 ? rel_tol : 1e-7,
                                  max_terms > 0 ? max_terms : 20000);
        for (size_t i = 0; i < rows.size(); ++i) {
            xs[i] = rows[i].x;
            vs[i] = rows[i].volume;
            deltas[i] = rows[i].delta;
        }
    });
}

hp_status hp_verify(double classical_perturbation, hp_verify_callback cb,
                    void* user, int* all_passed) {
    return guarded([&] {
        auto checks = run_verification(classical_perturbation);
        bool ok = true;
        for (const auto& c : checks) {
            ok = ok && c.passed;
            if (cb) cb(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
        }
        if (all_passed) *all_passed = ok ? 1 : 0;
    });
}

}  // extern "C"
