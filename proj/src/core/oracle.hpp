#pragma once

#include <array>
#include <vector>

#include "core/kdata.hpp"
#include "core/spectral.hpp"

namespace huygens {

// Tuning knobs for the numeric transport oracle.
struct OracleSettings {
    // Adaptive quadrature target for the bottom level. Kept above the noise
    // floor of the finite-difference integrands; pushing it lower only makes
    // the subdivision stall at full depth.
    double inner_tolerance = 1e-11;
    // Adaptive subdivision depth limit. Sixty-four panels already resolve the
    // admissible integrands to eleven digits; splitting further only sums more
    // finite-difference noise into the error estimate while the value stays
    // put.
    unsigned max_depth = 6;
    // Laplacian stencil steps, relative to |y|. The inner step differentiates
    // the exactly evaluable potential and is set to balance sixth-order
    // truncation against double roundoff; the outer step differentiates
    // quadrature-backed quantities whose evaluation noise favors a slightly
    // larger step.
    double fd_step_inner = 0.004;
    double fd_step_outer = 0.006;
    double ray_margin = 0.1;         // min angular distance to singular rays (rad)
    size_t segment_samples = 64;     // interior admissibility samples per segment
    double radius_floor = 0.05;      // min sample radius, relative to segment max
    long max_level = 3;              // deepest coefficient order supported
};

// Numeric evaluation of the heat coefficients by integrating the transport
// recursion along the ray from the source xi to the evaluation point:
//
//     U_0 == 1,   U_nu(x) = -Int_0^1 s^(nu-1) (L U_(nu-1))(xi + s (x - xi)) ds,
//
// the unique solution bounded near x == xi. The operator application is
// realized by differentiation under the integral sign: the Laplacian of U_nu
// is itself a ray integral of the Laplacian of the previous level's
// integrand, computed by sixth-order central differences at the two bottom
// levels. Nothing here touches the closed-form coefficient table, so this
// class serves as an independent cross-check of it.
class TransportOracle {
  public:
    TransportOracle(AngularOperator op, std::array<double, 2> xi,
                    OracleSettings settings = {});

    const AngularOperator& op() const { return op_; }
    const std::array<double, 2>& source() const { return xi_; }
    const OracleSettings& settings() const { return settings_; }

    // True when the closed segment [xi, x] keeps the angular margin from all
    // singular rays and stays away from the origin.
    bool admissible(const std::array<double, 2>& x) const;
    void require_admissible(const std::array<double, 2>& x) const;

    // U_nu(x, xi); throws SingularRayError for inadmissible segments and
    // QuadratureError when the adaptive bottom level fails to converge.
    double u(long nu, const std::array<double, 2>& x) const;
    // [U_0, ..., U_nu_max] sharing one admissibility check.
    std::vector<double> u_list(long nu_max, const std::array<double, 2>& x) const;

  private:
    AngularOperator op_;
    std::array<double, 2> xi_;
    OracleSettings settings_;

    std::array<double, 2> segment_point(const std::array<double, 2>& x,
                                        double s) const;
    double potential(const std::array<double, 2>& y) const;
    double u_impl(long nu, const std::array<double, 2>& x) const;
    double laplacian_u(long nu, const std::array<double, 2>& y) const;
    // (L U_nu)(y) = -Laplacian(U_nu)(y) + V(y) U_nu(y)
    double transported(long nu, const std::array<double, 2>& y) const;
    double laplacian_transported(long nu, const std::array<double, 2>& y) const;

    template <class F>
    double laplacian_fd(F&& f, const std::array<double, 2>& y, double step) const;
    template <class F>
    double integrate_adaptive(F&& f) const;
    template <class F>
    double integrate_fixed(F&& f) const;
};

// Convenience wrapper matching the library-level call shape: the list
// [U_0, ..., U_nu_max] at one Cartesian pair.
std::vector<double> transport_oracle_numeric(const KData& data,
                                             const std::array<double, 2>& x,
                                             const std::array<double, 2>& xi,
                                             long nu_max,
                                             OracleSettings settings = {});

}  // namespace huygens
