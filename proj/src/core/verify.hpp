#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/hadamard.hpp"
#include "core/kdata.hpp"
#include "core/oracle.hpp"
#include "core/scalar.hpp"

namespace huygens {

enum class VerifyStatus { exact_pass, numeric_pass, fail };

// Outcome of one identity check. Exact checks either canonicalize their
// difference to zero (exact_pass) or fail; numeric checks report the largest
// relative residual seen. A failing report always carries a concrete
// witness: the inputs together with both sides' values or the surviving
// canonical form.
struct VerifyReport {
    std::string check_name;
    VerifyStatus status = VerifyStatus::fail;
    double max_residual = 0.0;  // meaningful for numeric_pass
    std::string witness;        // nonempty exactly when status == fail
    long samples = 0;
    double elapsed_seconds = 0.0;

    bool passed() const { return status != VerifyStatus::fail; }
};

// --- exact identity checks -------------------------------------------------

// Sum rule for the reduced Wronskians, cleared of denominators in the
// two-angle algebra:
//   sum_i c_i W_i(p) W_i(q) cos(k_i (p - q)) - W(p) W(q) == 0.
VerifyReport check_unity(const KData& data);

// Every reduced-Wronskian quotient is an eigenfunction of the angular
// operator: L psi_i == k_i^2 psi_i, checked as exact rational functions.
VerifyReport check_eigen(const KData& data);

// One ladder step between the operator and its extension by k_next (appended
// with the trivial phase): the lowering step sends extended eigenfunctions
// to the negated base ones, the raising step sends base eigenfunctions up
// with factor (k_next^2 - k_i^2), and lowering composed with raising equals
// the base operator minus k_next^2 on a generic rational function.
// Requires k_next > max entry of data.
VerifyReport check_darboux(const KData& data, long k_next);

// Derivative-of-quotient rule for the reduced Wronskians of the data, viewed
// as the extension of its own prefix by the top entry: with W the full
// Wronskian, W_i / W_last omitting one entry and W_(i,last) omitting both,
//   d/dphi (W_i / W_last) == W W_(i,last) / W_last^2   for every i < last.
VerifyReport check_cramer(const KData& data);

// The recursion between consecutive coefficients, with both sides realized
// in the separated algebra: for every order nu = 1 .. k_max,
//   (chord directional derivative + nu) U_nu == -(polar operator) U_(nu-1).
VerifyReport check_transport_symbolic(const HadamardTable& table);

// The same recursion for per-order rescaled coefficients w^nu U_nu; the
// right-hand side picks up the factor w. Exercised with w = 1/2 (the shared
// eigenfunction weights) and w = -1/4 (the elliptic weights).
VerifyReport check_transport_rescaled(const HadamardTable& table,
                                      const Scalar& per_order);

// Coefficients of the three orders past k_max vanish identically.
VerifyReport check_vanishing(const HadamardTable& table);

// The generating solution: the polar operator annihilates every radial term
// individually, and the zeroth coefficient of its squared-distance expansion
// (its value on the diagonal) is one.
VerifyReport check_goursat(const KData& data);

// The squared-distance expansion of the generating solution reproduces the
// coefficient table: a_nu * (-4)^nu * nu! == sigma_nu for nu = 0 .. k_max.
VerifyReport check_series(const HadamardTable& table);

// --- numeric checks ----------------------------------------------------------

struct RaySample {
    std::array<double, 2> x{};
    std::array<double, 2> xi{};
};

struct HeatSample {
    std::array<double, 2> x{};
    std::array<double, 2> xi{};
    double t = 1.0;
};

// Deterministic (seeded) sample generators. All produced angles keep a
// comfortable margin from the singular rays, beyond the bare admissibility
// requirement, so downstream finite differences stay well conditioned.
std::vector<std::array<double, 2>> admissible_points(const AngularOperator& op, int count,
                                                     unsigned seed);
std::vector<RaySample> admissible_rays(const AngularOperator& op, int count, unsigned seed,
                                       const OracleSettings& settings = {});
// Heat samples additionally reject points where the polynomial bracket of
// the kernel nearly vanishes: the relative-residual metric degenerates at
// zeros of the kernel.
std::vector<HeatSample> heat_samples(const HadamardTable& table, int count, unsigned seed);
// Probe points for the shared eigenfunction, with the same near-zero
// rejection applied to the 2^-nu-weighted bracket.
std::vector<std::array<double, 2>> ba_probe_points(const HadamardTable& table,
                                                   const std::array<double, 2>& xi,
                                                   int count, unsigned seed);

// Quadrature oracle against the closed-form table on each ray, orders
// 0 .. order_max: relative tolerance 1e-6 for orders up to two, 1e-4 at
// order three (each recursion level compounds finite-difference noise).
// The reported residual is the maximum over the orders up to two.
VerifyReport check_transport_oracle(const HadamardTable& table,
                                    const std::vector<RaySample>& rays, long order_max,
                                    const OracleSettings& settings = {});

// (d/dt + L_x) applied to the kernel by fourth-order central differences.
// Passes when the relative residual stays below 1e-6 at every sample and,
// where that residual is large enough to be truncation-dominated, doubling
// both steps grows it by at least a factor of eight (fourth-order
// convergence would give sixteen). Steps are relative: the spatial step
// to |x|, the time step to t.
VerifyReport check_heat_residual(const HadamardTable& table,
                                 const std::vector<HeatSample>& samples,
                                 double h = 1e-3, double tau = 1e-3);

// Ratio statistics of ((-Laplacian + V) psi) / psi for the shared
// eigenfunction psi, by central differences at the sample points. Reports
// whether the ratio is constant across samples without asserting its value.
struct ProbeStatistics {
    double mean = 0.0;
    double spread = 0.0;     // max |ratio - mean| over the samples
    bool constant = false;   // spread < 1e-5 relative to max(1, |mean|)
    long samples = 0;
};
ProbeStatistics ba_eigen_probe(const HadamardTable& table,
                               const std::array<double, 2>& xi,
                               const std::vector<std::array<double, 2>>& sample_xs);
VerifyReport check_ba_probe(const HadamardTable& table, const std::array<double, 2>& xi,
                            const std::vector<std::array<double, 2>>& sample_xs);

// --- negative controls -------------------------------------------------------
// Each runs its parent check against a deliberately broken input (one scaled
// weight, one mixed eigenfunction, one wrong factor, one scaled coefficient,
// one bumped polynomial order). The expected outcome is status fail with a
// nonzero witness; a pass here means the parent check has lost its teeth.
VerifyReport negative_unity(const KData& data);
VerifyReport negative_eigen(const KData& data);
VerifyReport negative_darboux(const KData& data, long k_next);
VerifyReport negative_cramer(const KData& data);
VerifyReport negative_transport(const HadamardTable& table);
VerifyReport negative_vanishing(const HadamardTable& table);
VerifyReport negative_goursat(const KData& data);
VerifyReport negative_series(const HadamardTable& table);
VerifyReport negative_ba_probe(const HadamardTable& table,
                               const std::array<double, 2>& xi,
                               const std::vector<std::array<double, 2>>& sample_xs);

// --- suite runner --------------------------------------------------------------

struct SuiteOptions {
    long darboux_next = 0;         // 0 -> one past the top entry
    long oracle_order = 2;         // oracle recursion depth (capped at 3)
    int oracle_rays = 20;
    int heat_count = 20;
    double heat_step = 1e-3;       // relative spatial step
    double heat_time_step = 1e-3;  // relative time step
    int probe_count = 10;
    unsigned seed = 1;
};

// Known suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();

// Runs one named suite (or "all") against the data. Unknown names throw
// InvalidArgumentError. Checks are independent pure computations; reports
// are returned sorted by check name regardless of execution order.
std::vector<VerifyReport> run_suite(const KData& data, const std::string& suite,
                                    const SuiteOptions& options = {});

}  // namespace huygens
