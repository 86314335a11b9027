#ifndef ATOMPOT_ANALYSIS_HPP
#define ATOMPOT_ANALYSIS_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "atompot/core.hpp"
#include "atompot/potentials.hpp"

namespace atompot {

enum class GridKind { linear, logarithmic };

struct SweepPlan {
    double z_min; // m
    double z_max; // m
    std::size_t z_points;
    GridKind grid = GridKind::logarithmic;
    std::vector<double> powers{}; // W
    EvalMode mode = EvalMode::nonretarded;
};

inline void validate(const SweepPlan& plan) {
    if (!(plan.z_min > 0.0) || !(plan.z_max > plan.z_min))
        throw std::invalid_argument("SweepPlan: require 0 < z_min < z_max");
    if (plan.z_points < 16)
        throw std::invalid_argument("SweepPlan: z_points must be >= 16");
    for (double p : plan.powers)
        if (!(p >= 0.0))
            throw std::invalid_argument("SweepPlan: powers must be non-negative");
}

inline std::vector<double> make_grid(const SweepPlan& plan) {
    validate(plan);
    std::vector<double> z(plan.z_points);
    const std::size_t n = plan.z_points;
    if (plan.grid == GridKind::linear) {
        const double step = (plan.z_max - plan.z_min) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            z[i] = plan.z_min + step * static_cast<double>(i);
    } else {
        const double la = std::log(plan.z_min);
        const double lb = std::log(plan.z_max);
        const double step = (lb - la) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            z[i] = std::exp(la + step * static_cast<double>(i));
    }
    z.front() = plan.z_min;
    z.back() = plan.z_max;
    return z;
}

namespace detail {

// Fan a per-index job out over nthreads. Every index is computed
// independently, so the assembled result does not depend on the thread
// count or scheduling.
inline void parallel_for(std::size_t n, unsigned nthreads, const std::function<void(std::size_t)>& job) {
    if (nthreads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    std::mutex err_mutex;
    std::string first_error;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                try {
                    job(i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (first_error.empty())
                        first_error = e.what();
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (!first_error.empty())
        throw std::runtime_error(first_error);
}

} // namespace detail

/// Sample all potential components on the plan's grid. Deterministic for any
/// thread count; a failing point aborts the curve naming its z.
inline PotentialCurve potential_curve(const AtomSpecies& atom, const SurfaceModel& surface,
                                      const LaserSpec& laser, const SweepPlan& plan,
                                      const QuadratureConfig& quad, bool additive_only = false,
                                      unsigned threads = 1) {
    PotentialCurve curve;
    curve.z_grid = make_grid(plan);
    const std::size_t n = curve.z_grid.size();
    curve.u_cp.resize(n);
    curve.u_l.resize(n);
    curve.u_lcp.resize(n);
    curve.u_tot.resize(n);
    detail::parallel_for(n, threads, [&](std::size_t i) {
        const double z = curve.z_grid[i];
        try {
            const PotentialComponents p =
                total_potential(atom, surface, laser, z, quad, plan.mode, additive_only);
            curve.u_cp[i] = p.u_cp;
            curve.u_l[i] = p.u_l;
            curve.u_lcp[i] = p.u_lcp;
            curve.u_tot[i] = p.u_tot;
        } catch (const std::exception& e) {
            throw std::runtime_error("potential_curve: failure at z = " + std::to_string(z) +
                                     " m: " + e.what());
        }
    });
    return curve;
}

struct DeltaUCurve {
    std::vector<double> z_grid; // m
    std::vector<double> delta;  // J, U_CP - U_LCP
};

/// Difference U_CP - U_LCP on the plan's grid, computed in full mode.
/// Intended for uniform illumination of a mirror or dielectric.
inline DeltaUCurve delta_u(const AtomSpecies& atom, const SurfaceModel& surface,
                           const LaserSpec& laser, const SweepPlan& plan,
                           const QuadratureConfig& quad, unsigned threads = 1) {
    if (!std::holds_alternative<PerfectMirror>(surface) &&
        !std::holds_alternative<ConstantEps>(surface))
        throw std::invalid_argument("delta_u: surface must be PerfectMirror or ConstantEps");
    if (!std::holds_alternative<UniformField>(laser.field))
        throw std::invalid_argument("delta_u: uniform laser required");
    DeltaUCurve out;
    out.z_grid = make_grid(plan);
    out.delta.resize(out.z_grid.size());
    detail::parallel_for(out.z_grid.size(), threads, [&](std::size_t i) {
        const double z = out.z_grid[i];
        const PotentialComponents p =
            total_potential(atom, surface, laser, z, quad, EvalMode::full);
        out.delta[i] = p.u_cp - p.u_lcp;
    });
    return out;
}

namespace detail {

// Extrema shallower than this are quadrature noise, not physics.
inline constexpr double extremum_energy_floor = 1e-34; // J

// Golden-section refinement of a bracketed extremum to |b - a| <= xtol.
// Minimizes f; pass the negated potential for maxima.
template <typename F> double golden_section(F&& f, double a, double b, double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

struct GridExtremum {
    ExtremumKind kind;
    std::size_t left;  // bracket indices into the (compressed) grid
    std::size_t index; // sample at the discrete extremum
    std::size_t right;
};

// Locate interior sign changes of the first difference. Runs of equal
// samples collapse to their midpoint so plateaus yield one extremum.
inline std::vector<GridExtremum> grid_extrema(const std::vector<double>& z,
                                              const std::vector<double>& u,
                                              std::vector<double>& zc, std::vector<double>& uc) {
    zc.clear();
    uc.clear();
    std::size_t i = 0;
    while (i < u.size()) {
        std::size_t j = i;
        while (j + 1 < u.size() && u[j + 1] == u[i])
            ++j;
        zc.push_back(0.5 * (z[i] + z[j]));
        uc.push_back(u[i]);
        i = j + 1;
    }
    std::vector<GridExtremum> found;
    for (std::size_t k = 1; k + 1 < uc.size(); ++k) {
        const double dl = uc[k] - uc[k - 1];
        const double dr = uc[k + 1] - uc[k];
        if (dl < 0.0 && dr > 0.0)
            found.push_back({ExtremumKind::minimum, k - 1, k, k + 1});
        else if (dl > 0.0 && dr < 0.0)
            found.push_back({ExtremumKind::maximum, k - 1, k, k + 1});
    }
    return found;
}

} // namespace detail

/// Grid-level extremum location: sign changes of the first difference of
/// u_tot, classified by the discrete second difference.
inline std::vector<ExtremumRecord> find_extrema(const PotentialCurve& curve, double power = 0.0) {
    if (curve.z_grid.size() < 3)
        throw std::invalid_argument("find_extrema: need at least 3 samples");
    std::vector<double> zc, uc;
    const auto raw = detail::grid_extrema(curve.z_grid, curve.u_tot, zc, uc);
    std::vector<ExtremumRecord> records;
    for (const auto& e : raw) {
        if (std::fabs(uc[e.index]) < detail::extremum_energy_floor)
            continue;
        records.push_back({power, e.kind, zc[e.index], uc[e.index]});
    }
    return records;
}

/// Extremum location with golden-section refinement of each bracket on the
/// continuous evaluator, to a z-tolerance of 0.1 nm.
template <typename F>
std::vector<ExtremumRecord> find_extrema(const PotentialCurve& curve, F&& u_tot_at,
                                         double power = 0.0, double z_tol = 1e-10) {
    if (curve.z_grid.size() < 3)
        throw std::invalid_argument("find_extrema: need at least 3 samples");
    std::vector<double> zc, uc;
    const auto raw = detail::grid_extrema(curve.z_grid, curve.u_tot, zc, uc);
    std::vector<ExtremumRecord> records;
    for (const auto& e : raw) {
        const double a = zc[e.left];
        const double b = zc[e.right];
        double z_star;
        if (e.kind == ExtremumKind::minimum) {
            z_star = detail::golden_section(u_tot_at, a, b, z_tol);
        } else {
            z_star = detail::golden_section([&](double zz) { return -u_tot_at(zz); }, a, b, z_tol);
        }
        const double value = u_tot_at(z_star);
        if (std::fabs(value) < detail::extremum_energy_floor)
            continue;
        records.push_back({power, e.kind, z_star, value});
    }
    std::sort(records.begin(), records.end(),
              [](const ExtremumRecord& l, const ExtremumRecord& r) {
                  return l.z_position < r.z_position;
              });
    return records;
}

struct PowerSweepResult {
    std::vector<ExtremumRecord> records; // sorted by (power, z)
    std::vector<std::string> errors;     // one entry per failed power
};

/// find_extrema per laser power, evanescent template. Per-power failures are
/// recorded and the sweep continues.
inline PowerSweepResult power_sweep(const AtomSpecies& atom, const SurfaceModel& surface,
                                    const LaserSpec& laser_template, const SweepPlan& plan,
                                    const QuadratureConfig& quad, bool additive_only = false,
                                    unsigned threads = 1) {
    validate(plan);
    if (plan.powers.empty())
        throw std::invalid_argument("power_sweep: plan.powers must be non-empty");
    if (!std::holds_alternative<EvanescentField>(laser_template.field))
        throw std::invalid_argument("power_sweep: evanescent laser template required");
    PowerSweepResult out;
    for (double power : plan.powers) {
        LaserSpec laser = laser_template;
        std::get<EvanescentField>(laser.field).power = power;
        try {
            const PotentialCurve curve =
                potential_curve(atom, surface, laser, plan, quad, additive_only, threads);
            auto evaluator = [&](double zz) {
                return total_potential(atom, surface, laser, zz, quad, plan.mode, additive_only)
                    .u_tot;
            };
            auto records = find_extrema(curve, evaluator, power);
            out.records.insert(out.records.end(), records.begin(), records.end());
        } catch (const std::exception& e) {
            out.errors.push_back("P = " + std::to_string(power) + " W: " + e.what());
        }
    }
    std::stable_sort(out.records.begin(), out.records.end(),
                     [](const ExtremumRecord& l, const ExtremumRecord& r) {
                         if (l.power != r.power)
                             return l.power < r.power;
                         return l.z_position < r.z_position;
                     });
    return out;
}

} // namespace atompot

#endif
