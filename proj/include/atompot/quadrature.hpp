#ifndef ATOMPOT_QUADRATURE_HPP
#define ATOMPOT_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace atompot {

/// Tolerances and limits shared by every adaptive integral in the library.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-300; // effectively "relative only" unless raised
    std::size_t max_subdivisions = 2000;
    double freq_cutoff_factor = 1.0; // scales the exponential-tail truncation
};

inline void validate(const QuadratureConfig& quad) {
    if (!(quad.rel_tol > 0.0) || !(quad.abs_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    if (quad.max_subdivisions < 1)
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
}

/// Thrown when the adaptive scheme exhausts max_subdivisions. Carries the
/// best estimate reached and its error bound.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

  private:
    double estimate_;
    double error_bound_;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights (positive half), QUADPACK values.
inline constexpr double gk15_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk15_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T> inline double abs_of(const T& v) {
    if constexpr (std::is_same_v<T, std::complex<double>>)
        return std::abs(v);
    else
        return std::fabs(v);
}

template <typename T> struct Panel {
    double a, b;
    T value;
    double error;
};

template <typename F, typename T> Panel<T> gk15(F&& f, double a, double b) {
    const double hlen = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T vals[15];
    for (int i = 0; i < 7; ++i) {
        const double dx = hlen * gk15_nodes[i];
        vals[2 * i] = f(mid - dx);
        vals[2 * i + 1] = f(mid + dx);
    }
    vals[14] = f(mid);
    T kronrod{};
    T gauss{};
    for (int i = 0; i < 8; ++i) {
        const T fsum = (i == 7) ? vals[14] : vals[2 * i] + vals[2 * i + 1];
        kronrod += gk15_wk[i] * fsum;
        if (i % 2 == 1)
            gauss += gk15_wg[i / 2] * fsum; // odd indices plus the centre form Gauss-7
    }
    kronrod *= hlen;
    gauss *= hlen;
    // QUADPACK-style error sharpening: the raw |K - G| difference can be a
    // deceptive underestimate on oscillatory panels, so rescale it against
    // the panel's total variation resasc.
    const T mean = kronrod / (b - a);
    double resasc = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dev = (i == 7) ? abs_of<T>(vals[14] - mean)
                                    : abs_of<T>(vals[2 * i] - mean) +
                                          abs_of<T>(vals[2 * i + 1] - mean);
        resasc += gk15_wk[i] * dev;
    }
    resasc *= std::fabs(hlen);
    const double diff = abs_of<T>(kronrod - gauss);
    double err = diff;
    if (resasc != 0.0 && diff != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
    return Panel<T>{a, b, kronrod, err};
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. T is double or
/// std::complex<double>. Bisects the worst panel until the summed error
/// estimate satisfies max(abs_tol, rel_tol * |result|).
template <typename T, typename F>
T integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& quad,
                     const char* what = "integral") {
    if (a == b)
        return T{};
    // start from several panels: a single Gauss-Kronrod panel can produce a
    // deceptively small error estimate on oscillatory integrands
    std::vector<detail::Panel<T>> panels;
    constexpr int initial = 4;
    for (int i = 0; i < initial; ++i) {
        const double pa = a + (b - a) * i / double(initial);
        const double pb = a + (b - a) * (i + 1) / double(initial);
        panels.push_back(detail::gk15<F&, T>(f, pa, pb));
    }
    for (std::size_t iter = 0; iter < quad.max_subdivisions; ++iter) {
        T total{};
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            total_err += panels[i].error;
            if (panels[i].error > panels[worst].error)
                worst = i;
        }
        const double tol = std::max(quad.abs_tol, quad.rel_tol * detail::abs_of<T>(total));
        if (total_err <= tol || panels[worst].error == 0.0)
            return total;
        const auto bad = panels[worst];
        const double mid = 0.5 * (bad.a + bad.b);
        if (mid == bad.a || mid == bad.b)
            return total; // interval at floating-point resolution
        panels[worst] = detail::gk15<F&, T>(f, bad.a, mid);
        panels.push_back(detail::gk15<F&, T>(f, mid, bad.b));
    }
    T total{};
    double total_err = 0.0;
    for (const auto& p : panels) {
        total += p.value;
        total_err += p.error;
    }
    throw QuadratureError(std::string(what) + ": adaptive quadrature did not converge",
                          detail::abs_of<T>(total), total_err);
}

} // namespace atompot

#endif
