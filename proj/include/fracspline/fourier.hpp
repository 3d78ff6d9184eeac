#ifndef FRACSPLINE_FOURIER_HPP
#define FRACSPLINE_FOURIER_HPP

// Fourier-domain spline transforms, convention F f(w) = int f(x) e^{-iwx} dx,
// and inverse-transform quadrature with an error estimate.

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "fracspline/clifford.hpp"
#include "fracspline/splines.hpp"

namespace fracspline {

/// Radius below which (1 - e^{-s})/s is summed as a Taylor series.
inline constexpr double kSeriesRadius = 1e-2;

/// Symmetric uniform grid on [-omega_max, omega_max] with an odd point count.
class FrequencyGrid {
public:
    FrequencyGrid(double omega_max, int count, double exclusion_radius = kSeriesRadius);

    double omega_max() const noexcept { return omega_max_; }
    int count() const noexcept { return count_; }
    double exclusion_radius() const noexcept { return radius_; }
    double step() const noexcept { return 2.0 * omega_max_ / (count_ - 1); }
    double operator[](int i) const noexcept { return -omega_max_ + i * step(); }

private:
    double omega_max_;
    int count_;
    double radius_;
};

/// (1 - e^{-s}) / s, removable singularity at s = 0 handled by series.
cdouble exp_ratio(cdouble s);

/// Omega(w) = (1 - e^{-iw}) / (iw); Omega(0) = 1.
cdouble omega_fn(double w);

/// Omega_a(w) = (1 - e^{-a} e^{-iw}) / (iw + a).
cdouble omega_a_fn(double a, double w);

/// Omega(w)^z, principal branch; zero at w = 2 pi k, k != 0.
cdouble hat_bz(cdouble z, double w);

/// Transform of eval_exp_bspline(a, .). Takes the convolution tuple a and
/// evaluates prod_k Omega_{-a_k}(w): the negation between the time-domain
/// tuple and the Omega_a parametrisation happens here.
cdouble hat_en(const ExponentialWeights& a, double w);

/// Omega_a(w)^z, a > 0.
cdouble hat_ez(double a, cdouble z, double w);

/// Omega(w)^Y through the hypercomplex power.
ComplexParavector hat_bupsilon(const Paravector& upsilon, double w);
SubalgebraValue hat_bupsilon_value(const Paravector& upsilon, double w);

using TransformSample = std::variant<cdouble, ComplexParavector>;

struct TransformValue {
    double omega = 0.0;
    TransformSample value;
};

struct InverseResult {
    cdouble value{};
    double error = 0.0;                ///< discretization + tail
    double discretization_error = 0.0; ///< Richardson estimate of the Simpson error
    double tail_error = 0.0;           ///< bound on the truncated |w| > omega_max part
};

/// Samples a scalar transform once on a grid and inverts it at any x by
/// composite Simpson quadrature of (1/2pi) int F(w) e^{iwx} dw.
///
/// The tail beyond omega_max is bounded per side by
/// 1.25 * C * omega_max^{1-p} / (2 pi (p - 1)), with C the mean of
/// |F(w)| |w|^p over the outer decade of that side. The mean equals the
/// period average of |F| |w|^p for the Omega-type transforms, whose
/// modulated envelope is 2 pi periodic.
class InverseTransform {
public:
    InverseTransform(const std::function<cdouble(double)>& transform, const FrequencyGrid& grid, double decay_order);

    InverseResult at(double x) const;

    /// Throws GridError when the error estimate exceeds `tolerance`.
    InverseResult at(double x, double tolerance) const;

    double tail_error() const noexcept { return tail_; }
    const FrequencyGrid& grid() const noexcept { return grid_; }

private:
    FrequencyGrid grid_;
    double decay_order_;
    std::vector<cdouble> samples_;
    double tail_ = 0.0;
};

InverseResult inverse_quadrature(const std::function<cdouble(double)>& transform, double x, const FrequencyGrid& grid,
                                 double decay_order);

/// Componentwise inverse of a paravector-valued transform; each component
/// is the transform of a real time-domain function.
std::vector<InverseResult> inverse_quadrature_components(
    const std::function<ComplexParavector(double)>& transform, double x, const FrequencyGrid& grid, double decay_order);

/// Least-squares slope of log|F| against log|w|.
double loglog_slope(std::span<const double> omega, std::span<const double> magnitude);

} // namespace fracspline

#endif
