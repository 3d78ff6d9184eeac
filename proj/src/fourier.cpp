#include "fracspline/fourier.hpp"

#include <cmath>
#include <numbers>

#include "fracspline/detail/compensated_sum.hpp"
#include "fracspline/parallel.hpp"

namespace fracspline {

FrequencyGrid::FrequencyGrid(double omega_max, int count, double exclusion_radius)
    : omega_max_(omega_max), count_(count), radius_(exclusion_radius)
{
    if (!(omega_max > 0.0))
        throw GridError("frequency grid needs omega_max > 0");
    if (count < 3 || count % 2 == 0)
        throw GridError("frequency grid needs an odd point count >= 3");
}

cdouble exp_ratio(cdouble s)
{
    if (std::abs(s) <= kSeriesRadius) {
        // sum_{k=0}^{12} (-s)^k / (k+1)!, truncation error < 1e-24 in the disk.
        cdouble sum = 0.0;
        cdouble term = 1.0;
        for (int k = 0; k <= 12; ++k) {
            sum += term;
            term *= -s / static_cast<double>(k + 2);
        }
        return sum;
    }
    return (1.0 - std::exp(-s)) / s;
}

cdouble omega_fn(double w) { return exp_ratio(cdouble(0.0, w)); }

cdouble omega_a_fn(double a, double w) { return exp_ratio(cdouble(a, w)); }

namespace {

// Principal power; the graph of Omega meets the negative real axis only at
// its zeros, so an exactly negative real base is a rounded zero.
cdouble principal_power(cdouble base, cdouble z)
{
    if (base == 0.0 || (base.imag() == 0.0 && base.real() < 0.0))
        return 0.0;
    return std::exp(z * std::log(base));
}

} // namespace

cdouble hat_bz(cdouble z, double w)
{
    if (!(z.real() > 1.0))
        throw OrderError("complex spline order requires re z > 1");
    return principal_power(omega_fn(w), z);
}

cdouble hat_en(const ExponentialWeights& a, double w)
{
    cdouble p = 1.0;
    for (double ak : a.values())
        p *= omega_a_fn(-ak, w);
    return p;
}

cdouble hat_ez(double a, cdouble z, double w)
{
    if (!(a > 0.0))
        throw ParameterError("complex exponential B-spline is well-defined only for a > 0");
    if (!(z.real() > 1.0))
        throw OrderError("complex spline order requires re z > 1");
    return principal_power(omega_a_fn(a, w), z);
}

SubalgebraValue hat_bupsilon_value(const Paravector& upsilon, double w)
{
    if (!(upsilon.scalar() > 1.0))
        throw OrderError("hypercomplex spline order requires x0 := Sc Y > 1");
    cdouble base = omega_fn(w);
    if (base.imag() == 0.0 && base.real() < 0.0)
        base = 0.0;
    return hc_power_value(base, upsilon);
}

ComplexParavector hat_bupsilon(const Paravector& upsilon, double w)
{
    return hat_bupsilon_value(upsilon, w).to_paravector();
}

InverseTransform::InverseTransform(const std::function<cdouble(double)>& transform, const FrequencyGrid& grid,
                                   double decay_order)
    : grid_(grid), decay_order_(decay_order), samples_(static_cast<std::size_t>(grid.count()))
{
    if (!(decay_order > 1.0))
        throw GridError("inverse quadrature needs a transform decaying faster than |w|^{-1}");
    parallel_for(samples_.size(), [&](std::size_t i) { samples_[i] = transform(grid_[static_cast<int>(i)]); });

    const double wmax = grid_.omega_max();
    double sum_pos = 0.0;
    double sum_neg = 0.0;
    int n_pos = 0;
    int n_neg = 0;
    for (int i = 0; i < grid_.count(); ++i) {
        const double w = grid_[i];
        if (std::abs(w) < 0.1 * wmax)
            continue;
        const double g = std::abs(samples_[static_cast<std::size_t>(i)]) * std::pow(std::abs(w), decay_order_);
        if (w > 0.0) {
            sum_pos += g;
            ++n_pos;
        } else {
            sum_neg += g;
            ++n_neg;
        }
    }
    const double c = (n_pos ? sum_pos / n_pos : 0.0) + (n_neg ? sum_neg / n_neg : 0.0);
    tail_ = 1.25 * c * std::pow(wmax, 1.0 - decay_order_) / (2.0 * std::numbers::pi * (decay_order_ - 1.0));
}

namespace {

cdouble simpson(std::span<const cdouble> f, double h, double x, double w0, int stride)
{
    // Composite Simpson over samples f[0], f[stride], ..., with spacing stride*h.
    const int m = (static_cast<int>(f.size()) - 1) / stride;
    detail::ComplexCompensatedSum sum;
    for (int j = 0; j <= m; ++j) {
        const int i = j * stride;
        const double w = w0 + i * h;
        const double weight = (j == 0 || j == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        sum.add(weight * f[static_cast<std::size_t>(i)] * std::polar(1.0, w * x));
    }
    return sum.value() * (stride * h / 3.0);
}

} // namespace

InverseResult InverseTransform::at(double x) const
{
    const double h = grid_.step();
    const double w0 = grid_[0];
    const std::span<const cdouble> f(samples_);
    const cdouble fine = simpson(f, h, x, w0, 1);
    const int intervals = grid_.count() - 1;

    InverseResult r;
    r.value = fine / (2.0 * std::numbers::pi);
    if (intervals % 4 == 0) {
        const cdouble coarse = simpson(f, h, x, w0, 2);
        r.discretization_error = std::abs(fine - coarse) / 15.0 / (2.0 * std::numbers::pi);
    } else {
        // Trapezoid comparison: pessimistic but valid for any odd grid.
        detail::ComplexCompensatedSum t;
        for (int i = 0; i <= intervals; ++i) {
            const double wt = (i == 0 || i == intervals) ? 0.5 : 1.0;
            t.add(wt * f[static_cast<std::size_t>(i)] * std::polar(1.0, (w0 + i * h) * x));
        }
        r.discretization_error = std::abs(fine - t.value() * h) / (2.0 * std::numbers::pi);
    }
    r.tail_error = tail_;
    r.error = r.discretization_error + r.tail_error;
    return r;
}

InverseResult InverseTransform::at(double x, double tolerance) const
{
    InverseResult r = at(x);
    if (r.error > tolerance)
        throw GridError("frequency grid too coarse for the requested tolerance");
    return r;
}

InverseResult inverse_quadrature(const std::function<cdouble(double)>& transform, double x, const FrequencyGrid& grid,
                                 double decay_order)
{
    return InverseTransform(transform, grid, decay_order).at(x);
}

std::vector<InverseResult> inverse_quadrature_components(
    const std::function<ComplexParavector(double)>& transform, double x, const FrequencyGrid& grid, double decay_order)
{
    std::vector<ComplexParavector> values(static_cast<std::size_t>(grid.count()));
    parallel_for(values.size(), [&](std::size_t i) { values[i] = transform(grid[static_cast<int>(i)]); });
    const int n = values.front().dimension();
    std::vector<InverseResult> out;
    for (int c = 0; c <= n; ++c) {
        auto component = [&](double w) {
            const auto i = static_cast<std::size_t>(std::lround((w + grid.omega_max()) / grid.step()));
            return c == 0 ? values[i].scalar() : values[i].vec(c);
        };
        out.push_back(inverse_quadrature(component, x, grid, decay_order));
    }
    return out;
}

double loglog_slope(std::span<const double> omega, std::span<const double> magnitude)
{
    if (omega.size() != magnitude.size() || omega.size() < 2)
        throw DomainError("slope fit needs matching samples, at least two");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double m = static_cast<double>(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) {
        const double lx = std::log(std::abs(omega[i]));
        const double ly = std::log(magnitude[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace fracspline
