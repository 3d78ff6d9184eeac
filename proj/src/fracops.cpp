#include "fracspline/fracops.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "fracspline/detail/compensated_sum.hpp"
#include "fracspline/fourier.hpp"
#include "fracspline/parallel.hpp"
#include "fracspline/specialfn.hpp"

namespace fracspline {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(cdouble z) { return format_number(z.real()) + "," + format_number(z.imag()); }

std::string format_paravector(const Paravector& p)
{
    std::string s = format_number(p.scalar());
    for (int i = 1; i <= p.dimension(); ++i)
        s += "," + format_number(p.vec(i));
    return s;
}

// z-th power, principal branch, 0^z = 0 for re z > 0.
cdouble complex_power(cdouble base, cdouble z)
{
    if (base == 0.0)
        return 0.0;
    if (base.imag() == 0.0 && base.real() > 0.0 && z.imag() == 0.0)
        return std::pow(base.real(), z.real());
    return std::exp(z * std::log(base));
}

ComplexParavector scalar_paravector(cdouble v) { return ComplexParavector(0, v); }

void require_signal(const SampledSignal& f)
{
    if (f.size() < 2)
        throw GridError("sampled signal needs at least two samples");
    if (!(f.step > 0.0))
        throw GridError("sampled signal needs a positive step");
    if (f.start < 0.0)
        throw DomainError("sampled signal must start at x >= 0");
    if (f.valid.size() != f.size())
        throw GridError("validity mask does not match the sample count");
}

std::size_t first_invalid(const SampledSignal& f)
{
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f.valid[i])
            return i;
    return f.size();
}

enum class LeftBoundary { ZeroExtension, OneSided };

// One pass of a first (order 1) or second (order 2) central difference.
void difference_pass(std::vector<cdouble>& g, std::vector<char>& valid, double h, int order, LeftBoundary left,
                     bool left_valid)
{
    const std::size_t n = g.size();
    std::vector<cdouble> out(n);
    auto at = [&](std::ptrdiff_t i) -> cdouble { return i < 0 ? cdouble(0.0) : g[static_cast<std::size_t>(i)]; };
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = order == 1 ? (g[i + 1] - g[i - 1]) / (2.0 * h) : (g[i + 1] - 2.0 * g[i] + g[i - 1]) / (h * h);
    }
    // Left cell.
    if (left == LeftBoundary::ZeroExtension) {
        out[0] = order == 1 ? (at(1) - at(-1)) / (2.0 * h) : (at(1) - 2.0 * at(0) + at(-1)) / (h * h);
    } else if (n >= 4) {
        out[0] = order == 1 ? (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h)
                            : (2.0 * g[0] - 5.0 * g[1] + 4.0 * g[2] - g[3]) / (h * h);
    } else {
        out[0] = order == 1 ? (g[1] - g[0]) / h : cdouble(0.0);
    }
    // Right cell: one-sided value so later passes stay finite, flagged invalid.
    const std::size_t r = n - 1;
    if (n >= 4) {
        out[r] = order == 1 ? (3.0 * g[r] - 4.0 * g[r - 1] + g[r - 2]) / (2.0 * h)
                            : (2.0 * g[r] - 5.0 * g[r - 1] + 4.0 * g[r - 2] - g[r - 3]) / (h * h);
    } else {
        out[r] = order == 1 ? (g[r] - g[r - 1]) / h : cdouble(0.0);
    }

    std::vector<char> v(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const bool neighbours = (i == 0 || valid[i - 1]) && valid[i] && (i + 1 >= n || valid[i + 1]);
        v[i] = neighbours ? 1 : 0;
    }
    v[r] = 0;
    if (!left_valid)
        v[0] = 0;
    g = std::move(out);
    valid = std::move(v);
}

SampledSignal nth_difference(const SampledSignal& f, int n, LeftBoundary left, bool left_valid)
{
    SampledSignal out = f;
    if (n == 0)
        return out;
    double scale = 0.0;
    for (const auto& v : f.samples)
        scale = std::max(scale, std::abs(v));
    int remaining = n;
    if (remaining % 2 == 1) {
        difference_pass(out.samples, out.valid, f.step, 1, left, left_valid);
        --remaining;
    }
    while (remaining > 0) {
        difference_pass(out.samples, out.valid, f.step, 2, left, left_valid);
        remaining -= 2;
    }
    double result_scale = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out.valid[i])
            result_scale = std::max(result_scale, std::abs(out.samples[i]));
    const double noise = std::numeric_limits<double>::epsilon() * scale * std::pow(2.0, n) / std::pow(f.step, n);
    out.conditioning_warning = f.conditioning_warning || noise > 1e-3 * result_scale;
    return out;
}

// Integer n >= re z with re(n - z) > 0, or n - z = 0.
int derivative_order(cdouble z)
{
    int n = static_cast<int>(std::ceil(z.real()));
    const cdouble nu = static_cast<double>(n) - z;
    if (nu.real() == 0.0 && nu.imag() != 0.0)
        ++n;
    return n;
}

} // namespace

SampledSignal::SampledSignal(double start_, double step_, std::vector<cdouble> samples_, bool vanishes_left_)
    : start(start_), step(step_), samples(std::move(samples_)), valid(samples.size(), 1), vanishes_left(vanishes_left_)
{
}

SampledSignal SampledSignal::sample(const std::function<cdouble(double)>& f, double start, double step, int count)
{
    if (count < 2)
        throw GridError("sampled signal needs at least two samples");
    std::vector<cdouble> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        v[static_cast<std::size_t>(i)] = f(start + i * step);
    return SampledSignal(start, step, std::move(v));
}

SampledSignal frac_integral(cdouble z, const SampledSignal& f)
{
    if (!(z.real() > 0.0))
        throw DomainError("fractional integral requires re z > 0");
    require_signal(f);
    const std::size_t n = f.size();
    const double h = f.step;

    // m^{z+1} and m^z for m = 0..n.
    std::vector<cdouble> p1(n + 1);
    std::vector<cdouble> p0(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        p1[m] = complex_power(static_cast<double>(m), z + 1.0);
        p0[m] = complex_power(static_cast<double>(m), z);
    }
    std::vector<cdouble> inner(n + 1);
    for (std::size_t m = 1; m < n; ++m)
        inner[m] = p1[m + 1] - 2.0 * p1[m] + p1[m - 1];

    const cdouble scale = complex_power(h, z) / gamma(z + 2.0);
    SampledSignal out = f;
    out.samples.assign(n, 0.0);
    const auto& fs = f.samples;
    parallel_for(n, [&](std::size_t k) {
        if (k == 0)
            return;
        const double kd = static_cast<double>(k);
        detail::ComplexCompensatedSum sum;
        sum.add((p1[k - 1] - (kd - z - 1.0) * p0[k]) * fs[0]);
        for (std::size_t m = 1; m < k; ++m)
            sum.add(inner[m] * fs[k - m]);
        sum.add(fs[k]);
        out.samples[k] = scale * sum.value();
    });
    const std::size_t bad = first_invalid(f);
    for (std::size_t i = bad; i < n; ++i)
        out.valid[i] = 0;
    return out;
}

SampledSignal frac_derivative(cdouble z, const SampledSignal& f, FractionalForm form)
{
    if (!(z.real() > 0.0))
        throw DomainError("fractional derivative requires re z > 0");
    require_signal(f);
    const int n = derivative_order(z);
    const cdouble nu = static_cast<double>(n) - z;
    const bool identity = nu == 0.0;
    if (form == FractionalForm::RiemannLiouville) {
        const SampledSignal g = identity ? f : frac_integral(nu, f);
        const auto left = f.vanishes_left ? LeftBoundary::ZeroExtension : LeftBoundary::OneSided;
        return nth_difference(g, n, left, f.vanishes_left);
    }
    const SampledSignal d = nth_difference(f, n, LeftBoundary::OneSided, true);
    if (identity)
        return d;
    SampledSignal r = frac_integral(nu, d);
    r.conditioning_warning = d.conditioning_warning;
    return r;
}

SampledSignal shifted_frac_derivative(double a, cdouble z, const SampledSignal& g, FractionalForm form)
{
    if (!(a > 0.0))
        throw ParameterError("shifted fractional derivative requires a > 0");
    require_signal(g);
    const double x_end = g.x(g.size() - 1);
    if (a * x_end > 700.0)
        throw RangeError("e^{a x} overflows on the sampling grid");
    SampledSignal f = g;
    for (std::size_t i = 0; i < f.size(); ++i)
        f.samples[i] *= std::exp(a * f.x(i));
    SampledSignal d = frac_derivative(z, f, form);
    for (std::size_t i = 0; i < d.size(); ++i)
        d.samples[i] *= std::exp(-a * d.x(i));
    return d;
}

std::vector<double> OmegaRange::points() const
{
    if (count < 1)
        throw GridError("frequency sweep needs at least one point");
    std::vector<double> w(static_cast<std::size_t>(count));
    if (count == 1) {
        w[0] = lo;
        return w;
    }
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i)
        w[static_cast<std::size_t>(i)] = lo + i * step;
    return w;
}

bool branch_admissible(cdouble w1, cdouble w2)
{
    if (w1 == 0.0 || w2 == 0.0)
        return false;
    const double s = std::arg(w1) + std::arg(w2);
    return s > -kPi && s <= kPi;
}

std::vector<cdouble> recover_atom_coefficients(const std::function<cdouble(double)>& lhs, int count, int points)
{
    if (count < 1 || points < count)
        throw GridError("coefficient recovery needs points >= count >= 1");
    std::vector<cdouble> values(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j)
        values[static_cast<std::size_t>(j)] = lhs(2.0 * kPi * j / points);
    std::vector<cdouble> b(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        detail::ComplexCompensatedSum sum;
        for (int j = 0; j < points; ++j)
            sum.add(values[static_cast<std::size_t>(j)] * std::polar(1.0, 2.0 * kPi * k * j / points));
        b[static_cast<std::size_t>(k)] = sum.value() / static_cast<double>(points);
    }
    return b;
}

namespace {

constexpr int kRecoveredAtoms = 16;
constexpr int kRecoveryPoints = 4096;

// Shared sweep for families whose identity is lhs(w) = sum_k c_k e^{-ikw}.
struct ScalarIdentity {
    std::function<std::optional<cdouble>(double)> lhs; // nullopt: branch-inadmissible
    std::vector<cdouble> coefficients;
};

cdouble atom_sum(const std::vector<cdouble>& c, double w)
{
    detail::ComplexCompensatedSum sum;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0.0)
            sum.add(c[k] * std::polar(1.0, -static_cast<double>(k) * w));
    return sum.value();
}

void sweep_scalar(ResidualReport& r, const ScalarIdentity& id)
{
    const auto points = r.grid.points();
    std::vector<std::optional<cdouble>> diff(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const auto lhs = id.lhs(points[i]);
        if (lhs)
            diff[i] = *lhs - atom_sum(id.coefficients, points[i]);
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!diff[i]) {
            r.excluded_omegas.push_back(points[i]);
            continue;
        }
        r.omegas.push_back(points[i]);
        r.residuals.push_back(std::abs(*diff[i]));
        r.residual_values.push_back(scalar_paravector(*diff[i]));
        r.max_residual = std::max(r.max_residual, r.residuals.back());
    }
}

void record_atoms(ResidualReport& r, const std::vector<cdouble>& analytic, const std::vector<cdouble>& recovered)
{
    for (std::size_t k = 0; k < recovered.size(); ++k) {
        r.recovered_atoms.push_back({static_cast<int>(k), scalar_paravector(recovered[k])});
        const cdouble a = k < analytic.size() ? analytic[k] : cdouble(0.0);
        r.analytic_atoms.push_back({static_cast<int>(k), scalar_paravector(a)});
        r.coefficient_error = std::max(r.coefficient_error, std::abs(recovered[k] - a));
    }
}

std::vector<cdouble> complex_atoms(cdouble z, int truncation, double damping)
{
    std::vector<cdouble> c(static_cast<std::size_t>(truncation) + 1);
    cdouble b = 1.0;
    for (int k = 0; k <= truncation; ++k) {
        if (k > 0)
            b *= (z - static_cast<double>(k - 1)) / static_cast<double>(k);
        c[static_cast<std::size_t>(k)] = ((k % 2 == 0) ? b : -b) * std::exp(-damping * k);
    }
    return c;
}

double complex_tail(cdouble z, int truncation, double damping)
{
    cdouble b = binom_complex(z, truncation);
    int next = truncation;
    return power_law_tail(
        [&](int k) {
            while (next < k) {
                ++next;
                b *= (z - static_cast<double>(next - 1)) / static_cast<double>(next);
            }
            return std::abs(b) * std::exp(-damping * k);
        },
        truncation, z.real());
}

void require_truncation(int truncation)
{
    if (truncation < 0)
        throw DomainError("truncation K must be nonnegative");
}

} // namespace

ResidualReport verify_atom_identity_complex(cdouble z, int truncation, const OmegaRange& grid, MultiplierSign sign)
{
    if (!(z.real() > 1.0))
        throw OrderError("complex spline order requires re z > 1");
    require_truncation(truncation);
    ResidualReport r;
    r.family = "complex";
    r.order = format_complex(z);
    r.truncation = truncation;
    r.grid = grid;

    const double sgn = sign == MultiplierSign::Plus ? 1.0 : -1.0;
    ScalarIdentity id;
    id.coefficients = complex_atoms(z, truncation, 0.0);
    id.lhs = [z, sgn](double w) -> std::optional<cdouble> {
        const cdouble w1 = sgn * kI * w;
        const cdouble w2 = omega_fn(w);
        if (!branch_admissible(w1, w2))
            return std::nullopt;
        return complex_power(w1, z) * complex_power(w2, z);
    };
    sweep_scalar(r, id);
    r.tail_bound = complex_tail(z, truncation, 0.0);

    const int count = std::min(truncation, kRecoveredAtoms) + 1;
    auto periodic_lhs = [&](double w) { return id.lhs(w).value_or(cdouble(0.0)); };
    record_atoms(r, id.coefficients, recover_atom_coefficients(periodic_lhs, count, kRecoveryPoints));
    return r;
}

ResidualReport verify_atom_identity_expz(double a, cdouble z, int truncation, const OmegaRange& grid)
{
    if (!(a > 0.0))
        throw ParameterError("complex exponential B-spline is well-defined only for a > 0");
    if (!(z.real() > 1.0))
        throw OrderError("complex spline order requires re z > 1");
    require_truncation(truncation);
    ResidualReport r;
    r.family = "complex-exponential";
    r.order = "a=" + format_number(a) + ";z=" + format_complex(z);
    r.truncation = truncation;
    r.grid = grid;

    ScalarIdentity id;
    id.coefficients = complex_atoms(z, truncation, a);
    id.lhs = [a, z](double w) -> std::optional<cdouble> {
        const cdouble w1(a, w);
        const cdouble w2 = omega_a_fn(a, w);
        if (!branch_admissible(w1, w2))
            return std::nullopt;
        return complex_power(w1, z) * complex_power(w2, z);
    };
    sweep_scalar(r, id);
    r.tail_bound = complex_tail(z, truncation, a);

    detail::ComplexCompensatedSum total;
    for (const auto& c : id.coefficients)
        total.add(c);
    r.partial_sum_modulus = std::abs(total.value());
    r.zero_frequency_error = std::abs(total.value() - complex_power(1.0 - std::exp(-a), z));

    const int count = std::min(truncation, kRecoveredAtoms) + 1;
    auto periodic_lhs = [&](double w) { return id.lhs(w).value_or(cdouble(0.0)); };
    record_atoms(r, id.coefficients, recover_atom_coefficients(periodic_lhs, count, kRecoveryPoints));
    return r;
}

ResidualReport verify_atom_identity_hc(const Paravector& upsilon, int truncation, const OmegaRange& grid,
                                       MultiplierSign sign)
{
    if (!(upsilon.scalar() > 1.0))
        throw OrderError("hypercomplex spline order requires x0 := Sc Y > 1");
    require_truncation(truncation);
    const int n = upsilon.dimension();
    ResidualReport r;
    r.family = "hypercomplex";
    r.order = format_paravector(upsilon);
    r.truncation = truncation;
    r.grid = grid;

    const auto e = HypercomplexExponent::decompose(upsilon);
    const SubalgebraValue ups = SubalgebraValue::from_exponent(e);
    std::vector<SubalgebraValue> atoms;
    atoms.reserve(static_cast<std::size_t>(truncation) + 1);
    SubalgebraValue b(n, 1.0);
    for (int k = 0; k <= truncation; ++k) {
        if (k > 0) {
            b *= ups - SubalgebraValue(n, static_cast<double>(k - 1));
            b *= cdouble(1.0 / k);
        }
        atoms.push_back((k % 2 == 0) ? b : b * cdouble(-1.0));
    }

    const double sgn = sign == MultiplierSign::Plus ? 1.0 : -1.0;
    auto lhs = [&](double w) -> std::optional<SubalgebraValue> {
        const cdouble w1 = sgn * kI * w;
        cdouble w2 = omega_fn(w);
        if (!branch_admissible(w1, w2))
            return std::nullopt;
        return hc_power_value(w1, upsilon) * hc_power_value(w2, upsilon);
    };
    auto rhs = [&](double w) {
        detail::ComplexCompensatedSum one;
        detail::ComplexCompensatedSum axis;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            const cdouble phase = std::polar(1.0, -static_cast<double>(k) * w);
            one.add(atoms[k].one() * phase);
            axis.add(atoms[k].axis() * phase);
        }
        return e.u ? SubalgebraValue(one.value(), axis.value(), *e.u) : SubalgebraValue(n, one.value());
    };

    const auto points = grid.points();
    std::vector<std::optional<SubalgebraValue>> diff(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const auto l = lhs(points[i]);
        if (l)
            diff[i] = *l - rhs(points[i]);
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!diff[i]) {
            r.excluded_omegas.push_back(points[i]);
            continue;
        }
        r.omegas.push_back(points[i]);
        r.residuals.push_back(diff[i]->norm());
        r.residual_values.push_back(diff[i]->to_paravector());
        r.max_residual = std::max(r.max_residual, r.residuals.back());
    }
    if (r.omegas.empty())
        throw GridError("no branch-admissible frequency in the sweep");

    SubalgebraValue c = atoms.back() * ((truncation % 2 == 0) ? 1.0 : -1.0);
    int next = truncation;
    r.tail_bound = power_law_tail(
        [&](int k) {
            while (next < k) {
                ++next;
                c *= ups - SubalgebraValue(n, static_cast<double>(next - 1));
                c *= cdouble(1.0 / next);
            }
            return c.norm();
        },
        truncation, e.x0);

    // Recover atoms through both idempotent projections.
    const int count = std::min(truncation, kRecoveredAtoms) + 1;
    auto projected = [&](bool plus) {
        return recover_atom_coefficients(
            [&](double w) {
                const auto l = lhs(w);
                if (!l)
                    return cdouble(0.0);
                return plus ? l->plus_projection() : l->minus_projection();
            },
            count, kRecoveryPoints);
    };
    const auto p = projected(true);
    const auto q = projected(false);
    for (int k = 0; k < count; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        SubalgebraValue v(n, 0.5 * (p[ks] + q[ks]));
        if (e.u)
            v = SubalgebraValue(0.5 * (p[ks] + q[ks]), (q[ks] - p[ks]) / cdouble(0.0, 2.0), *e.u);
        r.recovered_atoms.push_back({k, v.to_paravector()});
        r.analytic_atoms.push_back({k, atoms[ks].to_paravector()});
        r.coefficient_error = std::max(r.coefficient_error, (v - atoms[ks]).norm());
    }
    return r;
}

ResidualReport classical_atom_check(int n, const OmegaRange& grid)
{
    if (n < 1)
        throw OrderError("integer spline order requires n >= 1");
    ResidualReport r;
    r.family = "classical";
    r.order = std::to_string(n);
    r.truncation = n;
    r.grid = grid;

    ScalarIdentity id;
    id.coefficients.resize(static_cast<std::size_t>(n) + 1);
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        id.coefficients[static_cast<std::size_t>(k)] = (k % 2 == 0) ? binom : -binom;
        binom = binom * (n - k) / (k + 1);
    }
    id.lhs = [n](double w) -> std::optional<cdouble> {
        const cdouble base = kI * w * omega_fn(w);
        cdouble p = 1.0;
        for (int k = 0; k < n; ++k)
            p *= base;
        return p;
    };
    sweep_scalar(r, id);
    r.tail_bound = 0.0;
    const int m = std::max(64, 2 * (n + 1));
    auto periodic_lhs = [&](double w) { return *id.lhs(w); };
    record_atoms(r, id.coefficients, recover_atom_coefficients(periodic_lhs, n + 1, m));
    return r;
}

ResidualReport exp_difference_check(const ExponentialWeights& a, const OmegaRange& grid)
{
    const int n = a.order();
    ResidualReport r;
    r.family = "exponential";
    std::string order = "a=(";
    for (int k = 0; k < n; ++k)
        order += (k ? "," : "") + format_number(a[static_cast<std::size_t>(k)]);
    r.order = order + ")";
    r.truncation = n;
    r.grid = grid;

    // prod_k (1 - e^{a_k} x), x = e^{-iw}.
    ScalarIdentity id;
    id.coefficients = {1.0};
    for (double ak : a.values()) {
        std::vector<cdouble> next(id.coefficients.size() + 1, 0.0);
        for (std::size_t j = 0; j < id.coefficients.size(); ++j) {
            next[j] += id.coefficients[j];
            next[j + 1] -= std::exp(ak) * id.coefficients[j];
        }
        id.coefficients = std::move(next);
    }
    id.lhs = [&a](double w) -> std::optional<cdouble> {
        cdouble p = hat_en(a, w);
        for (double ak : a.values())
            p *= cdouble(-ak, w);
        return p;
    };
    sweep_scalar(r, id);
    r.tail_bound = 0.0;
    const int m = std::max(64, 2 * (n + 1));
    auto periodic_lhs = [&](double w) { return *id.lhs(w); };
    record_atoms(r, id.coefficients, recover_atom_coefficients(periodic_lhs, n + 1, m));
    return r;
}

namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;

// Integral of f over [a, b] with a 20-point Gauss-Legendre rule.
template <typename F>
cdouble gauss_panel(F&& f, double a, double b)
{
    const auto& x = Gauss::abscissa();
    const auto& wts = Gauss::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cdouble s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] == 0.0 ? wts[i] * f(c) : wts[i] * (f(c + h * x[i]) + f(c - h * x[i]));
    return s * h;
}

// int_0^inf t^{x0-1} kernel(log t) e^{-(eps + i w) t} dt for one scalar kernel.
template <typename Kernel>
cdouble damped_mellin(double x0, Kernel&& kernel, double eps, double w)
{
    const cdouble decay(eps, w);
    auto integrand = [&](double t) { return std::pow(t, x0 - 1.0) * kernel(std::log(t)) * std::exp(-decay * t); };
    detail::ComplexCompensatedSum sum;
    // [0, 1]: substitute t = s^{1/x0}, dt t^{x0-1} = ds / x0, on dyadic panels in s.
    auto near_zero = [&](double s) {
        const double t = std::pow(s, 1.0 / x0);
        return kernel(std::log(t)) * std::exp(-decay * t) / x0;
    };
    double hi = 1.0;
    for (int j = 0; j < 80; ++j) {
        const double lo = 0.5 * hi;
        sum.add(gauss_panel(near_zero, lo, hi));
        hi = lo;
    }
    // [1, T]: panels no longer than a quarter period of the oscillation.
    const double t_end = 1.0 + 40.0 / eps;
    const double width = std::min(0.5, 0.5 * kPi / std::max(w, 1e-3));
    for (double a = 1.0; a < t_end; a += width)
        sum.add(gauss_panel(integrand, a, std::min(a + width, t_end)));
    return sum.value();
}

} // namespace

MellinResult mellin_check(const Paravector& upsilon, double omega)
{
    if (!(omega > 0.0))
        throw DomainError("Mellin identity requires w > 0");
    const auto e = HypercomplexExponent::decompose(upsilon);
    if (!(e.x0 > 0.0 && e.x0 < 1.0))
        throw DomainError("Mellin check requires 0 < Sc Y < 1");
    const int n = upsilon.dimension();

    MellinResult r;
    r.epsilons = {0.2, 0.1, 0.05};
    std::vector<SubalgebraValue> damped;
    for (double eps : r.epsilons) {
        const double vm = e.vmod;
        const cdouble one = damped_mellin(e.x0, [vm](double lt) { return std::cos(vm * lt); }, eps, omega);
        if (e.u) {
            const cdouble axis = damped_mellin(e.x0, [vm](double lt) { return std::sin(vm * lt); }, eps, omega);
            damped.emplace_back(one, axis, *e.u);
        } else {
            damped.emplace_back(n, one);
        }
    }
    // Richardson in eps (halving): error terms O(eps), O(eps^2).
    const SubalgebraValue r1a = damped[1] * cdouble(2.0) - damped[0];
    const SubalgebraValue r1b = damped[2] * cdouble(2.0) - damped[1];
    const SubalgebraValue r2 = (r1b * cdouble(4.0) - r1a) * cdouble(1.0 / 3.0);

    const SubalgebraValue rhs = gamma_hc(upsilon) / hc_power_value(cdouble(0.0, omega), upsilon);
    r.lhs = r2.to_paravector();
    r.rhs = rhs.to_paravector();
    r.deviation = (r2 - rhs).norm();
    r.deviations = {(damped[2] - rhs).norm(), (r1b - rhs).norm(), r.deviation};
    if ((r2 - r1b).norm() > (r1b - damped[2]).norm())
        throw NumericError("eps-extrapolation of the oscillatory integral is not converging");
    return r;
}

} // namespace fracspline
