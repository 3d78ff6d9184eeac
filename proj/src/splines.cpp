#include "fracspline/splines.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

#include "fracspline/detail/compensated_sum.hpp"
#include "fracspline/specialfn.hpp"

namespace fracspline {

SplineOrder SplineOrder::integer(int n)
{
    if (n < 1)
        throw OrderError("integer spline order requires n >= 1");
    return SplineOrder(IntegerOrder{n});
}

SplineOrder SplineOrder::real(double alpha)
{
    if (!(alpha > 1.0))
        throw OrderError("fractional spline order requires alpha > 1");
    return SplineOrder(RealOrder{alpha});
}

SplineOrder SplineOrder::complex(cdouble z)
{
    if (!(z.real() > 1.0))
        throw OrderError("complex spline order requires re z > 1 (C_{>1} := {z : re z > 1})");
    return SplineOrder(ComplexOrder{z});
}

SplineOrder SplineOrder::hypercomplex(const Paravector& upsilon)
{
    if (!(upsilon.scalar() > 1.0))
        throw OrderError("hypercomplex spline order requires x0 := Sc Y > 1");
    return SplineOrder(HypercomplexOrder{upsilon});
}

ExponentialWeights::ExponentialWeights(std::vector<double> a) : a_(std::move(a))
{
    if (a_.empty())
        throw ParameterError("exponential B-spline needs at least one weight");
    if (std::none_of(a_.begin(), a_.end(), [](double v) { return v != 0.0; }))
        throw ParameterError("exponential B-spline needs a_i != 0 for at least one i");
}

namespace {

// t_+^p with 0^0 = 1, matching B_1 = chi_[0,1).
double truncated_power(double t, int p)
{
    if (t < 0.0)
        return 0.0;
    if (p == 0)
        return 1.0;
    return std::pow(t, p);
}

// (t)^{z-1} for t > 0; zero at t = 0 since re z > 1.
cdouble shifted_power(double t, cdouble z)
{
    if (t <= 0.0)
        return 0.0;
    if (z.imag() == 0.0)
        return std::pow(t, z.real() - 1.0);
    return std::exp((z - 1.0) * std::log(t));
}

void require_complex_order(cdouble z)
{
    if (!(z.real() > 1.0))
        throw OrderError("complex spline order requires re z > 1");
}

int series_terms(double x) { return static_cast<int>(std::floor(x)) + 1; }

} // namespace

double eval_bn(int n, double x)
{
    if (n < 1)
        throw OrderError("integer spline order requires n >= 1");
    if (x < 0.0 || x >= static_cast<double>(n))
        return 0.0;
    detail::CompensatedSum sum;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum.add(sign * binom * truncated_power(x - k, n - 1));
        binom = binom * (n - k) / (k + 1);
    }
    return sum.value() / std::tgamma(static_cast<double>(n));
}

cdouble eval_bz(cdouble z, double x)
{
    require_complex_order(z);
    if (x < 0.0)
        return 0.0;
    const int terms = series_terms(x);
    detail::ComplexCompensatedSum sum;
    cdouble binom = 1.0;
    for (int k = 0; k < terms; ++k) {
        if (k > 0)
            binom *= (z - static_cast<double>(k - 1)) / static_cast<double>(k);
        if (binom == 0.0)
            break;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum.add(sign * binom * shifted_power(x - k, z));
    }
    return sum.value() / gamma(z);
}

double eval_fractional(double alpha, double x)
{
    if (!(alpha > 1.0))
        throw OrderError("fractional spline order requires alpha > 1");
    return eval_bz(cdouble(alpha, 0.0), x).real();
}

namespace {

constexpr double kExpTolerance = 1e-10;

double exp_recursion(const std::vector<double>& a, std::size_t level, double x)
{
    // level = number of factors already convolved, i.e. evaluates E_level.
    const double upper = static_cast<double>(level);
    if (x < 0.0 || x >= upper)
        return 0.0;
    if (level == 1)
        return std::exp(a[0] * x);
    const double ak = a[level - 1];
    // E_k(x) = int_0^1 e^{a_k t} E_{k-1}(x - t) dt, with E_{k-1} supported
    // on [0, k-1); split at the integer knots of the inner factor.
    const double lo = std::max(0.0, x - (upper - 1.0));
    const double hi = std::min(1.0, x);
    if (!(hi > lo))
        return 0.0;
    std::vector<double> cuts{lo};
    for (double knot = std::ceil(x - hi); knot <= std::floor(x - lo); knot += 1.0) {
        const double t = x - knot;
        if (t > lo && t < hi)
            cuts.push_back(t);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    auto integrand = [&](double t) { return std::exp(ak * t) * exp_recursion(a, level - 1, x - t); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] <= 0.0)
            continue;
        total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, cuts[i], cuts[i + 1], 12,
                                                                                kExpTolerance);
    }
    return total;
}

} // namespace

double eval_exp_bspline(const ExponentialWeights& a, double x)
{
    return exp_recursion(a.values(), a.values().size(), x);
}

cdouble eval_ez(double a, cdouble z, double x)
{
    if (!(a > 0.0))
        throw ParameterError("complex exponential B-spline is well-defined only for a > 0");
    require_complex_order(z);
    if (x < 0.0)
        return 0.0;
    const int terms = series_terms(x);
    detail::ComplexCompensatedSum sum;
    cdouble binom = 1.0;
    for (int l = 0; l < terms; ++l) {
        if (l > 0)
            binom *= (z - static_cast<double>(l - 1)) / static_cast<double>(l);
        if (binom == 0.0)
            break;
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        const double t = x - l;
        const double weight = std::exp(-l * a) * std::exp(-a * t);
        sum.add(sign * binom * weight * shifted_power(t, z));
    }
    return sum.value() / gamma(z);
}

ComplexParavector eval_bupsilon(const Paravector& upsilon, double x)
{
    if (!(upsilon.scalar() > 1.0))
        throw OrderError("hypercomplex spline order requires x0 := Sc Y > 1");
    const int n = upsilon.dimension();
    if (x < 0.0)
        return ComplexParavector(n);
    const GammaValue g = gamma_hc(upsilon);
    if (g.norm() < 1e-300)
        throw NumericError("Gamma(Y) too small to invert");

    const Paravector exponent = upsilon - Paravector(n, 1.0);
    const auto e = HypercomplexExponent::decompose(upsilon);
    const GammaValue ups = GammaValue::from_exponent(e);

    const int terms = series_terms(x);
    detail::ComplexCompensatedSum one;
    detail::ComplexCompensatedSum axis;
    GammaValue binom(n, 1.0);
    for (int k = 0; k < terms; ++k) {
        if (k > 0) {
            binom *= ups - GammaValue(n, static_cast<double>(k - 1));
            binom *= cdouble(1.0 / k);
        }
        const double t = x - k;
        if (t <= 0.0)
            continue;
        GammaValue term = binom * hc_power_value(t, exponent);
        if (k % 2 == 1)
            term *= cdouble(-1.0);
        one.add(term.one());
        axis.add(term.axis());
    }
    GammaValue total = e.u ? GammaValue(one.value(), axis.value(), *e.u) : GammaValue(n, one.value());
    total /= g;
    return total.to_paravector();
}

SplineEvalResult evaluate(const SplineOrder& order, double x)
{
    SplineEvalResult r;
    r.x = x;
    const int terms = x < 0.0 ? 0 : series_terms(x);
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, IntegerOrder>) {
                r.value = eval_bn(o.n, x);
                r.terms_used = x < 0.0 ? 0 : std::min(terms, o.n + 1);
            } else if constexpr (std::is_same_v<T, RealOrder>) {
                r.value = eval_fractional(o.alpha, x);
                r.terms_used = terms;
            } else if constexpr (std::is_same_v<T, ComplexOrder>) {
                r.value = eval_bz(o.z, x);
                r.terms_used = terms;
            } else {
                r.value = eval_bupsilon(o.upsilon, x);
                r.terms_used = terms;
            }
        },
        order.get());
    return r;
}

} // namespace fracspline
