#include "fracspline/specialfn.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fracspline {

namespace {

// Lanczos approximation, g = 671/128, 14 terms.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosBase = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,    -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,  -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

bool is_nonpositive_integer(cdouble z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

} // namespace

cdouble log_gamma(cdouble z)
{
    if (z.real() < 0.5)
        throw DomainError("log_gamma requires re z >= 0.5");
    cdouble y = z;
    cdouble tmp = z + kLanczosG;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    cdouble ser = kLanczosBase;
    for (double c : kLanczosCoeffs) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(kSqrtTwoPi * ser / z);
}

cdouble gamma(cdouble z)
{
    if (is_nonpositive_integer(z))
        throw PoleError("Gamma has a pole at nonpositive integers");
    if (z.real() < 0.5) {
        constexpr double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    }
    const cdouble g = std::exp(log_gamma(z));
    return z.imag() == 0.0 ? cdouble(g.real(), 0.0) : g;
}

GammaValue gamma_hc(const Paravector& y)
{
    const auto e = HypercomplexExponent::decompose(y);
    if (e.x0 <= 0.0)
        throw DomainError("hypercomplex Gamma requires a positive scalar part");
    const cdouble g = gamma(cdouble(e.x0, e.vmod));
    if (!e.u)
        return GammaValue(y.dimension(), g.real());
    return GammaValue(g.real(), g.imag(), *e.u);
}

cdouble binom_complex(cdouble z, int k)
{
    if (k < 0)
        throw DomainError("binomial index must be nonnegative");
    cdouble b = 1.0;
    for (int j = 1; j <= k; ++j) {
        b *= (z - static_cast<double>(j - 1)) / static_cast<double>(j);
        if (b == 0.0)
            break;
    }
    return b;
}

GammaValue binom_hc(const Paravector& y, int k)
{
    if (k < 0)
        throw DomainError("binomial index must be nonnegative");
    const auto e = HypercomplexExponent::decompose(y);
    const GammaValue upsilon = GammaValue::from_exponent(e);
    GammaValue b(y.dimension(), 1.0);
    for (int j = 1; j <= k; ++j) {
        GammaValue factor = upsilon - GammaValue(y.dimension(), static_cast<double>(j - 1));
        b *= factor;
        b *= cdouble(1.0 / j);
    }
    return b;
}

BinomialSeriesResult binomial_series(const Paravector& y, cdouble z, int truncation)
{
    if (std::abs(z) > 1.0)
        throw DomainError("binomial series requires |z| <= 1");
    if (y.scalar() <= 0.0)
        throw DomainError("binomial series requires a positive scalar part");
    if (truncation < 0)
        throw DomainError("truncation must be nonnegative");
    const auto e = HypercomplexExponent::decompose(y);
    const GammaValue upsilon = GammaValue::from_exponent(e);
    const int n = y.dimension();

    BinomialSeriesResult r;
    GammaValue coeff(n, 1.0);
    cdouble zpow = 1.0;
    r.sum = coeff;
    for (int k = 1; k <= truncation; ++k) {
        coeff *= upsilon - GammaValue(n, static_cast<double>(k - 1));
        coeff *= cdouble(1.0 / k);
        zpow *= z;
        r.sum += coeff * zpow;
    }
    r.terms = truncation + 1;

    // Tail continues the same recurrence; |z| <= 1 so |z|^k <= 1.
    GammaValue c = coeff;
    int next = truncation;
    r.remainder = power_law_tail(
        [&](int k) {
            while (next < k) {
                ++next;
                c *= upsilon - GammaValue(n, static_cast<double>(next - 1));
                c *= cdouble(1.0 / next);
            }
            return c.norm() * std::pow(std::abs(z), k);
        },
        truncation, e.x0);
    return r;
}

cdouble kernel_eval(const KernelSpec& spec, double x)
{
    if (spec.order.real() <= 0.0)
        throw DomainError("pointwise kernel evaluation requires re z > 0");
    const double t = x - spec.shift;
    if (t < 0.0)
        return 0.0;
    if (t == 0.0)
        return spec.order == 1.0 ? cdouble(1.0) : cdouble(0.0);
    const cdouble p = (spec.order.imag() == 0.0) ? cdouble(std::pow(t, spec.order.real() - 1.0))
                                                 : std::exp((spec.order - 1.0) * std::log(t));
    return p / gamma(spec.order);
}

} // namespace fracspline
