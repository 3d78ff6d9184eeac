#ifndef FRACSPLINE_SPECIALFN_HPP
#define FRACSPLINE_SPECIALFN_HPP

#include <complex>

#include "fracspline/clifford.hpp"

namespace fracspline {

/// Euler Gamma for complex argument (Lanczos, reflection for re z < 0.5).
/// Throws PoleError at nonpositive integers.
cdouble gamma(cdouble z);

/// log Gamma for re z >= 0.5 (principal branch of the Lanczos form).
cdouble log_gamma(cdouble z);

/// Value of the commuting subalgebra; Gamma and binomials of a fixed
/// exponent direction live here.
using GammaValue = SubalgebraValue;

/// Gamma(Y) = Re Gamma(x0 + i|v|) + u Im Gamma(x0 + i|v|), x0 > 0.
GammaValue gamma_hc(const Paravector& y);

/// binom(z, k) by the multiplicative recurrence; exactly zero for integer
/// z = n >= 0 and k > n.
cdouble binom_complex(cdouble z, int k);

/// binom(Y, k) by the same recurrence carried out in span{1, u}.
GammaValue binom_hc(const Paravector& y, int k);

struct BinomialSeriesResult {
    GammaValue sum;
    double remainder = 0.0; ///< estimate of sum_{n > N} |binom(Y, n)|
    int terms = 0;
};

/// Partial sum of (1 + z)^Y = sum_n binom(Y, n) z^n for |z| <= 1, x0 > 0.
BinomialSeriesResult binomial_series(const Paravector& y, cdouble z, int truncation);

/// Estimate of sum_{k > K} |c_k| for coefficients decaying like
/// k^{-(p + 1)}: explicit summation up to 20K plus an integral tail.
/// `magnitude(k)` returns |c_k|.
template <typename F>
double power_law_tail(F&& magnitude, int truncation, double decay_order)
{
    const int stop = 20 * truncation + 20;
    double sum = 0.0;
    double last = 0.0;
    for (int k = truncation + 1; k <= stop; ++k) {
        last = magnitude(k);
        sum += last;
    }
    if (decay_order > 0.0)
        sum += 2.0 * last * static_cast<double>(stop) / decay_order;
    return sum;
}

struct KernelSpec {
    cdouble order{1.0};
    double shift = 0.0;
};

/// K_z(x - k) = (x - k)_+^{z-1} / Gamma(z); requires re z > 0.
/// At x = k the value is 0, except K_1(k) = 1 (support [k, inf)).
cdouble kernel_eval(const KernelSpec& spec, double x);

} // namespace fracspline

#endif
