#ifndef FRACSPLINE_SPLINES_HPP
#define FRACSPLINE_SPLINES_HPP

#include <variant>
#include <vector>

#include "fracspline/clifford.hpp"

namespace fracspline {

struct IntegerOrder {
    int n = 1;
};
struct RealOrder {
    double alpha = 2.0;
};
struct ComplexOrder {
    cdouble z{2.0};
};
struct HypercomplexOrder {
    Paravector upsilon;
};

/// Spline order of the polynomial-type families. Construct through the
/// factories, which enforce n >= 1, alpha > 1, re z > 1, Sc Y > 1.
class SplineOrder {
public:
    using Variant = std::variant<IntegerOrder, RealOrder, ComplexOrder, HypercomplexOrder>;

    static SplineOrder integer(int n);
    static SplineOrder real(double alpha);
    static SplineOrder complex(cdouble z);
    static SplineOrder hypercomplex(const Paravector& upsilon);

    const Variant& get() const noexcept { return v_; }

private:
    explicit SplineOrder(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Tuple (a_1, ..., a_n) of the convolution factors e^{a_k t} chi_[0,1).
class ExponentialWeights {
public:
    explicit ExponentialWeights(std::vector<double> a);

    int order() const noexcept { return static_cast<int>(a_.size()); }
    const std::vector<double>& values() const noexcept { return a_; }
    double operator[](std::size_t i) const { return a_[i]; }

private:
    std::vector<double> a_;
};

using SplineValue = std::variant<double, cdouble, ComplexParavector>;

struct SplineEvalResult {
    double x = 0.0;
    SplineValue value;
    int terms_used = 0;
};

/// Classical cardinal B-spline by its truncated-power closed form.
/// B_1 = chi_[0,1); all values vanish outside [0, n).
double eval_bn(int n, double x);

/// Complex B-spline (1/Gamma(z)) sum_{k <= floor x} (-1)^k binom(z,k) (x-k)^{z-1}.
cdouble eval_bz(cdouble z, double x);

/// Fractional B-spline of real order alpha > 1.
double eval_fractional(double alpha, double x);

/// n-fold convolution of e^{a_k t} chi_[0,1), by recursive adaptive quadrature.
double eval_exp_bspline(const ExponentialWeights& a, double x);

/// Complex exponential B-spline E_z^a, a > 0, re z > 1.
cdouble eval_ez(double a, cdouble z, double x);

/// Hypercomplex B-spline B_Y, Sc Y > 1. Components are real.
ComplexParavector eval_bupsilon(const Paravector& upsilon, double x);

/// Family dispatch with the number of series terms used.
SplineEvalResult evaluate(const SplineOrder& order, double x);

} // namespace fracspline

#endif
