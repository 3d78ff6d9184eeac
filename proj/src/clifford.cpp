#include "fracspline/clifford.hpp"

#include <cmath>
#include <limits>

namespace fracspline {

ComplexParavector complexify(const Paravector& p)
{
    ComplexParavector r(p.dimension(), p.scalar());
    for (int i = 1; i <= p.dimension(); ++i)
        r.vec(i) = p.vec(i);
    return r;
}

HypercomplexExponent HypercomplexExponent::decompose(const Paravector& y)
{
    HypercomplexExponent e;
    e.x0 = y.scalar();
    e.vmod = y.vector_norm();
    e.dimension = y.dimension();
    if (e.vmod > 0.0) {
        Paravector u(y.dimension());
        for (int i = 1; i <= y.dimension(); ++i)
            u.vec(i) = y.vec(i) / e.vmod;
        e.u = u;
    }
    return e;
}

Paravector HypercomplexExponent::reconstruct() const
{
    Paravector y(dimension, x0);
    if (u)
        for (int i = 1; i <= dimension; ++i)
            y.vec(i) = vmod * u->vec(i);
    return y;
}

SubalgebraValue::SubalgebraValue(cdouble one, cdouble axis, const Paravector& u)
    : n_(u.dimension()), one_(one), axis_(axis), u_(u)
{
    if (std::abs(u.vector_norm() - 1.0) > 1e-12 || u.scalar() != 0.0)
        throw DomainError("subalgebra direction must be a unit pure vector");
}

SubalgebraValue SubalgebraValue::from_exponent(const HypercomplexExponent& e)
{
    SubalgebraValue r(e.dimension, e.x0);
    if (e.u) {
        r.axis_ = e.vmod;
        r.u_ = e.u;
    }
    return r;
}

ComplexParavector SubalgebraValue::to_paravector() const
{
    ComplexParavector p(n_, one_);
    if (u_)
        for (int i = 1; i <= n_; ++i)
            p.vec(i) = axis_ * u_->vec(i);
    return p;
}

SubalgebraValue SubalgebraValue::from_projections(cdouble p, cdouble q, const std::optional<Paravector>& u, int n)
{
    SubalgebraValue r(n, 0.5 * (p + q));
    r.axis_ = (q - p) / cdouble(0, 2);
    r.u_ = u;
    if (!u)
        r.axis_ = 0.0;
    return r;
}

SubalgebraValue SubalgebraValue::exp_axis(cdouble w, const std::optional<Paravector>& u, int n)
{
    // u -> -i on the plus idempotent, u -> +i on the minus idempotent.
    const cdouble i(0, 1);
    if (!u)
        return SubalgebraValue(n, 1.0);
    return from_projections(std::exp(-i * w), std::exp(i * w), u, n);
}

void SubalgebraValue::adopt_direction(const SubalgebraValue& o)
{
    if (n_ != o.n_)
        throw DimensionError("subalgebra values from different dimensions");
    if (!o.u_ || o.axis_ == 0.0)
        return;
    if (!u_ || axis_ == 0.0) {
        u_ = o.u_;
        return;
    }
    double d = 0.0;
    for (int i = 1; i <= n_; ++i)
        d = std::max(d, std::abs(u_->vec(i) - o.u_->vec(i)));
    if (d > 1e-12)
        throw DomainError("subalgebra values with different directions do not commute");
}

SubalgebraValue& SubalgebraValue::operator+=(const SubalgebraValue& o)
{
    adopt_direction(o);
    one_ += o.one_;
    axis_ += o.axis_;
    return *this;
}

SubalgebraValue& SubalgebraValue::operator-=(const SubalgebraValue& o)
{
    adopt_direction(o);
    one_ -= o.one_;
    axis_ -= o.axis_;
    return *this;
}

SubalgebraValue& SubalgebraValue::operator*=(const SubalgebraValue& o)
{
    adopt_direction(o);
    const cdouble a = one_ * o.one_ - axis_ * o.axis_;
    const cdouble b = one_ * o.axis_ + axis_ * o.one_;
    one_ = a;
    axis_ = b;
    return *this;
}

SubalgebraValue& SubalgebraValue::operator/=(const SubalgebraValue& o)
{
    adopt_direction(o);
    const cdouble p = o.plus_projection();
    const cdouble q = o.minus_projection();
    if (p == 0.0 || q == 0.0)
        throw NumericError("division by a zero divisor of the subalgebra");
    *this = from_projections(plus_projection() / p, minus_projection() / q, u_, n_);
    return *this;
}

SubalgebraValue hc_power_value(cdouble z, const Paravector& y)
{
    const auto e = HypercomplexExponent::decompose(y);
    const int n = y.dimension();
    if (z == 0.0) {
        if (e.x0 > 0.0)
            return SubalgebraValue(n, 0.0);
        throw DomainError("0^Y requires a positive scalar part");
    }
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw BranchError("hypercomplex power base on the negative real axis");
    const cdouble log_z = std::log(z);
    // Real positive base with real exponent: keep the modulus factor real.
    const cdouble modulus = (z.imag() == 0.0) ? cdouble(std::pow(z.real(), e.x0)) : std::exp(e.x0 * log_z);
    SubalgebraValue r = SubalgebraValue::exp_axis(e.vmod * log_z, e.u, n);
    return r * modulus;
}

ComplexParavector hc_power(cdouble z, const Paravector& y) { return hc_power_value(z, y).to_paravector(); }

namespace {

template <typename T>
BasicParavector<T> exp_series(const BasicParavector<T>& y)
{
    using Element = BasicCliffordElement<T>;
    const int n = y.dimension();
    int squarings = 0;
    double scale = 1.0;
    const double r = y.norm();
    while (r * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const Element x = y.to_element() * T(scale);
    Element sum = Element::scalar(n, T(1));
    Element term = sum;
    for (int k = 1; k < 60; ++k) {
        term = term * x;
        term *= T(1.0 / k);
        sum += term;
        if (term.norm() <= std::numeric_limits<double>::epsilon() * 1e-2 * sum.norm())
            break;
    }
    for (int s = 0; s < squarings; ++s)
        sum = sum * sum;
    return BasicParavector<T>::from_element(sum, 1e-9);
}

} // namespace

Paravector hc_exp(const Paravector& y) { return exp_series(y); }

ComplexParavector hc_exp(const ComplexParavector& y) { return exp_series(y); }

} // namespace fracspline
