#include <doctest.h>

#include <cmath>
#include <random>

#include "fracspline/error.hpp"
#include "fracspline/splines.hpp"
#include "oracles.hpp"

using namespace fracspline;

TEST_CASE("classical B-spline values")
{
    CHECK(eval_bn(1, 0.5) == 1.0);
    CHECK(eval_bn(1, 0.0) == 1.0);
    CHECK(eval_bn(1, 1.0) == 0.0);
    CHECK(std::abs(eval_bn(2, 1.0) - 1.0) <= 1e-15);
    CHECK(std::abs(eval_bn(3, 1.5) - 0.75) <= 1e-15);
    for (int n = 1; n <= 6; ++n) {
        CHECK(eval_bn(n, -1e-9) == 0.0);
        CHECK(eval_bn(n, n) == 0.0);
        CHECK(eval_bn(n, n + 0.3) == 0.0);
    }
    CHECK_THROWS_AS(eval_bn(0, 0.5), OrderError);
}

TEST_CASE("classical B-spline matches the convolution recursion")
{
    for (int n = 2; n <= 5; ++n)
        for (double x = 0.05; x < n; x += 0.173)
            CHECK(std::abs(eval_bn(n, x) - oracle::bspline_by_convolution(n, x)) <= 1e-12);
}

TEST_CASE("partition of unity")
{
    for (int n = 1; n <= 6; ++n)
        for (double x = 0.0; x < 1.0; x += 0.0625) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += eval_bn(n, x + k);
            CHECK(std::abs(s - 1.0) <= 1e-13);
        }
}

TEST_CASE("complex B-spline reduces to the classical one")
{
    CHECK(std::abs(eval_bz(3.0, 1.5) - 0.75) <= 1e-14);
    CHECK(eval_bz(cdouble(2.5, 1.0), -0.1) == cdouble(0.0));
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i <= 1000; ++i) {
            const double x = n * i / 1000.0;
            CHECK(std::abs(eval_bz(static_cast<double>(n), x) - eval_bn(n, x)) <= 1e-12);
        }
    CHECK_THROWS_AS(eval_bz(1.0, 0.5), OrderError);
    CHECK_THROWS_AS(eval_bz(cdouble(0.9, 3.0), 0.5), OrderError);
}

TEST_CASE("family-reduction chain at random abscissae")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ux(-0.5, 8.0);
    for (int t = 0; t < 100; ++t) {
        const double x = ux(rng);
        const double alpha = 2.7;
        const auto h = eval_bupsilon(Paravector(3, alpha), x);
        CHECK(std::abs(h.scalar() - eval_fractional(alpha, x)) <= 1e-12);
        CHECK(h.vector_norm() == 0.0);
        CHECK(std::abs(eval_bz(alpha, x) - eval_fractional(alpha, x)) <= 1e-12);
        CHECK(std::abs(eval_fractional(4.0, x) - eval_bn(4, x)) <= 1e-12);
    }
}

TEST_CASE("fractional B-spline against a direct Gamma-ratio sum")
{
    const double alpha = 2.3;
    for (double x : {0.4, 1.7, 3.2, 6.9}) {
        double s = 0.0;
        for (int k = 0; k <= static_cast<int>(x); ++k) {
            const double b = std::tgamma(alpha + 1) / (std::tgamma(k + 1.0) * std::tgamma(alpha - k + 1));
            s += ((k % 2) ? -b : b) * std::pow(x - k, alpha - 1);
        }
        s /= std::tgamma(alpha);
        CHECK(std::abs(eval_fractional(alpha, x) - s) <= 1e-12);
    }
    CHECK_THROWS_AS(eval_fractional(1.0, 0.5), OrderError);
}

TEST_CASE("complex B-spline decay")
{
    for (cdouble z : {cdouble(1.5), cdouble(2.5), cdouble(2.5, 1.0)}) {
        std::vector<double> xs;
        std::vector<double> ys;
        for (double x = 20.5; x <= 200.0; x += 2.0) {
            xs.push_back(x);
            ys.push_back(std::abs(eval_bz(z, x)));
        }
        CHECK(oracle::loglog_fit(xs, ys) <= -(z.real() + 0.5));
    }
}

TEST_CASE("exponential B-spline")
{
    const double a = 0.7;
    const ExponentialWeights one({a});
    for (double x : {0.0, 0.2, 0.55, 0.99})
        CHECK(std::abs(eval_exp_bspline(one, x) - std::exp(a * x)) <= 1e-14);
    CHECK(eval_exp_bspline(one, -0.1) == 0.0);
    CHECK(eval_exp_bspline(one, 1.0) == 0.0);

    const double b = -1.3;
    const ExponentialWeights two({a, b});
    for (double x = 0.0; x <= 1.0; x += 0.05)
        CHECK(std::abs(eval_exp_bspline(two, x) - (std::exp(a * x) - std::exp(b * x)) / (a - b)) <= 1e-10);
    CHECK(eval_exp_bspline(two, 2.0) == 0.0);
    CHECK(eval_exp_bspline(two, 2.5) == 0.0);

    // convolution on [1, 2] against a direct quadrature of the defining integral
    for (double x : {1.2, 1.5, 1.9}) {
        const cdouble ref = oracle::integrate_smooth(
            [&](double t) { return cdouble(std::exp(a * t) * std::exp(b * (x - t))); }, x - 1.0, 1.0);
        CHECK(std::abs(eval_exp_bspline(two, x) - ref.real()) <= 1e-10);
    }

    CHECK_THROWS_AS(ExponentialWeights({}), ParameterError);
    CHECK_THROWS_AS(ExponentialWeights({0.0, 0.0}), ParameterError);
}

TEST_CASE("exponential B-spline tends to the classical one")
{
    const double eps = 1e-6;
    for (int n = 2; n <= 4; ++n) {
        const ExponentialWeights w(std::vector<double>(static_cast<std::size_t>(n), eps));
        // max |B_n'| <= 1 for n >= 2
        const double tol = 5.0 * eps * n;
        for (double x = 0.1; x < n; x += 0.37)
            CHECK(std::abs(eval_exp_bspline(w, x) - eval_bn(n, x)) <= tol);
    }
}

TEST_CASE("complex exponential B-spline")
{
    CHECK(eval_ez(1.0, cdouble(2.5, 1.0), -1.0) == cdouble(0.0));
    CHECK(std::abs(eval_ez(1.0, 2.0, 0.5) - 0.5 * std::exp(-0.5)) <= 1e-15);
    CHECK_THROWS_AS(eval_ez(0.0, 2.5, 0.5), ParameterError);
    CHECK_THROWS_AS(eval_ez(-1.0, 2.5, 0.5), ParameterError);
    CHECK_THROWS_AS(eval_ez(1.0, 0.5, 0.5), OrderError);

    const double a = 0.8;
    for (int n = 2; n <= 4; ++n) {
        const ExponentialWeights w(std::vector<double>(static_cast<std::size_t>(n), -a));
        for (double x = 0.05; x < n + 0.5; x += 0.29)
            CHECK(std::abs(eval_ez(a, static_cast<double>(n), x) - eval_exp_bspline(w, x)) <= 1e-8);
    }

    // E_z^a(x) = e^{-a x} B_z(x)
    const cdouble z(2.5, 1.0);
    for (double x : {0.3, 1.4, 2.8, 5.5})
        CHECK(std::abs(eval_ez(a, z, x) - std::exp(-a * x) * eval_bz(z, x)) <= 1e-13);
}

TEST_CASE("hypercomplex B-spline")
{
    const Paravector y(2.5, {1.0, 1.0});
    CHECK(eval_bupsilon(y, -0.5).norm() == 0.0);
    CHECK_THROWS_AS(eval_bupsilon(Paravector(1.0, {1.0}), 0.5), OrderError);

    // components are real
    for (double x : {0.3, 1.7, 4.2}) {
        const auto v = eval_bupsilon(y, x);
        CHECK(std::abs(v.scalar().imag()) <= 1e-14);
        CHECK(std::abs(v.vec(1).imag()) <= 1e-14);
        CHECK(std::abs(v.vec(1) - v.vec(2)) <= 1e-14);
    }

    // Cl(1) <-> complex order under e1 <-> i
    for (double x1 : {1.0, -0.7}) {
        const Paravector c(2.5, {x1});
        for (double x = 0.1; x < 6.0; x += 0.31) {
            const auto v = eval_bupsilon(c, x);
            const cdouble as_complex = v.scalar().real() + cdouble(0, 1) * v.vec(1).real();
            CHECK(std::abs(as_complex - eval_bz(cdouble(2.5, x1), x)) <= 1e-12);
        }
    }
}

TEST_CASE("family dispatch and term counts")
{
    const auto r = evaluate(SplineOrder::complex(cdouble(2.5, 1.0)), 3.7);
    CHECK(r.terms_used == 4);
    CHECK(std::abs(std::get<cdouble>(r.value) - eval_bz(cdouble(2.5, 1.0), 3.7)) == 0.0);
    CHECK(evaluate(SplineOrder::integer(3), -0.5).terms_used == 0);
    CHECK(std::get<double>(evaluate(SplineOrder::integer(3), 1.5).value) == eval_bn(3, 1.5));
    CHECK(std::holds_alternative<ComplexParavector>(evaluate(SplineOrder::hypercomplex(Paravector(2.0, {0.5})), 1.0).value));

    CHECK_THROWS_AS(SplineOrder::integer(0), OrderError);
    CHECK_THROWS_AS(SplineOrder::real(1.0), OrderError);
    CHECK_THROWS_AS(SplineOrder::complex(cdouble(1.0, 2.0)), OrderError);
    CHECK_THROWS_AS(SplineOrder::hypercomplex(Paravector(0.5, {1.0})), OrderError);
}
