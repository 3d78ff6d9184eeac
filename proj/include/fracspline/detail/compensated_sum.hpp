#ifndef FRACSPLINE_DETAIL_COMPENSATED_SUM_HPP
#define FRACSPLINE_DETAIL_COMPENSATED_SUM_HPP

#include <cmath>
#include <complex>

namespace fracspline::detail {

// Neumaier variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(std::complex<double> x)
    {
        re_.add(x.real());
        im_.add(x.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

} // namespace fracspline::detail

#endif
