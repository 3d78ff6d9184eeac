#ifndef FRACSPLINE_FRACOPS_HPP
#define FRACSPLINE_FRACOPS_HPP

// Fractional integral/derivative operators on sampled half-line signals and
// frequency-domain verification of the spline atom identities
//   D^z B = sum_k c_k delta(. - k)  <=>  m(w) B^(w) = sum_k c_k e^{-ikw}.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracspline/clifford.hpp"
#include "fracspline/splines.hpp"

namespace fracspline {

/// Uniform samples of a function on [start, start + (count-1) step].
struct SampledSignal {
    double start = 0.0;
    double step = 1.0;
    std::vector<cdouble> samples;
    std::vector<char> valid;            ///< per-cell flag; boundary cells of difference stencils are 0
    bool vanishes_left = true;          ///< function is 0 on (-inf, start)
    bool conditioning_warning = false;  ///< rounding noise of a difference stencil dominates

    SampledSignal() = default;
    SampledSignal(double start, double step, std::vector<cdouble> samples, bool vanishes_left = true);

    static SampledSignal sample(const std::function<cdouble(double)>& f, double start, double step, int count);

    std::size_t size() const noexcept { return samples.size(); }
    double x(std::size_t i) const noexcept { return start + static_cast<double>(i) * step; }
    bool is_valid(std::size_t i) const noexcept { return valid[i] != 0; }
};

enum class FractionalForm {
    RiemannLiouville, ///< D^n (f * K_{n-z})
    Caputo,           ///< (D^n f) * K_{n-z}
};

/// f * K_z by product-trapezoidal convolution quadrature (f piecewise
/// linear, kernel integrated exactly). re z > 0.
SampledSignal frac_integral(cdouble z, const SampledSignal& f);

/// D^z f with n = ceil(re z) central differences; re z > 0.
SampledSignal frac_derivative(cdouble z, const SampledSignal& f,
                              FractionalForm form = FractionalForm::RiemannLiouville);

/// (D + aI)^z g := e^{-a x} D^z (e^{a x} g), a > 0.
SampledSignal shifted_frac_derivative(double a, cdouble z, const SampledSignal& g,
                                      FractionalForm form = FractionalForm::RiemannLiouville);

/// Uniform sweep [lo, hi] with `count` points (count >= 1).
struct OmegaRange {
    double lo = -3.0;
    double hi = 3.0;
    int count = 601;

    std::vector<double> points() const;
};

/// Sign of the Fourier multiplier of D^Y: (+iw)^Y or (-iw)^Y.
enum class MultiplierSign { Plus, Minus };

/// c_k paired with delta(. - k).
struct AtomTerm {
    int shift = 0;
    ComplexParavector coefficient;
};
using AtomSum = std::vector<AtomTerm>;

struct ResidualReport {
    std::string family;
    std::string order;
    int truncation = 0;
    OmegaRange grid;
    std::vector<double> omegas;    ///< admissible frequencies
    std::vector<double> residuals; ///< |lhs - rhs| per admissible frequency
    std::vector<ComplexParavector> residual_values;
    double max_residual = 0.0;
    double tail_bound = 0.0;
    std::vector<double> excluded_omegas;
    AtomSum analytic_atoms;
    AtomSum recovered_atoms;       ///< inverse DFT of the frequency-domain lhs
    double coefficient_error = 0.0;
    std::optional<double> partial_sum_modulus;
    std::optional<double> zero_frequency_error;

    bool passed(double tolerance) const { return !omegas.empty() && max_residual <= tolerance; }
};

/// True when w1^Y w2^Y = (w1 w2)^Y holds for principal powers, i.e. both
/// factors are nonzero and arg w1 + arg w2 lies in (-pi, pi].
bool branch_admissible(cdouble w1, cdouble w2);

ResidualReport verify_atom_identity_complex(cdouble z, int truncation, const OmegaRange& grid,
                                            MultiplierSign sign = MultiplierSign::Plus);

ResidualReport verify_atom_identity_expz(double a, cdouble z, int truncation, const OmegaRange& grid);

ResidualReport verify_atom_identity_hc(const Paravector& upsilon, int truncation, const OmegaRange& grid,
                                       MultiplierSign sign = MultiplierSign::Plus);

ResidualReport classical_atom_check(int n, const OmegaRange& grid);

ResidualReport exp_difference_check(const ExponentialWeights& a, const OmegaRange& grid);

/// Coefficients b_k, k < count, of the 2 pi-periodic function lhs(w) =
/// sum_k b_k e^{-ikw}, by an M-point inverse DFT.
std::vector<cdouble> recover_atom_coefficients(const std::function<cdouble(double)>& lhs, int count, int points);

struct MellinResult {
    ComplexParavector lhs;
    ComplexParavector rhs;
    double deviation = 0.0;
    std::vector<double> epsilons;
    std::vector<double> deviations; ///< raw (smallest eps), first and second extrapolation
};

/// int_0^inf t^Y e^{-itw} dt/t against Gamma(Y)/(iw)^Y, 0 < Sc Y < 1, w > 0.
MellinResult mellin_check(const Paravector& upsilon, double omega);

} // namespace fracspline

#endif
