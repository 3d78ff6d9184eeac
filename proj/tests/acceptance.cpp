// Acceptance criteria 1-12. One PASS/FAIL line each; exit status is nonzero
// if a criterion outside kKnownRed fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fracspline/cli.hpp"
#include "fracspline/fourier.hpp"
#include "fracspline/fracops.hpp"
#include "fracspline/specialfn.hpp"
#include "fracspline/splines.hpp"
#include "oracles.hpp"

using namespace fracspline;

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

// Criteria that fail for a documented reason (see README).
const std::set<int> kKnownRed{7};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome c1_classical_reduction()
{
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i < 1000; ++i) {
            const double x = n * i / 999.0;
            worst = std::max(worst, std::abs(eval_bz(static_cast<double>(n), x) - eval_bn(n, x)));
        }
    return {worst <= 1e-12, "max |B_z - B_n| = " + fmt("%.3e", worst)};
}

Outcome c2_time_frequency()
{
    const cdouble z(2.5, 1.0);
    const FrequencyGrid grid(1000.0, 200001);
    const InverseTransform inv([&](double w) { return hat_bz(z, w); }, grid, z.real());
    bool ok = true;
    double worst_gap = 0.0;
    double worst_err = 0.0;
    for (double x : {0.5, 1.5, 3.0, 6.0}) {
        const InverseResult r = inv.at(x);
        const double gap = std::abs(r.value - eval_bz(z, x));
        ok = ok && gap <= r.error && r.error <= 1e-4;
        worst_gap = std::max(worst_gap, gap);
        worst_err = std::max(worst_err, r.error);
    }
    return {ok, "max gap " + fmt("%.3e", worst_gap) + ", max certified error " + fmt("%.3e", worst_err)};
}

Outcome c3_complex_atoms()
{
    const OmegaRange grid{-3.0, 3.0, 600};
    bool ok = true;
    std::string detail;
    for (cdouble z : {cdouble(2.5), cdouble(2.5, 1.0)}) {
        double prev = 1e300;
        bool monotone = true;
        double at200 = 0.0;
        for (int k : {50, 100, 200, 400}) {
            const double m = verify_atom_identity_complex(z, k, grid).max_residual;
            monotone = monotone && m <= prev;
            prev = m;
            if (k == 200)
                at200 = m;
        }
        ok = ok && monotone && at200 <= 1e-3;
        detail += (detail.empty() ? "" : "; ") + std::string("z=") + fmt("%g", z.real()) + "+" + fmt("%gi", z.imag()) +
                  " K=200 " + fmt("%.3e", at200) + (monotone ? " monotone" : " NOT monotone");
    }
    return {ok, detail};
}

Outcome c4_exponential_atoms()
{
    const OmegaRange grid{-3.0, 3.0, 600};
    const double frac = verify_atom_identity_expz(1.0, 2.5, 100, grid).max_residual;
    double integer = 0.0;
    for (int n = 2; n <= 6; ++n)
        integer = std::max(integer, verify_atom_identity_expz(1.0, n, n, grid).max_residual);
    return {frac <= 1e-6 && integer <= 1e-12,
            "z=2.5 K=100 " + fmt("%.3e", frac) + ", integer z " + fmt("%.3e", integer)};
}

Outcome c5_hypercomplex_atoms()
{
    const auto r = verify_atom_identity_hc(Paravector(2.5, {1.0, 1.0}), 200, OmegaRange{0.1, 3.0, 300});
    double iso = 0.0;
    const OmegaRange grid{-3.0, 3.0, 600};
    for (double x1 : {1.0, -0.7}) {
        const auto hc = verify_atom_identity_hc(Paravector(2.5, {x1}), 200, grid);
        const auto c = verify_atom_identity_complex(cdouble(2.5, x1), 200, grid);
        if (hc.omegas != c.omegas)
            return {false, "admissible sets differ between Cl(1) and complex"};
        for (std::size_t i = 0; i < c.omegas.size(); ++i) {
            const auto& v = hc.residual_values[i];
            iso = std::max(iso, std::abs(v.scalar() + kI * v.vec(1) - c.residual_values[i].scalar()));
        }
    }
    return {!r.omegas.empty() && r.max_residual <= 5e-3 && iso <= 1e-12,
            "Cl(2) " + fmt("%.3e", r.max_residual) + ", Cl(1) vs complex " + fmt("%.3e", iso)};
}

SampledSignal sampled(const std::function<cdouble(double)>& f, double h, double length)
{
    return SampledSignal::sample(f, 0.0, h, static_cast<int>(std::lround(length / h)) + 1);
}

Outcome c6_power_rule()
{
    const auto d = frac_derivative(0.5, sampled([](double x) { return cdouble(x); }, 1e-3, 2.0));
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double x = d.x(i);
        if (x < 0.1 || x > 1.9)
            continue;
        if (!d.is_valid(i))
            return {false, "invalid interior cell"};
        const double exact = 2.0 / std::sqrt(kPi) * std::sqrt(x);
        worst = std::max(worst, std::abs(d.samples[i] - exact) / exact);
    }
    return {worst <= 1e-3, "max relative error " + fmt("%.3e", worst)};
}

// max |D^0.3 D^0.7 f - D^1 f| / max |D^1 f| over x in [0.5, 9.5].
double semigroup_deviation(double h)
{
    auto f = [](double x) { return cdouble(x * x * std::exp(-x)); };
    const auto s = sampled(f, h, 10.0);
    const auto lhs = frac_derivative(0.3, frac_derivative(0.7, s));
    const auto rhs = frac_derivative(1.0, s);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double x = s.x(i);
        if (x < 0.5 || x > 9.5 || !lhs.is_valid(i) || !rhs.is_valid(i))
            continue;
        num = std::max(num, std::abs(lhs.samples[i] - rhs.samples[i]));
        den = std::max(den, std::abs(rhs.samples[i]));
    }
    return num / den;
}

Outcome c7_semigroup()
{
    const double d1 = semigroup_deviation(1e-3);
    const double d2 = semigroup_deviation(5e-4);
    const double ratio = d1 / d2;
    const bool halves = std::abs(ratio - 2.0) <= 0.5;
    return {d1 <= 1e-2 && halves, "deviation h=1e-3 " + fmt("%.3e", d1) + ", h=5e-4 " + fmt("%.3e", d2) +
                                      ", ratio " + fmt("%.2f", ratio) + " (halving requires 1.5..2.5)"};
}

Outcome c8_gamma_hc()
{
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ux(1.1, 5.0);
    std::uniform_real_distribution<double> um(0.1, 3.0);
    std::normal_distribution<double> dir;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<double> v(static_cast<std::size_t>(n));
        double norm = 0.0;
        for (auto& c : v) {
            c = dir(rng);
            norm += c * c;
        }
        const double x0 = ux(rng);
        const double m = um(rng);
        for (auto& c : v)
            c *= m / std::sqrt(norm);
        const Paravector y(x0, std::span<const double>(v));
        const auto g = gamma_hc(y);
        const auto [c, s] = oracle::gamma_integrals(x0, m);
        worst = std::max(worst, std::hypot(std::abs(g.one() - c), std::abs(g.axis() - s)));
    }
    return {worst <= 1e-8, "max deviation " + fmt("%.3e", worst)};
}

Outcome c9_mellin()
{
    double worst = 0.0;
    for (const Paravector& y : {Paravector(1, 0.5), Paravector(0.3, {0.4})})
        for (double w : {1.0, 2.0, 5.0})
            worst = std::max(worst, mellin_check(y, w).deviation);
    return {worst <= 1e-3, "max deviation " + fmt("%.3e", worst)};
}

Outcome c10_decay_and_zeros()
{
    const Paravector y(2.5, {1.0, 1.0});
    std::vector<double> ws;
    std::vector<double> mags;
    for (double w = 100.0; w <= 1e4; w *= 1.02) {
        ws.push_back(w);
        mags.push_back(hat_bupsilon(y, w).norm());
    }
    const double slope = loglog_slope(ws, mags);
    double zeros = 0.0;
    for (int k : {-2, -1, 1, 2})
        zeros = std::max(zeros, hat_bupsilon(y, 2 * kPi * k).norm());
    return {std::abs(slope + 2.5) <= 0.15 && zeros <= 1e-12,
            "slope " + fmt("%.4f", slope) + " (target -2.5), max |hat(2 pi k)| " + fmt("%.3e", zeros)};
}

Outcome c11_exponential_transform()
{
    const ExponentialWeights ab({1.0, 2.0});
    auto e = [&](double x) { return eval_exp_bspline(ab, x); };
    double dft = 0.0;
    for (double w = -8.0; w <= 8.0; w += 0.25) {
        auto integrand = [&](double x) { return e(x) * std::polar(1.0, -w * x); };
        const cdouble q = oracle::integrate_smooth(integrand, 0.0, 1.0) + oracle::integrate_smooth(integrand, 1.0, 2.0);
        dft = std::max(dft, std::abs(q - hat_en(ab, w)));
    }
    double closed = 0.0;
    for (auto [a, b] : {std::pair{1.0, 2.0}, std::pair{-0.5, 1.5}, std::pair{3.0, -2.0}})
        for (int i = 0; i < 200; ++i) {
            const double x = i / 200.0;
            const double exact = (std::exp(a * x) - std::exp(b * x)) / (a - b);
            closed = std::max(closed, std::abs(eval_exp_bspline(ExponentialWeights({a, b}), x) - exact));
        }
    return {dft <= 1e-4 && closed <= 1e-8, "DFT gap " + fmt("%.3e", dft) + ", closed form " + fmt("%.3e", closed)};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Outcome c12_determinism()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "fracspline_acceptance";
    fs::create_directories(dir);

    cli::RunConfig eval;
    eval.command = cli::Command::Eval;
    eval.family = cli::Family::Hypercomplex;
    eval.upsilon = Paravector(2.5, {1.0, 1.0});
    eval.grid = cli::GridSpec::parse("-1:8:0.005");

    cli::RunConfig verify;
    verify.command = cli::Command::Verify;
    verify.family = cli::Family::Complex;
    verify.z = cdouble(2.5, 1.0);

    std::vector<std::string> evals;
    std::vector<std::string> verifies;
    for (const char* threads : {"1", "8"})
        for (int run = 0; run < 2; ++run) {
            ::setenv("FRACSPLINE_THREADS", threads, 1);
            const std::string tag = std::string(threads) + "_" + std::to_string(run);
            eval.output = (dir / ("eval_" + tag + ".csv")).string();
            verify.output = (dir / ("verify_" + tag + ".json")).string();
            if (cli::run(eval) != cli::kExitPass || cli::run(verify) != cli::kExitPass)
                return {false, "run failed"};
            evals.push_back(slurp(eval.output));
            verifies.push_back(slurp(verify.output));
        }
    ::unsetenv("FRACSPLINE_THREADS");
    const bool same = std::all_of(evals.begin(), evals.end(), [&](const auto& s) { return s == evals[0]; }) &&
                      std::all_of(verifies.begin(), verifies.end(), [&](const auto& s) { return s == verifies[0]; });
    return {same && !evals[0].empty(),
            std::to_string(evals[0].size()) + " + " + std::to_string(verifies[0].size()) + " bytes, " +
                (same ? "identical" : "DIFFERENT")};
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)();
};

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "classical reduction", 1.0, c1_classical_reduction},
        {2, "time/frequency consistency", 30.0, c2_time_frequency},
        {3, "complex atom identity", 5.0, c3_complex_atoms},
        {4, "exponential atom identity", 5.0, c4_exponential_atoms},
        {5, "hypercomplex atom identity", 10.0, c5_hypercomplex_atoms},
        {6, "fractional power rule", 5.0, c6_power_rule},
        {7, "semigroup", 0.0, c7_semigroup},
        {8, "hypercomplex gamma", 0.0, c8_gamma_hc},
        {9, "Mellin identity", 0.0, c9_mellin},
        {10, "decay and Strang-Fix zeros", 0.0, c10_decay_and_zeros},
        {11, "exponential B-spline transform", 0.0, c11_exponential_transform},
        {12, "CLI determinism", 0.0, c12_determinism},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.pass;
        std::string timing = fmt("%.2fs", secs);
        if (c.budget_s > 0.0) {
            timing += fmt(" of %.0fs", c.budget_s);
            pass = pass && secs < c.budget_s;
        }
        const bool known = kKnownRed.count(c.id) > 0;
        std::printf("%-4s criterion %2d  %-32s %s [%s]%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    timing.c_str(), !pass && known ? " (known)" : "");
        if (!pass && !known)
            ++unexpected;
    }
    std::fflush(stdout);
    return unexpected == 0 ? 0 : 1;
}
