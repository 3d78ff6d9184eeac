#ifndef FRACSPLINE_CLIFFORD_HPP
#define FRACSPLINE_CLIFFORD_HPP

// Clifford algebra Cl(n), n <= 5, with the Euclidean generator relations
// e_i e_j + e_j e_i = -2 delta_ij, plus the paravector subspace and the
// commuting subalgebra span{1, u} used by hypercomplex powers.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <type_traits>

#include "fracspline/error.hpp"

namespace fracspline {

using cdouble = std::complex<double>;

inline constexpr int kMaxDimension = 5;
inline constexpr std::size_t kMaxBlades = std::size_t{1} << kMaxDimension;

namespace detail {

// Sign of e_A e_B = sign * e_{A xor B}; A and B are bitmasks, bit i-1 <-> e_i.
// Each generator of B is moved left past the generators of A with larger index
// (one transposition each), and each repeated generator squares to -1.
constexpr int blade_product_sign(unsigned a, unsigned b)
{
    int swaps = 0;
    for (unsigned bi = b; bi != 0; bi &= bi - 1) {
        const unsigned low = bi & (~bi + 1);
        swaps += std::popcount(a & ~((low << 1) - 1));
    }
    swaps += std::popcount(a & b);
    return (swaps % 2 == 0) ? 1 : -1;
}

struct SignTable {
    std::array<std::array<signed char, kMaxBlades>, kMaxBlades> sign{};
    constexpr SignTable()
    {
        for (unsigned a = 0; a < kMaxBlades; ++a)
            for (unsigned b = 0; b < kMaxBlades; ++b)
                sign[a][b] = static_cast<signed char>(blade_product_sign(a, b));
    }
};

inline constexpr SignTable kSignTable{};

template <typename T>
double abs2(const T& x)
{
    if constexpr (std::is_same_v<T, double>)
        return x * x;
    else
        return std::norm(x);
}

template <typename T>
T conj_scalar(const T& x)
{
    if constexpr (std::is_same_v<T, double>)
        return x;
    else
        return std::conj(x);
}

inline void check_dimension(int n)
{
    if (n < 0 || n > kMaxDimension)
        throw DimensionError("Clifford dimension must lie in [0, 5]");
}

} // namespace detail

/// Element of Cl(n) (real coefficients) or its complexification (complex
/// coefficients). Blades are indexed by bitmask in canonical order.
template <typename T>
class BasicCliffordElement {
public:
    using scalar_type = T;

    BasicCliffordElement() = default;

    explicit BasicCliffordElement(int n) : n_(n) { detail::check_dimension(n); }

    BasicCliffordElement(int n, std::span<const T> coeffs) : BasicCliffordElement(n)
    {
        if (coeffs.size() != size())
            throw DimensionError("coefficient count must equal 2^n");
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            c_[i] = coeffs[i];
    }

    static BasicCliffordElement scalar(int n, T s)
    {
        BasicCliffordElement r(n);
        r.c_[0] = s;
        return r;
    }

    /// e_A for the subset A encoded as a bitmask.
    static BasicCliffordElement blade(int n, unsigned mask, T coeff = T(1))
    {
        BasicCliffordElement r(n);
        if (mask >= r.size())
            throw DimensionError("blade index outside Cl(n)");
        r.c_[mask] = coeff;
        return r;
    }

    /// Generator e_i, 1 <= i <= n.
    static BasicCliffordElement generator(int n, int i)
    {
        if (i < 1 || i > n)
            throw DimensionError("generator index outside 1..n");
        return blade(n, 1u << (i - 1));
    }

    int dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }

    const T& operator[](std::size_t mask) const { return c_[mask]; }
    T& operator[](std::size_t mask) { return c_[mask]; }

    std::span<const T> coefficients() const noexcept { return {c_.data(), size()}; }

    T scalar_part() const noexcept { return c_[0]; }

    /// Clifford conjugation: reversal with e_i -> -e_i, extended (anti)linearly.
    BasicCliffordElement conjugate() const
    {
        BasicCliffordElement r(n_);
        for (std::size_t a = 0; a < size(); ++a) {
            const int m = std::popcount(static_cast<unsigned>(a));
            // (-1)^m from e_i -> -e_i, (-1)^{m(m-1)/2} from the reversal.
            const int parity = m + m * (m - 1) / 2;
            const T ca = detail::conj_scalar(c_[a]);
            r.c_[a] = (parity % 2 == 0) ? ca : -ca;
        }
        return r;
    }

    double norm_squared() const noexcept
    {
        double s = 0.0;
        for (std::size_t a = 0; a < size(); ++a)
            s += detail::abs2(c_[a]);
        return s;
    }

    double norm() const noexcept { return std::sqrt(norm_squared()); }

    BasicCliffordElement& operator+=(const BasicCliffordElement& o)
    {
        require_same(o);
        for (std::size_t a = 0; a < size(); ++a)
            c_[a] += o.c_[a];
        return *this;
    }

    BasicCliffordElement& operator-=(const BasicCliffordElement& o)
    {
        require_same(o);
        for (std::size_t a = 0; a < size(); ++a)
            c_[a] -= o.c_[a];
        return *this;
    }

    BasicCliffordElement& operator*=(T s)
    {
        for (std::size_t a = 0; a < size(); ++a)
            c_[a] *= s;
        return *this;
    }

    friend BasicCliffordElement operator+(BasicCliffordElement a, const BasicCliffordElement& b)
    {
        return a += b;
    }
    friend BasicCliffordElement operator-(BasicCliffordElement a, const BasicCliffordElement& b)
    {
        return a -= b;
    }
    friend BasicCliffordElement operator-(BasicCliffordElement a) { return a *= T(-1); }
    friend BasicCliffordElement operator*(BasicCliffordElement a, T s) { return a *= s; }
    friend BasicCliffordElement operator*(T s, BasicCliffordElement a) { return a *= s; }

    friend BasicCliffordElement operator*(const BasicCliffordElement& x, const BasicCliffordElement& y)
    {
        return multiply(x, y);
    }

    /// Geometric product via the precomputed blade sign table.
    friend BasicCliffordElement multiply(const BasicCliffordElement& x, const BasicCliffordElement& y)
    {
        x.require_same(y);
        BasicCliffordElement r(x.n_);
        const std::size_t m = x.size();
        for (std::size_t a = 0; a < m; ++a) {
            if (x.c_[a] == T(0))
                continue;
            for (std::size_t b = 0; b < m; ++b) {
                const T term = x.c_[a] * y.c_[b];
                if (detail::kSignTable.sign[a][b] > 0)
                    r.c_[a ^ b] += term;
                else
                    r.c_[a ^ b] -= term;
            }
        }
        return r;
    }

    friend bool operator==(const BasicCliffordElement&, const BasicCliffordElement&) = default;

private:
    void require_same(const BasicCliffordElement& o) const
    {
        if (n_ != o.n_)
            throw DimensionError("Clifford operands have different dimensions");
    }

    int n_ = 0;
    std::array<T, kMaxBlades> c_{};
};

using CliffordElement = BasicCliffordElement<double>;
using ComplexCliffordElement = BasicCliffordElement<cdouble>;

/// Paravector x0 + sum x_i e_i (real), or its complexification.
template <typename T>
class BasicParavector {
public:
    using scalar_type = T;

    BasicParavector() = default;

    explicit BasicParavector(int n, T s = T(0)) : n_(n), s_(s) { detail::check_dimension(n); }

    BasicParavector(T s, std::initializer_list<T> v) : BasicParavector(static_cast<int>(v.size()), s)
    {
        std::size_t i = 0;
        for (const T& x : v)
            v_[i++] = x;
    }

    BasicParavector(T s, std::span<const T> v) : BasicParavector(static_cast<int>(v.size()), s)
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            v_[i] = v[i];
    }

    int dimension() const noexcept { return n_; }
    const T& scalar() const noexcept { return s_; }
    T& scalar() noexcept { return s_; }

    /// Component along e_i, 1 <= i <= n.
    const T& vec(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }
    T& vec(int i) { return v_[static_cast<std::size_t>(i - 1)]; }

    std::span<const T> vector_part() const noexcept { return {v_.data(), static_cast<std::size_t>(n_)}; }

    double vector_norm() const noexcept
    {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            s += detail::abs2(v_[static_cast<std::size_t>(i)]);
        return std::sqrt(s);
    }

    double norm() const noexcept { return std::sqrt(detail::abs2(s_) + vector_norm() * vector_norm()); }

    BasicParavector conjugate() const
    {
        BasicParavector r(n_, detail::conj_scalar(s_));
        for (int i = 0; i < n_; ++i)
            r.v_[static_cast<std::size_t>(i)] = -detail::conj_scalar(v_[static_cast<std::size_t>(i)]);
        return r;
    }

    BasicCliffordElement<T> to_element() const
    {
        BasicCliffordElement<T> e(n_);
        e[0] = s_;
        for (int i = 0; i < n_; ++i)
            e[std::size_t{1} << i] = v_[static_cast<std::size_t>(i)];
        return e;
    }

    /// Projects onto grades 0 and 1; throws if higher grades exceed `tol`.
    static BasicParavector from_element(const BasicCliffordElement<T>& e, double tol = 1e-12)
    {
        const int n = e.dimension();
        BasicParavector p(n, e[0]);
        double rest = 0.0;
        for (std::size_t a = 1; a < e.size(); ++a) {
            if (std::popcount(static_cast<unsigned>(a)) == 1)
                p.v_[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(a)))] = e[a];
            else
                rest += detail::abs2(e[a]);
        }
        if (std::sqrt(rest) > tol * std::max(1.0, e.norm()))
            throw DomainError("Clifford element is not a paravector");
        return p;
    }

    BasicParavector& operator+=(const BasicParavector& o)
    {
        require_same(o);
        s_ += o.s_;
        for (int i = 0; i < n_; ++i)
            v_[static_cast<std::size_t>(i)] += o.v_[static_cast<std::size_t>(i)];
        return *this;
    }
    BasicParavector& operator-=(const BasicParavector& o)
    {
        require_same(o);
        s_ -= o.s_;
        for (int i = 0; i < n_; ++i)
            v_[static_cast<std::size_t>(i)] -= o.v_[static_cast<std::size_t>(i)];
        return *this;
    }
    BasicParavector& operator*=(T k)
    {
        s_ *= k;
        for (int i = 0; i < n_; ++i)
            v_[static_cast<std::size_t>(i)] *= k;
        return *this;
    }
    friend BasicParavector operator+(BasicParavector a, const BasicParavector& b) { return a += b; }
    friend BasicParavector operator-(BasicParavector a, const BasicParavector& b) { return a -= b; }
    friend BasicParavector operator*(BasicParavector a, T k) { return a *= k; }
    friend BasicParavector operator*(T k, BasicParavector a) { return a *= k; }

    friend bool operator==(const BasicParavector&, const BasicParavector&) = default;

private:
    void require_same(const BasicParavector& o) const
    {
        if (n_ != o.n_)
            throw DimensionError("paravector operands have different dimensions");
    }

    int n_ = 0;
    T s_{};
    std::array<T, kMaxDimension> v_{};
};

using Paravector = BasicParavector<double>;
using ComplexParavector = BasicParavector<cdouble>;

ComplexParavector complexify(const Paravector& p);

/// Decomposition Y = x0 + |v| u used by the hypercomplex power.
struct HypercomplexExponent {
    double x0 = 0.0;
    double vmod = 0.0;
    std::optional<Paravector> u; ///< unit pure vector; present iff vmod > 0
    int dimension = 0;

    static HypercomplexExponent decompose(const Paravector& y);
    Paravector reconstruct() const;
};

/// Value a + b u of the commuting subalgebra span_C{1, u}, u a unit vector
/// (u^2 = -1). Without a direction the value is a plain complex scalar.
///
/// The algebra is commutative but not a field: with the idempotents
/// (1 +- i u)/2 it splits as C + C, coordinates (a - i b, a + i b).
class SubalgebraValue {
public:
    SubalgebraValue() = default;
    SubalgebraValue(int n, cdouble one) : n_(n), one_(one) {}
    SubalgebraValue(cdouble one, cdouble axis, const Paravector& u);

    static SubalgebraValue from_exponent(const HypercomplexExponent& e);

    int dimension() const noexcept { return n_; }
    cdouble one() const noexcept { return one_; }
    cdouble axis() const noexcept { return axis_; }
    const std::optional<Paravector>& direction() const noexcept { return u_; }

    /// Coordinates in the idempotent basis: (a - i b, a + i b).
    cdouble plus_projection() const noexcept { return one_ - cdouble(0, 1) * axis_; }
    cdouble minus_projection() const noexcept { return one_ + cdouble(0, 1) * axis_; }

    /// Image under u -> i; an algebra homomorphism onto C.
    cdouble to_complex() const noexcept { return minus_projection(); }

    /// Hermitian Clifford norm sqrt(|a|^2 + |b|^2).
    double norm() const noexcept { return std::sqrt(std::norm(one_) + std::norm(axis_)); }

    ComplexParavector to_paravector() const;

    /// exp(u w) = cos w + u sin w for a complex scalar w.
    static SubalgebraValue exp_axis(cdouble w, const std::optional<Paravector>& u, int n);

    SubalgebraValue& operator+=(const SubalgebraValue& o);
    SubalgebraValue& operator-=(const SubalgebraValue& o);
    SubalgebraValue& operator*=(const SubalgebraValue& o);
    SubalgebraValue& operator/=(const SubalgebraValue& o);
    SubalgebraValue& operator*=(cdouble k)
    {
        one_ *= k;
        axis_ *= k;
        return *this;
    }

    friend SubalgebraValue operator+(SubalgebraValue a, const SubalgebraValue& b) { return a += b; }
    friend SubalgebraValue operator-(SubalgebraValue a, const SubalgebraValue& b) { return a -= b; }
    friend SubalgebraValue operator*(SubalgebraValue a, const SubalgebraValue& b) { return a *= b; }
    friend SubalgebraValue operator/(SubalgebraValue a, const SubalgebraValue& b) { return a /= b; }
    friend SubalgebraValue operator*(SubalgebraValue a, cdouble k) { return a *= k; }
    friend SubalgebraValue operator*(cdouble k, SubalgebraValue a) { return a *= k; }

private:
    void adopt_direction(const SubalgebraValue& o);
    static SubalgebraValue from_projections(cdouble p, cdouble q, const std::optional<Paravector>& u, int n);

    int n_ = 0;
    cdouble one_{};
    cdouble axis_{};
    std::optional<Paravector> u_;
};

/// Hypercomplex power z^Y = z^{x0} (cos(|v| log z) + u sin(|v| log z)),
/// principal branch. z = 0 gives 0 for x0 > 0.
SubalgebraValue hc_power_value(cdouble z, const Paravector& y);
ComplexParavector hc_power(cdouble z, const Paravector& y);

/// exp by power series (with scaling and squaring) in the full algebra.
Paravector hc_exp(const Paravector& y);
ComplexParavector hc_exp(const ComplexParavector& y);

} // namespace fracspline

#endif
