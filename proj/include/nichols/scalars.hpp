#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/error.hpp"

namespace nichols {

/// Exact element of a cyclotomic field Q(zeta_m).
///
/// The value is stored as its residue modulo the m-th cyclotomic polynomial
/// in the power basis 1, zeta_m, ..., zeta_m^(phi(m)-1). Values with
/// different conductors are lifted to the compositum for arithmetic and
/// comparison; results are not moved back to a smaller field.
class CycScalar {
public:
    CycScalar() : conductor_(1), coeffs_{mpq_class(0)} {}
    CycScalar(long value) : conductor_(1), coeffs_{mpq_class(value)} {} // NOLINT
    explicit CycScalar(mpq_class value) : conductor_(1), coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }

    /// Builds from an arbitrary coefficient vector in the power basis of
    /// Q(zeta_m); entries beyond phi(m) are reduced.
    static CycScalar from_power_basis(int conductor, std::vector<mpq_class> coeffs);

    int conductor() const noexcept { return conductor_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<mpq_class> as_rational() const;

    /// Same value expressed in Q(zeta_m); requires conductor() | m.
    CycScalar lifted(int m) const;

    CycScalar inverse() const;
    CycScalar pow(long exponent) const;

    CycScalar& operator+=(const CycScalar& rhs);
    CycScalar& operator-=(const CycScalar& rhs);
    CycScalar& operator*=(const CycScalar& rhs);
    CycScalar& operator/=(const CycScalar& rhs);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    CycScalar operator-() const;

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Textual form in the scalar syntax, e.g. "1/2 - z(3)^1".
    std::string render() const;

private:
    CycScalar(int conductor, std::vector<mpq_class> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    int conductor_;
    std::vector<mpq_class> coeffs_;
};

/// zeta_m^k in its smallest conductor; +-1 come back as rationals.
CycScalar root_of_unity(int m, long k);

/// Smallest n >= 1 with a^n = 1, or nullopt when a is not a root of unity.
/// Throws Error("ZeroInput") for a = 0.
std::optional<long> multiplicative_order(const CycScalar& a);

/// zeta_order^exponent, kept symbolic.
struct RootOfUnity {
    int order = 1;
    long exponent = 0;

    CycScalar value() const { return root_of_unity(order, exponent); }
    long multiplicative_order() const;
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

/// Finds k in [0, m) with zeta_m^k = a, if any.
std::optional<long> discrete_log(const CycScalar& a, int m);

/// Parses the scalar syntax: integers, p/q, z(m)^k, + - * / ^ and parentheses.
CycScalar parse_scalar(std::string_view text);

int euler_phi(int m);
long lcm_int(long a, long b);

} // namespace nichols
