#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

namespace cwalg {

class Pyramid;
struct GenIndex;

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_to_string(const Rational& q);

/// Element of Q[k]: a polynomial in the formal level k with exact rational
/// coefficients. Stored densely by exponent with no trailing zeros, so the
/// representation of every value is unique.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// The level variable k itself.
    static Scalar k();
    static Scalar monomial(const Rational& coeff, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree in k; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int exponent) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& level) const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator*=(const Rational& rhs);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator*(Scalar a, const Rational& b) { return a *= b; }
    friend Scalar operator*(const Rational& a, Scalar b) { return b *= a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text, highest power first: "(2/3)k + 1", "k^2 - 4", "0".
    std::string to_string() const;

    /// [[exp, num, den], ...] in increasing exponent order.
    nlohmann::json to_json() const;
    static Scalar from_json(const nlohmann::json& j);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Invariant form on the centralizer, on basis elements of kind E (or the
/// lower-triangular kind, which shares E's index set).
Rational form(const Pyramid& p, const GenIndex& x, const GenIndex& y);

/// The constant -lambda_i + ((level + N)/N)(lambda_1 + ... + lambda_{i-1} + (n-i+1)lambda_i).
Scalar alpha(const Pyramid& p, int i, const Scalar& level = Scalar::k());

}  // namespace cwalg
