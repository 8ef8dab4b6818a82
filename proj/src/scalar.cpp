#include "cwalg/scalar.hpp"

#include "cwalg/pyramid.hpp"

#include <algorithm>
#include <sstream>

namespace cwalg {

Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

nlohmann::json integer_to_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j)
{
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

}  // namespace

Scalar::Scalar(long value)
{
    if (value != 0)
        coeffs_.emplace_back(value);
}

Scalar::Scalar(const Rational& value)
{
    if (value != 0)
        coeffs_.push_back(value);
}

Scalar Scalar::k()
{
    return monomial(1, 1);
}

Scalar Scalar::monomial(const Rational& coeff, int exponent)
{
    Scalar s;
    if (coeff != 0) {
        s.coeffs_.assign(exponent + 1, Rational(0));
        s.coeffs_[exponent] = coeff;
    }
    return s;
}

Rational Scalar::coeff(int exponent) const
{
    if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[exponent];
}

Rational Scalar::evaluate(const Rational& level) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * level + *it;
    return acc;
}

void Scalar::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t e = 0; e < rhs.coeffs_.size(); ++e)
        coeffs_[e] += rhs.coeffs_[e];
    trim();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t e = 0; e < rhs.coeffs_.size(); ++e)
        coeffs_[e] -= rhs.coeffs_[e];
    trim();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b)
            out[a + b] += coeffs_[a] * rhs.coeffs_[b];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Scalar& Scalar::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= rhs;
    return *this;
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    for (auto& c : s.coeffs_)
        c = -c;
    return s;
}

std::string Scalar::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        Rational c = coeffs_[e];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << (c.get_den() == 1 ? c.get_str() : "(" + c.get_str() + ")");
        os << "k";
        if (e > 1)
            os << "^" << e;
    }
    return os.str();
}

nlohmann::json Scalar::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0)
            out.push_back({static_cast<int>(e), integer_to_json(coeffs_[e].get_num()),
                           integer_to_json(coeffs_[e].get_den())});
    return out;
}

Scalar Scalar::from_json(const nlohmann::json& j)
{
    Scalar s;
    for (const auto& term : j) {
        Rational c(integer_from_json(term.at(1)), integer_from_json(term.at(2)));
        c.canonicalize();
        s += monomial(c, term.at(0).get<int>());
    }
    return s;
}

Rational form(const Pyramid& p, const GenIndex& x, const GenIndex& y)
{
    if (x.r != 0 || y.r != 0)
        return 0;
    const int N = p.N();
    if (x.i == x.j && y.i == y.j) {
        const int i = x.i;
        const int j = y.i;
        long value = -std::min(p.lambda(i), p.lambda(j));
        if (i == j) {
            long partial = 0;
            for (int a = 1; a < i; ++a)
                partial += p.lambda(a);
            value += partial + static_cast<long>(p.n() - i + 1) * p.lambda(i);
        }
        return make_rational(value, N);
    }
    if (x.i != x.j && x.i == y.j && x.j == y.i && p.lambda(x.i) == p.lambda(x.j)) {
        long sum = 0;
        for (int c = 0; c < p.lambda(x.i); ++c)
            sum += p.q()[c];
        return make_rational(sum, N);
    }
    return 0;
}

Scalar alpha(const Pyramid& p, int i, const Scalar& level)
{
    if (i < 1 || i > p.n())
        throw std::out_of_range("alpha index " + std::to_string(i) + " outside 1.." + std::to_string(p.n()));
    long bracket = static_cast<long>(p.n() - i + 1) * p.lambda(i);
    for (int a = 1; a < i; ++a)
        bracket += p.lambda(a);
    Scalar shifted = level + Scalar(static_cast<long>(p.N()));
    return Scalar(static_cast<long>(-p.lambda(i))) + shifted * make_rational(bracket, p.N());
}

}  // namespace cwalg
