// SPDX-License-Identifier: Apache-2.0
#include "inose/rational.hpp"

#include <cctype>

namespace inose {

namespace {

bool valid_integer_token(std::string_view t) {
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!valid_integer_token(num_part))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    Integer n(std::string(num_part), 10);
    if (slash == std::string_view::npos) return Rational(n);

    std::string_view den_part = text.substr(slash + 1);
    if (!valid_integer_token(den_part) || den_part[0] == '-' || den_part[0] == '+')
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    Integer d(std::string(den_part), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(Integer(r.get_num()), Integer(r.get_den()));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace inose
