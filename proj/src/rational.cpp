#include "sws/rational.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "sws/errors.hpp"

namespace sws {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

boost::multiprecision::mpz_int parse_integer(std::string_view s) {
    if (s.empty() || !all_digits(s)) throw ParseError("not a number: '" + std::string(s) + "'");
    std::string digits(s);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    return boost::multiprecision::mpz_int(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    using boost::multiprecision::mpz_int;
    if (text.empty()) throw ParseError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_int num = parse_integer(text.substr(0, slash));
        mpz_int den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw ParseError("not a number: '" + std::string(text) + "'");
    if (!all_digits(whole) || !all_digits(frac)) {
        throw ParseError("not a decimal: '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    // A leading zero would select octal.
    digits.erase(0, digits.find_first_not_of('0'));
    mpz_int num(digits.empty() ? std::string("0") : digits);
    mpz_int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    using boost::multiprecision::mpz_int;
    mpz_int num = boost::multiprecision::numerator(r);
    mpz_int den = boost::multiprecision::denominator(r);

    mpz_int rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return num.str() + "/" + den.str();

    unsigned places = std::max(twos, fives);
    mpz_int scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    mpz_int scaled = num * (scale / den);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;

    std::string digits = scaled.str();
    if (places == 0) return (negative ? "-" : "") + digits;
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return (negative ? "-" : "") + digits;
}

std::string describe(const Rational& r) {
    std::ostringstream out;
    out << r.str() << " (" << std::setprecision(12) << to_double(r) << ")";
    return out.str();
}

std::string describe(double r) {
    std::ostringstream out;
    out << std::setprecision(12) << r;
    return out.str();
}

}  // namespace sws
