#include "ptg/rational.hpp"

#include "ptg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ptg {

std::string to_decimal_string(const Rational& q) {
    mpz_class den = q.get_den();
    int twos = 0;
    int fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return q.get_num().get_str() + "/" + q.get_den().get_str();

    const int digits = std::max(twos, fives);
    if (digits == 0) return q.get_num().get_str();

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = q.get_num() * (scale / q.get_den());
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return negative ? "-" + s : s;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(whole) + "'", 0);
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        mpz_class den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(frac)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
        std::string_view ip = text.substr(0, dot);
        bool negative = !ip.empty() && ip[0] == '-';
        std::string digits(ip);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        mpz_class whole = parse_integer(digits, text);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class f(std::string(frac), 10);
        if (whole < 0) whole = -whole;
        mpz_class num = whole * scale + f;
        if (negative) num = -num;
        Rational q(num, scale);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(text, text));
}

}  // namespace ptg
