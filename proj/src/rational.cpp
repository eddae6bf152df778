#include "chflag/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chflag {

namespace {

mpz_class pow10(int places) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(places));
    return result;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) {
        throw std::invalid_argument("empty decimal numeral");
    }
    std::string digits;
    int places = 0;
    bool seen_point = false;
    bool seen_digit = false;
    for (char ch : s) {
        if (ch == '.') {
            if (seen_point) {
                throw std::invalid_argument("malformed decimal numeral: " + std::string(text));
            }
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) {
                ++places;
            }
        } else {
            throw std::invalid_argument("malformed decimal numeral: " + std::string(text));
        }
    }
    if (!seen_digit) {
        throw std::invalid_argument("malformed decimal numeral: " + std::string(text));
    }
    Rational value(mpz_class(digits, 10), pow10(places));
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_decimal(text);
    }
    std::string num(text.substr(0, slash));
    std::string den(text.substr(slash + 1));
    auto is_integer = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                return false;
            }
        }
        return true;
    };
    if (!is_integer(num) || !is_integer(den) || den.find('-') != std::string::npos) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    if (den[0] == '+') {
        den.erase(0, 1);
    }
    mpz_class d(den, 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: " + std::string(text));
    }
    Rational value(mpz_class(num, 10), d);
    value.canonicalize();
    return value;
}

std::string to_fraction_string(const Rational& value) {
    return value.get_str(10);
}

std::optional<int> decimal_places(const Rational& value) {
    mpz_class den = value.get_den();
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
    if (den != 1) {
        return std::nullopt;
    }
    return std::max(twos, fives);
}

std::string to_decimal_string(const Rational& value, int places) {
    auto needed = decimal_places(value);
    if (!needed || *needed > places) {
        throw std::invalid_argument("value has no exact decimal form with " + std::to_string(places) +
                                    " places: " + to_fraction_string(value));
    }
    Rational scaled_q = value * Rational(pow10(places));
    mpz_class scaled = scaled_q.get_num();
    bool negative = scaled < 0;
    if (negative) {
        scaled = -scaled;
    }
    std::string digits = scaled.get_str(10);
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return negative ? "-" + digits : digits;
}

std::string to_decimal_string(const Rational& value) {
    auto needed = decimal_places(value);
    if (!needed) {
        throw std::invalid_argument("non-terminating decimal: " + to_fraction_string(value));
    }
    return to_decimal_string(value, *needed);
}

Rational truncate_decimal(const Rational& value, int places) {
    mpz_class scale = pow10(places);
    Rational scaled = value * Rational(scale);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational result(q, scale);
    result.canonicalize();
    return result;
}

Rational round_decimal(const Rational& value, int places) {
    mpz_class scale = pow10(places);
    Rational scaled = abs(value * Rational(scale)) + Rational(1, 2);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (value < 0) {
        q = -q;
    }
    Rational result(q, scale);
    result.canonicalize();
    return result;
}

Rational rational_from_double(double value) {
    return Rational(value);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace chflag
