#include "cedga/rational.hpp"
#include "cedga/error.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace cedga {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (s.empty())
        throw Error(ErrorCode::Format, "bad number '" + std::string(whole) + "'");
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::Format, "bad number '" + std::string(whole) + "'");
    return v;
}

std::int64_t pow10(int e, std::string_view whole) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / 10)
            throw Error(ErrorCode::Format, "number out of range '" + std::string(whole) + "'");
        r *= 10;
    }
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::int64_t den = parse_int(s.substr(slash + 1), text);
        if (den == 0)
            throw Error(ErrorCode::Format, "zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(s.substr(0, slash), text), den);
    }
    int exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exp10 = static_cast<int>(parse_int(s.substr(e + 1).front() == '+' ? s.substr(e + 2) : s.substr(e + 1), text));
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        exp10 -= static_cast<int>(s.size() - dot - 1);
    } else {
        digits = std::string(s);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::Format, "bad number '" + std::string(text) + "'");
    std::int64_t mantissa = parse_int(digits, text);
    if (negative)
        mantissa = -mantissa;
    if (exp10 >= 0)
        return Rational(mantissa) * pow10(exp10, text);
    return Rational(mantissa, pow10(-exp10, text));
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational approximate_rational(double x, std::int64_t max_den) {
    if (!std::isfinite(x))
        throw Error(ErrorCode::Format, "non-finite value");
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int iter = 0; iter < 64; ++iter) {
        double a = std::floor(v);
        if (std::fabs(a) > 9.0e15)
            break;
        auto ai = static_cast<std::int64_t>(a);
        __int128 p2 = static_cast<__int128>(ai) * p1 + p0;
        __int128 q2 = static_cast<__int128>(ai) * q1 + q0;
        if (q2 > max_den || p2 > std::numeric_limits<std::int64_t>::max() || p2 < -std::numeric_limits<std::int64_t>::max())
            break;
        p0 = p1;
        q0 = q1;
        p1 = static_cast<std::int64_t>(p2);
        q1 = static_cast<std::int64_t>(q2);
        double frac = v - a;
        if (frac < 1e-18)
            break;
        v = 1.0 / frac;
    }
    if (q1 == 0)
        throw Error(ErrorCode::Format, "value out of range for a rational approximation");
    return Rational(p1, q1);
}

} // namespace cedga
