#include "pfh/angle.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <stdexcept>

namespace pfh {

namespace {

void require_guard(const AngleRep& a, Int k)
{
    if (k < 1)
        throw std::invalid_argument("multiplier must be positive, got " + std::to_string(k));
    if (k > a.guard())
        throw GuardViolation("multiplier " + std::to_string(k) + " exceeds guard "
                             + std::to_string(a.guard()) + " of angle " + to_string(a));
}

} // namespace

AngleRep::AngleRep(Rational base, Side side, Int guard)
    : base_(std::move(base))
    , side_(side)
    , guard_(guard)
{
    if (guard_ < 1)
        throw std::invalid_argument("angle guard must be at least 1");
}

Int to_int(const BigInt& v)
{
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw std::overflow_error("integer result does not fit in 64 bits");
    return v.convert_to<Int>();
}

Int floor_div(const BigInt& n, const BigInt& d)
{
    BigInt q = n / d; // truncates toward zero
    if ((n % d != 0) && ((n < 0) != (d < 0)))
        --q;
    return to_int(q);
}

Int floor_mult(const AngleRep& a, Int k)
{
    require_guard(a, k);
    const BigInt num = boost::multiprecision::numerator(a.base()) * k;
    const BigInt den = boost::multiprecision::denominator(a.base());
    if (a.side() == Side::Above)
        return floor_div(num, den);
    // Just below k*a/b: ceil(k*a/b) - 1.
    return -floor_div(-num, den) - 1;
}

Int ceil_mult(const AngleRep& a, Int k)
{
    return floor_mult(a, k) + 1;
}

Rational f_theta(const AngleRep& a, Int q)
{
    return Rational(ceil_mult(a, q), q);
}

bool in_S_theta(const AngleRep& a, Int q)
{
    const Rational fq = f_theta(a, q);
    for (Int r = 1; r < q; ++r)
        if (!(f_theta(a, r) > fq))
            return false;
    return true;
}

AngleRep negate(const AngleRep& a)
{
    return {-a.base(), a.side() == Side::Above ? Side::Below : Side::Above, a.guard()};
}

AngleRep shift(const AngleRep& a, Int t)
{
    return {a.base() + t, a.side(), a.guard()};
}

std::vector<FareyInterval> farey_intervals(Int order)
{
    if (order < 1)
        throw std::invalid_argument("Farey order must be positive");
    std::set<Rational> points;
    for (Int b = 1; b <= order; ++b)
        for (Int a = 0; a <= b; ++a)
            points.insert(Rational(a, b));
    std::vector<FareyInterval> out;
    out.reserve(points.size());
    for (auto it = points.begin(); std::next(it) != points.end(); ++it)
        out.push_back({*it, *std::next(it)});
    return out;
}

std::vector<AngleRep> farey_representatives(Int order)
{
    std::vector<AngleRep> reps;
    for (const auto& iv : farey_intervals(order))
        reps.emplace_back(iv.lo, Side::Above, order);
    return reps;
}

std::string format_rational(const Rational& r)
{
    const BigInt den = boost::multiprecision::denominator(r);
    std::string s = boost::multiprecision::numerator(r).str();
    if (den != 1)
        s += "/" + den.str();
    return s;
}

std::string to_string(const AngleRep& a)
{
    return format_rational(a.base()) + (a.side() == Side::Above ? "+" : "-");
}

AngleRep parse_angle(std::string_view text, Int guard)
{
    auto fail = [&]() -> AngleRep {
        throw std::invalid_argument("malformed angle '" + std::string(text)
                                    + "', expected a/b+ or a/b-");
    };
    if (text.size() < 2)
        return fail();
    const char side_ch = text.back();
    if (side_ch != '+' && side_ch != '-')
        return fail();
    const std::string_view body = text.substr(0, text.size() - 1);

    auto parse_int = [&](std::string_view s, Int& out) {
        if (s.empty())
            return false;
        const char* first = s.data();
        if (*first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };

    Int num = 0;
    Int den = 1;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        if (!parse_int(body.substr(0, slash), num) || !parse_int(body.substr(slash + 1), den))
            return fail();
        if (den <= 0)
            return fail();
    } else if (!parse_int(body, num)) {
        return fail();
    }
    return {Rational(num, den), side_ch == '+' ? Side::Above : Side::Below, guard};
}

} // namespace pfh
