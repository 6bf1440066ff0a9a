#pragma once

// Exact stand-ins for irrational monodromy angles.
//
// Every quantity the index theory needs from an irrational angle theta
// (floors and ceilings of k*theta for bounded k, the best upper
// approximations f_theta, the set S_theta) is constant on each interval
// between consecutive rationals of bounded denominator. An AngleRep names
// such an interval by one endpoint, the side of that endpoint on which
// theta lies, and the largest multiplier (the guard) for which answers are
// promised.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pfh/errors.hpp"

namespace pfh {

using Int = std::int64_t;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

enum class Side { Above, Below };

class AngleRep {
public:
    AngleRep(Rational base, Side side, Int guard);

    const Rational& base() const { return base_; }
    Side side() const { return side_; }
    Int guard() const { return guard_; }

    AngleRep with_guard(Int guard) const { return {base_, side_, guard}; }

    friend bool operator==(const AngleRep&, const AngleRep&) = default;

private:
    Rational base_;
    Side side_;
    Int guard_;
};

/// floor(k * theta) for 1 <= k <= guard.
Int floor_mult(const AngleRep& a, Int k);

/// ceil(k * theta) for 1 <= k <= guard; always floor_mult + 1.
Int ceil_mult(const AngleRep& a, Int k);

/// The smallest rational with denominator q lying above theta.
Rational f_theta(const AngleRep& a, Int q);

/// True when f_theta(q') > f_theta(q) for every 1 <= q' < q.
bool in_S_theta(const AngleRep& a, Int q);

AngleRep negate(const AngleRep& a);
AngleRep shift(const AngleRep& a, Int t);

/// A maximal open interval between consecutive fractions of the Farey
/// sequence of some order.
struct FareyInterval {
    Rational lo;
    Rational hi;
};

/// Farey intervals of the given order covering (0,1), in increasing order.
std::vector<FareyInterval> farey_intervals(Int order);

/// One representative per Farey interval of the given order in (0,1):
/// (left endpoint, above, order).
std::vector<AngleRep> farey_representatives(Int order);

/// "0", "3", "-2/5".
std::string format_rational(const Rational& r);

/// "2/5+" or "-2/5-". The guard is not part of the text form.
std::string to_string(const AngleRep& a);

/// Parses "a/b+" / "a/b-" (also "a+" for integers). Throws
/// std::invalid_argument on malformed text.
AngleRep parse_angle(std::string_view text, Int guard);

/// Exact floor of n/d for d > 0, narrowed to Int.
Int floor_div(const BigInt& n, const BigInt& d);

/// Narrowing that throws std::overflow_error instead of wrapping.
Int to_int(const BigInt& v);

} // namespace pfh
