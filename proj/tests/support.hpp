#pragma once

#include "pfh/angle.hpp"
#include "pfh/orbit.hpp"

namespace pfh::test {

inline AngleRep angle(Int num, Int den, Side side = Side::Above, Int guard = 8)
{
    return AngleRep(Rational(num, den), side, guard);
}

/// theta in (2/5, 3/7), the running example.
inline AngleRep two_fifths(Int guard = 8) { return angle(2, 5, Side::Above, guard); }

inline PeriodicOrbit elliptic(const std::string& name, const AngleRep& a, Int period = 1)
{
    return {name, period, Elliptic{a}};
}

inline PeriodicOrbit hyperbolic(const std::string& name, Int rot, Int period = 1)
{
    return {name, period, Hyperbolic{rot}};
}

} // namespace pfh::test
