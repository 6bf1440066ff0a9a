#include "pfh/orbit.hpp"

#include <limits>
#include <stdexcept>

namespace pfh {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool is_odd(Int n) { return n % 2 != 0; }

} // namespace

bool is_elliptic(const OrbitClass& cls)
{
    return std::holds_alternative<Elliptic>(cls);
}

bool is_positive_hyperbolic(const OrbitClass& cls)
{
    const auto* h = std::get_if<Hyperbolic>(&cls);
    return h != nullptr && !is_odd(h->rot);
}

bool is_negative_hyperbolic(const OrbitClass& cls)
{
    const auto* h = std::get_if<Hyperbolic>(&cls);
    return h != nullptr && is_odd(h->rot);
}

Int cz_index(const OrbitClass& cls, Int k, Int t)
{
    if (k < 1)
        throw std::invalid_argument("cover multiplicity must be positive");
    return std::visit(overloaded{
                          [&](const Elliptic& e) { return 2 * floor_mult(shift(e.angle, t), k) + 1; },
                          [&](const Hyperbolic& h) { return k * (h.rot + 2 * t); },
                      },
                      cls);
}

Int cz_index(const PeriodicOrbit& orbit, Int k, Int t)
{
    return cz_index(orbit.cls, k, t);
}

Int cz_sum(const OrbitClass& cls, Int m, Int t)
{
    if (m < 0)
        throw std::invalid_argument("multiplicity must be nonnegative");
    Int sum = 0;
    for (Int k = 1; k <= m; ++k)
        sum += cz_index(cls, k, t);
    return sum;
}

Int cz_sum(const PeriodicOrbit& orbit, Int m, Int t)
{
    return cz_sum(orbit.cls, m, t);
}

LefschetzSign lefschetz_sign(const OrbitClass& cls)
{
    if (is_positive_hyperbolic(cls))
        return {-1, 1};
    return {+1, 0};
}

LefschetzSign lefschetz_sign(const PeriodicOrbit& orbit)
{
    return lefschetz_sign(orbit.cls);
}

OrbitClass reverse_orbit(const OrbitClass& cls)
{
    return std::visit(overloaded{
                          [](const Elliptic& e) -> OrbitClass { return Elliptic{negate(e.angle)}; },
                          [](const Hyperbolic& h) -> OrbitClass { return Hyperbolic{-h.rot}; },
                      },
                      cls);
}

PeriodicOrbit reverse_orbit(const PeriodicOrbit& orbit)
{
    return {orbit.name, orbit.period, reverse_orbit(orbit.cls)};
}

Int cover_limit(const OrbitClass& cls)
{
    if (const auto* e = std::get_if<Elliptic>(&cls))
        return e->angle.guard();
    return std::numeric_limits<Int>::max();
}

OrbitClass with_guard(const OrbitClass& cls, Int guard)
{
    if (const auto* e = std::get_if<Elliptic>(&cls))
        return Elliptic{e->angle.with_guard(guard)};
    return cls;
}

std::string describe(const OrbitClass& cls)
{
    return std::visit(overloaded{
                          [](const Elliptic& e) { return "elliptic theta=" + to_string(e.angle); },
                          [](const Hyperbolic& h) { return "hyperbolic rot=" + std::to_string(h.rot); },
                      },
                      cls);
}

} // namespace pfh
