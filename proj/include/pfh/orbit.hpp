#pragma once

// Local models of nondegenerate periodic orbits.
//
// Parameters are stored in a reference trivialization; index-bearing
// functions take an explicit integer offset t = tau' - tau_ref. Raising the
// trivialization by one adds 1 to an elliptic angle and 2 to a hyperbolic
// rotation number, so mu(gamma^k) grows by 2k.

#include <string>
#include <variant>

#include "pfh/angle.hpp"

namespace pfh {

struct Elliptic {
    AngleRep angle;
    friend bool operator==(const Elliptic&, const Elliptic&) = default;
};

/// mu_tau(gamma^k) = k * rot. The eigenvalue sign is (-1)^rot.
struct Hyperbolic {
    Int rot;
    friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

using OrbitClass = std::variant<Elliptic, Hyperbolic>;

struct PeriodicOrbit {
    std::string name;
    Int period = 1;
    OrbitClass cls;

    friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

bool is_elliptic(const OrbitClass& cls);
/// Hyperbolic with positive eigenvalues (even rotation number).
bool is_positive_hyperbolic(const OrbitClass& cls);
/// Hyperbolic with negative eigenvalues (odd rotation number).
bool is_negative_hyperbolic(const OrbitClass& cls);

/// Conley-Zehnder index of the k-fold cover in trivialization ref + t.
Int cz_index(const OrbitClass& cls, Int k, Int t = 0);
Int cz_index(const PeriodicOrbit& orbit, Int k, Int t = 0);

/// Sum of cz_index over covers 1..m.
Int cz_sum(const OrbitClass& cls, Int m, Int t = 0);
Int cz_sum(const PeriodicOrbit& orbit, Int m, Int t = 0);

struct LefschetzSign {
    int sign;   ///< +1 or -1
    int parity; ///< epsilon: 0 for +1, 1 for -1
};

LefschetzSign lefschetz_sign(const OrbitClass& cls);
LefschetzSign lefschetz_sign(const PeriodicOrbit& orbit);

/// The same orbit seen in the mapping torus of the inverse map.
OrbitClass reverse_orbit(const OrbitClass& cls);
PeriodicOrbit reverse_orbit(const PeriodicOrbit& orbit);

/// Largest cover for which indices are defined (the angle guard for
/// elliptic orbits, unbounded for hyperbolic ones).
Int cover_limit(const OrbitClass& cls);

/// Replaces the angle guard of an elliptic orbit; no-op for hyperbolic.
OrbitClass with_guard(const OrbitClass& cls, Int guard);

std::string describe(const OrbitClass& cls);

} // namespace pfh
