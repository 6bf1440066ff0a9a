#pragma once

// Brute-force oracles. Nothing here calls the closed forms of the main
// library: angles are replaced by an explicit rational sample point,
// partitions are enumerated exhaustively, and writhe is obtained by
// counting crossings of an explicit planar diagram.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pfh/angle.hpp"

namespace pfh::oracle {

/// A rational strictly inside the interval represented by a, closer to
/// the base than any other rational of denominator <= guard. k times it
/// is never an integer for 1 <= k <= guard.
Rational sample_point(const AngleRep& a);

/// floor(k theta) and ceil(k theta) evaluated at the sample point. k may
/// be negative; |k| must not exceed the guard.
Int floor_at(const AngleRep& a, Int k);
Int ceil_at(const AngleRep& a, Int k);

/// All partitions of n as non-increasing sequences, in decreasing
/// lexicographic order starting from {n}.
std::vector<std::vector<Int>> enumerate_partitions(Int n);

/// M_theta evaluated term by term from its defining formula.
Int brute_M(const AngleRep& a, const std::vector<Int>& parts);

struct MinM {
    Int min = 0;
    std::vector<std::vector<Int>> minimizers;
};

MinM brute_min_M(const AngleRep& a, Int n);

/// Representatives (left endpoint, above, order) of the Farey intervals
/// of the given order in (0,1), generated by the next-term recurrence.
std::vector<AngleRep> farey_sweep(Int order);

struct EllipticModel {
    AngleRep angle;
};
struct HyperbolicModel {
    Int rot;
};
using OracleOrbit = std::variant<EllipticModel, HyperbolicModel>;

Int cz(const OracleOrbit& o, Int k, Int t = 0);

/// LHS - RHS of the workhorse inequality, literally.
Int direct_workhorse_slack(const OracleOrbit& o, const std::vector<Int>& tuple, Int t = 0);

/// LHS - RHS of the multiply covered inequality for tuples q_j with
/// multiplicities d_j, without expanding the repetition.
Int direct_mcc5_slack(const OracleOrbit& o, const std::vector<Int>& q, const std::vector<Int>& d, Int t = 0);

/// Both sides of the per-k trivial cylinder goal at one orbit.
std::pair<Int, Int> direct_cylinder_goal(const OracleOrbit& o, const std::vector<Int>& out_parts,
                                         const std::vector<Int>& in_parts, Int k, Int t = 0);

struct FloorsChain {
    Int left = 0;   ///< floor(m+ theta) + floor(-m- theta)
    Int middle = 0; ///< floor((m+ - m-) theta)
    Int right = 0;  ///< floor((m+ + k) theta) - floor((m- + k) theta)
    bool holds() const { return left <= middle && middle <= right; }
    bool equal() const { return left == middle && middle == right; }
};

FloorsChain direct_floors_chain(const AngleRep& a, Int m_plus, Int m_minus, Int k);

/// Signed crossing count of the (q, eta) torus braid. q <= 8, |eta| <= 8.
Int torus_crossing_count(Int q, Int eta);

/// Signed crossing count of the cabling of the connected (qb, eb) torus
/// braid by the (d, ei) torus braid. Total strands qb d <= 8.
Int cable_crossing_count(Int qb, Int eb, Int d, Int ei);

/// Signed crossings between an outer (q1, e1) torus braid and an inner
/// (q2, e2) torus braid placed at different radii. Twice the linking.
Int nested_crossing_count(Int q1, Int e1, Int q2, Int e2);

/// Signed crossing count of nested torus components, index 0 innermost.
Int collection_crossing_count(const std::vector<std::pair<Int, Int>>& torus_components);

} // namespace pfh::oracle
