#pragma once

// Partitions of end multiplicities and the incoming/outgoing partitions of
// a periodic orbit.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pfh/angle.hpp"
#include "pfh/orbit.hpp"

namespace pfh {

/// A multiset of positive integers kept in non-increasing order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);
    Partition(std::initializer_list<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Int total() const { return total_; }
    Int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    bool contains(Int part) const;

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Int> parts_;
    Int total_ = 0;
};

/// Multiset union.
Partition operator|(const Partition& a, const Partition& b);

/// Multiset intersection.
Partition intersect(const Partition& a, const Partition& b);

/// "2,2,1"; the empty partition prints as "-".
std::string to_string(const Partition& p);

/// Inverse of to_string. Accepts parts in any order.
Partition parse_partition(std::string_view text);

enum class Direction { In, Out };

/// Incoming partition: repeatedly split off the largest element of
/// S_theta not exceeding what remains.
Partition p_in(const AngleRep& a, Int m);

/// p_in of the negated angle.
Partition p_out(const AngleRep& a, Int m);

/// The distinguished partition of multiplicity m at an orbit. For
/// hyperbolic orbits the direction is irrelevant.
Partition orbit_partition(const OrbitClass& cls, Int m, Direction dir, Int t = 0);
Partition orbit_partition(const PeriodicOrbit& orbit, Int m, Direction dir, Int t = 0);

/// The quantity whose vanishing characterises p_in among all partitions
/// of the same total. Nonnegative on every partition.
Int M_theta(const AngleRep& a, const Partition& parts);

/// True when floor(i theta) + ceil(m theta) = floor((m+i) theta) for
/// i = 1..n. In that case p_in(m+n) splits as p_in(m) | p_in(n), which is
/// re-checked before returning.
bool check_split(const AngleRep& a, Int m, Int n);

} // namespace pfh
