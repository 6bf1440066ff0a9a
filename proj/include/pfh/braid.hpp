#pragma once

// End braids as iterated cablings of torus braids, and the per-end writhe
// bounds built from them.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pfh/orbit.hpp"
#include "pfh/partition.hpp"

namespace pfh {

class CablingBraid {
public:
    /// The (q, eta) torus braid: q strands, each winding eta/q times per
    /// period, total winding eta.
    static CablingBraid torus(Int q, Int eta);

    /// Replaces the single string of a connected base braid by the inner
    /// braid. Throws DomainError if the base is not connected.
    static CablingBraid cable(const CablingBraid& base, const CablingBraid& inner);

    bool is_torus() const;
    /// Torus parameters; throws unless is_torus().
    Int torus_q() const;
    Int torus_eta() const;
    /// Cable children; throw if is_torus().
    const CablingBraid& base() const;
    const CablingBraid& inner() const;

    Int strands() const;
    bool connected() const;
    Int writhe() const;
    /// Sum over strands of the winding about the core orbit.
    Int winding() const;

    friend bool operator==(const CablingBraid& a, const CablingBraid& b);

private:
    struct Node;
    explicit CablingBraid(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// "torus(3,2)" or "cable(torus(2,1),torus(2,3))".
std::string to_string(const CablingBraid& b);
CablingBraid parse_braid(std::string_view text);

/// Writhe after raising the trivialization by dt, for an m-strand braid.
Int writhe_retriv(Int w, Int m, Int dt);

/// Linking of two radially separated braids, outer one dominating.
Int linking_nested(const CablingBraid& outer, const CablingBraid& inner);

/// Linking of two cablings of the same connected braid: the two cables
/// are performed in one tubular neighbourhood, with outer_pattern nested
/// outside inner_pattern.
Int linking_shared_prefix(const CablingBraid& base, const CablingBraid& outer_pattern,
                          const CablingBraid& inner_pattern);

/// Several disjoint braids around one orbit, index 0 innermost.
class BraidCollection {
public:
    BraidCollection() = default;
    explicit BraidCollection(std::vector<CablingBraid> components);

    const std::vector<CablingBraid>& components() const { return components_; }
    Int strands() const;
    /// Sum of component writhes plus twice the pairwise nested linking.
    Int writhe() const;
    Int winding() const;

private:
    std::vector<CablingBraid> components_;
};

/// Lower bound for the writhe of an incoming end braid with the given
/// partition: sum_{i<=n} mu(gamma^i) - sum_r mu(gamma^{q_r}).
Int min_incoming_writhe(const OrbitClass& cls, const Partition& parts, Int t = 0);
Int min_incoming_writhe(const PeriodicOrbit& orbit, const Partition& parts, Int t = 0);

/// Upper bound for the writhe of an outgoing end braid.
Int max_outgoing_writhe(const OrbitClass& cls, const Partition& parts, Int t = 0);
Int max_outgoing_writhe(const PeriodicOrbit& orbit, const Partition& parts, Int t = 0);

/// Writhe of an incoming end braid when every end sits at its winding
/// bound ceil(mu/2) and ends are nested so that linking is minimal.
Int extremal_incoming_writhe(const OrbitClass& cls, const Partition& parts, Int t = 0);
/// Mirror image for outgoing ends: winding floor(mu/2), maximal linking.
Int extremal_outgoing_writhe(const OrbitClass& cls, const Partition& parts, Int t = 0);

/// ceil(mu(gamma^q)/2).
Int winding_bound(const OrbitClass& cls, Int q, Int t = 0);

struct WritheBound {
    Int value;            ///< ceil(mu(gamma^q)/2) (q-1)
    bool equality_possible; ///< false when the equality case is ruled out
    std::string note;
};

WritheBound writhe_bound(const OrbitClass& cls, Int q, Int t = 0);

/// LHS - RHS of the workhorse inequality for an arbitrary tuple of
/// positive integers. Nonnegative.
Int workhorse_slack(const OrbitClass& cls, const std::vector<Int>& tuple, Int t = 0);

/// Workhorse slack of the tuple in which each q_j is repeated d_j times.
Int mcc_slack(const OrbitClass& cls, const std::vector<Int>& q, const std::vector<Int>& d, Int t = 0);

/// The equality characterisation of the workhorse inequality.
bool workhorse_equality_expected(const OrbitClass& cls, const std::vector<Int>& tuple, Int t = 0);

} // namespace pfh
