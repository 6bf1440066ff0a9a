#pragma once

// Sweeps that pit the closed forms against the brute-force oracles.

#include <functional>
#include <string>
#include <vector>

#include "pfh/braid.hpp"
#include "pfh/oracle.hpp"
#include "pfh/partition.hpp"

namespace pfh {

/// Converts a library orbit class to the oracle's own model.
oracle::OracleOrbit to_oracle(const OrbitClass& cls);

struct WorkhorseCheck {
    Int slack = 0;        ///< library value
    Int oracle_slack = 0; ///< literal evaluation
    bool equality_ok = false; ///< slack == 0 exactly when the characterisation says so
};

WorkhorseCheck verify_workhorse(const OrbitClass& cls, const std::vector<Int>& tuple, Int t = 0);

struct SweepSpec {
    Int farey_order = 8;
    Int max_n = 8;
    /// Subset of "minM", "workhorse", "disjoint", "exercise", "split",
    /// "braid"; empty means all.
    std::vector<std::string> lemmas;
    std::vector<Int> hyperbolic_rots{-2, -1, 0, 1, 2};
    std::vector<Int> offsets{-1, 0, 1};
    /// Replaces p_in throughout, so the harness can be tested against a
    /// deliberately wrong implementation.
    std::function<Partition(const AngleRep&, Int)> p_in_override;
};

struct LemmaTally {
    std::string lemma;
    Int cases = 0;
    Int failures = 0;
};

struct SweepReport {
    std::vector<LemmaTally> tallies;
    std::vector<std::string> counterexamples;

    bool ok() const { return counterexamples.empty(); }
    Int cases() const;
};

/// Throws std::invalid_argument for an unknown lemma name or an order
/// smaller than max_n.
SweepReport run_sweep(const SweepSpec& spec);

const std::vector<std::string>& sweep_lemmas();

} // namespace pfh
