#pragma once

// Orbit sets, relative homology class data and the relative index I.

#include <map>
#include <string>
#include <vector>

#include "pfh/orbit.hpp"

namespace pfh {

struct OrbitTerm {
    PeriodicOrbit orbit;
    Int mult;
};

/// Finite set of (orbit, multiplicity) pairs with distinct orbit names,
/// kept sorted by name.
class OrbitSet {
public:
    OrbitSet() = default;
    explicit OrbitSet(std::vector<OrbitTerm> terms);

    const std::vector<OrbitTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Int degree() const;
    /// Every hyperbolic orbit has multiplicity 1.
    bool admissible() const;
    /// Multiplicity of the named orbit, 0 if absent.
    Int multiplicity(const std::string& name) const;
    const PeriodicOrbit* find(const std::string& name) const;

    friend OrbitSet operator+(const OrbitSet& a, const OrbitSet& b);
    friend bool operator==(const OrbitSet& a, const OrbitSet& b);

private:
    std::vector<OrbitTerm> terms_;
};

/// Multiplies every multiplicity by d.
OrbitSet scaled(const OrbitSet& s, Int d);

std::string to_string(const OrbitSet& s);

/// Trivialization offset per orbit name; missing names mean 0.
using TrivOffset = std::map<std::string, Int>;

Int offset_of(const TrivOffset& triv, const std::string& name);

struct ClassDelta {
    Int c1E_pairing = 0;
    Int h_pairing = 0;
};

struct RelativeClassData {
    OrbitSet alpha;
    OrbitSet beta;
    Int c1_rel = 0;
    Int q_self = 0;
    TrivOffset triv;

    /// Throws DomainError when the degrees of alpha and beta differ.
    RelativeClassData(OrbitSet alpha, OrbitSet beta, Int c1_rel, Int q_self, TrivOffset triv = {});
};

/// Signed sum of cz_sum over alpha minus beta in the data's trivialization.
Int cz_term(const RelativeClassData& d);

Int relative_index(const RelativeClassData& d);

/// Moves the data to new trivialization offsets; I is unchanged.
RelativeClassData retrivialize(const RelativeClassData& d, const TrivOffset& new_triv);

/// Glues d1 (alpha -> gamma) and d2 (gamma -> beta).
RelativeClassData compose(const RelativeClassData& d1, const RelativeClassData& d2);

/// Changes the relative class by an element of H_2(Y).
RelativeClassData shift_class(const RelativeClassData& d, const ClassDelta& delta);

/// Sum of the Lefschetz parities weighted by multiplicity, mod 2.
int grading_mod2(const OrbitSet& s);

/// True iff I is congruent to the difference of mod 2 gradings. Throws
/// DomainError if alpha or beta is not admissible.
bool parity_check(const RelativeClassData& d);

/// c1 + Q = sum m_i - sum n_j mod 2, which realizable data satisfies.
bool chern_parity_consistent(const RelativeClassData& d);

/// Largest multiplicity with which each elliptic orbit name occurs.
std::map<std::string, Int> max_multiplicities(const RelativeClassData& d);

} // namespace pfh
