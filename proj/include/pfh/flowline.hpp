#pragma once

// End data of candidate flow lines and the index arithmetic that bounds
// their moduli spaces.
//
// A candidate C = C' + T is described by its nontrivial ends (C') and a
// count of repeated trivial cylinders per orbit (T). The class data is
// that of C. All writhes, windings and Conley-Zehnder indices are taken in
// the class trivialization.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfh/index.hpp"
#include "pfh/partition.hpp"

namespace pfh {

struct EndData {
    PeriodicOrbit orbit;
    Partition out_partition; ///< nontrivial outgoing ends (alpha side)
    Partition in_partition;  ///< nontrivial incoming ends (beta side)
    Int trivial_count = 0;

    Int alpha_mult() const { return out_partition.total() + trivial_count; }
    Int beta_mult() const { return in_partition.total() + trivial_count; }
};

class CandidateCurve {
public:
    /// Throws DomainError when the ends do not reproduce the class's orbit
    /// sets or delta is negative.
    CandidateCurve(std::vector<EndData> ends, Int chi, Int delta, RelativeClassData cls);

    const std::vector<EndData>& ends() const { return ends_; }
    Int chi() const { return chi_; }
    Int delta() const { return delta_; }
    const RelativeClassData& cls() const { return cls_; }
    bool has_trivial_cylinders() const;
    const EndData* end_at(const std::string& orbit) const;
    Int offset(const std::string& orbit) const { return offset_of(cls_.triv, orbit); }

    /// Total writhe of the nontrivial part, outgoing minus incoming.
    std::optional<Int> writhe_total;
    /// Total winding of the nontrivial part, outgoing minus incoming.
    std::optional<Int> eta_total;
    /// Q_tau(C) - Q_tau(C') when C has trivial cylinders.
    std::optional<Int> q_cyl;

private:
    std::vector<EndData> ends_;
    Int chi_;
    Int delta_;
    RelativeClassData cls_;
};

struct AdmissibilityResult {
    bool admissible = true;
    std::vector<std::string> reasons;
};

AdmissibilityResult check_admissible_curve(const CandidateCurve& c);

/// The trivial cylinder conditions alone, at one orbit.
bool trivial_conditions_hold(const PeriodicOrbit& orbit, Int m_out, Int m_in, Int r, Int t);

Int schwarz_index(Int rank, Int chi, Int c1, const std::vector<Int>& maslov_terms);

/// Signed Conley-Zehnder sum over the end partitions of C'.
Int mu_zero(const CandidateCurve& c);

/// Signed Conley-Zehnder sums over all covers up to the class
/// multiplicities.
Int mu_total(const CandidateCurve& c);

/// Total writhe when every end sits at its winding bound.
Int extremal_writhe(const CandidateCurve& c);
/// Total winding when every end sits at its winding bound.
Int extremal_winding(const CandidateCurve& c);

/// writhe_total if supplied, extremal_writhe otherwise.
Int effective_writhe(const CandidateCurve& c);

/// Q_tau(C) - Q_tau(C'): the supplied q_cyl, otherwise the value forced
/// by extremal windings, 2 sum_l r_l (eta^-_l - eta^+_l).
Int cylinder_q_term(const CandidateCurve& c);

/// c1 + Q(C') + w + mu0: the Fredholm index bound for dim M_C.
Int fredholm_dimension(const CandidateCurve& c);

enum class Verdict { Consistent, ViolatesIndexInequality, EqualityWithoutAdmissibility };

std::string to_string(Verdict v);

struct IndexReport {
    Int I = 0;
    Int fredholm = 0;
    Verdict verdict = Verdict::Consistent;
    AdmissibilityResult admissibility;
    /// True when no writhe was supplied and extremal bounds were used, so
    /// equality statements are conditional.
    bool writhe_assumed = false;
    bool q_cyl_assumed = false;
    std::optional<Int> adjunction_residual;
    std::vector<std::string> diagnostics;
};

IndexReport index_inequality_report(const CandidateCurve& c);

/// c1 - chi - w - Q + 2 delta; zero for geometric data. Throws DomainError
/// when no writhe was supplied.
Int adjunction_residual(const CandidateCurve& c);

struct EulerBound {
    Int bound = 0; ///< c - mu + mu0 - Q
    bool satisfied = false;
    bool equality = false;
};

/// Throws DomainError when the candidate has trivial cylinders.
EulerBound euler_bound(const CandidateCurve& c);

Int virtual_dimension(const CandidateCurve& c);
int gfl_parity(const CandidateCurve& c);

struct STranslation {
    Int slack = 0; ///< Q + w + eta - 2 delta, the count #(C cap C')
    bool satisfied = false;
};

/// Throws DomainError when no writhe was supplied or C has trivial
/// cylinders.
STranslation s_translation_check(const CandidateCurve& c, Int eta_total);

struct CylinderGoal {
    std::string orbit;
    Int k = 0;
    Int lhs = 0; ///< 2 (sum rho^+ - sum rho^-)
    Int rhs = 0; ///< mu(gamma^{m^+ + k}) - mu(gamma^{m^- + k})
};

struct CylinderReport {
    Int I_prime = 0;
    Int I_combined = 0;
    Int intersections = 0;
    Int q_cross = 0;
    bool q_assumed = false;
    Int slack = 0; ///< I(C'+T) - 2# - I(C')
    bool satisfied = false;
    std::vector<CylinderGoal> goals;
    bool equality_everywhere = false;
    /// Trivial cylinder conditions for C = C' + T at every cylinder orbit.
    bool conditions_hold = false;
    /// Equality in every goal must imply the conditions.
    bool cross_check_ok = false;
};

/// Checks I(C') <= I(C'+T) - 2#(C' cap T). Throws DomainError if C' has
/// trivial cylinders or a cylinder orbit has no end on C'.
CylinderReport trivial_cylinder_correction(const CandidateCurve& c_prime,
                                           const std::vector<std::pair<std::string, Int>>& cylinders,
                                           Int intersections,
                                           std::optional<Int> q_cross = std::nullopt);

struct MccComponent {
    CandidateCurve curve;
    Int d = 1;
    std::optional<Int> dim; ///< defaults to fredholm_dimension(curve)
};

struct MccOrbitSlack {
    std::string orbit;
    Direction side;
    std::vector<Int> q;
    std::vector<Int> d;
    Int slack = 0;
};

struct MccReport {
    Int lhs = 0; ///< sum d_p dim(M_{C_p})
    Int rhs = 0; ///< I(sum d_p C_p)
    Int slack = 0;
    bool satisfied = false;
    std::vector<MccOrbitSlack> per_orbit;
};

/// Pairwise cross terms Q(C_p, C_p'), keyed by (p, p') with p < p'.
using CrossTerms = std::map<std::pair<std::size_t, std::size_t>, Int>;

/// Throws DomainError when the combined data is not the linear/bilinear
/// expansion of the components.
MccReport multiply_covered_bound(const std::vector<MccComponent>& components, const CrossTerms& cross,
                                 const RelativeClassData& combined);

} // namespace pfh
