#include "pfh/flowline.hpp"

#include <algorithm>
#include <set>

#include "pfh/braid.hpp"

namespace pfh {

namespace {

Int mod2(Int v) { return ((v % 2) + 2) % 2; }

Int ceil_half(Int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }
Int floor_half(Int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

Int out_winding(const EndData& e, Int t)
{
    Int eta = 0;
    for (Int q : e.out_partition)
        eta += floor_half(cz_index(e.orbit, q, t));
    return eta;
}

Int in_winding(const EndData& e, Int t)
{
    Int eta = 0;
    for (Int q : e.in_partition)
        eta += ceil_half(cz_index(e.orbit, q, t));
    return eta;
}

std::vector<CylinderGoal> goals_at(const EndData& e, Int r, Int t)
{
    std::vector<CylinderGoal> goals;
    const Int lhs = 2 * (out_winding(e, t) - in_winding(e, t));
    const Int m_plus = e.out_partition.total();
    const Int m_minus = e.in_partition.total();
    for (Int k = 1; k <= r; ++k)
        goals.push_back({e.orbit.name, k, lhs,
                         cz_index(e.orbit, m_plus + k, t) - cz_index(e.orbit, m_minus + k, t)});
    return goals;
}

/// p(m + k) = p(m) | p(k) for k = 1..r in the given direction.
bool splits(const PeriodicOrbit& orbit, Int m, Int r, Direction dir, Int t)
{
    const Partition base = orbit_partition(orbit, m, dir, t);
    for (Int k = 1; k <= r; ++k)
        if (orbit_partition(orbit, m + k, dir, t) != (base | orbit_partition(orbit, k, dir, t)))
            return false;
    return true;
}

} // namespace

CandidateCurve::CandidateCurve(std::vector<EndData> ends, Int chi, Int delta, RelativeClassData cls)
    : ends_(std::move(ends))
    , chi_(chi)
    , delta_(delta)
    , cls_(std::move(cls))
{
    if (delta_ < 0)
        throw DomainError("singularity count delta must be nonnegative");
    std::set<std::string> seen;
    for (const auto& e : ends_) {
        if (!seen.insert(e.orbit.name).second)
            throw DomainError("orbit " + e.orbit.name + " has two end declarations");
        if (e.trivial_count < 0)
            throw DomainError("trivial cylinder count at " + e.orbit.name + " is negative");
        const auto check_side = [&](const OrbitSet& s, Int expected, const char* side) {
            const PeriodicOrbit* o = s.find(e.orbit.name);
            const Int have = o == nullptr ? 0 : s.multiplicity(e.orbit.name);
            if (have != expected)
                throw DomainError("ends at " + e.orbit.name + " give multiplicity " + std::to_string(expected)
                                  + " on the " + side + " side but the class has " + std::to_string(have));
            if (o != nullptr && !(*o == e.orbit))
                throw DomainError("end orbit " + e.orbit.name + " differs from the class orbit");
        };
        check_side(cls_.alpha, e.alpha_mult(), "outgoing");
        check_side(cls_.beta, e.beta_mult(), "incoming");
    }
    for (const auto* s : {&cls_.alpha, &cls_.beta})
        for (const auto& t : s->terms())
            if (!seen.count(t.orbit.name))
                throw DomainError("class orbit " + t.orbit.name + " has no end data");
}

bool CandidateCurve::has_trivial_cylinders() const
{
    return std::any_of(ends_.begin(), ends_.end(), [](const EndData& e) { return e.trivial_count > 0; });
}

const EndData* CandidateCurve::end_at(const std::string& orbit) const
{
    for (const auto& e : ends_)
        if (e.orbit.name == orbit)
            return &e;
    return nullptr;
}

bool trivial_conditions_hold(const PeriodicOrbit& orbit, Int m_out, Int m_in, Int r, Int t)
{
    return splits(orbit, m_out, r, Direction::Out, t) && splits(orbit, m_in, r, Direction::In, t);
}

AdmissibilityResult check_admissible_curve(const CandidateCurve& c)
{
    AdmissibilityResult res;
    auto fail = [&](std::string why) {
        res.admissible = false;
        res.reasons.push_back(std::move(why));
    };
    for (const auto& e : c.ends()) {
        const Int t = c.offset(e.orbit.name);
        const Int m = e.out_partition.total();
        const Int n = e.in_partition.total();
        const Partition want_out = orbit_partition(e.orbit, m, Direction::Out, t);
        const Partition want_in = orbit_partition(e.orbit, n, Direction::In, t);
        if (e.out_partition != want_out)
            fail("outgoing ends at " + e.orbit.name + " are {" + to_string(e.out_partition) + "}, expected {"
                 + to_string(want_out) + "}");
        if (e.in_partition != want_in)
            fail("incoming ends at " + e.orbit.name + " are {" + to_string(e.in_partition) + "}, expected {"
                 + to_string(want_in) + "}");
        if (e.trivial_count > 0) {
            if (!splits(e.orbit, m, e.trivial_count, Direction::Out, t))
                fail("trivial cylinders at " + e.orbit.name + ": p_out(" + std::to_string(m)
                     + "+k) does not split for some k <= " + std::to_string(e.trivial_count));
            if (!splits(e.orbit, n, e.trivial_count, Direction::In, t))
                fail("trivial cylinders at " + e.orbit.name + ": p_in(" + std::to_string(n)
                     + "+k) does not split for some k <= " + std::to_string(e.trivial_count));
        }
    }
    return res;
}

Int schwarz_index(Int rank, Int chi, Int c1, const std::vector<Int>& maslov_terms)
{
    Int v = rank * chi + 2 * c1;
    for (Int m : maslov_terms)
        v += m;
    return v;
}

Int mu_zero(const CandidateCurve& c)
{
    Int mu = 0;
    for (const auto& e : c.ends()) {
        const Int t = c.offset(e.orbit.name);
        for (Int q : e.out_partition)
            mu += cz_index(e.orbit, q, t);
        for (Int q : e.in_partition)
            mu -= cz_index(e.orbit, q, t);
    }
    return mu;
}

Int mu_total(const CandidateCurve& c)
{
    return cz_term(c.cls());
}

Int extremal_writhe(const CandidateCurve& c)
{
    Int w = 0;
    for (const auto& e : c.ends()) {
        const Int t = c.offset(e.orbit.name);
        w += extremal_outgoing_writhe(e.orbit.cls, e.out_partition, t);
        w -= extremal_incoming_writhe(e.orbit.cls, e.in_partition, t);
    }
    return w;
}

Int extremal_winding(const CandidateCurve& c)
{
    Int eta = 0;
    for (const auto& e : c.ends()) {
        const Int t = c.offset(e.orbit.name);
        eta += out_winding(e, t) - in_winding(e, t);
    }
    return eta;
}

Int effective_writhe(const CandidateCurve& c)
{
    return c.writhe_total ? *c.writhe_total : extremal_writhe(c);
}

Int cylinder_q_term(const CandidateCurve& c)
{
    if (c.q_cyl)
        return *c.q_cyl;
    Int q = 0;
    for (const auto& e : c.ends()) {
        if (e.trivial_count == 0)
            continue;
        const Int t = c.offset(e.orbit.name);
        q += 2 * e.trivial_count * (in_winding(e, t) - out_winding(e, t));
    }
    return q;
}

Int fredholm_dimension(const CandidateCurve& c)
{
    const auto& d = c.cls();
    return d.c1_rel + (d.q_self - cylinder_q_term(c)) + effective_writhe(c) + mu_zero(c);
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Consistent:
        return "consistent";
    case Verdict::ViolatesIndexInequality:
        return "violates_index_inequality";
    case Verdict::EqualityWithoutAdmissibility:
        return "equality_requires_admissible";
    }
    return "unknown";
}

IndexReport index_inequality_report(const CandidateCurve& c)
{
    IndexReport rep;
    rep.I = relative_index(c.cls());
    rep.fredholm = fredholm_dimension(c);
    rep.admissibility = check_admissible_curve(c);
    rep.writhe_assumed = !c.writhe_total.has_value();
    rep.q_cyl_assumed = c.has_trivial_cylinders() && !c.q_cyl.has_value();

    if (rep.fredholm > rep.I)
        rep.verdict = Verdict::ViolatesIndexInequality;
    else if (rep.fredholm == rep.I && !rep.admissibility.admissible)
        rep.verdict = Verdict::EqualityWithoutAdmissibility;
    else
        rep.verdict = Verdict::Consistent;

    if (rep.writhe_assumed)
        rep.diagnostics.push_back("writhe not supplied; every end taken at its winding bound, so equality "
                                  "statements are conditional");
    if (rep.q_cyl_assumed)
        rep.diagnostics.push_back("Q cross term with trivial cylinders not supplied; assumed "
                                  + std::to_string(cylinder_q_term(c)) + " from extremal windings");
    if (c.writhe_total) {
        rep.adjunction_residual = adjunction_residual(c);
        if (*rep.adjunction_residual != 0)
            rep.diagnostics.push_back("adjunction residual " + std::to_string(*rep.adjunction_residual)
                                      + " is nonzero; data is not geometric");
    }
    if (!chern_parity_consistent(c.cls()))
        rep.diagnostics.push_back("c1 + Q has the wrong parity for realizable data");

    // Writhe bound equality cases that can never be realized.
    if (rep.fredholm == rep.I) {
        for (const auto& e : c.ends()) {
            for (const Partition* p : {&e.in_partition, &e.out_partition}) {
                for (Int q : *p) {
                    const WritheBound wb = writhe_bound(e.orbit.cls, q, c.offset(e.orbit.name));
                    if (!wb.equality_possible)
                        rep.diagnostics.push_back("end of multiplicity " + std::to_string(q) + " at "
                                                  + e.orbit.name + " cannot attain the writhe bound ("
                                                  + wb.note + ")");
                }
            }
        }
    }
    return rep;
}

Int adjunction_residual(const CandidateCurve& c)
{
    if (!c.writhe_total)
        throw DomainError("adjunction residual needs the writhe w=");
    const auto& d = c.cls();
    return d.c1_rel - c.chi() - *c.writhe_total - (d.q_self - cylinder_q_term(c)) + 2 * c.delta();
}

EulerBound euler_bound(const CandidateCurve& c)
{
    if (c.has_trivial_cylinders())
        throw DomainError("the Euler characteristic bound applies to curves without trivial cylinders");
    const auto& d = c.cls();
    EulerBound b;
    b.bound = d.c1_rel - mu_total(c) + mu_zero(c) - d.q_self;
    b.satisfied = c.chi() >= b.bound;
    b.equality = c.chi() == b.bound;
    return b;
}

Int virtual_dimension(const CandidateCurve& c)
{
    return 2 * c.cls().c1_rel + mu_zero(c) - c.chi();
}

int gfl_parity(const CandidateCurve& c)
{
    return static_cast<int>(mod2(virtual_dimension(c)));
}

STranslation s_translation_check(const CandidateCurve& c, Int eta_total)
{
    if (!c.writhe_total)
        throw DomainError("s-translation check needs the writhe w=");
    if (c.has_trivial_cylinders())
        throw DomainError("s-translation check applies to curves without trivial cylinders");
    STranslation s;
    s.slack = c.cls().q_self + *c.writhe_total + eta_total - 2 * c.delta();
    s.satisfied = s.slack >= 0;
    return s;
}

CylinderReport trivial_cylinder_correction(const CandidateCurve& c_prime,
                                           const std::vector<std::pair<std::string, Int>>& cylinders,
                                           Int intersections, std::optional<Int> q_cross)
{
    if (c_prime.has_trivial_cylinders())
        throw DomainError("C' must not contain trivial cylinders");
    if (intersections < 0)
        throw DomainError("intersection count must be nonnegative");

    CylinderReport rep;
    rep.intersections = intersections;
    rep.I_prime = relative_index(c_prime.cls());

    std::vector<EndData> ends = c_prime.ends();
    std::vector<OrbitTerm> extra;
    std::set<std::string> seen;
    Int winding_term = 0;
    rep.conditions_hold = true;
    for (const auto& [name, r] : cylinders) {
        if (r < 1)
            throw DomainError("cylinder count at " + name + " must be positive");
        if (!seen.insert(name).second)
            throw DomainError("cylinder orbit " + name + " listed twice");
        auto it = std::find_if(ends.begin(), ends.end(), [&](const EndData& e) { return e.orbit.name == name; });
        if (it == ends.end())
            throw DomainError("cylinder orbit " + name + " is absent from both sides of C'");
        const Int t = c_prime.offset(name);
        it->trivial_count = r;
        extra.push_back({it->orbit, r});
        winding_term += r * (in_winding(*it, t) - out_winding(*it, t));
        for (auto& g : goals_at(*it, r, t))
            rep.goals.push_back(std::move(g));
        if (!trivial_conditions_hold(it->orbit, it->out_partition.total(), it->in_partition.total(), r, t))
            rep.conditions_hold = false;
    }

    rep.q_assumed = !q_cross.has_value();
    rep.q_cross = q_cross ? *q_cross : 2 * intersections + 2 * winding_term;

    const OrbitSet t_set(std::move(extra));
    const auto& d = c_prime.cls();
    const RelativeClassData combined(d.alpha + t_set, d.beta + t_set, d.c1_rel, d.q_self + rep.q_cross, d.triv);
    rep.I_combined = relative_index(combined);
    rep.slack = rep.I_combined - 2 * intersections - rep.I_prime;
    rep.satisfied = rep.slack >= 0;
    rep.equality_everywhere = std::all_of(rep.goals.begin(), rep.goals.end(),
                                          [](const CylinderGoal& g) { return g.lhs == g.rhs; });
    rep.cross_check_ok = !rep.equality_everywhere || rep.conditions_hold;
    return rep;
}

MccReport multiply_covered_bound(const std::vector<MccComponent>& components, const CrossTerms& cross,
                                 const RelativeClassData& combined)
{
    if (components.empty())
        throw DomainError("multiply covered bound needs at least one component");

    OrbitSet alpha;
    OrbitSet beta;
    Int c1 = 0;
    Int q = 0;
    for (std::size_t p = 0; p < components.size(); ++p) {
        const auto& comp = components[p];
        if (comp.d < 1)
            throw DomainError("cover degree of component " + std::to_string(p) + " must be positive");
        const auto& d = comp.curve.cls();
        alpha = alpha + scaled(d.alpha, comp.d);
        beta = beta + scaled(d.beta, comp.d);
        c1 += comp.d * d.c1_rel;
        q += comp.d * comp.d * d.q_self;
        for (const auto* s : {&d.alpha, &d.beta})
            for (const auto& t : s->terms())
                if (offset_of(d.triv, t.orbit.name) != offset_of(combined.triv, t.orbit.name))
                    throw DomainError("component " + std::to_string(p) + " uses a different trivialization at "
                                      + t.orbit.name);
    }
    for (const auto& [key, value] : cross) {
        const auto [p, pp] = key;
        if (p >= pp || pp >= components.size())
            throw DomainError("cross term (" + std::to_string(p) + "," + std::to_string(pp) + ") is out of range");
        q += 2 * components[p].d * components[pp].d * value;
    }
    if (!(alpha == combined.alpha) || !(beta == combined.beta))
        throw DomainError("combined orbit sets are not the weighted sums of the components");
    if (c1 != combined.c1_rel)
        throw DomainError("combined c1 is " + std::to_string(combined.c1_rel) + " but the components give "
                          + std::to_string(c1));
    if (q != combined.q_self)
        throw DomainError("combined Q is " + std::to_string(combined.q_self)
                          + " but the bilinear expansion gives " + std::to_string(q));

    MccReport rep;
    for (const auto& comp : components)
        rep.lhs += comp.d * (comp.dim ? *comp.dim : fredholm_dimension(comp.curve));
    rep.rhs = relative_index(combined);
    rep.slack = rep.rhs - rep.lhs;
    rep.satisfied = rep.slack >= 0;

    // Per orbit and side, the workhorse inequality on the repeated tuple.
    std::map<std::string, std::pair<MccOrbitSlack, MccOrbitSlack>> by_orbit;
    for (const auto& comp : components) {
        for (const auto& e : comp.curve.ends()) {
            auto& [out, in] = by_orbit.try_emplace(e.orbit.name, MccOrbitSlack{e.orbit.name, Direction::Out, {}, {}, 0},
                                                   MccOrbitSlack{e.orbit.name, Direction::In, {}, {}, 0})
                                  .first->second;
            for (Int part : e.out_partition) {
                out.q.push_back(part);
                out.d.push_back(comp.d);
            }
            for (Int part : e.in_partition) {
                in.q.push_back(part);
                in.d.push_back(comp.d);
            }
        }
    }
    for (auto& [name, sides] : by_orbit) {
        const PeriodicOrbit* orbit = combined.alpha.find(name);
        if (orbit == nullptr)
            orbit = combined.beta.find(name);
        const Int t = offset_of(combined.triv, name);
        auto& [out, in] = sides;
        if (!out.q.empty()) {
            out.slack = mcc_slack(reverse_orbit(orbit->cls), out.q, out.d, -t);
            rep.per_orbit.push_back(out);
        }
        if (!in.q.empty()) {
            in.slack = mcc_slack(orbit->cls, in.q, in.d, t);
            rep.per_orbit.push_back(in);
        }
    }
    return rep;
}

} // namespace pfh
