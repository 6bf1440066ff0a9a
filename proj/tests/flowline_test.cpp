#include <gtest/gtest.h>

#include "pfh/braid.hpp"
#include "pfh/flowline.hpp"
#include "pfh/oracle.hpp"
#include "pfh/verify.hpp"
#include "support.hpp"

using namespace pfh;
using namespace pfh::test;

namespace {

const PeriodicOrbit e = elliptic("e", two_fifths(12));
const PeriodicOrbit f = elliptic("f", angle(1, 8, Side::Above, 12));
const PeriodicOrbit g = elliptic("g", angle(2, 3, Side::Below, 12));
const PeriodicOrbit hp = hyperbolic("hp", 0);
const PeriodicOrbit hn = hyperbolic("hn", 1);

OrbitSet set(std::vector<OrbitTerm> t) { return OrbitSet(std::move(t)); }

CandidateCurve trivial_cylinder()
{
    return CandidateCurve({{e, {}, {}, 1}}, 0, 0, {set({{e, 1}}), set({{e, 1}}), 0, 0});
}

CandidateCurve cylinder_e_to_hp()
{
    return CandidateCurve({{e, Partition{1}, {}, 0}, {hp, {}, Partition{1}, 0}}, 0, 0,
                          {set({{e, 1}}), set({{hp, 1}}), 0, 0});
}

/// f^n out with admissible ends, e^n in with the given partition.
CandidateCurve into_e(const Partition& in, Int c1 = 0, Int q = 0)
{
    const Int n = in.total();
    return CandidateCurve({{f, p_out(std::get<Elliptic>(f.cls).angle, n), {}, 0}, {e, {}, in, 0}}, 0, 0,
                          {set({{f, n}}), set({{e, n}}), c1, q});
}

/// The same ends with Q at the s-translation bound, so #(C cap C') = 0.
CandidateCurve on_bound(const CandidateCurve& c, Int c1)
{
    const Int q = -extremal_writhe(c) - extremal_winding(c);
    return CandidateCurve(c.ends(), c.chi(), c.delta(), {c.cls().alpha, c.cls().beta, c1, q});
}

CandidateCurve pants(Int delta)
{
    CandidateCurve c({{e, Partition{2}, {}, 0}, {f, {}, Partition{1}, 0}, {g, {}, Partition{1}, 0}}, -1, delta,
                     {set({{e, 2}}), set({{f, 1}, {g, 1}}), 1, 0});
    c.writhe_total = 2;
    return c;
}

} // namespace

TEST(CandidateCurve, ValidatesEnds)
{
    const RelativeClassData d(set({{e, 2}}), set({{f, 2}}), 0, 0);
    EXPECT_THROW(CandidateCurve({{e, Partition{1}, {}, 0}, {f, {}, Partition{2}, 0}}, 0, 0, d), DomainError);
    EXPECT_THROW(CandidateCurve({{e, Partition{2}, {}, 0}}, 0, 0, d), DomainError);
    EXPECT_THROW(CandidateCurve({{e, Partition{2}, {}, 0}, {f, {}, Partition{2}, 0}}, 0, -1, d), DomainError);
    EXPECT_NO_THROW(CandidateCurve({{e, Partition{2}, {}, 0}, {f, {}, Partition{2}, 0}}, 0, 0, d));
}

TEST(Admissible, Examples)
{
    EXPECT_TRUE(check_admissible_curve(into_e(Partition{2, 2, 1})).admissible);
    const auto bad = check_admissible_curve(into_e(Partition{5}));
    EXPECT_FALSE(bad.admissible);
    ASSERT_EQ(bad.reasons.size(), 1u);
    EXPECT_NE(bad.reasons.front().find("expected {2,2,1}"), std::string::npos);

    const CandidateCurve c({{hn, {}, Partition{2, 1}, 1}, {f, Partition{1, 1, 1}, {}, 0}}, 0, 0,
                           {set({{hn, 1}, {f, 3}}), set({{hn, 4}}), 0, 0});
    EXPECT_FALSE(check_admissible_curve(c).admissible);
    EXPECT_FALSE(trivial_conditions_hold(hn, 0, 3, 1, 0));
    EXPECT_TRUE(trivial_conditions_hold(hn, 0, 2, 1, 0));
    EXPECT_TRUE(trivial_conditions_hold(hp, 3, 2, 4, 0));
}

TEST(Schwarz, Examples)
{
    EXPECT_EQ(schwarz_index(1, 0, 0, {1, -1}), 0);
    EXPECT_EQ(schwarz_index(1, -1, 1, {1, -1, -1}), 0);
    EXPECT_EQ(schwarz_index(2, 2, 0, {}), 4);
}

TEST(Fredholm, TrivialCylinder)
{
    const CandidateCurve c = trivial_cylinder();
    EXPECT_EQ(fredholm_dimension(c), 0);
    const IndexReport r = index_inequality_report(c);
    EXPECT_EQ(r.I, 0);
    EXPECT_EQ(r.fredholm, 0);
    EXPECT_EQ(r.verdict, Verdict::Consistent);
    EXPECT_TRUE(r.admissibility.admissible);
    EXPECT_EQ(virtual_dimension(c), 0);
}

TEST(Fredholm, EllipticToPositiveHyperbolic)
{
    const CandidateCurve c = cylinder_e_to_hp();
    EXPECT_EQ(extremal_writhe(c), 0);
    EXPECT_EQ(mu_zero(c), 1);
    EXPECT_EQ(fredholm_dimension(c), 1);
    const IndexReport r = index_inequality_report(c);
    EXPECT_EQ(r.I, 1);
    EXPECT_EQ(r.verdict, Verdict::Consistent);
    EXPECT_TRUE(r.writhe_assumed);
    EXPECT_EQ(virtual_dimension(c), 1);
    EXPECT_EQ(gfl_parity(c), 1);
}

TEST(Fredholm, SharpOnAdmissibleEnds)
{
    const CandidateCurve c = into_e(Partition{2, 2, 1}, 2, 4);
    const IndexReport r = index_inequality_report(c);
    EXPECT_TRUE(r.admissibility.admissible);
    EXPECT_EQ(r.fredholm, r.I);
    EXPECT_EQ(r.verdict, Verdict::Consistent);
}

TEST(Fredholm, GapIsMThetaAtSingleIncomingEnd)
{
    const CandidateCurve c = into_e(Partition{5});
    const IndexReport r = index_inequality_report(c);
    EXPECT_EQ(r.I - r.fredholm, 4);
    EXPECT_EQ(r.I - r.fredholm, M_theta(std::get<Elliptic>(e.cls).angle, Partition{5}));
    EXPECT_EQ(r.I - r.fredholm, workhorse_slack(e.cls, {5}));
    EXPECT_EQ(r.verdict, Verdict::Consistent);
}

TEST(Fredholm, SuppliedWritheOverridesExtremal)
{
    CandidateCurve c = into_e(Partition{2, 2, 1});
    const Int base = fredholm_dimension(c);
    c.writhe_total = extremal_writhe(c) + 3;
    EXPECT_EQ(fredholm_dimension(c), base + 3);
    const IndexReport r = index_inequality_report(c);
    EXPECT_EQ(r.verdict, Verdict::ViolatesIndexInequality);
    EXPECT_FALSE(r.writhe_assumed);
}

TEST(Fredholm, PositiveHyperbolicDoubleEndFlagged)
{
    const CandidateCurve c({{f, p_out(std::get<Elliptic>(f.cls).angle, 2), {}, 0}, {hp, {}, Partition{2}, 0}}, 0,
                           0, {set({{f, 2}}), set({{hp, 2}}), 0, 0});
    const IndexReport r = index_inequality_report(c);
    EXPECT_EQ(r.fredholm, r.I);
    EXPECT_EQ(r.verdict, Verdict::EqualityWithoutAdmissibility);
    EXPECT_EQ(to_string(r.verdict), "equality_requires_admissible");
    const bool flagged = std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                                     [](const std::string& d) { return d.find("q must be 1") != std::string::npos; });
    EXPECT_TRUE(flagged);
}

TEST(Adjunction, Examples)
{
    EXPECT_THROW(adjunction_residual(trivial_cylinder()), DomainError);
    CandidateCurve t = trivial_cylinder();
    t.writhe_total = 0;
    EXPECT_EQ(adjunction_residual(t), 0);
    EXPECT_EQ(adjunction_residual(pants(0)), 0);
    EXPECT_EQ(adjunction_residual(pants(1)), 2);
    const IndexReport r = index_inequality_report(pants(1));
    ASSERT_TRUE(r.adjunction_residual.has_value());
    EXPECT_EQ(*r.adjunction_residual, 2);
}

TEST(Euler, Examples)
{
    const EulerBound b = euler_bound(cylinder_e_to_hp());
    EXPECT_EQ(b.bound, 0);
    EXPECT_TRUE(b.equality);
    EXPECT_TRUE(b.satisfied);

    const CandidateCurve id({{e, Partition{1}, Partition{1}, 0}}, 0, 0, {set({{e, 1}}), set({{e, 1}}), 0, 0});
    EXPECT_EQ(euler_bound(id).bound, 0);

    const CandidateCurve c = into_e(Partition{2, 2, 1});
    const auto& d = c.cls();
    EXPECT_EQ(euler_bound(c).bound, d.c1_rel - cz_term(d) + mu_zero(c) - d.q_self);
    EXPECT_THROW(euler_bound(trivial_cylinder()), DomainError);
}

TEST(VirtualDimension, ParityMatchesIndex)
{
    CandidateCurve c = pants(0);
    EXPECT_EQ(virtual_dimension(c), 2 * 1 + mu_zero(c) + 1);
    EXPECT_EQ(gfl_parity(c), virtual_dimension(c) % 2);

    // A cylinder with adjunction-consistent c1 and Q: chi = c1 - w - Q.
    const RelativeClassData d(set({{e, 1}}), set({{f, 1}}), 1, 1);
    CandidateCurve geo({{e, Partition{1}, {}, 0}, {f, {}, Partition{1}, 0}}, 0, 0, d);
    geo.writhe_total = extremal_writhe(geo);
    ASSERT_TRUE(chern_parity_consistent(d));
    EXPECT_EQ(adjunction_residual(geo), 0);
    EXPECT_EQ(gfl_parity(geo), ((relative_index(d) % 2) + 2) % 2);
    EXPECT_EQ(gfl_parity(cylinder_e_to_hp()), 1);
}

TEST(STranslation, Examples)
{
    CandidateCurve c = cylinder_e_to_hp();
    c.writhe_total = 0;
    EXPECT_EQ(s_translation_check(c, 0).slack, 0);

    CandidateCurve a = into_e(Partition{2, 2, 1});
    a.writhe_total = 10;
    const STranslation s = s_translation_check(a, 3);
    EXPECT_EQ(s.slack, 13);
    EXPECT_TRUE(s.satisfied);

    CandidateCurve b = into_e(Partition{2, 2, 1}, 0, -8);
    b.writhe_total = 4;
    const STranslation v = s_translation_check(b, 3);
    EXPECT_EQ(v.slack, -1);
    EXPECT_FALSE(v.satisfied);
}

TEST(TrivialCylinders, EllipticGoalsMatchOracle)
{
    const CandidateCurve cp = into_e(Partition{2});
    const CylinderReport r = trivial_cylinder_correction(cp, {{"e", 1}}, 0);
    ASSERT_EQ(r.goals.size(), 1u);
    const auto [lhs, rhs] = oracle::direct_cylinder_goal(to_oracle(e.cls), {}, {2}, 1);
    EXPECT_EQ(r.goals[0].lhs, lhs);
    EXPECT_EQ(r.goals[0].rhs, rhs);
    const auto chain = oracle::direct_floors_chain(std::get<Elliptic>(e.cls).angle, 0, 2, 1);
    EXPECT_TRUE(chain.holds());
    EXPECT_TRUE(r.satisfied);
    EXPECT_TRUE(r.cross_check_ok);
    EXPECT_TRUE(r.q_assumed);
}

TEST(TrivialCylinders, PositiveHyperbolicAlwaysEqual)
{
    const CandidateCurve cp({{f, Partition{1, 1}, {}, 0}, {hp, Partition{1}, Partition{1, 1, 1}, 0}}, 0, 0,
                            {set({{f, 2}, {hp, 1}}), set({{hp, 3}}), 0, 0});
    const CylinderReport r = trivial_cylinder_correction(cp, {{"hp", 2}}, 0);
    EXPECT_TRUE(r.conditions_hold);
    EXPECT_TRUE(r.equality_everywhere);
    EXPECT_TRUE(r.cross_check_ok);
}

TEST(TrivialCylinders, OddNegativeHyperbolicIsStrict)
{
    const CandidateCurve cp({{hn, Partition{1}, {}, 0}, {f, {}, Partition{1}, 0}}, 0, 0,
                            {set({{hn, 1}}), set({{f, 1}}), 0, 0});
    const CylinderReport r = trivial_cylinder_correction(cp, {{"hn", 1}}, 0);
    EXPECT_FALSE(r.conditions_hold);
    EXPECT_FALSE(r.equality_everywhere);
    EXPECT_TRUE(r.cross_check_ok);
}

TEST(TrivialCylinders, Rejections)
{
    EXPECT_THROW(trivial_cylinder_correction(trivial_cylinder(), {{"e", 1}}, 0), DomainError);
    EXPECT_THROW(trivial_cylinder_correction(into_e(Partition{2}), {{"hp", 1}}, 0), DomainError);
    EXPECT_THROW(trivial_cylinder_correction(into_e(Partition{2}), {{"e", 0}}, 0), DomainError);
    EXPECT_THROW(trivial_cylinder_correction(into_e(Partition{2}), {{"e", 1}}, -1), DomainError);
}

TEST(MultiplyCovered, SingleComponentReducesToReport)
{
    const CandidateCurve c = into_e(Partition{5}, 1, 2);
    const MccReport m = multiply_covered_bound({{c, 1, std::nullopt}}, {}, c.cls());
    const IndexReport r = index_inequality_report(c);
    EXPECT_EQ(m.lhs, r.fredholm);
    EXPECT_EQ(m.rhs, r.I);
    EXPECT_EQ(m.slack, r.I - r.fredholm);
}

TEST(MultiplyCovered, NegativeHyperbolicEvenTupleIsSharp)
{
    const CandidateCurve c = on_bound(
        CandidateCurve({{f, p_out(std::get<Elliptic>(f.cls).angle, 4), {}, 0}, {hn, {}, Partition{2, 2}, 0}}, 0, 0,
                       {set({{f, 4}}), set({{hn, 4}}), 0, 0}),
        1);
    const RelativeClassData combined(set({{f, 8}}), set({{hn, 8}}), 2, 4 * c.cls().q_self);
    const MccReport m = multiply_covered_bound({{c, 2, std::nullopt}}, {}, combined);
    bool seen = false;
    for (const auto& s : m.per_orbit) {
        if (s.orbit == "hn") {
            EXPECT_EQ(s.side, Direction::In);
            EXPECT_EQ(s.slack, 0);
            EXPECT_EQ(s.slack, workhorse_slack(hn.cls, {2, 2, 2, 2}));
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
    EXPECT_TRUE(m.satisfied);
}

TEST(MultiplyCovered, EllipticFiveIsStrict)
{
    const CandidateCurve c = on_bound(into_e(Partition{5}), 0);
    const RelativeClassData combined(set({{f, 10}}), set({{e, 10}}), 0, 4 * c.cls().q_self);
    const MccReport m = multiply_covered_bound({{c, 2, std::nullopt}}, {}, combined);
    for (const auto& s : m.per_orbit) {
        if (s.orbit == "e") {
            EXPECT_EQ(s.slack, oracle::direct_mcc5_slack(to_oracle(e.cls), {5}, {2}));
        }
    }
    EXPECT_GT(m.slack, 0);
}

TEST(MultiplyCovered, RejectsInconsistentCombination)
{
    const CandidateCurve c = into_e(Partition{5});
    EXPECT_THROW(multiply_covered_bound({{c, 2, std::nullopt}}, {}, c.cls()), DomainError);
    const RelativeClassData wrong_q(set({{f, 10}}), set({{e, 10}}), 0, 1);
    EXPECT_THROW(multiply_covered_bound({{c, 2, std::nullopt}}, {}, wrong_q), DomainError);
    EXPECT_THROW(multiply_covered_bound({}, {}, c.cls()), DomainError);
}

TEST(MultiplyCovered, CrossTermsAreBilinear)
{
    const CandidateCurve a = into_e(Partition{2, 1});
    const CandidateCurve b = cylinder_e_to_hp();
    const RelativeClassData combined(set({{f, 3}, {e, 2}}), set({{e, 3}, {hp, 2}}), 0, 2 * 1 * 2 * 5);
    const MccReport m = multiply_covered_bound({{a, 1, std::nullopt}, {b, 2, 7}}, {{{0, 1}, 5}}, combined);
    EXPECT_EQ(m.lhs, fredholm_dimension(a) + 14);
    EXPECT_EQ(m.rhs, relative_index(combined));
}
