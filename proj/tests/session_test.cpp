#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pfh/commands.hpp"

using namespace pfh;

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(PFH_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
std::string captured(int expected_code, F&& run)
{
    std::ostringstream out;
    EXPECT_EQ(run(out), expected_code);
    return out.str();
}

} // namespace

TEST(Session, MinimalFile)
{
    const SessionFile f = parse_session("orbit e period=1 elliptic theta=2/5+\n");
    ASSERT_EQ(f.orbits.size(), 1u);
    EXPECT_EQ(f.orbit("e").name, "e");
    EXPECT_EQ(f.guards().at("e"), 1);
}

TEST(Session, CommentsAndWhitespace)
{
    const SessionFile f = parse_session("# header\n\n  orbit   h  period = 3 hyperbolic rot=-1   # trailing\n"
                                        "orbitset s ( h , 1 )\n");
    EXPECT_EQ(f.orbit("h").period, 3);
    EXPECT_EQ(f.orbit_set("s").degree(), 3);
}

TEST(Session, UndeclaredReferencesListedTogether)
{
    try {
        parse_session("orbit e period=1 elliptic theta=1/3-\n"
                      "orbitset a (e,1) (x,2)\n"
                      "class c from=a to=b c1=0 Q=0\n");
        FAIL() << "expected ReferenceError";
    } catch (const ReferenceError& err) {
        ASSERT_EQ(err.problems().size(), 2u);
        EXPECT_NE(err.problems()[0].find("line 2"), std::string::npos);
        EXPECT_NE(err.problems()[0].find("'x'"), std::string::npos);
        EXPECT_NE(err.problems()[1].find("line 3"), std::string::npos);
        EXPECT_NE(err.problems()[1].find("'b'"), std::string::npos);
    }
}

TEST(Session, ParseErrorsArePositioned)
{
    try {
        parse_session("orbit e period=1 elliptic theta=2/5+\norbit f period=x hyperbolic rot=0\n");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.line(), 2);
        EXPECT_EQ(err.column(), 16);
        EXPECT_EQ(err.expected(), "integer value for period");
    }
    try {
        parse_session("orbit e period=1 elliptic theta=2/5\n");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.line(), 1);
        EXPECT_EQ(err.column(), 33);
    }
    try {
        parse_session("orbit e period=1 parabolic\n");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.expected(), "elliptic or hyperbolic");
    }
    EXPECT_THROW(parse_session("frobnicate x\n"), ParseError);
    EXPECT_THROW(parse_session("orbit h period=1 hyperbolic rot=0 extra\n"), ParseError);
    EXPECT_THROW(parse_session("orbit h period=1 hyperbolic rot=0\norbitset s (h,0)\n"), ParseError);
}

TEST(Session, DuplicateNamesRejected)
{
    EXPECT_THROW(parse_session("orbit e period=1 hyperbolic rot=0\norbit e period=1 hyperbolic rot=1\n"),
                 ParseError);
    // Different kinds have separate namespaces.
    EXPECT_NO_THROW(parse_session("orbit e period=1 hyperbolic rot=0\norbitset e (e,1)\n"));
}

TEST(Session, InconsistentDataReportedAtLoad)
{
    try {
        parse_session("orbit h period=2 hyperbolic rot=0\norbit g period=1 hyperbolic rot=0\n"
                      "orbitset a (h,1)\norbitset b (g,1)\nclass c from=a to=b c1=0 Q=0\n");
        FAIL();
    } catch (const ReferenceError& err) {
        EXPECT_NE(err.problems().front().find("degree"), std::string::npos);
    }
}

TEST(Session, GuardsFollowLargestMultiplicity)
{
    const SessionFile f = parse_session(fixture("basic.pfh"));
    EXPECT_EQ(f.guards().at("e"), 10);
    EXPECT_EQ(f.guards().at("f"), 10);
    EXPECT_EQ(f.guards().count("hp"), 0u);
    EXPECT_EQ(std::get<Elliptic>(f.orbit("e").cls).angle.guard(), 10);
}

TEST(Session, CanonicalPrintIsFixpoint)
{
    for (const char* name : {"basic.pfh", "cylinders.pfh"}) {
        const SessionFile f = parse_session(fixture(name));
        const std::string printed = print_session(f);
        const SessionFile g = parse_session(printed);
        EXPECT_EQ(f, g) << name;
        EXPECT_EQ(print_session(g), printed) << name;
    }
}

TEST(Commands, CheckTrivialCylinder)
{
    const SessionFile f = parse_session(fixture("basic.pfh"));
    const std::string text = captured(kExitOk, [&](std::ostream& o) { return run_check(f, "trivial_cyl", false, o); });
    EXPECT_EQ(text.substr(0, text.find('\n')), "I=0 fredholm=0 verdict=consistent");
    const std::string machine = captured(kExitOk, [&](std::ostream& o) { return run_check(f, "trivial_cyl", true, o); });
    EXPECT_EQ(machine.substr(0, machine.find("curve=")), "I=0\nfredholm=0\nverdict=consistent\n");
}

TEST(Commands, CheckViolation)
{
    const SessionFile f = parse_session(fixture("basic.pfh"));
    const std::string text = captured(kExitViolation, [&](std::ostream& o) { return run_check(f, "too_big", true, o); });
    EXPECT_NE(text.find("verdict=violates_index_inequality"), std::string::npos);
    EXPECT_NE(text.find("adjunction_residual="), std::string::npos);
}

TEST(Commands, CheckSingleEndGap)
{
    const SessionFile f = parse_session(fixture("basic.pfh"));
    const std::string text = captured(kExitOk, [&](std::ostream& o) { return run_check(f, "single", true, o); });
    EXPECT_NE(text.find("I=8\nfredholm=4\n"), std::string::npos);
    EXPECT_NE(text.find("reason.0=incoming ends at e are {5}, expected {2,2,1}"), std::string::npos);
}

TEST(Commands, IndexEulerMcc)
{
    const SessionFile f = parse_session(fixture("basic.pfh"));
    std::string t = captured(kExitOk, [&](std::ostream& o) { return run_index(f, "up", true, o); });
    EXPECT_NE(t.find("I=1\n"), std::string::npos);
    EXPECT_NE(t.find("parity=ok\n"), std::string::npos);
    EXPECT_NE(t.find("guard.e=10\n"), std::string::npos);

    t = captured(kExitOk, [&](std::ostream& o) { return run_euler(f, "e_to_hp", true, o); });
    EXPECT_NE(t.find("bound=0\n"), std::string::npos);
    EXPECT_NE(t.find("equality=yes\n"), std::string::npos);

    t = captured(kExitOk, [&](std::ostream& o) { return run_mcc(f, "double_even", true, o); });
    EXPECT_NE(t.find("orbit.hn.in=q=2,2 d=2,2 slack=0\n"), std::string::npos);
    captured(kExitViolation, [&](std::ostream& o) { return run_mcc(f, "double_even_low", true, o); });
    EXPECT_THROW(run_mcc(f, "nope", true, std::cout), DomainError);
}

TEST(Commands, MachineOutputIsDeterministic)
{
    const SessionFile f = parse_session(fixture("basic.pfh"));
    const auto a = captured(kExitOk, [&](std::ostream& o) { return run_check(f, "admissible", true, o); });
    const auto b = captured(kExitOk, [&](std::ostream& o) { return run_check(parse_session(fixture("basic.pfh")), "admissible", true, o); });
    EXPECT_EQ(a, b);
}

TEST(Commands, Partitions)
{
    const std::string t = captured(kExitOk, [](std::ostream& o) { return run_partitions("2/5+", 5, true, o); });
    EXPECT_EQ(t, "theta=2/5+\nguard=5\nm=5\np_in=2,2,1\np_out=5\n");
    EXPECT_THROW(run_partitions("2/5", 5, true, std::cout), std::invalid_argument);
}

TEST(Table, Cells)
{
    const auto rows = partition_table(8);
    ASSERT_EQ(rows.size(), 22u);
    auto cell = [&](const std::string& label, Int m) {
        for (const auto& r : rows)
            if (r.front() == label)
                return r[static_cast<std::size_t>(m - 1)];
        return std::string("missing");
    };
    EXPECT_EQ(cell("1/4,2/7", 7), "7");
    EXPECT_EQ(cell("5/8,2/3", 8), "3,3,1,1");
    EXPECT_EQ(cell("7/8,1", 8), "1,…,1");
    EXPECT_EQ(cell("7/8,1", 5), "1,…,1");
    EXPECT_EQ(cell("7/8,1", 4), "1,1,1,1");
    EXPECT_THROW(partition_table(13), std::invalid_argument);
    EXPECT_THROW(partition_table(1), std::invalid_argument);
}

TEST(Table, AlignedText)
{
    const std::string t = emit_partition_table(3);
    EXPECT_EQ(t, "theta    m=2  m=3\n"
                 "0,1/3    2    3\n"
                 "1/3,1/2  2    2,1\n"
                 "1/2,2/3  1,1  3\n"
                 "2/3,1    1,1  1,1,1\n");
}
