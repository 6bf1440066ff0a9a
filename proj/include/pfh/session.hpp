#pragma once

// Line-oriented session files:
//
//   orbit e period=1 elliptic theta=2/5+
//   orbit h period=2 hyperbolic rot=1
//   orbitset a (e,3) (h,1)
//   class A from=a to=b c1=0 Q=2 triv e=1
//   curve u class=A chi=1 delta=0 w=-2 end e out=2,1 in=- trivial=0
//   mcc m combined=A2 part u d=2 dim=3 cross 0,1=4
//
// '#' starts a comment. Elliptic guards are not written; they are the
// largest multiplicity with which the orbit occurs in any orbit set.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfh/flowline.hpp"

namespace pfh {

class ParseError : public Error {
public:
    ParseError(int line, int column, std::string expected, std::string found);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

/// Unresolved names and invalid declarations, all of them at once.
class ReferenceError : public Error {
public:
    explicit ReferenceError(std::vector<std::string> problems);

    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct OrbitDecl {
    int line = 0;
    PeriodicOrbit orbit{"", 1, Hyperbolic{0}}; ///< elliptic angles carry guard 1 until resolved
    friend bool operator==(const OrbitDecl& a, const OrbitDecl& b) { return a.orbit == b.orbit; }
};

struct OrbitSetDecl {
    int line = 0;
    std::string name;
    std::vector<std::pair<std::string, Int>> terms;
    friend bool operator==(const OrbitSetDecl& a, const OrbitSetDecl& b)
    {
        return a.name == b.name && a.terms == b.terms;
    }
};

struct ClassDecl {
    int line = 0;
    std::string name;
    std::string from;
    std::string to;
    Int c1 = 0;
    Int Q = 0;
    TrivOffset triv;
    friend bool operator==(const ClassDecl& a, const ClassDecl& b)
    {
        return a.name == b.name && a.from == b.from && a.to == b.to && a.c1 == b.c1 && a.Q == b.Q
            && a.triv == b.triv;
    }
};

struct EndDecl {
    std::string orbit;
    Partition out;
    Partition in;
    Int trivial = 0;
    friend bool operator==(const EndDecl&, const EndDecl&) = default;
};

struct CurveDecl {
    int line = 0;
    std::string name;
    std::string cls;
    Int chi = 0;
    Int delta = 0;
    std::optional<Int> w;
    std::optional<Int> eta;
    std::optional<Int> qcyl;
    std::vector<EndDecl> ends;
    friend bool operator==(const CurveDecl& a, const CurveDecl& b)
    {
        return a.name == b.name && a.cls == b.cls && a.chi == b.chi && a.delta == b.delta && a.w == b.w
            && a.eta == b.eta && a.qcyl == b.qcyl && a.ends == b.ends;
    }
};

struct MccPartDecl {
    std::string curve;
    Int d = 1;
    std::optional<Int> dim;
    friend bool operator==(const MccPartDecl&, const MccPartDecl&) = default;
};

struct MccDecl {
    int line = 0;
    std::string name;
    std::string combined;
    std::vector<MccPartDecl> parts;
    CrossTerms cross;
    friend bool operator==(const MccDecl& a, const MccDecl& b)
    {
        return a.name == b.name && a.combined == b.combined && a.parts == b.parts && a.cross == b.cross;
    }
};

struct MccInput {
    std::vector<MccComponent> components;
    CrossTerms cross;
    RelativeClassData combined;
};

class SessionFile {
public:
    std::vector<OrbitDecl> orbits;
    std::vector<OrbitSetDecl> orbit_sets;
    std::vector<ClassDecl> classes;
    std::vector<CurveDecl> curves;
    std::vector<MccDecl> mccs;

    /// Largest multiplicity per elliptic orbit name.
    std::map<std::string, Int> guards() const;

    /// The resolvers throw DomainError for an unknown name.
    PeriodicOrbit orbit(const std::string& name) const;
    OrbitSet orbit_set(const std::string& name) const;
    RelativeClassData class_data(const std::string& name) const;
    CandidateCurve curve(const std::string& name) const;
    MccInput mcc(const std::string& name) const;

    friend bool operator==(const SessionFile&, const SessionFile&) = default;
};

/// Throws ParseError on syntax errors and ReferenceError when names do not
/// resolve or a declaration is inconsistent.
SessionFile parse_session(std::string_view text);

SessionFile load_session(const std::string& path);

/// Canonical text; parse_session(print_session(f)) == f.
std::string print_session(const SessionFile& f);

} // namespace pfh
