#include "pfh/session.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pfh {

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " + expected
            + (found.empty() ? ", found end of line" : ", found '" + found + "'"))
    , line_(line)
    , column_(column)
    , expected_(std::move(expected))
{
}

namespace {

std::string join_lines(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& p : v)
        s += (s.empty() ? "" : "\n") + p;
    return s;
}

} // namespace

ReferenceError::ReferenceError(std::vector<std::string> problems)
    : Error(join_lines(problems))
    , problems_(std::move(problems))
{
}

namespace {

bool is_punct(char c) { return c == '(' || c == ')' || c == ',' || c == '='; }

struct Token {
    std::string text;
    int column = 0;
    bool punct = false;
};

std::vector<Token> lex(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (is_punct(c)) {
            out.push_back({std::string(1, c), static_cast<int>(i) + 1, true});
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_punct(line[i]) && line[i] != '#' && line[i] != ' ' && line[i] != '\t'
               && line[i] != '\r')
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1, false});
    }
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line, int eol)
        : toks_(std::move(tokens))
        , line_(line)
        , eol_(eol)
    {
    }

    bool done() const { return pos_ == toks_.size(); }

    const Token& word(const std::string& expected)
    {
        if (done() || toks_[pos_].punct)
            fail(expected);
        return toks_[pos_++];
    }

    void punct(char c)
    {
        if (done() || toks_[pos_].text != std::string(1, c))
            fail(std::string("'") + c + "'");
        ++pos_;
    }

    void keyword(const std::string& kw)
    {
        if (done() || toks_[pos_].punct || toks_[pos_].text != kw)
            fail("'" + kw + "'");
        ++pos_;
    }

    bool at_word(const std::string& w) const { return !done() && !toks_[pos_].punct && toks_[pos_].text == w; }

    /// True when the next tokens are `key =`.
    bool at_key(const std::string& key) const
    {
        return at_word(key) && pos_ + 1 < toks_.size() && toks_[pos_ + 1].text == "=";
    }

    void key(const std::string& k)
    {
        keyword(k);
        punct('=');
    }

    Int integer(const std::string& expected)
    {
        const Token& t = word(expected);
        Int v = 0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        if (first != last && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last)
            fail_at(t, expected);
        return v;
    }

    Int int_field(const std::string& k)
    {
        key(k);
        return integer("integer value for " + k);
    }

    std::string name_field(const std::string& k)
    {
        key(k);
        return word("name for " + k).text;
    }

    Partition partition(const std::string& k)
    {
        key(k);
        if (at_word("-")) {
            ++pos_;
            return {};
        }
        std::vector<Int> parts{integer("partition parts for " + k)};
        while (!done() && toks_[pos_].text == ",") {
            ++pos_;
            parts.push_back(integer("partition part"));
        }
        const int col = toks_[pos_ - 1].column;
        for (Int p : parts)
            if (p < 1)
                throw ParseError(line_, col, "positive partition parts", std::to_string(p));
        return Partition(parts);
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        if (done())
            throw ParseError(line_, eol_, expected, "");
        fail_at(toks_[pos_], expected);
    }

    [[noreturn]] void fail_at(const Token& t, const std::string& expected) const
    {
        throw ParseError(line_, t.column, expected, t.text);
    }

    void end() const
    {
        if (!done())
            fail("end of line");
    }

    int line() const { return line_; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
    int eol_;
};

class Reader {
public:
    SessionFile read(std::string_view text)
    {
        int line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t nl = text.find('\n', start);
            const std::string_view line
                = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
            ++line_no;
            statement(line, line_no);
            if (nl == std::string_view::npos)
                break;
            start = nl + 1;
        }
        return std::move(f_);
    }

private:
    SessionFile f_;
    std::map<std::string, std::set<std::string>> names_;

    void declare(LineParser& p, const std::string& kind, const Token& name)
    {
        if (!names_[kind].insert(name.text).second)
            p.fail_at(name, "a " + kind + " name not already declared");
    }

    void statement(std::string_view line, int line_no)
    {
        auto toks = lex(line);
        if (toks.empty())
            return;
        LineParser p(std::move(toks), line_no, static_cast<int>(line.size()) + 1);
        const Token& head = p.word("a declaration keyword");
        if (head.text == "orbit")
            orbit(p);
        else if (head.text == "orbitset")
            orbit_set(p);
        else if (head.text == "class")
            class_decl(p);
        else if (head.text == "curve")
            curve(p);
        else if (head.text == "mcc")
            mcc(p);
        else
            p.fail_at(head, "one of orbit, orbitset, class, curve, mcc");
        p.end();
    }

    void orbit(LineParser& p)
    {
        OrbitDecl d;
        d.line = p.line();
        const Token& name = p.word("orbit name");
        declare(p, "orbit", name);
        d.orbit.name = name.text;
        d.orbit.period = p.int_field("period");
        if (d.orbit.period < 1)
            p.fail("positive period");
        const Token& kind = p.word("elliptic or hyperbolic");
        if (kind.text == "elliptic") {
            p.key("theta");
            const Token& t = p.word("angle a/b+ or a/b-");
            try {
                d.orbit.cls = Elliptic{parse_angle(t.text, 1)};
            } catch (const std::invalid_argument&) {
                p.fail_at(t, "angle a/b+ or a/b-");
            }
        } else if (kind.text == "hyperbolic") {
            d.orbit.cls = Hyperbolic{p.int_field("rot")};
        } else {
            p.fail_at(kind, "elliptic or hyperbolic");
        }
        f_.orbits.push_back(std::move(d));
    }

    void orbit_set(LineParser& p)
    {
        OrbitSetDecl d;
        d.line = p.line();
        const Token& name = p.word("orbit set name");
        declare(p, "orbitset", name);
        d.name = name.text;
        while (!p.done()) {
            p.punct('(');
            std::string orbit = p.word("orbit name").text;
            p.punct(',');
            const Int m = p.integer("multiplicity");
            if (m < 1)
                p.fail("positive multiplicity");
            p.punct(')');
            d.terms.emplace_back(std::move(orbit), m);
        }
        f_.orbit_sets.push_back(std::move(d));
    }

    void class_decl(LineParser& p)
    {
        ClassDecl d;
        d.line = p.line();
        const Token& name = p.word("class name");
        declare(p, "class", name);
        d.name = name.text;
        d.from = p.name_field("from");
        d.to = p.name_field("to");
        d.c1 = p.int_field("c1");
        d.Q = p.int_field("Q");
        if (p.at_word("triv")) {
            p.keyword("triv");
            while (!p.done()) {
                const Token& o = p.word("orbit name");
                p.punct('=');
                if (!d.triv.emplace(o.text, p.integer("trivialization offset")).second)
                    p.fail_at(o, "each orbit once in triv");
            }
        }
        f_.classes.push_back(std::move(d));
    }

    void curve(LineParser& p)
    {
        CurveDecl d;
        d.line = p.line();
        const Token& name = p.word("curve name");
        declare(p, "curve", name);
        d.name = name.text;
        d.cls = p.name_field("class");
        d.chi = p.int_field("chi");
        d.delta = p.int_field("delta");
        if (p.at_key("w"))
            d.w = p.int_field("w");
        if (p.at_key("eta"))
            d.eta = p.int_field("eta");
        if (p.at_key("qcyl"))
            d.qcyl = p.int_field("qcyl");
        while (!p.done()) {
            p.keyword("end");
            EndDecl e;
            e.orbit = p.word("orbit name").text;
            e.out = p.partition("out");
            e.in = p.partition("in");
            e.trivial = p.int_field("trivial");
            d.ends.push_back(std::move(e));
        }
        f_.curves.push_back(std::move(d));
    }

    void mcc(LineParser& p)
    {
        MccDecl d;
        d.line = p.line();
        const Token& name = p.word("mcc name");
        declare(p, "mcc", name);
        d.name = name.text;
        d.combined = p.name_field("combined");
        do {
            p.keyword("part");
            MccPartDecl part;
            part.curve = p.word("curve name").text;
            part.d = p.int_field("d");
            if (part.d < 1)
                p.fail("positive cover degree");
            if (p.at_key("dim"))
                part.dim = p.int_field("dim");
            d.parts.push_back(std::move(part));
        } while (p.at_word("part"));
        if (p.at_word("cross")) {
            p.keyword("cross");
            while (!p.done()) {
                const Int i = p.integer("component index");
                p.punct(',');
                const Int j = p.integer("component index");
                const auto n = static_cast<Int>(d.parts.size());
                if (i < 0 || j <= i || j >= n)
                    p.fail("component indices i,j with 0 <= i < j < " + std::to_string(n));
                p.punct('=');
                d.cross[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = p.integer("cross term");
            }
        }
        f_.mccs.push_back(std::move(d));
    }
};

template <class Decl>
const Decl* find_decl(const std::vector<Decl>& v, const std::string& name)
{
    for (const auto& d : v)
        if (d.name == name)
            return &d;
    return nullptr;
}

const OrbitDecl* find_orbit(const std::vector<OrbitDecl>& v, const std::string& name)
{
    for (const auto& d : v)
        if (d.orbit.name == name)
            return &d;
    return nullptr;
}

void check_references(const SessionFile& f)
{
    std::vector<std::string> problems;
    auto missing = [&](int line, const std::string& who, const std::string& kind, const std::string& name) {
        problems.push_back("line " + std::to_string(line) + ": " + who + " refers to undeclared " + kind + " '"
                           + name + "'");
    };
    for (const auto& s : f.orbit_sets)
        for (const auto& [o, m] : s.terms)
            if (!find_orbit(f.orbits, o))
                missing(s.line, "orbit set " + s.name, "orbit", o);
    for (const auto& c : f.classes) {
        for (const auto* s : {&c.from, &c.to})
            if (!find_decl(f.orbit_sets, *s))
                missing(c.line, "class " + c.name, "orbit set", *s);
        for (const auto& [o, v] : c.triv)
            if (!find_orbit(f.orbits, o))
                missing(c.line, "class " + c.name, "orbit", o);
    }
    for (const auto& c : f.curves) {
        if (!find_decl(f.classes, c.cls))
            missing(c.line, "curve " + c.name, "class", c.cls);
        for (const auto& e : c.ends)
            if (!find_orbit(f.orbits, e.orbit))
                missing(c.line, "curve " + c.name, "orbit", e.orbit);
    }
    for (const auto& m : f.mccs) {
        if (!find_decl(f.classes, m.combined))
            missing(m.line, "mcc " + m.name, "class", m.combined);
        for (const auto& part : m.parts)
            if (!find_decl(f.curves, part.curve))
                missing(m.line, "mcc " + m.name, "curve", part.curve);
    }
    if (!problems.empty())
        throw ReferenceError(std::move(problems));

    // Everything resolves; now build each declaration once so that
    // inconsistent data is reported at load time.
    auto attempt = [&](int line, const std::string& who, auto&& build) {
        try {
            build();
        } catch (const std::exception& e) {
            problems.push_back("line " + std::to_string(line) + ": " + who + ": " + e.what());
        }
    };
    for (const auto& s : f.orbit_sets)
        attempt(s.line, "orbit set " + s.name, [&] { f.orbit_set(s.name); });
    for (const auto& c : f.classes)
        attempt(c.line, "class " + c.name, [&] { f.class_data(c.name); });
    for (const auto& c : f.curves)
        attempt(c.line, "curve " + c.name, [&] { f.curve(c.name); });
    for (const auto& m : f.mccs)
        attempt(m.line, "mcc " + m.name, [&] { f.mcc(m.name); });
    if (!problems.empty())
        throw ReferenceError(std::move(problems));
}

[[noreturn]] void unknown(const std::string& kind, const std::string& name)
{
    throw DomainError("no " + kind + " named '" + name + "'");
}

} // namespace

std::map<std::string, Int> SessionFile::guards() const
{
    std::map<std::string, Int> g;
    for (const auto& o : orbits)
        if (is_elliptic(o.orbit.cls))
            g[o.orbit.name] = 1;
    for (const auto& s : orbit_sets)
        for (const auto& [name, m] : s.terms)
            if (auto it = g.find(name); it != g.end())
                it->second = std::max(it->second, m);
    return g;
}

PeriodicOrbit SessionFile::orbit(const std::string& name) const
{
    const OrbitDecl* d = find_orbit(orbits, name);
    if (!d)
        unknown("orbit", name);
    PeriodicOrbit o = d->orbit;
    if (is_elliptic(o.cls))
        o.cls = with_guard(o.cls, guards().at(name));
    return o;
}

OrbitSet SessionFile::orbit_set(const std::string& name) const
{
    const OrbitSetDecl* d = find_decl(orbit_sets, name);
    if (!d)
        unknown("orbit set", name);
    std::vector<OrbitTerm> terms;
    for (const auto& [o, m] : d->terms)
        terms.push_back({orbit(o), m});
    return OrbitSet(std::move(terms));
}

RelativeClassData SessionFile::class_data(const std::string& name) const
{
    const ClassDecl* d = find_decl(classes, name);
    if (!d)
        unknown("class", name);
    return RelativeClassData(orbit_set(d->from), orbit_set(d->to), d->c1, d->Q, d->triv);
}

CandidateCurve SessionFile::curve(const std::string& name) const
{
    const CurveDecl* d = find_decl(curves, name);
    if (!d)
        unknown("curve", name);
    std::vector<EndData> ends;
    for (const auto& e : d->ends)
        ends.push_back({orbit(e.orbit), e.out, e.in, e.trivial});
    CandidateCurve c(std::move(ends), d->chi, d->delta, class_data(d->cls));
    c.writhe_total = d->w;
    c.eta_total = d->eta;
    c.q_cyl = d->qcyl;
    return c;
}

MccInput SessionFile::mcc(const std::string& name) const
{
    const MccDecl* d = find_decl(mccs, name);
    if (!d)
        unknown("mcc", name);
    std::vector<MccComponent> comps;
    for (const auto& p : d->parts)
        comps.push_back({curve(p.curve), p.d, p.dim});
    return {std::move(comps), d->cross, class_data(d->combined)};
}

SessionFile parse_session(std::string_view text)
{
    SessionFile f = Reader().read(text);
    check_references(f);
    return f;
}

SessionFile load_session(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_session(ss.str());
}

std::string print_session(const SessionFile& f)
{
    std::ostringstream out;
    auto section = [&, first = true]() mutable {
        if (!first)
            out << '\n';
        first = false;
    };
    if (!f.orbits.empty()) {
        section();
        for (const auto& d : f.orbits) {
            out << "orbit " << d.orbit.name << " period=" << d.orbit.period;
            if (const auto* e = std::get_if<Elliptic>(&d.orbit.cls))
                out << " elliptic theta=" << to_string(e->angle);
            else
                out << " hyperbolic rot=" << std::get<Hyperbolic>(d.orbit.cls).rot;
            out << '\n';
        }
    }
    if (!f.orbit_sets.empty()) {
        section();
        for (const auto& d : f.orbit_sets) {
            out << "orbitset " << d.name;
            for (const auto& [o, m] : d.terms)
                out << " (" << o << ',' << m << ')';
            out << '\n';
        }
    }
    if (!f.classes.empty()) {
        section();
        for (const auto& d : f.classes) {
            out << "class " << d.name << " from=" << d.from << " to=" << d.to << " c1=" << d.c1 << " Q=" << d.Q;
            if (!d.triv.empty()) {
                out << " triv";
                for (const auto& [o, v] : d.triv)
                    out << ' ' << o << '=' << v;
            }
            out << '\n';
        }
    }
    if (!f.curves.empty()) {
        section();
        for (const auto& d : f.curves) {
            out << "curve " << d.name << " class=" << d.cls << " chi=" << d.chi << " delta=" << d.delta;
            if (d.w)
                out << " w=" << *d.w;
            if (d.eta)
                out << " eta=" << *d.eta;
            if (d.qcyl)
                out << " qcyl=" << *d.qcyl;
            for (const auto& e : d.ends)
                out << " end " << e.orbit << " out=" << to_string(e.out) << " in=" << to_string(e.in)
                    << " trivial=" << e.trivial;
            out << '\n';
        }
    }
    if (!f.mccs.empty()) {
        section();
        for (const auto& d : f.mccs) {
            out << "mcc " << d.name << " combined=" << d.combined;
            for (const auto& p : d.parts) {
                out << " part " << p.curve << " d=" << p.d;
                if (p.dim)
                    out << " dim=" << *p.dim;
            }
            if (!d.cross.empty()) {
                out << " cross";
                for (const auto& [k, v] : d.cross)
                    out << ' ' << k.first << ',' << k.second << '=' << v;
            }
            out << '\n';
        }
    }
    return out.str();
}

} // namespace pfh
