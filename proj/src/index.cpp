#include "pfh/index.hpp"

#include <algorithm>

namespace pfh {

namespace {

Int mod2(Int v) { return ((v % 2) + 2) % 2; }

} // namespace

OrbitSet::OrbitSet(std::vector<OrbitTerm> terms)
    : terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end(),
              [](const OrbitTerm& a, const OrbitTerm& b) { return a.orbit.name < b.orbit.name; });
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mult < 1)
            throw DomainError("orbit " + terms_[i].orbit.name + " has nonpositive multiplicity");
        if (terms_[i].orbit.period < 1)
            throw DomainError("orbit " + terms_[i].orbit.name + " has nonpositive period");
        if (i > 0 && terms_[i].orbit.name == terms_[i - 1].orbit.name)
            throw DomainError("orbit " + terms_[i].orbit.name + " listed twice in an orbit set");
    }
}

Int OrbitSet::degree() const
{
    Int d = 0;
    for (const auto& t : terms_)
        d += t.mult * t.orbit.period;
    return d;
}

bool OrbitSet::admissible() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const OrbitTerm& t) { return is_elliptic(t.orbit.cls) || t.mult == 1; });
}

Int OrbitSet::multiplicity(const std::string& name) const
{
    for (const auto& t : terms_)
        if (t.orbit.name == name)
            return t.mult;
    return 0;
}

const PeriodicOrbit* OrbitSet::find(const std::string& name) const
{
    for (const auto& t : terms_)
        if (t.orbit.name == name)
            return &t.orbit;
    return nullptr;
}

OrbitSet operator+(const OrbitSet& a, const OrbitSet& b)
{
    std::vector<OrbitTerm> out = a.terms_;
    for (const auto& t : b.terms_) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const OrbitTerm& u) { return u.orbit.name == t.orbit.name; });
        if (it == out.end()) {
            out.push_back(t);
        } else {
            if (!(it->orbit == t.orbit))
                throw DomainError("orbit name " + t.orbit.name + " refers to two different orbits");
            it->mult += t.mult;
        }
    }
    return OrbitSet(std::move(out));
}

bool operator==(const OrbitSet& a, const OrbitSet& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].orbit == b.terms_[i].orbit) || a.terms_[i].mult != b.terms_[i].mult)
            return false;
    return true;
}

OrbitSet scaled(const OrbitSet& s, Int d)
{
    if (d < 1)
        throw DomainError("scale factor must be positive");
    std::vector<OrbitTerm> out = s.terms();
    for (auto& t : out)
        t.mult *= d;
    return OrbitSet(std::move(out));
}

std::string to_string(const OrbitSet& s)
{
    if (s.empty())
        return "{}";
    std::string out = "{";
    for (const auto& t : s.terms()) {
        if (out.size() > 1)
            out += ",";
        out += "(" + t.orbit.name + "," + std::to_string(t.mult) + ")";
    }
    return out + "}";
}

Int offset_of(const TrivOffset& triv, const std::string& name)
{
    auto it = triv.find(name);
    return it == triv.end() ? 0 : it->second;
}

RelativeClassData::RelativeClassData(OrbitSet alpha_, OrbitSet beta_, Int c1, Int q, TrivOffset triv_)
    : alpha(std::move(alpha_))
    , beta(std::move(beta_))
    , c1_rel(c1)
    , q_self(q)
    , triv(std::move(triv_))
{
    if (alpha.degree() != beta.degree())
        throw DomainError("degree mismatch: " + to_string(alpha) + " has degree "
                          + std::to_string(alpha.degree()) + " but " + to_string(beta) + " has degree "
                          + std::to_string(beta.degree()));
    for (const auto& a : alpha.terms())
        if (const PeriodicOrbit* b = beta.find(a.orbit.name); b != nullptr && !(*b == a.orbit))
            throw DomainError("orbit name " + a.orbit.name + " refers to two different orbits");
}

Int cz_term(const RelativeClassData& d)
{
    Int sum = 0;
    for (const auto& t : d.alpha.terms())
        sum += cz_sum(t.orbit, t.mult, offset_of(d.triv, t.orbit.name));
    for (const auto& t : d.beta.terms())
        sum -= cz_sum(t.orbit, t.mult, offset_of(d.triv, t.orbit.name));
    return sum;
}

Int relative_index(const RelativeClassData& d)
{
    return d.c1_rel + d.q_self + cz_term(d);
}

RelativeClassData retrivialize(const RelativeClassData& d, const TrivOffset& new_triv)
{
    Int dc1 = 0;
    Int dq = 0;
    for (const auto& t : d.alpha.terms()) {
        const Int delta = offset_of(new_triv, t.orbit.name) - offset_of(d.triv, t.orbit.name);
        dc1 -= t.mult * delta;
        dq -= t.mult * t.mult * delta;
    }
    for (const auto& t : d.beta.terms()) {
        const Int delta = offset_of(new_triv, t.orbit.name) - offset_of(d.triv, t.orbit.name);
        dc1 += t.mult * delta;
        dq += t.mult * t.mult * delta;
    }
    RelativeClassData out(d.alpha, d.beta, d.c1_rel + dc1, d.q_self + dq, new_triv);
    // Fail early if a raised angle guard no longer covers a multiplicity.
    cz_term(out);
    return out;
}

RelativeClassData compose(const RelativeClassData& d1, const RelativeClassData& d2)
{
    if (!(d1.beta == d2.alpha))
        throw DomainError("cannot compose: middle orbit sets differ (" + to_string(d1.beta) + " vs "
                          + to_string(d2.alpha) + ")");
    for (const auto& t : d1.beta.terms())
        if (offset_of(d1.triv, t.orbit.name) != offset_of(d2.triv, t.orbit.name))
            throw DomainError("cannot compose: trivializations differ on shared orbit " + t.orbit.name);

    TrivOffset triv;
    for (const auto& t : d1.alpha.terms())
        triv[t.orbit.name] = offset_of(d1.triv, t.orbit.name);
    for (const auto& t : d2.beta.terms()) {
        const Int v = offset_of(d2.triv, t.orbit.name);
        auto [it, inserted] = triv.emplace(t.orbit.name, v);
        if (!inserted && it->second != v)
            throw DomainError("cannot compose: trivializations differ on orbit " + t.orbit.name);
    }
    return RelativeClassData(d1.alpha, d2.beta, d1.c1_rel + d2.c1_rel, d1.q_self + d2.q_self, triv);
}

RelativeClassData shift_class(const RelativeClassData& d, const ClassDelta& delta)
{
    RelativeClassData out = d;
    out.c1_rel += delta.c1E_pairing;
    out.q_self += 2 * delta.h_pairing;
    return out;
}

int grading_mod2(const OrbitSet& s)
{
    Int g = 0;
    for (const auto& t : s.terms())
        g += lefschetz_sign(t.orbit).parity * t.mult;
    return static_cast<int>(mod2(g));
}

bool parity_check(const RelativeClassData& d)
{
    if (!d.alpha.admissible() || !d.beta.admissible())
        throw DomainError("parity check needs admissible orbit sets");
    return mod2(relative_index(d)) == mod2(grading_mod2(d.alpha) - grading_mod2(d.beta));
}

bool chern_parity_consistent(const RelativeClassData& d)
{
    Int m = 0;
    for (const auto& t : d.alpha.terms())
        m += t.mult;
    for (const auto& t : d.beta.terms())
        m -= t.mult;
    return mod2(d.c1_rel + d.q_self) == mod2(m);
}

std::map<std::string, Int> max_multiplicities(const RelativeClassData& d)
{
    std::map<std::string, Int> out;
    for (const auto* s : {&d.alpha, &d.beta})
        for (const auto& t : s->terms())
            if (is_elliptic(t.orbit.cls))
                out[t.orbit.name] = std::max(out[t.orbit.name], t.mult);
    return out;
}

} // namespace pfh
