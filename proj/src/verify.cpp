#include "pfh/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pfh {

namespace {

constexpr std::size_t kMaxReported = 20;

std::string join(const std::vector<Int>& v)
{
    std::string s;
    for (Int x : v) {
        if (!s.empty())
            s += ',';
        s += std::to_string(x);
    }
    return s.empty() ? "-" : s;
}

std::vector<Int> sorted_desc(std::vector<Int> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

bool negative_hyperbolic_rule(const std::vector<Int>& tuple)
{
    Int ones = 0;
    for (Int q : tuple) {
        if (q == 1)
            ++ones;
        else if (q % 2 != 0)
            return false;
    }
    return ones <= 1;
}

class Sweep {
public:
    explicit Sweep(const SweepSpec& spec)
        : spec_(spec)
        , reps_(oracle::farey_sweep(spec.farey_order))
    {
    }

    SweepReport run()
    {
        const auto& names = spec_.lemmas.empty() ? sweep_lemmas() : spec_.lemmas;
        for (const auto& name : names) {
            report_.tallies.push_back({name, 0, 0});
            if (name == "minM")
                min_m();
            else if (name == "workhorse")
                workhorse();
            else if (name == "disjoint")
                disjoint();
            else if (name == "exercise")
                exercise();
            else if (name == "split")
                split();
            else if (name == "braid")
                braid();
        }
        return std::move(report_);
    }

private:
    const SweepSpec& spec_;
    std::vector<AngleRep> reps_;
    SweepReport report_;

    Partition pin(const AngleRep& a, Int m) const
    {
        return spec_.p_in_override ? spec_.p_in_override(a, m) : p_in(a, m);
    }

    Partition pout(const AngleRep& a, Int m) const { return pin(negate(a), m); }

    void check(bool ok, const std::string& what)
    {
        auto& tally = report_.tallies.back();
        ++tally.cases;
        if (ok)
            return;
        ++tally.failures;
        if (report_.counterexamples.size() < kMaxReported)
            report_.counterexamples.push_back(tally.lemma + ": " + what);
    }

    void min_m()
    {
        for (const auto& a : reps_) {
            for (Int n = 1; n <= spec_.max_n; ++n) {
                const auto res = oracle::brute_min_M(a, n);
                const Partition expected = pin(a, n);
                const bool ok = res.min == 0 && res.minimizers.size() == 1
                    && res.minimizers.front() == expected.parts();
                check(ok, "theta=" + to_string(a) + " n=" + std::to_string(n) + ": min " + std::to_string(res.min)
                              + " at {" + join(res.minimizers.front()) + "}"
                              + (res.minimizers.size() > 1 ? " (not unique)" : "") + ", p_in={"
                              + to_string(expected) + "}");
                for (const auto& p : oracle::enumerate_partitions(n)) {
                    const Int lib = M_theta(a, Partition(p));
                    const Int brute = oracle::brute_M(a, p);
                    check(lib == brute && brute >= 0, "theta=" + to_string(a) + " parts={" + join(p)
                                                          + "}: M=" + std::to_string(lib) + " oracle "
                                                          + std::to_string(brute));
                }
            }
        }
    }

    void workhorse_case(const OrbitClass& cls, const std::vector<Int>& tuple, Int t, bool expected_equality)
    {
        const WorkhorseCheck w = verify_workhorse(cls, tuple, t);
        const bool ok = w.slack == w.oracle_slack && w.slack >= 0 && (w.slack == 0) == expected_equality;
        check(ok, describe(cls) + " t=" + std::to_string(t) + " tuple={" + join(tuple) + "}: slack "
                      + std::to_string(w.slack) + " oracle " + std::to_string(w.oracle_slack)
                      + (expected_equality ? ", equality expected" : ", strict expected"));
    }

    void workhorse()
    {
        for (Int n = 1; n <= spec_.max_n; ++n) {
            const auto parts = oracle::enumerate_partitions(n);
            for (const auto& a : reps_) {
                const auto minimizers = oracle::brute_min_M(a, n).minimizers;
                const Partition expected = pin(a, n);
                for (const auto& p : parts) {
                    const bool equality = p == expected.parts();
                    check(!equality || (minimizers.size() == 1 && minimizers.front() == p),
                          "theta=" + to_string(a) + " n=" + std::to_string(n)
                              + ": p_in disagrees with the oracle minimizer");
                    for (Int t : spec_.offsets)
                        workhorse_case(Elliptic{a}, p, t, equality);
                }
            }
            for (Int rot : spec_.hyperbolic_rots) {
                const bool positive = rot % 2 == 0;
                for (const auto& p : parts)
                    for (Int t : spec_.offsets)
                        workhorse_case(Hyperbolic{rot}, p, t, positive || negative_hyperbolic_rule(p));
            }
        }
    }

    void disjoint()
    {
        for (const auto& a : reps_) {
            const Rational th = oracle::sample_point(a);
            auto frac = [&](Int k) {
                const Rational x = th * k;
                return x - Rational(oracle::floor_at(a, k));
            };
            for (Int m = 2; m <= spec_.max_n; ++m) {
                const Partition in = pin(a, m);
                const Partition out = pout(a, m);
                const std::string at = "theta=" + to_string(a) + " m=" + std::to_string(m) + " in={"
                    + to_string(in) + "} out={" + to_string(out) + "}";
                check(intersect(in, out).empty(), at + ": not disjoint");
                check(in.contains(1) != out.contains(1), at + ": 1-membership dichotomy fails");
                check((frac(m - 1) > frac(m)) == in.contains(1), at + ": fractional-part criterion for 1 fails");
            }
        }
    }

    void exercise()
    {
        for (const auto& a : reps_) {
            for (Int m = 1; m <= spec_.max_n; ++m) {
                const Partition p = pin(a, m);
                const std::string at = "theta=" + to_string(a) + " m=" + std::to_string(m) + " p={"
                    + to_string(p) + "}";
                Int ceil_sum = 0;
                for (Int q : p)
                    ceil_sum += oracle::ceil_at(a, q);
                check(ceil_sum == oracle::ceil_at(a, m), at + ": (a) sum of ceilings");
                const auto& q = p.parts();
                for (std::size_t i = 0; i < q.size(); ++i)
                    for (std::size_t j = 0; j < q.size(); ++j)
                        if (i != j)
                            check(oracle::floor_at(a, q[i]) + oracle::floor_at(a, q[j])
                                      < oracle::floor_at(a, q[i] + q[j]),
                                  at + ": (b) at " + std::to_string(q[i]) + "+" + std::to_string(q[j]));
                for (Int qi : q)
                    for (Int x = 1; x < qi; ++x)
                        check(oracle::floor_at(a, x) + oracle::floor_at(a, qi - x) == oracle::floor_at(a, qi),
                              at + ": (c) at " + std::to_string(x) + "+" + std::to_string(qi - x));
            }
        }
    }

    void split()
    {
        for (const auto& a : reps_) {
            for (Int m = 1; m <= spec_.max_n; ++m) {
                for (Int n = 0; m + n <= spec_.max_n; ++n) {
                    bool identity = true;
                    for (Int i = 1; i <= n; ++i)
                        identity = identity
                            && oracle::floor_at(a, i) + oracle::ceil_at(a, m) == oracle::floor_at(a, m + i);
                    const std::string at = "theta=" + to_string(a) + " m=" + std::to_string(m)
                        + " n=" + std::to_string(n);
                    bool lib = false;
                    try {
                        lib = check_split(a, m, n);
                    } catch (const std::logic_error& e) {
                        check(false, at + ": " + e.what());
                        continue;
                    }
                    check(lib == identity, at + ": check_split disagrees with the oracle identity");
                    if (identity && n > 0) {
                        auto joined = oracle::brute_min_M(a, m).minimizers.front();
                        const auto rest = oracle::brute_min_M(a, n).minimizers.front();
                        joined.insert(joined.end(), rest.begin(), rest.end());
                        check(sorted_desc(joined) == oracle::brute_min_M(a, m + n).minimizers.front(),
                              at + ": oracle minimizers do not split");
                    }
                }
            }
        }
    }

    void braid()
    {
        for (Int q = 1; q <= 6; ++q) {
            for (Int eta = -6; eta <= 6; ++eta) {
                const Int lib = CablingBraid::torus(q, eta).writhe();
                const Int brute = oracle::torus_crossing_count(q, eta);
                check(lib == brute, "torus(" + std::to_string(q) + "," + std::to_string(eta) + "): writhe "
                                        + std::to_string(lib) + " oracle " + std::to_string(brute));
            }
        }
        for (Int qb = 1; qb <= 8; ++qb) {
            for (Int eb = -4; eb <= 4; ++eb) {
                if (qb > 1 && std::gcd(qb, eb) != 1)
                    continue;
                for (Int d = 1; qb * d <= 8; ++d) {
                    for (Int ei = -4; ei <= 4; ++ei) {
                        const auto b = CablingBraid::cable(CablingBraid::torus(qb, eb), CablingBraid::torus(d, ei));
                        const Int lib = b.writhe();
                        const Int brute = oracle::cable_crossing_count(qb, eb, d, ei);
                        check(lib == brute, to_string(b) + ": writhe " + std::to_string(lib) + " oracle "
                                                + std::to_string(brute));
                    }
                }
            }
        }
        for (Int q1 = 1; q1 <= 3; ++q1)
            for (Int e1 = -3; e1 <= 3; ++e1)
                for (Int q2 = 1; q2 <= 3; ++q2)
                    for (Int e2 = -3; e2 <= 3; ++e2) {
                        const auto outer = CablingBraid::torus(q1, e1);
                        const auto inner = CablingBraid::torus(q2, e2);
                        const Int lib = linking_nested(outer, inner);
                        const Int brute = oracle::nested_crossing_count(q1, e1, q2, e2);
                        check(brute % 2 == 0 && 2 * lib == brute,
                              to_string(outer) + " around " + to_string(inner) + ": linking "
                                  + std::to_string(lib) + " oracle crossings " + std::to_string(brute));
                    }
        const std::vector<std::vector<std::pair<Int, Int>>> collections{
            {{1, 0}, {2, 1}, {3, 2}}, {{2, 1}, {1, 1}, {2, 3}}, {{3, -1}, {2, 1}}, {{1, 2}, {1, 2}, {1, 2}},
            {{2, -3}, {3, 1}, {1, 0}}};
        for (const auto& comps : collections) {
            std::vector<CablingBraid> parts;
            for (const auto& [q, eta] : comps)
                parts.push_back(CablingBraid::torus(q, eta));
            const Int lib = BraidCollection(parts).writhe();
            const Int brute = oracle::collection_crossing_count(comps);
            check(lib == brute, "collection of " + std::to_string(comps.size()) + " components: writhe "
                                    + std::to_string(lib) + " oracle " + std::to_string(brute));
        }
    }
};

} // namespace

oracle::OracleOrbit to_oracle(const OrbitClass& cls)
{
    if (const auto* e = std::get_if<Elliptic>(&cls))
        return oracle::EllipticModel{e->angle};
    return oracle::HyperbolicModel{std::get<Hyperbolic>(cls).rot};
}

WorkhorseCheck verify_workhorse(const OrbitClass& cls, const std::vector<Int>& tuple, Int t)
{
    WorkhorseCheck w;
    w.slack = workhorse_slack(cls, tuple, t);
    w.oracle_slack = oracle::direct_workhorse_slack(to_oracle(cls), tuple, t);
    w.equality_ok = (w.slack == 0) == workhorse_equality_expected(cls, tuple, t);
    return w;
}

Int SweepReport::cases() const
{
    Int n = 0;
    for (const auto& t : tallies)
        n += t.cases;
    return n;
}

const std::vector<std::string>& sweep_lemmas()
{
    static const std::vector<std::string> names{"minM", "workhorse", "disjoint", "exercise", "split", "braid"};
    return names;
}

SweepReport run_sweep(const SweepSpec& spec)
{
    if (spec.max_n < 1 || spec.farey_order < 1)
        throw std::invalid_argument("sweep order and max-n must be positive");
    if (spec.farey_order < spec.max_n)
        throw std::invalid_argument("Farey order must be at least max-n");
    for (const auto& name : spec.lemmas)
        if (std::find(sweep_lemmas().begin(), sweep_lemmas().end(), name) == sweep_lemmas().end())
            throw std::invalid_argument("unknown lemma '" + name + "'");
    return Sweep(spec).run();
}

} // namespace pfh
