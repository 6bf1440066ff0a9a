#include "pfh/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pfh::oracle {

namespace {

BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

BigInt rfloor(const Rational& r)
{
    BigInt q = num(r) / den(r);
    if (num(r) % den(r) != 0 && num(r) < 0)
        --q;
    return q;
}

BigInt rceil(const Rational& r) { return -rfloor(-r); }

Int narrow(const BigInt& v) { return v.convert_to<Int>(); }

void check_k(const AngleRep& a, Int k)
{
    if (k == 0 || k > a.guard() || -k > a.guard())
        throw GuardViolation("oracle multiplier " + std::to_string(k) + " outside guard "
                             + std::to_string(a.guard()));
}

Int ceil_div2(Int v) { return narrow(rceil(Rational(v, 2))); }
Int floor_div2(Int v) { return narrow(rfloor(Rational(v, 2))); }

Int cz_sum_to(const OracleOrbit& o, Int n, Int t)
{
    Int s = 0;
    for (Int i = 1; i <= n; ++i)
        s += cz(o, i, t);
    return s;
}

// ---- planar diagrams -------------------------------------------------
//
// A strand is a sum of layers; a layer moves around the diamond
// |x| + |y| = scale at the given rate. The diamond is parametrized
// counterclockwise by arc fraction s, so every coordinate is piecewise
// linear in t with breakpoints where rate t + phase is a multiple of 1/4.

struct Layer {
    Rational scale;
    Rational rate;
    Rational phase;
};

using Strand = std::vector<Layer>;

struct Degenerate {};

std::pair<Rational, Rational> diamond(Rational s)
{
    s -= Rational(rfloor(s));
    const Rational x = s <= Rational(1, 2) ? 1 - 4 * s : 4 * s - 3;
    Rational y;
    if (s <= Rational(1, 4))
        y = 4 * s;
    else if (s <= Rational(3, 4))
        y = 2 - 4 * s;
    else
        y = 4 * s - 4;
    return {x, y};
}

std::pair<Rational, Rational> position(const Strand& strand, const Rational& t)
{
    Rational x = 0;
    Rational y = 0;
    for (const auto& l : strand) {
        auto [dx, dy] = diamond(l.rate * t + l.phase);
        x += l.scale * dx;
        y += l.scale * dy;
    }
    return {x, y};
}

void add_breakpoints(const Strand& strand, std::set<Rational>& out)
{
    // x is linear between half-integer values of the layer parameter.
    for (const auto& l : strand) {
        if (l.rate == 0)
            continue;
        const Rational a = std::min(l.phase, l.rate + l.phase);
        const Rational b = std::max(l.phase, l.rate + l.phase);
        for (BigInt k = rfloor(2 * a) - 1; k <= rceil(2 * b) + 1; ++k) {
            const Rational t = (Rational(k, 2) - l.phase) / l.rate;
            if (t > 0 && t < 1)
                out.insert(t);
        }
    }
}

Int pair_crossings(const Strand& s1, const Strand& s2)
{
    std::set<Rational> ts{Rational(0), Rational(1)};
    add_breakpoints(s1, ts);
    add_breakpoints(s2, ts);
    const std::vector<Rational> t(ts.begin(), ts.end());
    std::vector<Rational> dx;
    for (const auto& ti : t)
        dx.push_back(position(s1, ti).first - position(s2, ti).first);

    Int total = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (dx[i] == 0)
            throw Degenerate{};
        if ((dx[i] < 0) == (dx[i + 1] < 0) || dx[i + 1] == 0)
            continue;
        const Rational tc = t[i] - dx[i] * (t[i + 1] - t[i]) / (dx[i + 1] - dx[i]);
        const Rational dy = position(s1, tc).second - position(s2, tc).second;
        if (dy == 0)
            throw std::logic_error("strands collide in the crossing oracle");
        const Rational slope = dx[i + 1] - dx[i];
        total += (dy > 0) == (slope > 0) ? -1 : 1;
    }
    return total;
}

const Rational kPhases[] = {Rational(1, 97), Rational(3, 101), Rational(7, 211), Rational(11, 307)};

template <class Build, class Count>
Int with_phases(Build build, Count count)
{
    for (const auto& phi : kPhases) {
        try {
            return count(build(phi));
        } catch (const Degenerate&) {
        }
    }
    throw std::logic_error("crossing oracle found no generic projection");
}

std::vector<Strand> torus_strands(Int q, Int eta, const Rational& radius, const Rational& phi)
{
    std::vector<Strand> out;
    for (Int j = 0; j < q; ++j)
        out.push_back({{radius, Rational(eta, q), Rational(j, q) + phi}});
    return out;
}

Int self_crossings(const std::vector<Strand>& strands)
{
    Int total = 0;
    for (std::size_t i = 0; i < strands.size(); ++i)
        for (std::size_t j = i + 1; j < strands.size(); ++j)
            total += pair_crossings(strands[i], strands[j]);
    return total;
}

Int mutual_crossings(const std::vector<Strand>& a, const std::vector<Strand>& b)
{
    Int total = 0;
    for (const auto& s : a)
        for (const auto& u : b)
            total += pair_crossings(s, u);
    return total;
}

void check_scale(Int q, Int eta)
{
    if (q < 1 || q > 8 || eta < -8 || eta > 8)
        throw std::invalid_argument("crossing oracle handles 1 <= q <= 8 and |eta| <= 8");
}

} // namespace

Rational sample_point(const AngleRep& a)
{
    const Rational eps(1, den(a.base()) * (a.guard() + 1));
    return a.side() == Side::Above ? a.base() + eps : a.base() - eps;
}

Int floor_at(const AngleRep& a, Int k)
{
    check_k(a, k);
    return narrow(rfloor(sample_point(a) * k));
}

Int ceil_at(const AngleRep& a, Int k)
{
    check_k(a, k);
    return narrow(rceil(sample_point(a) * k));
}

std::vector<std::vector<Int>> enumerate_partitions(Int n)
{
    if (n < 1)
        throw std::invalid_argument("partitions of a positive integer only");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur{n};
    for (;;) {
        out.push_back(cur);
        // Rightmost part greater than 1.
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == 1)
            --i;
        if (i == 0)
            break;
        Int rest = static_cast<Int>(cur.size() - i) + 1;
        const Int v = --cur[i - 1];
        cur.resize(i);
        while (rest > 0) {
            cur.push_back(std::min(v, rest));
            rest -= cur.back();
        }
    }
    return out;
}

Int brute_M(const AngleRep& a, const std::vector<Int>& parts)
{
    const Int n = std::accumulate(parts.begin(), parts.end(), Int{0});
    Int m = 0;
    for (Int q : parts)
        m += floor_at(a, q);
    for (Int qi : parts)
        for (Int qj : parts)
            m += std::min(qi * ceil_at(a, qj), qj * ceil_at(a, qi));
    m -= n;
    for (Int i = 1; i <= n; ++i)
        m -= 2 * floor_at(a, i);
    return m;
}

MinM brute_min_M(const AngleRep& a, Int n)
{
    MinM res;
    bool first = true;
    for (auto& p : enumerate_partitions(n)) {
        const Int v = brute_M(a, p);
        if (first || v < res.min) {
            res.min = v;
            res.minimizers.clear();
            first = false;
        }
        if (v == res.min)
            res.minimizers.push_back(std::move(p));
    }
    return res;
}

std::vector<AngleRep> farey_sweep(Int order)
{
    if (order < 1)
        throw std::invalid_argument("Farey order must be positive");
    std::vector<AngleRep> reps;
    Int a = 0, b = 1, c = 1, d = order;
    while (a < b) {
        reps.emplace_back(Rational(a, b), Side::Above, order);
        const Int k = (order + b) / d;
        const Int e = k * c - a;
        const Int f = k * d - b;
        a = c;
        b = d;
        c = e;
        d = f;
    }
    return reps;
}

Int cz(const OracleOrbit& o, Int k, Int t)
{
    if (const auto* e = std::get_if<EllipticModel>(&o))
        return 2 * (floor_at(e->angle, k) + k * t) + 1;
    return k * (std::get<HyperbolicModel>(o).rot + 2 * t);
}

Int direct_workhorse_slack(const OracleOrbit& o, const std::vector<Int>& tuple, Int t)
{
    Int lhs = 0;
    Int n = 0;
    for (Int qi : tuple) {
        lhs += cz(o, qi, t) - ceil_div2(cz(o, qi, t));
        n += qi;
    }
    for (Int qi : tuple)
        for (Int qj : tuple)
            lhs += std::min(qi * ceil_div2(cz(o, qj, t)), qj * ceil_div2(cz(o, qi, t)));
    return lhs - cz_sum_to(o, n, t);
}

Int direct_mcc5_slack(const OracleOrbit& o, const std::vector<Int>& q, const std::vector<Int>& d, Int t)
{
    if (q.size() != d.size())
        throw std::invalid_argument("tuple and degree lists differ in length");
    Int lhs = 0;
    Int n = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        const Int rho_j = ceil_div2(cz(o, q[j], t));
        lhs += d[j] * (cz(o, q[j], t) - rho_j);
        n += d[j] * q[j];
        for (std::size_t jj = 0; jj < q.size(); ++jj) {
            const Int rho_jj = ceil_div2(cz(o, q[jj], t));
            lhs += d[j] * d[jj] * std::min(q[j] * rho_jj, q[jj] * rho_j);
        }
    }
    return lhs - cz_sum_to(o, n, t);
}

std::pair<Int, Int> direct_cylinder_goal(const OracleOrbit& o, const std::vector<Int>& out_parts,
                                         const std::vector<Int>& in_parts, Int k, Int t)
{
    Int rho_plus = 0;
    Int m_plus = 0;
    for (Int q : out_parts) {
        rho_plus += floor_div2(cz(o, q, t));
        m_plus += q;
    }
    Int rho_minus = 0;
    Int m_minus = 0;
    for (Int q : in_parts) {
        rho_minus += ceil_div2(cz(o, q, t));
        m_minus += q;
    }
    return {2 * (rho_plus - rho_minus), cz(o, m_plus + k, t) - cz(o, m_minus + k, t)};
}

FloorsChain direct_floors_chain(const AngleRep& a, Int m_plus, Int m_minus, Int k)
{
    const Rational th = sample_point(a);
    if (m_plus + k > a.guard() || m_minus + k > a.guard())
        throw GuardViolation("floors chain beyond the guard");
    auto fl = [&](Int j) { return narrow(rfloor(th * j)); };
    return {fl(m_plus) + fl(-m_minus), fl(m_plus - m_minus), fl(m_plus + k) - fl(m_minus + k)};
}

Int torus_crossing_count(Int q, Int eta)
{
    check_scale(q, eta);
    return with_phases([&](const Rational& phi) { return torus_strands(q, eta, 1, phi); }, self_crossings);
}

Int cable_crossing_count(Int qb, Int eb, Int d, Int ei)
{
    check_scale(qb, eb);
    check_scale(d, ei);
    if (qb * d > 8)
        throw std::invalid_argument("crossing oracle handles cables of at most 8 strands");
    if (qb > 1 && std::gcd(qb, eb) != 1)
        throw std::invalid_argument("cabling base must be connected");
    const Rational eps(1, 16);
    auto build = [&](const Rational& phi) {
        std::vector<Strand> out;
        for (Int j = 0; j < qb; ++j) {
            for (Int k = 0; k < d; ++k) {
                out.push_back({{1, Rational(eb, qb), Rational(eb * j, qb) + phi},
                               {eps, Rational(ei, d * qb),
                                (Rational(k) + Rational(ei * j, qb)) / d + Rational(5, 89) + phi / 7}});
            }
        }
        return out;
    };
    return with_phases(build, self_crossings);
}

Int nested_crossing_count(Int q1, Int e1, Int q2, Int e2)
{
    check_scale(q1, e1);
    check_scale(q2, e2);
    auto build = [&](const Rational& phi) {
        return std::make_pair(torus_strands(q1, e1, Rational(2, 3), phi), torus_strands(q2, e2, Rational(1, 3), phi));
    };
    return with_phases(build, [](const auto& comps) { return mutual_crossings(comps.first, comps.second); });
}

Int collection_crossing_count(const std::vector<std::pair<Int, Int>>& torus_components)
{
    for (const auto& [q, eta] : torus_components)
        check_scale(q, eta);
    const Int count = static_cast<Int>(torus_components.size());
    auto build = [&](const Rational& phi) {
        std::vector<Strand> all;
        for (Int i = 0; i < count; ++i) {
            const auto& [q, eta] = torus_components[static_cast<std::size_t>(i)];
            for (auto& s : torus_strands(q, eta, Rational(i + 1, count + 1), phi * (i + 1)))
                all.push_back(std::move(s));
        }
        return all;
    };
    return with_phases(build, self_crossings);
}

} // namespace pfh::oracle
