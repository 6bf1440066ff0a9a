#include "pfh/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pfh {

Partition::Partition(std::vector<Int> parts)
    : parts_(std::move(parts))
{
    for (Int q : parts_)
        if (q < 1)
            throw std::invalid_argument("partition parts must be positive, got " + std::to_string(q));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition::Partition(std::initializer_list<Int> parts)
    : Partition(std::vector<Int>(parts))
{
}

bool Partition::contains(Int part) const
{
    return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

Partition operator|(const Partition& a, const Partition& b)
{
    std::vector<Int> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return Partition(std::move(all));
}

Partition intersect(const Partition& a, const Partition& b)
{
    std::vector<Int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common),
                          std::greater<>());
    return Partition(std::move(common));
}

std::string to_string(const Partition& p)
{
    if (p.empty())
        return "-";
    std::string s;
    for (Int q : p) {
        if (!s.empty())
            s += ',';
        s += std::to_string(q);
    }
    return s;
}

Partition parse_partition(std::string_view text)
{
    if (text == "-" || text.empty())
        return {};
    std::vector<Int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = text.substr(pos, comma - pos);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
            throw std::invalid_argument("malformed partition '" + std::string(text)
                                        + "', expected positive integers separated by commas");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition p_in(const AngleRep& a, Int m)
{
    if (m < 0)
        throw std::invalid_argument("multiplicity must be nonnegative");
    if (m > a.guard())
        throw GuardViolation("multiplicity " + std::to_string(m) + " exceeds guard "
                             + std::to_string(a.guard()) + " of angle " + to_string(a));
    // S_theta is independent of how much is left, so compute it once.
    std::vector<Int> s;
    for (Int q = 1; q <= m; ++q)
        if (in_S_theta(a, q))
            s.push_back(q);

    std::vector<Int> parts;
    for (Int rest = m; rest > 0;) {
        const Int r = *std::prev(std::upper_bound(s.begin(), s.end(), rest));
        parts.push_back(r);
        rest -= r;
    }
    return Partition(std::move(parts));
}

Partition p_out(const AngleRep& a, Int m)
{
    return p_in(negate(a), m);
}

Partition orbit_partition(const OrbitClass& cls, Int m, Direction dir, Int t)
{
    if (m < 0)
        throw std::invalid_argument("multiplicity must be nonnegative");
    if (const auto* e = std::get_if<Elliptic>(&cls)) {
        const AngleRep theta = shift(e->angle, t);
        return dir == Direction::In ? p_in(theta, m) : p_out(theta, m);
    }
    if (is_positive_hyperbolic(cls))
        return Partition(std::vector<Int>(static_cast<std::size_t>(m), 1));
    std::vector<Int> parts(static_cast<std::size_t>(m / 2), 2);
    if (m % 2 != 0)
        parts.push_back(1);
    return Partition(std::move(parts));
}

Partition orbit_partition(const PeriodicOrbit& orbit, Int m, Direction dir, Int t)
{
    return orbit_partition(orbit.cls, m, dir, t);
}

Int M_theta(const AngleRep& a, const Partition& parts)
{
    const Int n = parts.total();
    Int value = -n;
    for (Int q : parts)
        value += floor_mult(a, q);
    for (Int qi : parts)
        for (Int qj : parts)
            value += std::min(qi * ceil_mult(a, qj), qj * ceil_mult(a, qi));
    for (Int i = 1; i <= n; ++i)
        value -= 2 * floor_mult(a, i);
    return value;
}

bool check_split(const AngleRep& a, Int m, Int n)
{
    if (m < 1 || n < 0)
        throw std::invalid_argument("check_split needs m >= 1 and n >= 0");
    if (m + n > a.guard())
        throw GuardViolation("m+n = " + std::to_string(m + n) + " exceeds guard "
                             + std::to_string(a.guard()) + " of angle " + to_string(a));
    const Int cm = ceil_mult(a, m);
    for (Int i = 1; i <= n; ++i)
        if (floor_mult(a, i) + cm != floor_mult(a, m + i))
            return false;
    if (n > 0 && p_in(a, m + n) != (p_in(a, m) | p_in(a, n)))
        throw std::logic_error("split identity holds at " + to_string(a) + " (m=" + std::to_string(m)
                               + ", n=" + std::to_string(n) + ") but p_in does not split");
    return true;
}

} // namespace pfh
