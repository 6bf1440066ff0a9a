#include "pfh/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace pfh {

struct CablingBraid::Node {
    // Torus leaf when base is empty.
    Int q = 1;
    Int eta = 0;
    std::optional<CablingBraid> base;
    std::optional<CablingBraid> inner;
};

CablingBraid::CablingBraid(std::shared_ptr<const Node> node)
    : node_(std::move(node))
{
}

CablingBraid CablingBraid::torus(Int q, Int eta)
{
    if (q < 1)
        throw std::invalid_argument("torus braid needs at least one strand");
    auto n = std::make_shared<Node>();
    n->q = q;
    n->eta = eta;
    return CablingBraid(std::move(n));
}

CablingBraid CablingBraid::cable(const CablingBraid& base, const CablingBraid& inner)
{
    if (!base.connected())
        throw DomainError("cabling base " + to_string(base) + " is not connected");
    auto n = std::make_shared<Node>();
    n->base = base;
    n->inner = inner;
    return CablingBraid(std::move(n));
}

bool CablingBraid::is_torus() const { return !node_->base.has_value(); }

Int CablingBraid::torus_q() const
{
    if (!is_torus())
        throw std::logic_error("not a torus braid");
    return node_->q;
}

Int CablingBraid::torus_eta() const
{
    if (!is_torus())
        throw std::logic_error("not a torus braid");
    return node_->eta;
}

const CablingBraid& CablingBraid::base() const
{
    if (is_torus())
        throw std::logic_error("torus braid has no cabling base");
    return *node_->base;
}

const CablingBraid& CablingBraid::inner() const
{
    if (is_torus())
        throw std::logic_error("torus braid has no cabling pattern");
    return *node_->inner;
}

Int CablingBraid::strands() const
{
    if (is_torus())
        return node_->q;
    return base().strands() * inner().strands();
}

bool CablingBraid::connected() const
{
    if (is_torus())
        return node_->q == 1 || std::gcd(node_->q, node_->eta) == 1;
    return inner().connected();
}

Int CablingBraid::writhe() const
{
    if (is_torus())
        return node_->eta * (node_->q - 1);
    const Int d = inner().strands();
    return d * d * base().writhe() + inner().writhe();
}

Int CablingBraid::winding() const
{
    if (is_torus())
        return node_->eta;
    return inner().strands() * base().winding() + inner().winding();
}

bool operator==(const CablingBraid& a, const CablingBraid& b)
{
    if (a.is_torus() != b.is_torus())
        return false;
    if (a.is_torus())
        return a.torus_q() == b.torus_q() && a.torus_eta() == b.torus_eta();
    return a.base() == b.base() && a.inner() == b.inner();
}

std::string to_string(const CablingBraid& b)
{
    if (b.is_torus())
        return "torus(" + std::to_string(b.torus_q()) + "," + std::to_string(b.torus_eta()) + ")";
    return "cable(" + to_string(b.base()) + "," + to_string(b.inner()) + ")";
}

namespace {

class BraidParser {
public:
    explicit BraidParser(std::string_view text)
        : text_(text)
    {
    }

    CablingBraid parse()
    {
        CablingBraid b = braid();
        skip_ws();
        if (pos_ != text_.size())
            fail("end of input");
        return b;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected)
    {
        throw std::invalid_argument("malformed braid '" + std::string(text_) + "' at offset "
                                    + std::to_string(pos_) + ": expected " + expected);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool accept(std::string_view word)
    {
        skip_ws();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view word)
    {
        if (!accept(word))
            fail("'" + std::string(word) + "'");
    }

    Int integer()
    {
        skip_ws();
        Int v = 0;
        const char* first = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
        if (ec != std::errc())
            fail("integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    CablingBraid braid()
    {
        if (accept("torus")) {
            expect("(");
            const Int q = integer();
            expect(",");
            const Int eta = integer();
            expect(")");
            return CablingBraid::torus(q, eta);
        }
        if (accept("cable")) {
            expect("(");
            CablingBraid base = braid();
            expect(",");
            CablingBraid inner = braid();
            expect(")");
            return CablingBraid::cable(base, inner);
        }
        fail("'torus' or 'cable'");
    }
};

Int ceil_half(Int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }
Int floor_half(Int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

void require_positive_parts(const std::vector<Int>& tuple)
{
    for (Int q : tuple)
        if (q < 1)
            throw std::invalid_argument("tuple entries must be positive");
}

} // namespace

CablingBraid parse_braid(std::string_view text)
{
    return BraidParser(text).parse();
}

Int writhe_retriv(Int w, Int m, Int dt)
{
    if (m < 1)
        throw std::invalid_argument("strand count must be positive");
    return w + m * (m - 1) * dt;
}

Int linking_nested(const CablingBraid& outer, const CablingBraid& inner)
{
    return outer.winding() * inner.strands();
}

Int linking_shared_prefix(const CablingBraid& base, const CablingBraid& outer_pattern,
                          const CablingBraid& inner_pattern)
{
    if (!base.connected())
        throw DomainError("shared cabling base " + to_string(base) + " is not connected");
    return base.writhe() * outer_pattern.strands() * inner_pattern.strands()
        + linking_nested(outer_pattern, inner_pattern);
}

BraidCollection::BraidCollection(std::vector<CablingBraid> components)
    : components_(std::move(components))
{
}

Int BraidCollection::strands() const
{
    Int s = 0;
    for (const auto& c : components_)
        s += c.strands();
    return s;
}

Int BraidCollection::writhe() const
{
    Int w = 0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        w += components_[i].writhe();
        for (std::size_t j = 0; j < i; ++j)
            w += 2 * linking_nested(components_[i], components_[j]);
    }
    return w;
}

Int BraidCollection::winding() const
{
    Int eta = 0;
    for (const auto& c : components_)
        eta += c.winding();
    return eta;
}

Int min_incoming_writhe(const OrbitClass& cls, const Partition& parts, Int t)
{
    Int w = cz_sum(cls, parts.total(), t);
    for (Int q : parts)
        w -= cz_index(cls, q, t);
    return w;
}

Int min_incoming_writhe(const PeriodicOrbit& orbit, const Partition& parts, Int t)
{
    return min_incoming_writhe(orbit.cls, parts, t);
}

Int max_outgoing_writhe(const OrbitClass& cls, const Partition& parts, Int t)
{
    return min_incoming_writhe(cls, parts, t);
}

Int max_outgoing_writhe(const PeriodicOrbit& orbit, const Partition& parts, Int t)
{
    return max_outgoing_writhe(orbit.cls, parts, t);
}

Int extremal_incoming_writhe(const OrbitClass& cls, const Partition& parts, Int t)
{
    const auto& q = parts.parts();
    std::vector<Int> rho;
    for (Int qi : q)
        rho.push_back(ceil_half(cz_index(cls, qi, t)));
    Int w = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        w += rho[i] * (q[i] - 1);
        for (std::size_t j = 0; j < q.size(); ++j)
            if (i != j)
                w += std::min(q[i] * rho[j], q[j] * rho[i]);
    }
    return w;
}

Int extremal_outgoing_writhe(const OrbitClass& cls, const Partition& parts, Int t)
{
    const auto& q = parts.parts();
    std::vector<Int> rho;
    for (Int qi : q)
        rho.push_back(floor_half(cz_index(cls, qi, t)));
    Int w = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        w += rho[i] * (q[i] - 1);
        for (std::size_t j = 0; j < q.size(); ++j)
            if (i != j)
                w += std::max(q[i] * rho[j], q[j] * rho[i]);
    }
    return w;
}

Int winding_bound(const OrbitClass& cls, Int q, Int t)
{
    return ceil_half(cz_index(cls, q, t));
}

WritheBound writhe_bound(const OrbitClass& cls, Int q, Int t)
{
    WritheBound b{winding_bound(cls, q, t) * (q - 1), true, {}};
    if (is_positive_hyperbolic(cls)) {
        b.equality_possible = q == 1;
        b.note = "q must be 1";
    } else if (is_negative_hyperbolic(cls)) {
        b.equality_possible = q % 2 != 0 || q == 2;
        b.note = "q must be odd or 2";
    }
    return b;
}

Int workhorse_slack(const OrbitClass& cls, const std::vector<Int>& tuple, Int t)
{
    require_positive_parts(tuple);
    std::vector<Int> rho;
    Int n = 0;
    Int lhs = 0;
    for (Int q : tuple) {
        const Int mu = cz_index(cls, q, t);
        rho.push_back(ceil_half(mu));
        lhs += mu - rho.back();
        n += q;
    }
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = 0; j < tuple.size(); ++j)
            lhs += std::min(tuple[i] * rho[j], tuple[j] * rho[i]);
    return lhs - cz_sum(cls, n, t);
}

Int mcc_slack(const OrbitClass& cls, const std::vector<Int>& q, const std::vector<Int>& d, Int t)
{
    if (q.size() != d.size())
        throw std::invalid_argument("multiplicity and cover lists differ in length");
    std::vector<Int> repeated;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (d[j] < 1)
            throw std::invalid_argument("cover degrees must be positive");
        repeated.insert(repeated.end(), static_cast<std::size_t>(d[j]), q[j]);
    }
    return workhorse_slack(cls, repeated, t);
}

bool workhorse_equality_expected(const OrbitClass& cls, const std::vector<Int>& tuple, Int t)
{
    require_positive_parts(tuple);
    if (is_positive_hyperbolic(cls))
        return true;
    if (is_negative_hyperbolic(cls)) {
        const auto ones = std::count(tuple.begin(), tuple.end(), Int{1});
        const auto odd = std::count_if(tuple.begin(), tuple.end(), [](Int q) { return q % 2 != 0; });
        return odd == ones && ones <= 1;
    }
    const Int n = std::accumulate(tuple.begin(), tuple.end(), Int{0});
    return Partition(tuple) == orbit_partition(cls, n, Direction::In, t);
}

} // namespace pfh
