#include "pfh/commands.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

namespace pfh {

namespace {

class Emitter {
public:
    explicit Emitter(bool machine)
        : machine_(machine)
    {
    }

    template <class T>
    void add(std::string key, const T& value)
    {
        rows_.emplace_back(std::move(key), fmt::format("{}", value));
    }

    void add_list(const std::string& key, const std::vector<std::string>& values)
    {
        for (std::size_t i = 0; i < values.size(); ++i)
            add(machine_ ? fmt::format("{}.{}", key, i) : key, values[i]);
    }

    void flush(std::ostream& out) const
    {
        std::size_t width = 0;
        for (const auto& r : rows_)
            width = std::max(width, r.first.size());
        for (const auto& [k, v] : rows_) {
            if (machine_)
                out << k << '=' << v << '\n';
            else
                out << fmt::format("{:<{}}  {}\n", k, width, v);
        }
    }

private:
    bool machine_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void add_guards(Emitter& e, const SessionFile& f)
{
    for (const auto& [name, g] : f.guards())
        e.add("guard." + name, g);
}

std::string joined(const std::vector<Int>& v)
{
    return v.empty() ? "-" : fmt::format("{}", fmt::join(v, ","));
}

} // namespace

int run_index(const SessionFile& f, const std::string& cls, bool machine, std::ostream& out)
{
    const RelativeClassData d = f.class_data(cls);
    Emitter e(machine);
    e.add("class", cls);
    e.add("alpha", to_string(d.alpha));
    e.add("beta", to_string(d.beta));
    e.add("c1", d.c1_rel);
    e.add("Q", d.q_self);
    e.add("cz", cz_term(d));
    e.add("I", relative_index(d));
    const int ga = grading_mod2(d.alpha);
    const int gb = grading_mod2(d.beta);
    e.add("grading.alpha", ga);
    e.add("grading.beta", gb);
    int code = kExitOk;
    if (d.alpha.admissible() && d.beta.admissible()) {
        const bool ok = parity_check(d);
        e.add("parity", ok ? "ok" : "violated");
        if (!ok)
            code = kExitViolation;
    } else {
        e.add("parity", "n/a (orbit set not admissible)");
    }
    e.add("chern_parity", chern_parity_consistent(d) ? "consistent" : "inconsistent");
    add_guards(e, f);
    e.flush(out);
    return code;
}

int run_check(const SessionFile& f, const std::string& curve, bool machine, std::ostream& out)
{
    const CandidateCurve c = f.curve(curve);
    const IndexReport rep = index_inequality_report(c);
    if (!machine)
        out << fmt::format("I={} fredholm={} verdict={}\n", rep.I, rep.fredholm, to_string(rep.verdict));
    Emitter e(machine);
    if (machine) {
        e.add("I", rep.I);
        e.add("fredholm", rep.fredholm);
        e.add("verdict", to_string(rep.verdict));
    }
    e.add("curve", curve);
    e.add("admissible", yes_no(rep.admissibility.admissible));
    e.add_list("reason", rep.admissibility.reasons);
    e.add("writhe", effective_writhe(c));
    e.add("writhe_assumed", yes_no(rep.writhe_assumed));
    e.add("mu0", mu_zero(c));
    if (c.has_trivial_cylinders()) {
        e.add("q_cyl", cylinder_q_term(c));
        e.add("q_cyl_assumed", yes_no(rep.q_cyl_assumed));
    }
    if (rep.adjunction_residual)
        e.add("adjunction_residual", *rep.adjunction_residual);
    e.add("vir_dim", virtual_dimension(c));
    e.add("gfl_parity", gfl_parity(c));
    if (c.eta_total && c.writhe_total && !c.has_trivial_cylinders()) {
        const STranslation s = s_translation_check(c, *c.eta_total);
        e.add("s_translation", s.slack);
        e.add("s_translation_ok", yes_no(s.satisfied));
    }
    e.add_list("diagnostic", rep.diagnostics);
    add_guards(e, f);
    e.flush(out);
    return rep.verdict == Verdict::Consistent ? kExitOk : kExitViolation;
}

int run_euler(const SessionFile& f, const std::string& curve, bool machine, std::ostream& out)
{
    const CandidateCurve c = f.curve(curve);
    const EulerBound b = euler_bound(c);
    Emitter e(machine);
    e.add("curve", curve);
    e.add("I", relative_index(c.cls()));
    e.add("chi", c.chi());
    e.add("bound", b.bound);
    e.add("satisfied", yes_no(b.satisfied));
    e.add("equality", yes_no(b.equality));
    add_guards(e, f);
    e.flush(out);
    return b.satisfied ? kExitOk : kExitViolation;
}

int run_mcc(const SessionFile& f, const std::string& mcc, bool machine, std::ostream& out)
{
    const MccInput in = f.mcc(mcc);
    const MccReport rep = multiply_covered_bound(in.components, in.cross, in.combined);
    Emitter e(machine);
    e.add("mcc", mcc);
    e.add("lhs", rep.lhs);
    e.add("rhs", rep.rhs);
    e.add("slack", rep.slack);
    e.add("satisfied", yes_no(rep.satisfied));
    // The bound relies on Q(C_p) + w + eta - 2 delta >= 0 for each component.
    for (std::size_t p = 0; p < in.components.size(); ++p) {
        CandidateCurve c = in.components[p].curve;
        if (c.has_trivial_cylinders())
            continue;
        c.writhe_total = effective_writhe(c);
        const STranslation s = s_translation_check(c, c.eta_total ? *c.eta_total : extremal_winding(c));
        e.add(fmt::format("component.{}.s_translation", p), s.slack);
    }
    for (const auto& s : rep.per_orbit) {
        const char* side = s.side == Direction::In ? "in" : "out";
        const std::string key = fmt::format("orbit.{}.{}", s.orbit, side);
        if (machine)
            e.add(key, fmt::format("q={} d={} slack={}", joined(s.q), joined(s.d), s.slack));
        else
            e.add(key, fmt::format("q={}  d={}  slack {}", joined(s.q), joined(s.d), s.slack));
    }
    add_guards(e, f);
    e.flush(out);
    return rep.satisfied ? kExitOk : kExitViolation;
}

int run_partitions(const std::string& theta, Int m, bool machine, std::ostream& out)
{
    if (m < 1)
        throw std::invalid_argument("--m must be positive");
    const AngleRep a = parse_angle(theta, m);
    Emitter e(machine);
    e.add("theta", to_string(a));
    e.add("guard", a.guard());
    e.add("m", m);
    e.add("p_in", to_string(p_in(a, m)));
    e.add("p_out", to_string(p_out(a, m)));
    e.flush(out);
    return kExitOk;
}

std::string table_cell(const Partition& p)
{
    if (p.size() >= 5 && p.largest() == 1)
        return "1,…,1";
    return to_string(p);
}

std::vector<std::vector<std::string>> partition_table(Int max_m)
{
    if (max_m < 2 || max_m > 12)
        throw std::invalid_argument("--max-m must lie in 2..12");
    const auto intervals = farey_intervals(max_m);
    const auto reps = farey_representatives(max_m);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        std::vector<std::string> row{format_rational(intervals[i].lo) + "," + format_rational(intervals[i].hi)};
        for (Int m = 2; m <= max_m; ++m)
            row.push_back(table_cell(p_in(reps[i], m)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string emit_partition_table(Int max_m)
{
    auto rows = partition_table(max_m);
    std::vector<std::string> header{"theta"};
    for (Int m = 2; m <= max_m; ++m)
        header.push_back("m=" + std::to_string(m));
    rows.insert(rows.begin(), header);

    // Display width: the ellipsis is one column but three bytes.
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80)
                ++w;
        return w;
    };
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j)
            widths[j] = std::max(widths[j], width(r[j]));

    std::string text;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t j = 0; j < r.size(); ++j) {
            line += r[j];
            if (j + 1 < r.size())
                line.append(widths[j] - width(r[j]) + 2, ' ');
        }
        text += line + '\n';
    }
    return text;
}

int run_table(Int max_m, bool machine, std::ostream& out)
{
    if (!machine) {
        out << emit_partition_table(max_m);
        return kExitOk;
    }
    const auto intervals = farey_intervals(max_m);
    const auto reps = farey_representatives(max_m);
    for (std::size_t i = 0; i < intervals.size(); ++i)
        for (Int m = 2; m <= max_m; ++m)
            out << fmt::format("interval={},{} m={} p_in={}\n", format_rational(intervals[i].lo),
                               format_rational(intervals[i].hi), m, to_string(p_in(reps[i], m)));
    return kExitOk;
}

int run_verify(const SweepSpec& spec, bool machine, std::ostream& out)
{
    const SweepReport rep = run_sweep(spec);
    Emitter e(machine);
    e.add("order", spec.farey_order);
    e.add("max_n", spec.max_n);
    for (const auto& t : rep.tallies)
        e.add("lemma." + t.lemma, machine ? fmt::format("cases={} failures={}", t.cases, t.failures)
                                          : fmt::format("{} cases, {} failures", t.cases, t.failures));
    e.add("cases", rep.cases());
    e.add("result", rep.ok() ? "pass" : "fail");
    e.add_list("counterexample", rep.counterexamples);
    e.flush(out);
    return rep.ok() ? kExitOk : kExitViolation;
}

} // namespace pfh
