#include "floorgs/invariant.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace floorgs {

namespace {

// Runs fn(k) for k in [0, count) over `jobs` threads, strided so the split
// does not depend on timing.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn)
{
    const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            fn(k);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t k = w; k < count; k += workers)
                        fn(k);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

void require_integral(const SymLaurent& p)
{
    if (!p.has_integer_exponents())
        throw std::logic_error("invariant has a half-integer exponent: " + p.to_string());
}

} // namespace

SymLaurent MarkedDiagrams::contribution(std::size_t k, const Pairing& s) const
{
    SymLaurent sum;
    for (const auto& m : markings[k])
        sum += multiplicity(diagrams[k], m, s);
    return sum;
}

std::int64_t MarkedDiagrams::half_integer_multiplicities(const Pairing& s) const
{
    std::int64_t count = 0;
    for (std::size_t k = 0; k < diagrams.size(); ++k)
        for (const auto& m : markings[k])
            if (!multiplicity(diagrams[k], m, s).has_integer_exponents())
                ++count;
    return count;
}

SymLaurent MarkedDiagrams::evaluate(const Pairing& s, int jobs) const
{
    if (s.max_label() > element_count())
        throw std::out_of_range("pairing uses label " + std::to_string(s.max_label()) +
                                " > n = " + std::to_string(element_count()));
    std::vector<SymLaurent> parts(diagrams.size());
    parallel_for(diagrams.size(), jobs, [&](std::size_t k) { parts[k] = contribution(k, s); });
    SymLaurent total;
    for (const auto& p : parts)
        total += p;
    require_integral(total);
    return total;
}

SymLaurent MarkedDiagrams::evaluate(int s, int jobs) const
{
    if (profile.a == 0)
        return {};
    if (s < 0 || s > s_max())
        throw std::out_of_range("s = " + std::to_string(s) + " outside 0.." +
                                std::to_string(s_max()));
    return evaluate(Pairing::standard(s, element_count()), jobs);
}

MarkedDiagrams collect_marked_diagrams(const HProfile& h, int g, int jobs)
{
    MarkedDiagrams md;
    md.profile = h;
    md.genus = g;
    if (h.a == 0) {
        md.data = polygon_data(polygon_from_profile(h));
        return md;
    }
    md.data = polygon_data(polygon_from_profile(h));
    md.diagrams = enumerate_diagrams(h, g);
    md.markings.resize(md.diagrams.size());
    parallel_for(md.diagrams.size(), jobs,
                 [&](std::size_t k) { md.markings[k] = enumerate_markings(md.diagrams[k]); });
    return md;
}

SymLaurent invariant_S(const HProfile& h, int g, const Pairing& s)
{
    return collect_marked_diagrams(h, g).evaluate(s);
}

SymLaurent invariant(const HProfile& h, int g, int s)
{
    return collect_marked_diagrams(h, g).evaluate(s);
}

// ------------------------------------------------------------------- tables

bool InvariantTable::unchanged(std::size_t k, int s) const
{
    if (s <= s_lo || s > s_hi)
        return false;
    return rows[k][s - s_lo] == rows[k][s - s_lo - 1];
}

InvariantTable contribution_table(const MarkedDiagrams& md, int s_lo, int s_hi, int jobs)
{
    if (s_lo < 0 || s_hi < s_lo || (md.profile.a > 0 && s_hi > md.s_max()))
        throw std::out_of_range("s range outside 0.." + std::to_string(md.s_max()));
    InvariantTable t;
    t.profile = md.profile;
    t.genus = md.genus;
    t.s_lo = s_lo;
    t.s_hi = s_hi;
    t.diagrams = md.diagrams;
    t.rows.assign(md.diagrams.size(), {});
    const int n = md.element_count();
    parallel_for(md.diagrams.size(), jobs, [&](std::size_t k) {
        for (int s = s_lo; s <= s_hi; ++s)
            t.rows[k].push_back(md.contribution(k, Pairing::standard(s, n)));
    });
    for (int s = s_lo; s <= s_hi; ++s) {
        SymLaurent total;
        for (const auto& row : t.rows)
            total += row[s - s_lo];
        require_integral(total);
        t.totals.push_back(total);
    }
    return t;
}

InvariantTable contribution_table(const HProfile& h, int g, int s_lo, int s_hi, int jobs)
{
    return contribution_table(collect_marked_diagrams(h, g, jobs), s_lo, s_hi, jobs);
}

std::vector<std::int64_t> codegree_profile(const MarkedDiagrams& md, int s)
{
    const SymLaurent p = md.evaluate(s);
    const int top = md.top_degree();
    std::vector<std::int64_t> out;
    for (int i = 0; i <= 2 * std::max(top, 0); ++i)
        out.push_back(codeg_coeff(p, top, i));
    return out;
}

std::vector<std::int64_t> codegree_profile(const HProfile& h, int g, int s)
{
    return codegree_profile(collect_marked_diagrams(h, g), s);
}

} // namespace floorgs
