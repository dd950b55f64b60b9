#include "floorgs/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace floorgs {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::OutsideHypotheses: return "outside-hypotheses";
    }
    return "?";
}

std::string CheckReport::format() const
{
    std::ostringstream os;
    os << "check=" << name << "  params=" << params << "  status=" << to_string(status);
    if (observed)
        os << "  observed=" << (*observed ? "pass" : "fail");
    os << "  lhs=" << (lhs.empty() ? "-" : lhs) << "  rhs=" << (rhs.empty() ? "-" : rhs);
    if (!detail.empty())
        os << "  detail=" << detail;
    return os.str();
}

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = checked::mul(r, n - k + i) / i;
    return r;
}

namespace {

std::string profile_params(const HProfile& h, int g)
{
    return "profile=[" + h.to_string() + "] g=" + std::to_string(g);
}

// Draws `order` distinct pair starts from {1..n-1} until they are disjoint.
Pairing sample_pairing(int order, int n, std::mt19937_64& rng)
{
    if (order == 0)
        return {};
    std::vector<int> candidates(std::max(n - 1, 0));
    std::iota(candidates.begin(), candidates.end(), 1);
    for (;;) {
        std::vector<int> starts;
        std::sample(candidates.begin(), candidates.end(), std::back_inserter(starts), order, rng);
        std::sort(starts.begin(), starts.end());
        bool disjoint = true;
        for (std::size_t k = 1; k < starts.size() && disjoint; ++k)
            disjoint = starts[k] - starts[k - 1] >= 2;
        if (disjoint && static_cast<int>(starts.size()) == order)
            return Pairing(std::move(starts));
    }
}

std::string join(const std::vector<std::int64_t>& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    os << "]";
    return os.str();
}

} // namespace

CheckReport check_pairing_independence(const HProfile& h, int g, int s, int trials,
                                       std::uint64_t seed)
{
    CheckReport r;
    r.name = "pairing-independence";
    r.params = profile_params(h, g) + " s=" + std::to_string(s) +
               " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
    const MarkedDiagrams md = collect_marked_diagrams(h, g);
    const SymLaurent reference = md.evaluate(s);
    r.lhs = reference.to_string();
    r.rhs = r.lhs;

    std::mt19937_64 rng(seed);
    std::ostringstream used;
    for (int t = 0; t < trials; ++t) {
        const Pairing p = sample_pairing(s, md.element_count(), rng);
        used << (t ? ";" : "") << p.to_string();
        const SymLaurent value = md.evaluate(p);
        if (value != reference) {
            r.status = CheckStatus::Fail;
            r.rhs = value.to_string();
            r.detail = "pairing=" + p.to_string();
            return r;
        }
    }
    r.detail = "pairings=" + used.str();
    return r;
}

CheckReport check_monotonicity(const HProfile& h, int g)
{
    CheckReport r;
    r.name = "monotonicity";
    r.params = profile_params(h, g);
    const MarkedDiagrams md = collect_marked_diagrams(h, g);
    std::vector<std::vector<std::int64_t>> rows;
    std::ostringstream values;
    for (int s = 0; s <= md.s_max(); ++s) {
        rows.push_back(codegree_profile(md, s));
        values << (s ? ";" : "") << join(rows.back());
    }
    r.lhs = values.str();
    r.rhs = "non-increasing in s";
    for (std::size_t s = 1; s < rows.size(); ++s) {
        for (std::size_t i = 0; i < rows[s].size(); ++i) {
            if (rows[s][i] > rows[s - 1][i]) {
                r.status = CheckStatus::Fail;
                r.detail = "codegree " + std::to_string(i) + " increases at s=" + std::to_string(s);
                return r;
            }
        }
    }
    return r;
}

CheckReport check_nested_positivity(const HProfile& h, int g, int trials, std::uint64_t seed)
{
    CheckReport r;
    r.name = "positivity";
    r.params = profile_params(h, g) + " trials=" + std::to_string(trials) +
               " seed=" + std::to_string(seed);
    const MarkedDiagrams md = collect_marked_diagrams(h, g);
    const int n = md.element_count();
    std::mt19937_64 rng(seed);
    std::size_t marked = 0;
    for (const auto& ms : md.markings)
        marked += ms.size();
    r.lhs = "mu_S1 - mu_S2";
    r.rhs = "N[q^{+-1}]";
    if (n < 2 || marked == 0) {
        r.detail = "nothing to compare";
        return r;
    }
    for (int t = 0; t < trials; ++t) {
        std::uniform_int_distribution<int> order_dist(1, n / 2);
        const Pairing outer = sample_pairing(order_dist(rng), n, rng);
        std::vector<int> kept;
        std::bernoulli_distribution keep(0.5);
        for (int i : outer.starts())
            if (keep(rng))
                kept.push_back(i);
        const Pairing inner(std::move(kept));
        for (std::size_t k = 0; k < md.diagrams.size(); ++k) {
            for (const auto& m : md.markings[k]) {
                const SymLaurent diff = multiplicity(md.diagrams[k], m, inner) -
                                        multiplicity(md.diagrams[k], m, outer);
                if (!diff.has_nonnegative_coeffs() || !diff.has_integer_exponents()) {
                    r.status = CheckStatus::Fail;
                    r.lhs = diff.to_string();
                    r.detail = "S1=" + inner.to_string() + " S2=" + outer.to_string() +
                               " diagram=" + std::to_string(k);
                    return r;
                }
            }
        }
    }
    r.detail = "marked_diagrams=" + std::to_string(marked);
    return r;
}

CheckReport check_polynomiality(const HProfile& h, int g, int i)
{
    CheckReport r;
    r.name = "polynomiality";
    r.params = profile_params(h, g) + " i=" + std::to_string(i);
    const MarkedDiagrams md = collect_marked_diagrams(h, g);
    const int g_max = md.data.g_max;
    const bool hypotheses = 2 * i <= h.e_bot && i <= g_max && g <= g_max;

    std::vector<std::int64_t> diff;
    for (int s = 0; s <= md.s_max(); ++s)
        diff.push_back(codeg_coeff(md.evaluate(s), md.top_degree(), i));
    std::ostringstream values;
    values << "coeffs=" << join(diff);
    for (int k = 0; k < i && !diff.empty(); ++k) {
        for (std::size_t s = 0; s + 1 < diff.size(); ++s)
            diff[s] = checked::sub(diff[s + 1], diff[s]);
        diff.pop_back();
    }
    const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
    const std::int64_t expected = checked::mul(checked::mul(sign, std::int64_t{1} << i),
                                               binomial(g_max - i, g));
    bool holds = true;
    for (std::int64_t v : diff)
        holds = holds && v == expected;

    r.lhs = "diff" + std::to_string(i) + "=" + join(diff);
    r.rhs = std::to_string(expected);
    r.detail = values.str() + " convention=forward-difference";
    if (!hypotheses) {
        r.status = CheckStatus::OutsideHypotheses;
        r.observed = holds;
    } else if (!holds) {
        r.status = CheckStatus::Fail;
    }
    return r;
}

CheckReport check_corner_cut(const HProfile& h, const HProfile& cut, int g, int s)
{
    CheckReport r;
    r.name = "corner-cut";
    r.params = profile_params(h, g) + " cut=[" + cut.to_string() + "] s=" + std::to_string(s);
    const MarkedDiagrams big = collect_marked_diagrams(h, g);
    const MarkedDiagrams small = collect_marked_diagrams(cut, g);
    if (s < 0 || s + 1 > big.s_max() || (cut.a > 0 && s > small.s_max())) {
        r.status = CheckStatus::OutsideHypotheses;
        r.detail = "s out of range";
        return r;
    }
    const SymLaurent lhs = big.evaluate(s + 1);
    const SymLaurent rhs = big.evaluate(s) - small.evaluate(s).scaled(2);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    if (lhs != rhs)
        r.status = CheckStatus::Fail;
    return r;
}

CheckReport check_ab_formula(int a, int b, int g, int s)
{
    CheckReport r;
    r.name = "ab-formula";
    r.params = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " g=" + std::to_string(g) +
               " s=" + std::to_string(s);
    const HProfile left = profile(trapezoid(0, a, a + b));
    const MarkedDiagrams lhs_md = collect_marked_diagrams(left, g);
    if (s < 0 || s > lhs_md.s_max()) {
        r.status = CheckStatus::OutsideHypotheses;
        r.detail = "s out of range";
        return r;
    }
    const SymLaurent lhs = lhs_md.evaluate(s);
    SymLaurent rhs;
    std::ostringstream terms;
    for (int j = 0; j <= a; ++j) {
        const HProfile term = profile(trapezoid(2, a - j, b + 2 * j));
        const SymLaurent value = collect_marked_diagrams(term, g).evaluate(s);
        const std::int64_t c = binomial(b + 2 * j, j);
        rhs += value.scaled(c);
        terms << (j ? " + " : "") << c << "*(" << value.to_string() << ")";
    }
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.detail = "terms=" + terms.str();
    if (lhs != rhs)
        r.status = CheckStatus::Fail;
    return r;
}

CheckReport check_lattice_invariance(const LatticePolygon& p1, const LatticePolygon& p2,
                                     const LatticeTransform& t, int g, int s)
{
    CheckReport r;
    r.name = "lattice-invariance";
    r.params = "p1=" + p1.to_string() + " p2=" + p2.to_string() + " g=" + std::to_string(g) +
               " s=" + std::to_string(s);
    if (!apply_transform(p1, t).congruent_by_translation(p2)) {
        r.status = CheckStatus::Fail;
        r.detail = "t(p1) is not a translate of p2";
        return r;
    }
    if (!is_h_transverse(p1) || !is_h_transverse(p2)) {
        r.status = CheckStatus::OutsideHypotheses;
        r.detail = "polygon not h-transverse";
        return r;
    }
    const MarkedDiagrams m1 = collect_marked_diagrams(profile(p1), g);
    const MarkedDiagrams m2 = collect_marked_diagrams(profile(p2), g);
    if (s < 0 || s > m1.s_max()) {
        r.status = CheckStatus::OutsideHypotheses;
        r.detail = "s out of range";
        return r;
    }
    const SymLaurent lhs = m1.evaluate(s);
    const SymLaurent rhs = m2.evaluate(s);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    if (lhs != rhs)
        r.status = CheckStatus::Fail;
    return r;
}

CheckReport check_bracket_identities()
{
    CheckReport r;
    r.name = "lemma32";
    r.params = "a,b in [-5,5] k in [1,8] odd w in [1,9] w1,w2 in [1,8]";
    r.lhs = "identities";
    r.rhs = "hold";
    auto fail = [&r](std::string what) {
        r.status = CheckStatus::Fail;
        r.rhs = "violated";
        r.detail = std::move(what);
        return r;
    };
    const SymLaurent two = qint(2);
    for (int a = -5; a <= 5; ++a) {
        for (int b = -5; b <= 5; ++b) {
            const SymLaurent lhs = (qint(a) * qint(b) * qint(a + b)).scaled(2);
            const SymLaurent first =
                two * (bracket_sq(a + b) * bracket_sub2(a) - bracket_sub2(a + b) * bracket_sq(a));
            const SymLaurent second =
                two * (bracket_sq(a) * bracket_sub2(b) + bracket_sub2(a) * bracket_sq(b));
            if (lhs != first || lhs != second)
                return fail("a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
    for (int k = 1; k <= 8; ++k)
        if (exact_div(qint(2 * k), two) != bracket_sub2(k))
            return fail("[2k]/[2] k=" + std::to_string(k));
    for (int w = 1; w <= 9; w += 2)
        if (qint(w) * qbrace(w) != bracket_sub2(w))
            return fail("[w]{w} w=" + std::to_string(w));
    for (int w1 = 1; w1 <= 8; ++w1) {
        for (int w2 = 1; w2 <= 8; ++w2) {
            const SymLaurent e = e2_factor(w1, w2);
            const SymLaurent closed =
                (bracket_sq(w1) * bracket_sub2(w2) + bracket_sub2(w1) * bracket_sq(w2))
                    .divided_exactly(2);
            if (e != closed || !e.has_integer_exponents())
                return fail("e2 w1=" + std::to_string(w1) + " w2=" + std::to_string(w2));
        }
    }
    return r;
}

} // namespace floorgs
