#pragma once

#include "floorgs/invariant.hpp"
#include "floorgs/polygon.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace floorgs {

enum class CheckStatus { Pass, Fail, OutsideHypotheses };

std::string to_string(CheckStatus s);

/// One line per check:
/// `check=<name>  params=<...>  status=<...>  lhs=<poly>  rhs=<poly>`.
struct CheckReport {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::Pass;
    std::string lhs;
    std::string rhs;
    std::string detail;
    /// For OutsideHypotheses: whether the statement held anyway, when it
    /// could be evaluated at all.
    std::optional<bool> observed;

    bool failed() const { return status == CheckStatus::Fail; }
    std::string format() const;
};

/// The invariant computed with the standard pairing agrees with `trials`
/// uniformly sampled pairings of order s (seeded rejection sampling over
/// {1..n}).
CheckReport check_pairing_independence(const HProfile& h, int g, int s, int trials,
                                       std::uint64_t seed);

/// <G_g(Delta, s)>_i is non-increasing in s for every codegree i.
CheckReport check_monotonicity(const HProfile& h, int g);

/// mu_{S1} - mu_{S2} has nonnegative coefficients for nested pairings
/// S1 within S2, on every marked diagram of (h, g).
CheckReport check_nested_positivity(const HProfile& h, int g, int trials, std::uint64_t seed);

/// The i-th forward difference of s -> <G_g(Delta, s)>_i is constant and
/// equal to (-2)^i * C(g_max - i, g) over s = 0 .. s_max - i.
CheckReport check_polynomiality(const HProfile& h, int g, int i);

/// G_g(Delta, s+1) == G_g(Delta, s) - 2 G_g(cut, s).
CheckReport check_corner_cut(const HProfile& h, const HProfile& cut, int g, int s);

/// G_g(D0_{a,a+b}, s) == sum_j C(b+2j, j) G_g(D2_{a-j,b+2j}, s).
CheckReport check_ab_formula(int a, int b, int g, int s);

/// G_g(p1, s) == G_g(p2, s) where p2 is t(p1) up to translation.
CheckReport check_lattice_invariance(const LatticePolygon& p1, const LatticePolygon& p2,
                                     const LatticeTransform& t, int g, int s);

/// Bracket identities: the two-term expansions of 2[a][b][a+b],
/// [2k]/[2] = [k]_2, [w]{w} = [w]_2 and exactness of the e2 factor.
CheckReport check_bracket_identities();

std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace floorgs
