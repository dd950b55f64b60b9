#pragma once

#include "floorgs/diagram.hpp"
#include "floorgs/laurent.hpp"
#include "floorgs/marking.hpp"
#include "floorgs/polygon.hpp"

#include <cstdint>
#include <vector>

namespace floorgs {

/// All floor diagrams of one (profile, genus) with their markings up to
/// isomorphism. Building it is the expensive step; evaluating a pairing
/// against it is cheap.
struct MarkedDiagrams {
    HProfile profile;
    PolygonData data;
    int genus = 0;
    std::vector<FloorDiagram> diagrams;
    std::vector<std::vector<Marking>> markings; // parallel to diagrams

    /// n = y - 1 + g
    int element_count() const { return data.y - 1 + genus; }
    int s_max() const { return data.s_max(genus); }
    int top_degree() const { return data.g_max - genus; }

    /// Sum of mu_S over the markings of diagram k.
    SymLaurent contribution(std::size_t k, const Pairing& s) const;

    /// G_g(Delta, S). Throws std::out_of_range if S uses a label above n.
    SymLaurent evaluate(const Pairing& s, int jobs = 1) const;

    /// G_g(Delta, s) with the standard pairing; throws if s is out of range.
    SymLaurent evaluate(int s, int jobs = 1) const;

    /// Markings whose own multiplicity under S has a half-integer exponent.
    /// Only the total is required to be integral; this is a diagnostic.
    std::int64_t half_integer_multiplicities(const Pairing& s) const;
};

/// Enumerates diagrams and markings; `jobs` > 1 spreads marking enumeration
/// over worker threads without changing the result.
MarkedDiagrams collect_marked_diagrams(const HProfile& h, int g, int jobs = 1);

SymLaurent invariant_S(const HProfile& h, int g, const Pairing& s);
SymLaurent invariant(const HProfile& h, int g, int s);

/// Per-diagram contributions for s in [s_lo, s_hi].
struct InvariantTable {
    HProfile profile;
    int genus = 0;
    int s_lo = 0;
    int s_hi = 0;
    std::vector<FloorDiagram> diagrams;
    std::vector<std::vector<SymLaurent>> rows; // rows[diagram][s - s_lo]
    std::vector<SymLaurent> totals;            // totals[s - s_lo]

    /// Contribution of diagram k is the same at s and s - 1.
    bool unchanged(std::size_t k, int s) const;
};

InvariantTable contribution_table(const HProfile& h, int g, int s_lo, int s_hi, int jobs = 1);
InvariantTable contribution_table(const MarkedDiagrams& md, int s_lo, int s_hi, int jobs = 1);

/// <G_g(Delta, s)>_i for i = 0 .. 2(g_max - g).
std::vector<std::int64_t> codegree_profile(const MarkedDiagrams& md, int s);
std::vector<std::int64_t> codegree_profile(const HProfile& h, int g, int s);

} // namespace floorgs
