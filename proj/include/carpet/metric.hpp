// Geodesic distance between two level-n words in O(n) per pair.
//
// Embedded into Z^2, the graph metric is the L1 distance except where the
// removed central squares ("holes") obstruct the straight corridor between
// the two points. The two words' deepest differing scale h decides which of
// the four relative layouts applies; cases II-IV add a detour around one
// binding hole, located from the western resp. southern word's letters.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "carpet/words.hpp"

namespace carpet {

enum class CaseKind : std::uint8_t { same_square, case_i, case_ii, case_iii, case_iv };
enum class TravelAxis : std::uint8_t { none, horizontal, vertical };
enum class DetourRoute : std::uint8_t { direct, via_ab, via_bc, via_cd, via_ad };

std::string to_string(CaseKind k);
std::string to_string(TravelAxis a);
std::string to_string(DetourRoute r);

struct DistanceCase {
    CaseKind kind = CaseKind::same_square;
    TravelAxis travel_axis = TravelAxis::none;
    // true when the inputs were exchanged so the first word is the western
    // (horizontal travel) or southern (vertical travel) one
    bool swapped = false;
};

// Corners of the binding hole in the full level-n frame. A is bottom-left,
// B bottom-right, C top-right, D top-left; side = 3^(l-1).
struct HoleCorners {
    LatticePoint a, b, c, d;
    std::int64_t side = 0;
    int level = 0;  // l+1, the recursion level of the hole
};

struct DistanceTrace {
    DistanceCase kind;
    std::optional<int> h;
    std::optional<int> obstruction_index;  // l (blocking 7) or l' (blocking 1)
    std::optional<HoleCorners> corners;
    DetourRoute route = DetourRoute::direct;
    std::int64_t value = 0;
};

constexpr std::int64_t l1(LatticePoint p, LatticePoint q) {
    const std::int64_t dx = p.x > q.x ? p.x - q.x : q.x - p.x;
    const std::int64_t dy = p.y > q.y ? p.y - q.y : q.y - p.y;
    return dx + dy;
}

// Deepest 1-based index where the x sequences differ; nullopt when identical
// (the words then label corners of one unit square).
std::optional<int> find_h(const Word& w1, const Word& w2);

// Deepest j < h with x_j equal to the blocking letter (7 when travelling
// east, 1 when travelling north); nullopt when absent.
std::optional<int> obstruction_index(const Word& w1, int h, XLetter blocking_letter);

// Corners of the hole at recursion level l+1 beside the word's scale-l
// position, in full level-n coordinates (the offset sum runs through every
// letter above l, which the two words of a pair share above h).
HoleCorners hole_corners(const Word& w1, int h, int ell);

// Case dispatch on the unordered letter pair {x1_h, x2_h}; total over all 28
// distinct pairs (checked at compile time).
DistanceCase classify(const Word& w1, const Word& w2, int h);

// Shortest way around a hole: p1 must be the western (horizontal travel) or
// southern (vertical travel) endpoint. The side of the hole to pass is chosen
// by comparing the endpoints' midpoint with the hole's center, ties taking
// the B/C (east) resp. D/C (north) route.
std::pair<DetourRoute, std::int64_t> route_around(LatticePoint p1, LatticePoint p2,
                                                  const HoleCorners& hc, TravelAxis axis);

// Full distance with the decision trail. Throws std::invalid_argument on
// level mismatch.
DistanceTrace distance(const Word& w1, const Word& w2);

// Allocation-free kernel over raw digit rows (stride = level-1) and
// precomputed points; the Word-level API and the pair-sum engines both call
// this. When trace is non-null every intermediate quantity is recorded.
std::int64_t distance_value(std::span<const XLetter> xs1, LatticePoint p1,
                            std::span<const XLetter> xs2, LatticePoint p2,
                            DistanceTrace* trace = nullptr);

}  // namespace carpet
