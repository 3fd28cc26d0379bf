#include "carpet/metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace carpet {
namespace {

struct CaseCell {
    CaseKind kind = CaseKind::same_square;  // same_square marks an unset cell
    TravelAxis axis = TravelAxis::none;
    bool swap = false;  // the second letter is the western/southern one
};

// The 28 unordered letter pairs, by relative position of the two copies:
//   I   — no obstruction: the two diagonals {0,4},{2,6}, the eight
//         three-apart pairs, and the four skew-adjacent odd pairs;
//   II  — opposite middles, separated by the central hole;
//   III — same row/column, two apart, one copy between;
//   IV  — adjacent copies.
consteval std::array<std::array<CaseCell, 8>, 8> make_dispatch() {
    std::array<std::array<CaseCell, 8>, 8> t{};
    auto set = [&](int a, int b, CaseKind kind, TravelAxis axis) {
        if (a == b || t[a][b].kind != CaseKind::same_square ||
            t[b][a].kind != CaseKind::same_square) {
            throw "duplicate or degenerate dispatch entry";
        }
        bool swap_ab = false, swap_ba = false;
        if (axis != TravelAxis::none) {
            const auto c1 = axis == TravelAxis::horizontal ? kXVector[a].x : kXVector[a].y;
            const auto c2 = axis == TravelAxis::horizontal ? kXVector[b].x : kXVector[b].y;
            if (c1 == c2) throw "obstructed pair without a travel direction";
            swap_ab = c1 > c2;
            swap_ba = !swap_ab;
        }
        t[a][b] = {kind, axis, swap_ab};
        t[b][a] = {kind, axis, swap_ba};
    };
    for (auto [a, b] : {std::pair{0, 4}, {2, 6},
                        {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 0}, {6, 1}, {7, 2},
                        {1, 3}, {3, 5}, {5, 7}, {7, 1}}) {
        set(a, b, CaseKind::case_i, TravelAxis::none);
    }
    set(1, 5, CaseKind::case_ii, TravelAxis::vertical);
    set(3, 7, CaseKind::case_ii, TravelAxis::horizontal);
    set(0, 2, CaseKind::case_iii, TravelAxis::horizontal);
    set(6, 4, CaseKind::case_iii, TravelAxis::horizontal);
    set(2, 4, CaseKind::case_iii, TravelAxis::vertical);
    set(0, 6, CaseKind::case_iii, TravelAxis::vertical);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {6, 5}, {5, 4}}) {
        set(a, b, CaseKind::case_iv, TravelAxis::horizontal);
    }
    for (auto [a, b] : {std::pair{0, 7}, {7, 6}, {2, 3}, {3, 4}}) {
        set(a, b, CaseKind::case_iv, TravelAxis::vertical);
    }
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            if (a != b && t[a][b].kind == CaseKind::same_square) throw "dispatch not total";
        }
    }
    return t;
}

constexpr auto kDispatch = make_dispatch();

int find_h_raw(std::span<const XLetter> xs1, std::span<const XLetter> xs2) {
    for (int i = static_cast<int>(xs1.size()); i >= 1; --i) {
        if (xs1[i - 1] != xs2[i - 1]) return i;
    }
    return 0;
}

int obstruction_raw(std::span<const XLetter> xs, int h, XLetter blocking) {
    for (int j = h - 1; j >= 1; --j) {
        if (xs[j - 1] == blocking) return j;
    }
    return 0;
}

HoleCorners corners_raw(std::span<const XLetter> xs, int ell) {
    const std::int64_t side = pow3(ell - 1);
    LatticePoint a{side, side};
    std::int64_t scale = side * 3;
    for (std::size_t k = static_cast<std::size_t>(ell); k < xs.size(); ++k) {
        a.x += scale * kXVector[xs[k]].x;
        a.y += scale * kXVector[xs[k]].y;
        scale *= 3;
    }
    return {a, {a.x + side, a.y}, {a.x + side, a.y + side}, {a.x, a.y + side}, side, ell + 1};
}

std::pair<DetourRoute, std::int64_t> route_raw(LatticePoint p1, LatticePoint p2,
                                               const HoleCorners& hc, TravelAxis axis) {
    if (axis == TravelAxis::vertical) {
        if (p1.x + p2.x >= hc.a.x + hc.b.x) {
            return {DetourRoute::via_bc, l1(p1, hc.b) + hc.side + l1(hc.c, p2)};
        }
        return {DetourRoute::via_ad, l1(p1, hc.a) + hc.side + l1(hc.d, p2)};
    }
    if (p1.y + p2.y >= hc.a.y + hc.d.y) {
        return {DetourRoute::via_cd, l1(p1, hc.d) + hc.side + l1(hc.c, p2)};
    }
    return {DetourRoute::via_ab, l1(p1, hc.a) + hc.side + l1(hc.b, p2)};
}

}  // namespace

std::string to_string(CaseKind k) {
    switch (k) {
        case CaseKind::same_square: return "same-square";
        case CaseKind::case_i: return "I";
        case CaseKind::case_ii: return "II";
        case CaseKind::case_iii: return "III";
        case CaseKind::case_iv: return "IV";
    }
    return "?";
}

std::string to_string(TravelAxis a) {
    switch (a) {
        case TravelAxis::none: return "none";
        case TravelAxis::horizontal: return "horizontal";
        case TravelAxis::vertical: return "vertical";
    }
    return "?";
}

std::string to_string(DetourRoute r) {
    switch (r) {
        case DetourRoute::direct: return "direct";
        case DetourRoute::via_ab: return "via_AB";
        case DetourRoute::via_bc: return "via_BC";
        case DetourRoute::via_cd: return "via_CD";
        case DetourRoute::via_ad: return "via_AD";
    }
    return "?";
}

std::optional<int> find_h(const Word& w1, const Word& w2) {
    if (w1.level() != w2.level()) {
        throw std::invalid_argument("find_h requires words of equal level");
    }
    const int h = find_h_raw(w1.xs, w2.xs);
    if (h == 0) return std::nullopt;
    return h;
}

std::optional<int> obstruction_index(const Word& w1, int h, XLetter blocking_letter) {
    if (h < 1 || h > w1.level() - 1) throw std::invalid_argument("h outside [1, level-1]");
    if (blocking_letter != 7 && blocking_letter != 1) {
        throw std::invalid_argument("blocking letter must be 7 or 1");
    }
    const int j = obstruction_raw(w1.xs, h, blocking_letter);
    if (j == 0) return std::nullopt;
    return j;
}

HoleCorners hole_corners(const Word& w1, int h, int ell) {
    if (!(1 <= ell && ell <= h && h <= w1.level() - 1)) {
        throw std::invalid_argument("hole_corners requires 1 <= l <= h <= level-1");
    }
    return corners_raw(w1.xs, ell);
}

DistanceCase classify(const Word& w1, const Word& w2, int h) {
    if (h < 1 || h > w1.level() - 1 || h > w2.level() - 1) {
        throw std::invalid_argument("h outside [1, level-1]");
    }
    const XLetter a = w1.xs[h - 1];
    const XLetter b = w2.xs[h - 1];
    if (a == b) throw std::invalid_argument("words do not differ at position h");
    const CaseCell& cell = kDispatch[a][b];
    return {cell.kind, cell.axis, cell.swap};
}

std::int64_t distance_value(std::span<const XLetter> xs1, LatticePoint p1,
                            std::span<const XLetter> xs2, LatticePoint p2,
                            DistanceTrace* trace) {
    const int h = find_h_raw(xs1, xs2);
    if (h == 0) {
        // identical squares: the points are corners of one unit square
        const std::int64_t v = l1(p1, p2);
        if (trace) *trace = {{CaseKind::same_square, TravelAxis::none, false},
                             std::nullopt, std::nullopt, std::nullopt, DetourRoute::direct, v};
        return v;
    }
    const CaseCell& cell = kDispatch[xs1[h - 1]][xs2[h - 1]];
    if (cell.kind == CaseKind::case_i) {
        const std::int64_t v = l1(p1, p2);
        if (trace) *trace = {{cell.kind, cell.axis, false},
                             h, std::nullopt, std::nullopt, DetourRoute::direct, v};
        return v;
    }
    if (cell.swap) {
        std::swap(xs1, xs2);
        std::swap(p1, p2);
    }
    int ell;
    if (cell.kind == CaseKind::case_ii) {
        ell = h;  // the central hole of the smallest frame containing both
    } else {
        const XLetter blocking = cell.axis == TravelAxis::horizontal ? 7 : 1;
        ell = obstruction_raw(xs1, h, blocking);
        if (ell == 0) {
            // no hole beside the leading word's nested position
            const std::int64_t v = l1(p1, p2);
            if (trace) *trace = {{cell.kind, cell.axis, cell.swap},
                                 h, std::nullopt, std::nullopt, DetourRoute::direct, v};
            return v;
        }
    }
    const HoleCorners hc = corners_raw(xs1, ell);
    const auto [route, v] = route_raw(p1, p2, hc, cell.axis);
    if (trace) *trace = {{cell.kind, cell.axis, cell.swap}, h, ell, hc, route, v};
    return v;
}

DistanceTrace distance(const Word& w1, const Word& w2) {
    if (w1.level() != w2.level()) {
        throw std::invalid_argument("distance requires words of equal level, got " +
                                    std::to_string(w1.level()) + " and " +
                                    std::to_string(w2.level()));
    }
    DistanceTrace trace;
    distance_value(w1.xs, word_to_point(w1), w2.xs, word_to_point(w2), &trace);
    return trace;
}

std::pair<DetourRoute, std::int64_t> route_around(LatticePoint p1, LatticePoint p2,
                                                  const HoleCorners& hc, TravelAxis axis) {
    if (axis == TravelAxis::none) throw std::invalid_argument("route_around needs a travel axis");
    return route_raw(p1, p2, hc, axis);
}

}  // namespace carpet
