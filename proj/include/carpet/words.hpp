// Word labels for carpet graph vertices, their Z^2 embedding, and the
// canonical vertex table.
//
// A level-n vertex label is one letter from {a,b,c,d} (corner of the innermost
// unit square) followed by n-1 digits from {0..7} (copy index at each scale,
// counterclockwise from the bottom-left of the 3x3-minus-center layout).
// Several labels can denote the same vertex; the embedding into Z^2 is what
// identifies them.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace carpet {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }

enum class YLetter : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

// X letters are plain digits 0..7; a dedicated enum would add noise for no safety.
using XLetter = std::uint8_t;

// Embedding vectors. Y letters are the corners of the unit square, X letters
// the eight copy positions of the 3x3 layout minus its center.
inline constexpr std::array<LatticePoint, 4> kYVector = {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
inline constexpr std::array<LatticePoint, 8> kXVector = {
    {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};

// Structural ceiling for parsing and distance arithmetic: coordinates and
// detour lengths stay well inside int64 for level <= 30.
inline constexpr int kMaxLevel = 30;
// Table/graph construction ceilings. Packed point keys require coordinates
// < 2^32 (level <= 21); the defaults keep enumeration cost explicit.
inline constexpr int kMaxTableLevel = 21;
inline constexpr int kMaxOracleLevel = 10;
inline constexpr int kDefaultWordCap = 8;
inline constexpr int kDefaultOracleCap = 6;

// Raised when a requested level exceeds a configured cap or structural ceiling.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

constexpr std::int64_t pow3(int e) {
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) p *= 3;
    return p;
}

struct Word {
    YLetter y = YLetter::a;
    std::vector<XLetter> xs;  // length level-1, xs[i] is the letter at scale i+1

    int level() const { return static_cast<int>(xs.size()) + 1; }
    friend bool operator==(const Word&, const Word&) = default;
};

// Text form: one lowercase y letter immediately followed by the x digits,
// e.g. "b432". The level is explicit so truncated input is caught.
Word parse_word(std::string_view text, int level);
std::string to_string(const Word& w);

// w = v_y + sum_i 3^(i-1) v_{x_i}
LatticePoint word_to_point(const Word& w);

// Lexicographic order, y first (a<b<c<d), then digits left to right.
// Throws std::invalid_argument on level mismatch.
std::strong_ordering compare_words(const Word& w1, const Word& w2);

// The eight symmetries of the square [0,extent]^2; op 0 is the identity,
// 1..3 rotations, 4..7 reflections. All are graph automorphisms.
LatticePoint d4_image(int op, LatticePoint p, std::int64_t extent);

inline std::uint64_t pack_point(LatticePoint p) {
    return (static_cast<std::uint64_t>(p.x) << 32) | static_cast<std::uint64_t>(p.y);
}

// One entry per distinct vertex of the level-n graph, indexed in (x, y)
// lattice order. The canonical word of a vertex is the lexicographically
// smallest label embedding to its point; it is stored as the label's
// enumeration rank (y in the top bits, digits below), which decodes on demand.
class VertexTable {
public:
    VertexTable(int level, std::vector<LatticePoint> points, std::vector<std::uint64_t> ranks);

    int level() const { return level_; }
    std::size_t count() const { return points_.size(); }
    LatticePoint point(std::uint32_t id) const { return points_[id]; }
    const std::vector<LatticePoint>& points() const { return points_; }
    Word canonical_word(std::uint32_t id) const;
    std::optional<std::uint32_t> find(LatticePoint p) const;

    // Flat (level-1)-stride digit matrix of all canonical words, for tight
    // pair loops.
    std::vector<XLetter> letter_matrix() const;

private:
    int level_;
    std::vector<LatticePoint> points_;
    std::vector<std::uint64_t> ranks_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// Enumerates all 4*8^(n-1) words, groups them by embedded point and keeps the
// smallest label per point. Throws CapError beyond the cap.
VertexTable build_vertex_table(int level, int level_cap = kDefaultWordCap);

}  // namespace carpet
