#include "carpet/words.hpp"

#include <algorithm>
#include <cassert>

namespace carpet {

Word parse_word(std::string_view text, int level) {
    if (level < 1 || level > kMaxLevel) {
        throw CapError("level " + std::to_string(level) + " outside supported range [1, " +
                       std::to_string(kMaxLevel) + "]");
    }
    if (text.size() != static_cast<std::size_t>(level)) {
        throw ParseError("word \"" + std::string(text) + "\" has length " +
                             std::to_string(text.size()) + ", expected " + std::to_string(level) +
                             " for level " + std::to_string(level),
                         text.size());
    }
    Word w;
    const char y = text[0];
    if (y < 'a' || y > 'd') {
        throw ParseError(std::string("invalid corner letter '") + y + "' at position 0", 0);
    }
    w.y = static_cast<YLetter>(y - 'a');
    w.xs.reserve(text.size() - 1);
    for (std::size_t i = 1; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '7') {
            throw ParseError(std::string("invalid copy digit '") + c + "' at position " +
                                 std::to_string(i),
                             i);
        }
        w.xs.push_back(static_cast<XLetter>(c - '0'));
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.xs.size() + 1);
    s.push_back(static_cast<char>('a' + static_cast<int>(w.y)));
    for (XLetter x : w.xs) s.push_back(static_cast<char>('0' + x));
    return s;
}

LatticePoint word_to_point(const Word& w) {
    LatticePoint p = kYVector[static_cast<std::size_t>(w.y)];
    std::int64_t scale = 1;
    for (XLetter x : w.xs) {
        p.x += scale * kXVector[x].x;
        p.y += scale * kXVector[x].y;
        scale *= 3;
    }
    return p;
}

std::strong_ordering compare_words(const Word& w1, const Word& w2) {
    if (w1.level() != w2.level()) {
        throw std::invalid_argument("cannot compare words of levels " +
                                    std::to_string(w1.level()) + " and " +
                                    std::to_string(w2.level()));
    }
    if (auto c = w1.y <=> w2.y; c != 0) return c;
    return std::lexicographical_compare_three_way(w1.xs.begin(), w1.xs.end(), w2.xs.begin(),
                                                  w2.xs.end());
}

LatticePoint d4_image(int op, LatticePoint p, std::int64_t extent) {
    assert(op >= 0 && op < 8);
    if (op >= 4) p = {extent - p.x, p.y};  // reflect across the vertical midline
    switch (op & 3) {                      // then rotate by 90-degree steps
        case 0: return p;
        case 1: return {p.y, extent - p.x};
        case 2: return {extent - p.x, extent - p.y};
        default: return {extent - p.y, p.x};
    }
}

VertexTable::VertexTable(int level, std::vector<LatticePoint> points,
                         std::vector<std::uint64_t> ranks)
    : level_(level), points_(std::move(points)), ranks_(std::move(ranks)) {
    index_.reserve(points_.size() * 2);
    for (std::uint32_t id = 0; id < points_.size(); ++id) {
        index_.emplace(pack_point(points_[id]), id);
    }
}

Word VertexTable::canonical_word(std::uint32_t id) const {
    const std::uint64_t rank = ranks_[id];
    const int digits = level_ - 1;
    Word w;
    w.y = static_cast<YLetter>(rank >> (3 * digits));
    w.xs.resize(digits);
    for (int p = 0; p < digits; ++p) {
        w.xs[p] = static_cast<XLetter>((rank >> (3 * (digits - 1 - p))) & 7);
    }
    return w;
}

std::optional<std::uint32_t> VertexTable::find(LatticePoint p) const {
    auto it = index_.find(pack_point(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<XLetter> VertexTable::letter_matrix() const {
    const int digits = level_ - 1;
    std::vector<XLetter> m(points_.size() * static_cast<std::size_t>(digits));
    for (std::uint32_t id = 0; id < points_.size(); ++id) {
        const std::uint64_t rank = ranks_[id];
        for (int p = 0; p < digits; ++p) {
            m[id * static_cast<std::size_t>(digits) + p] =
                static_cast<XLetter>((rank >> (3 * (digits - 1 - p))) & 7);
        }
    }
    return m;
}

VertexTable build_vertex_table(int level, int level_cap) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (level > level_cap || level > kMaxTableLevel) {
        throw CapError("vertex table for level " + std::to_string(level) +
                       " exceeds the cap (" + std::to_string(std::min(level_cap, kMaxTableLevel)) +
                       "); raise the cap to proceed");
    }
    const int digits = level - 1;
    const std::uint64_t suffixes = 1ull << (3 * digits);  // 8^(n-1)

    // Enumeration by rank is in lexicographic word order, so the first label
    // seen for a point is its canonical word.
    std::unordered_map<std::uint64_t, std::uint64_t> canon;  // packed point -> rank
    canon.reserve(suffixes * 2);
    for (std::uint64_t rank = 0; rank < 4 * suffixes; ++rank) {
        LatticePoint p = kYVector[rank >> (3 * digits)];
        std::int64_t scale = 1;
        // rank digit d is the word letter at array position digits-1-d
        for (int d = digits - 1; d >= 0; --d) {
            const XLetter x = static_cast<XLetter>((rank >> (3 * d)) & 7);
            p.x += scale * kXVector[x].x;
            p.y += scale * kXVector[x].y;
            scale *= 3;
        }
        canon.try_emplace(pack_point(p), rank);
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(canon.begin(), canon.end());
    std::sort(entries.begin(), entries.end());  // packed key order == (x, y) order
    std::vector<LatticePoint> points;
    std::vector<std::uint64_t> ranks;
    points.reserve(entries.size());
    ranks.reserve(entries.size());
    for (const auto& [key, rank] : entries) {
        points.push_back({static_cast<std::int64_t>(key >> 32),
                          static_cast<std::int64_t>(key & 0xffffffffu)});
        ranks.push_back(rank);
    }
    return VertexTable(level, std::move(points), std::move(ranks));
}

}  // namespace carpet
