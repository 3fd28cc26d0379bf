#include "carpet/wiener.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace carpet {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Flat view of the canonical vertices for tight pair loops.
struct PackedView {
    int digits;
    const std::vector<LatticePoint>& points;
    std::vector<XLetter> letters;

    explicit PackedView(const VertexTable& table)
        : digits(table.level() - 1), points(table.points()), letters(table.letter_matrix()) {}

    std::span<const XLetter> row(std::uint32_t id) const {
        return {letters.data() + static_cast<std::size_t>(id) * digits,
                static_cast<std::size_t>(digits)};
    }
};

// Cumulative pair count of rows below r when pairing each i with every j > i.
std::uint64_t pairs_below_row(std::uint64_t v, std::uint64_t r) {
    return r * (2 * v - r - 1) / 2;
}

// Row boundaries splitting the pair space into `parts` contiguous ranges of
// nearly equal pair count.
std::vector<std::uint32_t> row_boundaries(std::uint32_t v, int parts) {
    const std::uint64_t total = pairs_below_row(v, v);
    std::vector<std::uint32_t> bounds(parts + 1, v);
    bounds[0] = 0;
    for (int t = 1; t < parts; ++t) {
        const std::uint64_t target = total / parts * t + (total % parts) * t / parts;
        std::uint32_t lo = bounds[t - 1], hi = v;
        while (lo < hi) {  // smallest r with pairs_below_row(r) >= target
            const std::uint32_t mid = lo + (hi - lo) / 2;
            if (pairs_below_row(v, mid) >= target) hi = mid;
            else lo = mid + 1;
        }
        bounds[t] = lo;
    }
    return bounds;
}

struct ProgressSink {
    std::function<void(std::uint64_t, std::uint64_t)> fn;
    std::uint64_t total = 0;
    std::uint64_t interval = 1ull << 26;
    std::atomic<std::uint64_t> done{0};
    std::mutex mutex;
    std::uint64_t last_reported = 0;

    void add(std::uint64_t n) {
        if (!fn || n == 0) return;
        const std::uint64_t before = done.fetch_add(n);
        if (before / interval != (before + n) / interval) {
            std::scoped_lock lock(mutex);
            fn(before + n, total);
            last_reported = before + n;
        }
    }

    // guarantees a final (total, total) call
    void finish() {
        if (!fn) return;
        std::scoped_lock lock(mutex);
        if (last_reported != total) fn(total, total);
    }
};

// The eight dihedral images of every vertex, reduced to orbit representatives
// with multiplicities.
struct Orbits {
    std::vector<std::uint32_t> reps;
    std::vector<std::uint32_t> mult;
};

Orbits d4_orbits(const VertexTable& table) {
    const std::int64_t extent = pow3(table.level() - 1);
    Orbits orbits;
    for (std::uint32_t id = 0; id < table.count(); ++id) {
        std::array<std::uint32_t, 8> image_ids{};
        std::uint32_t min_id = id;
        for (int op = 0; op < 8; ++op) {
            const auto q = table.find(d4_image(op, table.point(id), extent));
            if (!q) throw std::logic_error("dihedral image is not a vertex");
            image_ids[op] = *q;
            min_id = std::min(min_id, *q);
        }
        if (min_id != id) continue;
        std::sort(image_ids.begin(), image_ids.end());
        const auto distinct =
            std::unique(image_ids.begin(), image_ids.end()) - image_ids.begin();
        orbits.reps.push_back(id);
        orbits.mult.push_back(static_cast<std::uint32_t>(distinct));
    }
    return orbits;
}

uint128 formula_total_plain(const PackedView& pv, int workers, ProgressSink& progress) {
    const std::uint32_t v = static_cast<std::uint32_t>(pv.points.size());
    const int parts = std::max(1, workers);
    const auto bounds = row_boundaries(v, parts);
    std::vector<uint128> partial(parts, 0);
    auto run = [&](int part) {
        uint128 acc = 0;
        for (std::uint32_t i = bounds[part]; i < bounds[part + 1]; ++i) {
            const auto row_i = pv.row(i);
            const LatticePoint pi = pv.points[i];
            std::uint64_t row_sum = 0;
            for (std::uint32_t j = i + 1; j < v; ++j) {
                row_sum += static_cast<std::uint64_t>(
                    distance_value(row_i, pi, pv.row(j), pv.points[j]));
            }
            acc += row_sum;
            progress.add(v - i - 1);
        }
        partial[part] = acc;
    };
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts);
        for (int p = 0; p < parts; ++p) pool.emplace_back(run, p);
        for (auto& t : pool) t.join();
    }
    uint128 total = 0;
    for (uint128 p : partial) total += p;
    return total;
}

uint128 formula_total_symmetry(const PackedView& pv, const Orbits& orbits, int workers,
                               ProgressSink& progress) {
    const std::uint32_t v = static_cast<std::uint32_t>(pv.points.size());
    const std::size_t reps = orbits.reps.size();
    const int parts = std::max(1, workers);
    std::vector<uint128> partial(parts, 0);
    auto run = [&](int part) {
        const std::size_t lo = reps * part / parts;
        const std::size_t hi = reps * (part + 1) / parts;
        uint128 acc = 0;
        for (std::size_t r = lo; r < hi; ++r) {
            const std::uint32_t i = orbits.reps[r];
            const auto row_i = pv.row(i);
            const LatticePoint pi = pv.points[i];
            std::uint64_t star_sum = 0;  // sum of distances from i to every vertex
            for (std::uint32_t j = 0; j < v; ++j) {
                star_sum += static_cast<std::uint64_t>(
                    distance_value(row_i, pi, pv.row(j), pv.points[j]));
            }
            acc += static_cast<uint128>(star_sum) * orbits.mult[r];
            progress.add(v);
        }
        partial[part] = acc;
    };
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts);
        for (int p = 0; p < parts; ++p) pool.emplace_back(run, p);
        for (auto& t : pool) t.join();
    }
    uint128 doubled = 0;
    for (uint128 p : partial) doubled += p;
    if (doubled % 2 != 0) throw std::logic_error("orbit-weighted distance sum must be even");
    return doubled / 2;
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::formula: return "formula";
        case Method::oracle: return "oracle";
        case Method::both: return "both";
    }
    return "?";
}

WienerReport wiener_formula(const VertexTable& table, const FormulaOptions& opt) {
    const auto start = Clock::now();
    const PackedView pv(table);
    const std::uint32_t v = static_cast<std::uint32_t>(table.count());

    ProgressSink progress;
    progress.fn = opt.progress;
    progress.interval = std::max<std::uint64_t>(1, opt.progress_interval);

    WienerReport report;
    report.level = table.level();
    report.vertex_count = v;
    report.method = Method::formula;
    if (opt.use_symmetry) {
        const Orbits orbits = d4_orbits(table);
        progress.total = static_cast<std::uint64_t>(orbits.reps.size()) * v;
        report.wiener = formula_total_symmetry(pv, orbits, opt.workers, progress);
    } else {
        progress.total = pairs_below_row(v, v);
        report.wiener = formula_total_plain(pv, opt.workers, progress);
    }
    progress.finish();
    report.seconds = elapsed_seconds(start);
    return report;
}

WienerReport wiener_formula(int level, int workers) {
    FormulaOptions opt;
    opt.workers = workers;
    return wiener_formula(build_vertex_table(level), opt);
}

WienerReport run_wiener(int level, Method method, int workers, int word_cap, int oracle_cap,
                        bool use_symmetry,
                        std::function<void(std::uint64_t, std::uint64_t)> progress) {
    const auto start = Clock::now();
    WienerReport report;
    report.level = level;
    report.method = method;
    if (method == Method::oracle) {
        const AdjacencyGraph g = build_graph(level, oracle_cap);
        report.vertex_count = g.vertex_count();
        report.wiener = oracle_wiener(g, workers);
        report.seconds = elapsed_seconds(start);
        return report;
    }
    FormulaOptions opt;
    opt.workers = workers;
    opt.use_symmetry = use_symmetry;
    opt.level_cap = word_cap;
    opt.progress = std::move(progress);
    const VertexTable table = build_vertex_table(level, word_cap);
    WienerReport formula = wiener_formula(table, opt);
    report.vertex_count = formula.vertex_count;
    report.wiener = formula.wiener;
    if (method == Method::both) {
        const AdjacencyGraph g = build_graph(level, oracle_cap);
        if (g.vertex_count() != table.count()) {
            throw std::logic_error("oracle graph and vertex table disagree on vertex count");
        }
        report.oracle_value = oracle_wiener(g, workers);
        report.mismatch_count = (*report.oracle_value == report.wiener) ? 0 : 1;
    }
    report.seconds = elapsed_seconds(start);
    return report;
}

std::vector<WienerReport> make_table(int max_level, int workers, int word_cap, int oracle_cap) {
    if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
    std::vector<WienerReport> rows;
    rows.reserve(max_level);
    for (int level = 1; level <= max_level; ++level) {
        const Method method =
            (level <= oracle_cap && level <= kMaxOracleLevel) ? Method::both : Method::formula;
        rows.push_back(run_wiener(level, method, workers, word_cap, oracle_cap));
    }
    return rows;
}

namespace {

struct MismatchCollector {
    std::uint64_t count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stored;

    void add(std::uint32_t i, std::uint32_t j) {
        ++count;
        if (stored.size() < ValidationReport::kMaxStored) stored.emplace_back(i, j);
    }
};

ValidationReport finish_validation(int level, const VertexTable& table, std::uint64_t pairs,
                                   const std::vector<MismatchCollector>& parts,
                                   Clock::time_point start) {
    ValidationReport report;
    report.level = level;
    report.pairs_checked = pairs;
    for (const auto& part : parts) {
        report.mismatch_count += part.count;
        for (const auto& [i, j] : part.stored) {
            if (report.mismatches.size() >= ValidationReport::kMaxStored) break;
            Mismatch m;
            m.word1 = table.canonical_word(i);
            m.word2 = table.canonical_word(j);
            m.trace = distance(m.word1, m.word2);
            m.formula_value = m.trace.value;
            report.mismatches.push_back(std::move(m));
        }
    }
    report.seconds = elapsed_seconds(start);
    return report;
}

// graph and table enumerate the same vertex set in the same order by
// construction; validation leans on that, so check it once.
void check_aligned(const AdjacencyGraph& g, const VertexTable& table) {
    if (g.points != table.points()) {
        throw std::logic_error("oracle graph and vertex table enumerate different vertices");
    }
}

}  // namespace

ValidationReport validate_exhaustive(int level, int workers, int oracle_cap) {
    const auto start = Clock::now();
    const AdjacencyGraph g = build_graph(level, oracle_cap);
    const VertexTable table = build_vertex_table(level, level);  // graph cap already passed
    check_aligned(g, table);
    const PackedView pv(table);
    const std::uint32_t v = static_cast<std::uint32_t>(table.count());

    const int parts = std::max(1, workers);
    const auto bounds = row_boundaries(v, parts);
    std::vector<MismatchCollector> collectors(parts);
    auto run = [&](int part) {
        std::vector<std::uint16_t> dist;
        std::vector<std::uint32_t> queue;
        auto& out = collectors[part];
        for (std::uint32_t i = bounds[part]; i < bounds[part + 1]; ++i) {
            bfs_from(g, i, dist, queue);
            const auto row_i = pv.row(i);
            const LatticePoint pi = pv.points[i];
            for (std::uint32_t j = i + 1; j < v; ++j) {
                const std::int64_t f = distance_value(row_i, pi, pv.row(j), pv.points[j]);
                if (f != dist[j]) out.add(i, j);
            }
        }
    };
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts);
        for (int p = 0; p < parts; ++p) pool.emplace_back(run, p);
        for (auto& t : pool) t.join();
    }
    auto report = finish_validation(level, table, pairs_below_row(v, v), collectors, start);
    for (auto& m : report.mismatches) {
        const auto i = table.find(word_to_point(m.word1));
        const auto j = table.find(word_to_point(m.word2));
        m.oracle_value = bfs_from(g, *i)[*j];
    }
    return report;
}

ValidationReport validate_sampled(int level, std::uint64_t samples, std::uint64_t seed,
                                  int workers, int oracle_cap) {
    if (samples < 1) throw std::invalid_argument("sample size must be >= 1");
    const auto start = Clock::now();
    const AdjacencyGraph g = build_graph(level, oracle_cap);
    const VertexTable table = build_vertex_table(level, level);
    check_aligned(g, table);
    const PackedView pv(table);
    const std::uint32_t v = static_cast<std::uint32_t>(table.count());

    // Raw 64-bit draws reduced modulo the vertex count: uniform_int_distribution
    // is implementation-defined and would break seeded reproducibility.
    std::mt19937_64 gen(seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(samples);
    for (std::uint64_t k = 0; k < samples; ++k) {
        std::uint32_t a, b;
        do {
            a = static_cast<std::uint32_t>(gen() % v);
            b = static_cast<std::uint32_t>(gen() % v);
        } while (a == b);
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(pairs.begin(), pairs.end());

    // group by source so each distinct source costs one BFS
    std::vector<std::uint64_t> group_starts;
    for (std::uint64_t k = 0; k < pairs.size(); ++k) {
        if (k == 0 || pairs[k].first != pairs[k - 1].first) group_starts.push_back(k);
    }
    group_starts.push_back(pairs.size());
    const std::size_t groups = group_starts.size() - 1;

    const int parts = static_cast<int>(std::min<std::size_t>(std::max(1, workers), groups));
    std::vector<MismatchCollector> collectors(parts);
    auto run = [&](int part) {
        std::vector<std::uint16_t> dist;
        std::vector<std::uint32_t> queue;
        auto& out = collectors[part];
        const std::size_t glo = groups * part / parts;
        const std::size_t ghi = groups * (part + 1) / parts;
        for (std::size_t gi = glo; gi < ghi; ++gi) {
            const std::uint32_t i = pairs[group_starts[gi]].first;
            bfs_from(g, i, dist, queue);
            const auto row_i = pv.row(i);
            const LatticePoint pi = pv.points[i];
            for (std::uint64_t k = group_starts[gi]; k < group_starts[gi + 1]; ++k) {
                const std::uint32_t j = pairs[k].second;
                const std::int64_t f = distance_value(row_i, pi, pv.row(j), pv.points[j]);
                if (f != dist[j]) out.add(i, j);
            }
        }
    };
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts);
        for (int p = 0; p < parts; ++p) pool.emplace_back(run, p);
        for (auto& t : pool) t.join();
    }
    auto report = finish_validation(level, table, samples, collectors, start);
    for (auto& m : report.mismatches) {
        const auto i = table.find(word_to_point(m.word1));
        const auto j = table.find(word_to_point(m.word2));
        m.oracle_value = bfs_from(g, *i)[*j];
    }
    return report;
}

}  // namespace carpet
