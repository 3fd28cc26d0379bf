// Wiener index engines and the formula-vs-BFS validation harness.
//
// The formula engine sums the word-metric over all unordered pairs of
// canonical vertices. The pair space is split into contiguous ranges whose
// partial sums are reduced in range order, so the total is bit-identical for
// every worker count.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "carpet/metric.hpp"
#include "carpet/oracle.hpp"
#include "carpet/words.hpp"

namespace carpet {

enum class Method : std::uint8_t { formula, oracle, both };

std::string to_string(Method m);

struct WienerReport {
    int level = 0;
    std::uint64_t vertex_count = 0;
    uint128 wiener = 0;  // formula value, or the oracle value when method==oracle
    Method method = Method::formula;
    std::optional<uint128> oracle_value;  // set when method==both
    // number of disagreeing engine totals (0 or 1) when method==both
    std::uint32_t mismatch_count = 0;
    double seconds = 0.0;

    bool agreed() const { return mismatch_count == 0; }
};

struct FormulaOptions {
    int workers = 1;
    // Restrict the outer sweep to one vertex per dihedral orbit, weighting by
    // orbit size. Must reproduce the plain sweep bit-exactly.
    bool use_symmetry = false;
    int level_cap = kDefaultWordCap;
    // Called with (pairs done, pairs total) roughly every progress_interval
    // pairs; noop when empty.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
    std::uint64_t progress_interval = 1ull << 26;
};

WienerReport wiener_formula(const VertexTable& table, const FormulaOptions& opt = {});
WienerReport wiener_formula(int level, int workers = 1);

// Runs the requested engine(s); method==both cross-checks the totals.
WienerReport run_wiener(int level, Method method, int workers = 1,
                        int word_cap = kDefaultWordCap, int oracle_cap = kDefaultOracleCap,
                        bool use_symmetry = false,
                        std::function<void(std::uint64_t, std::uint64_t)> progress = {});

// Formula rows for levels 1..max_level, with the oracle total attached where
// the level is within the oracle cap.
std::vector<WienerReport> make_table(int max_level, int workers = 1,
                                     int word_cap = kDefaultWordCap,
                                     int oracle_cap = kDefaultOracleCap);

struct Mismatch {
    Word word1, word2;
    std::int64_t formula_value = 0;
    std::int64_t oracle_value = 0;
    DistanceTrace trace;
};

struct ValidationReport {
    int level = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t mismatch_count = 0;
    // the first mismatches in (id1, id2) order; capped so that a broken
    // metric cannot exhaust memory
    std::vector<Mismatch> mismatches;
    static constexpr std::size_t kMaxStored = 100;
    double seconds = 0.0;

    bool ok() const { return mismatch_count == 0; }
};

// Compares the word metric against BFS on every unordered canonical pair.
ValidationReport validate_exhaustive(int level, int workers = 1,
                                     int oracle_cap = kDefaultOracleCap);

// Same comparison on `samples` pairs drawn from a seeded mt19937_64 (indices
// reduced modulo the vertex count; same seed, same pairs, any platform).
ValidationReport validate_sampled(int level, std::uint64_t samples, std::uint64_t seed,
                                  int workers = 1, int oracle_cap = kDefaultOracleCap);

}  // namespace carpet
