#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gmrc/constructions.hpp"
#include "gmrc/linear_code.hpp"

namespace gmrc {

enum class SearchMode { Random, Exhaustive };

struct SearchConfig {
    std::string spec;
    SearchMode mode = SearchMode::Random;
    std::uint64_t trials = 0;  // random mode only
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::size_t min_distance_target = 12;
    // Optional per-bit mask over the spec's budget: '0'/'1' pin a bit, 'x'
    // leaves it free. Empty means every bit is free.
    std::string pattern;
    // Exhaustive mode refuses to enumerate more than 2^exhaustive_cap points.
    std::size_t exhaustive_cap = 28;
    // Injected trials, evaluated before the seeded stream (trial 0, 1, ...).
    std::vector<Bits> include_bits;
};

struct SearchRecord {
    std::string spec;
    std::string bits_hex;
    std::uint64_t trial = 0;
    bool self_dual = false;
    std::size_t d = 0;
    Classification72 cls;
    std::uint64_t a12 = 0;
    std::uint64_t a14 = 0;
    std::uint64_t a16 = 0;
    // Set when the record is produced; deliberately left out of the persisted
    // form so identical configs stay byte-identical.
    std::string timestamp;

    std::string dedup_key() const;
};

// The bit vector evaluated at the given trial index: an injected vector for
// the leading indices, then the seeded counter stream (random mode) or the
// enumeration of the free positions (exhaustive mode).
Bits trial_bits(const SearchConfig& cfg, const ConstructionSpec& spec,
                std::uint64_t trial);

// Deterministic in (seed, trials, workers): records sorted by trial index and
// deduplicated by dedup_key, keeping the earliest.
std::vector<SearchRecord> run_search(const SearchConfig& cfg);

std::vector<SearchRecord> dedup(const std::vector<SearchRecord>& records);

// JSON Lines, one record per line.
void write_records(std::ostream& out, const std::vector<SearchRecord>& records);
std::vector<SearchRecord> read_records(std::istream& in);

// Table rendering: one line per record with the spec, the classification, and
// the table-row fields recovered from the bits.
std::string summarize_records(const std::vector<SearchRecord>& records);

}  // namespace gmrc
