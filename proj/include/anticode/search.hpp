#pragma once

// Exhaustive tightness survey over small (q, k, n).
//
// For each parameter point every generator whose columns form a
// nondecreasing multiset of candidate columns is scored. Scaling a column
// leaves every codeword weight unchanged, so by default candidates are the
// projective representatives; Nonzero mode uses every nonzero vector.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace anticode {

enum class ColumnMode { Projective, Nonzero };

struct SearchConfig {
    std::vector<std::uint64_t> qs;
    std::size_t k_min = 1, k_max = 1;
    std::size_t n_min = 1, n_max = 1;
    ColumnMode mode = ColumnMode::Projective;
    // Max multisets scored per (q, k, n) point.
    std::uint64_t budget = 1'000'000;
    // Max q^k per point.
    std::uint64_t enumeration_limit = std::uint64_t{1} << 16;
    std::optional<std::string> output_path;
};

struct SearchRow {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    std::uint64_t multisets = 0;  // scored
    std::uint64_t full_rank = 0;
    std::optional<std::size_t> min_delta;
    std::optional<std::size_t> max_delta;
    std::uint64_t diameter_bound = 0;  // ceil(n q^{k-1}(q-1)/(q^k-1))
    bool diameter_bound_attained = false;
    bool anti_griesmer_attained = false;
    std::uint64_t anti_griesmer_violations = 0;
    bool truncated = false;
};

// Rows sorted by (q, k, n). Throws InputError on q that is not a prime power.
std::vector<SearchRow> run_search(const SearchConfig& config);

void write_csv(std::ostream& out, const std::vector<SearchRow>& rows);

}  // namespace anticode
