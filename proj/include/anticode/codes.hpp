#pragma once

// Linear codes over GF(q) and their metrics.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "anticode/matrix.hpp"

namespace anticode {

// Default number of messages metrics() is willing to enumerate.
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 24;
// Default cap on the subset size searched by dual_distance_exact.
inline constexpr std::size_t kDefaultDualMaxT = 4;
// Default cap on the number of column subsets dual_distance_exact examines
// for a single subset size.
inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 20;

class LinearCode;

// Provenance recorded by the builders. Metrics uses it for closed-form
// parameters when exhaustive enumeration is out of budget. Any operation
// that changes the code (puncture, dual, ...) drops it.
struct GrsStructure {
    std::size_t evaluation_points = 0;  // n for GRS, n - 1 for extended GRS
    std::size_t k = 0;
    bool extended = false;
};
struct SimplexStructure {
    std::size_t k = 0;
};
struct DirectSumStructure {
    std::shared_ptr<const LinearCode> left;
    std::shared_ptr<const LinearCode> right;
};
using CodeStructure = std::variant<GrsStructure, SimplexStructure, DirectSumStructure>;

// A linear [n, k]_q code given by a full-row-rank k x n generator.
class LinearCode {
public:
    // Verifies n >= 1, k >= 1 and rank(G) == k; throws InputError otherwise
    // (the message carries the computed rank).
    explicit LinearCode(Matrix generator, std::optional<CodeStructure> structure = std::nullopt);

    // For builders whose generator is full rank by construction.
    struct RankKnown {};
    LinearCode(Matrix generator, RankKnown, std::optional<CodeStructure> structure = std::nullopt);

    const Field& field() const { return generator_.field(); }
    const Matrix& generator() const { return generator_; }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const std::optional<CodeStructure>& structure() const { return structure_; }

    std::string name;

private:
    Matrix generator_;
    std::optional<CodeStructure> structure_;
};

struct DualDistance {
    enum class Kind {
        Exact,    // value == d(C^perp)
        AtLeast,  // d(C^perp) >= value, search budget exhausted
        ZeroDual  // k == n, the dual is the zero code
    };
    Kind kind = Kind::Exact;
    std::size_t value = 0;

    bool at_least(std::size_t t) const { return kind == Kind::ZeroDual || value >= t; }
    std::string to_string() const;
};

struct CodeMetrics {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t delta = 0;
    // weight -> number of codewords; present when enumerated (or when
    // derivable from enumerated parts).
    std::optional<std::map<std::size_t, std::uint64_t>> weight_distribution;
    // weight -> first message x (in enumeration order) with wt(xG) == weight.
    std::map<std::size_t, std::vector<Elem>> witnesses;
    DualDistance dual_distance;
    // True when d and delta come from a structural formula instead of
    // enumeration.
    bool structural = false;
};

struct MetricsOptions {
    std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
    std::size_t dual_max_t = kDefaultDualMaxT;
    std::uint64_t subset_budget = kDefaultSubsetBudget;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

std::size_t weight(std::span<const Elem> c);
std::vector<std::size_t> support(std::span<const Elem> c);

// x * G.
std::vector<Elem> encode(const LinearCode& code, std::span<const Elem> message);

// Exact d, delta and weight distribution by iterating all q^k messages.
// Above the enumeration limit only structural shortcuts are used; without
// one, throws InfeasibleEnumeration.
CodeMetrics metrics(const LinearCode& code, const MetricsOptions& options = {});
CodeMetrics metrics(const LinearCode& code, std::uint64_t enumeration_limit);

// q^k, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> message_count(const LinearCode& code);

struct DualCode {
    std::size_t length = 0;
    std::optional<LinearCode> code;  // empty when the dual is {0}
    bool is_zero() const { return !code.has_value(); }
};

// Generator = null_space(G). k == n yields the zero code.
DualCode dual_code(const LinearCode& code);

// t == 2: no zero column. t == 3: additionally no two columns are scalar
// multiples. Other t throw InputError.
bool dual_distance_at_least(const LinearCode& code, std::size_t t);

// Smallest t <= max_t such that some t columns of G are dependent.
DualDistance dual_distance_exact(const LinearCode& code, std::size_t max_t = kDefaultDualMaxT,
                                 std::uint64_t subset_budget = kDefaultSubsetBudget);

// Index of the first all-zero generator column, if any.
std::optional<std::size_t> first_zero_column(const LinearCode& code);

// Deletes the given coordinates and re-bases the result through RREF.
// Throws InputError if an index is out of range or the result is the zero
// code (including length 0).
LinearCode puncture(const LinearCode& code, std::span<const std::size_t> positions);

// puncture(code, support(c)) for a nonzero codeword c of code.
LinearCode residual(const LinearCode& code, std::span<const Elem> codeword);

bool contains(const LinearCode& code, std::span<const Elem> word);

// Block-diagonal [n1 + n2, k1 + k2] code. Throws FieldMismatch.
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

}  // namespace anticode
