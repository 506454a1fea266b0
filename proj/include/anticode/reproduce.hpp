#pragma once

// Recomputes the published worked examples: diameter bounds for GRS,
// extended GRS direct sums and (I|I) codes, length-bound equality for
// simplex codes and [2q+2, 4, q]_q parameters, and dimension-bound
// equality for [(q^k-1)/(q-1), k]_q codes.

#include <string>
#include <vector>

namespace anticode {

struct ReproRow {
    std::string example;
    std::string quantity;
    std::string published;
    std::string computed;
    // "published" values come from the worked examples, "derived" ones
    // are consequences checked alongside them.
    std::string source;
    bool match = false;
};

std::vector<ReproRow> reproduce_examples();

bool all_match(const std::vector<ReproRow>& rows);

}  // namespace anticode
