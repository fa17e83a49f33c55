// Variable elimination orderings and their lexicographic rank among all
// n! permutations. The rank is the class label used throughout.
#pragma once

#include <cstdint>
#include <vector>

namespace cadsel {

std::uint64_t factorial(std::size_t n);  // n <= 20

struct Ordering {
    std::vector<std::size_t> sequence;  // variable indices, first-eliminated first
    std::uint64_t index = 0;            // lexicographic rank in [0, n!-1]

    static Ordering from_sequence(std::vector<std::size_t> seq);
    static Ordering from_index(std::uint64_t index, std::size_t n);

    bool operator==(const Ordering& o) const = default;
};

std::uint64_t rank_of_sequence(const std::vector<std::size_t>& seq);

// All n! orderings by ascending index; guarded to n <= 6.
std::vector<Ordering> all_orderings(std::size_t n);

}  // namespace cadsel
