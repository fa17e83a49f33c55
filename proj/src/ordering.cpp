#include "cadsel/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace cadsel {

std::uint64_t factorial(std::size_t n) {
    if (n > 20) throw std::invalid_argument("factorial overflows past n = 20");
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

std::uint64_t rank_of_sequence(const std::vector<std::size_t>& seq) {
    const std::size_t n = seq.size();
    std::vector<bool> used(n, false);
    for (std::size_t v : seq) {
        if (v >= n || used[v]) throw std::invalid_argument("sequence is not a permutation");
        used[v] = true;
    }
    // Lehmer code
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (seq[j] < seq[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

Ordering Ordering::from_sequence(std::vector<std::size_t> seq) {
    Ordering o;
    o.index = rank_of_sequence(seq);
    o.sequence = std::move(seq);
    return o;
}

Ordering Ordering::from_index(std::uint64_t index, std::size_t n) {
    if (index >= factorial(n)) throw std::invalid_argument("ordering index out of range");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    Ordering o;
    o.index = index;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t f = factorial(n - 1 - i);
        std::size_t pick = static_cast<std::size_t>(index / f);
        index %= f;
        o.sequence.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return o;
}

std::vector<Ordering> all_orderings(std::size_t n) {
    if (n > 6)
        throw std::invalid_argument("refusing to enumerate orderings past 6 variables");
    std::uint64_t total = factorial(n);
    std::vector<Ordering> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(Ordering::from_index(i, n));
    return out;
}

}  // namespace cadsel
