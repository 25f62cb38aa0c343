#pragma once

#include "ncgb/algebra.hpp"

#include <set>

namespace ncgb {

enum class OverlapKind { Prefix, Subword, Suffix };

// l1 * u_i * r1 == l2 * u_j * r2 == word
struct OverlapSpec {
    std::size_t i = 0, j = 0;
    Word l1, r1, l2, r2;
    OverlapKind kind = OverlapKind::Subword;
    Word word;
    // start of u_j minus start of u_i inside word
    long offset = 0;
};

// Self-overlaps are reported once, with the second copy placed to the left.
std::vector<OverlapSpec> enumerate_overlaps(const Word& u1, const Word& u2, bool same_element);

Polynomial s_polynomial(const OverlapSpec& spec, const Polynomial& p1, const Polynomial& p2);

struct SettledKey {
    std::size_t i, j;
    long offset;
    auto operator<=>(const SettledKey&) const = default;
};

SettledKey settled_key(const OverlapSpec& spec);
SettledKey placement_key(std::size_t a, long start_a, std::size_t b, long start_b);

using SettledSet = std::set<SettledKey>;

bool criterion2_applies(const OverlapSpec& spec, const std::vector<Polynomial>& basis, const SettledSet& settled);

}  // namespace ncgb
