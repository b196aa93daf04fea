#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace weylcheck {

struct CartanType {
    char letter = 'A'; // upper case
    int rank = 1;

    // "B4", "e6"; throws ParseError on anything else.
    static CartanType parse(std::string_view text);
    static bool valid(char letter, int rank);

    std::string str() const { return std::string(1, letter) + std::to_string(rank); }

    bool classical() const noexcept { return letter == 'A' || letter == 'B' || letter == 'C' || letter == 'D'; }
    bool table_only() const noexcept { return letter == 'E' && rank >= 7; }
    bool enumerable() const noexcept;

    friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

// Collapses the low-rank coincidences B1 = C1 = A1, C2 = B2, D3 = A3.
CartanType isogeny_representative(CartanType t);
bool isogenous(CartanType a, CartanType b);

// Pairs related by W(Bn) = W(Cn), W(Bn) = W(Dn) x Z/2 for odd n, and W(G2) = W(A2) x Z/2.
// The odd case starts at n = 3, where D3 is A3.
bool weyl_isotrivial(CartanType a, CartanType b);

} // namespace weylcheck
