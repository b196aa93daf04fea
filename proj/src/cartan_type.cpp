#include "weylcheck/cartan_type.hpp"

#include "weylcheck/errors.hpp"

#include <cctype>
#include <charconv>

namespace weylcheck {

bool CartanType::valid(char letter, int rank) {
    switch (letter) {
    case 'A':
    case 'B':
    case 'C': return rank >= 1;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

CartanType CartanType::parse(std::string_view text) {
    if (text.size() < 2) throw ParseError("not a Cartan type: '" + std::string(text) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    int rank = 0;
    const auto digits = text.substr(1);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.front() == '0' || !valid(letter, rank))
        throw ParseError("not a Cartan type: '" + std::string(text) + "'");
    return {letter, rank};
}

bool CartanType::enumerable() const noexcept {
    switch (letter) {
    case 'A': return rank <= 9;
    case 'B':
    case 'C':
    case 'D': return rank <= 8;
    case 'E': return rank == 6;
    default: return true;
    }
}

CartanType isogeny_representative(CartanType t) {
    if ((t.letter == 'B' || t.letter == 'C') && t.rank == 1) return {'A', 1};
    if (t.letter == 'C' && t.rank == 2) return {'B', 2};
    if (t.letter == 'D' && t.rank == 3) return {'A', 3};
    return t;
}

bool isogenous(CartanType a, CartanType b) { return isogeny_representative(a) == isogeny_representative(b); }

namespace {

bool bc(CartanType t) { return t.letter == 'B' || t.letter == 'C'; }

bool directed(CartanType a, CartanType b) {
    if (bc(a) && bc(b) && a.letter != b.letter && a.rank == b.rank && a.rank >= 3) return true;
    if (bc(a) && a.rank >= 3 && a.rank % 2 == 1 && isogenous(b, CartanType{'D', a.rank})) return true;
    return a == CartanType{'G', 2} && b == CartanType{'A', 2};
}

} // namespace

bool weyl_isotrivial(CartanType a, CartanType b) {
    a = isogeny_representative(a);
    b = isogeny_representative(b);
    return directed(a, b) || directed(b, a);
}

} // namespace weylcheck
