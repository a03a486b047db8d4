#ifndef RAMSEY_BINARY_HPP
#define RAMSEY_BINARY_HPP

#include "ramsey/oracles.hpp"

#include <optional>
#include <string>

namespace ramsey {

// Binary expansion of n with the leading 1 removed, written most significant
// digit first ("" for n = 1).
std::string truncated_binary(const BigInt& n);

// t extends s iff s <= t and the truncated expansion of t, read from the
// least significant end, starts with the truncated expansion of s.
// Equivalently: s <= t and t == s (mod 2^(bitlength(s)-1)).
bool extends(const BigInt& s, const BigInt& t);

// <s> = { t : t extends s }; exact density 2^-(bitlength(s)-1).
VertexSetOracle cylinder(const BigInt& s);

struct NwdWitness {
    BigInt t;            // extension of s with A ∩ <t> empty up to the horizon
    BigInt sound_up_to;  // the witness was only checked below this horizon
};

// Least extension t <= horizon of s with enumerate_upto(horizon) ∩ <t> empty,
// if one exists. The verdict is heuristic: sound only up to the horizon.
std::optional<NwdWitness> nwd_witness_search(const VertexSetOracle& set, const BigInt& s,
                                             const BigInt& horizon);

} // namespace ramsey

#endif
