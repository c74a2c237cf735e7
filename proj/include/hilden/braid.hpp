#pragma once

#include <string>
#include <vector>

#include "hilden/permutation.hpp"

namespace hilden {

// A word in the braid group on `strands` strands. Letters are nonzero signed
// integers: +i stands for the i-th elementary crossing, -i for its inverse,
// with 1 <= i <= strands-1. Words act on strand positions left to right.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Accepts either generator tokens ("s2", "s3^-1") or signed integers
// ("2", "-3"), whitespace-separated; the two styles may be mixed. Throws
// std::invalid_argument on malformed tokens or out-of-range indices.
BraidWord parse_braid_word(const std::string& text, int strands);

// Canonical text form: signed integers separated by single spaces.
std::string format_braid_word(const BraidWord& w);

BraidWord braid_inverse(const BraidWord& w);
BraidWord braid_concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_free_reduce(BraidWord w);

// Image of the word in the symmetric group on strand positions (0-based).
Permutation permutation_image(const BraidWord& w);
long long exponent_sum(const BraidWord& w);

// Garside normal form delta^k A_1 ... A_l: k maximal, each factor a
// permutation braid (recorded by the permutation it induces), the factor
// sequence left-weighted, no factor trivial or equal to the half twist.
struct GarsideNormalForm {
  int strands = 2;
  long long delta_power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

GarsideNormalForm normal_form(const BraidWord& w);

// Re-expands a normal form into a braid word (delta as its canonical
// positive word; negative powers via the inverse of that word).
BraidWord braid_word_of(const GarsideNormalForm& nf);

// Canonical positive word of the permutation braid inducing p.
std::vector<int> permutation_braid_word(const Permutation& p);

// Descent sets driving the left-weighted condition: a permutation braid can
// start with crossing i iff i is in starting_set, end with it iff i is in
// finishing_set (1-based crossing indices).
std::vector<int> starting_set(const Permutation& p);
std::vector<int> finishing_set(const Permutation& p);

// "delta^k" followed by the factors' canonical words in brackets.
std::string format_normal_form(const GarsideNormalForm& nf);

// Word problem: do two words on the same strand count represent the same
// braid? Throws std::invalid_argument on a strand-count mismatch.
bool braid_equal(const BraidWord& a, const BraidWord& b);

}  // namespace hilden
