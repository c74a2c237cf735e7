#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hilden/braid.hpp"

namespace hilden {

// Randomized invariants of the word-problem machinery. Deterministic for a
// fixed seed; every violation carries the offending word so a failure can be
// replayed by hand.
struct PropertyConfig {
  std::uint64_t seed = 0x48494C44ULL;
  long long iterations = 10000;
};

struct PropertyResult {
  long long iterations = 0;
  long long violations = 0;
  std::string first_failure;
};

inline PropertyResult run_property_suite(const PropertyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  PropertyResult res;

  auto violation = [&](const std::string& what, const BraidWord& w) {
    ++res.violations;
    if (res.first_failure.empty())
      res.first_failure = what + " [strands=" + std::to_string(w.strands) + " word=" +
                          format_braid_word(w) + "]";
  };

  auto random_word = [&](int strands, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(1, strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    BraidWord w;
    w.strands = strands;
    int len = len_dist(rng);
    for (int k = 0; k < len; ++k) {
      int g = gen_dist(rng);
      w.letters.push_back(sign_dist(rng) ? g : -g);
    }
    return w;
  };

  std::uniform_int_distribution<int> strand_dist(2, 8);
  for (long long it = 0; it < cfg.iterations; ++it) {
    ++res.iterations;
    int strands = strand_dist(rng);
    BraidWord w = random_word(strands, 40);
    GarsideNormalForm nf = normal_form(w);

    // Normalizing the canonical word of a normal form is a fixed point.
    if (normal_form(braid_word_of(nf)) != nf) violation("normal form not idempotent", w);

    // Inserting a cancelling pair anywhere leaves the normal form unchanged.
    {
      std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(w.letters.size()));
      std::uniform_int_distribution<int> gen_dist(1, strands - 1);
      int pos = pos_dist(rng);
      int g = gen_dist(rng);
      BraidWord padded = w;
      padded.letters.insert(padded.letters.begin() + pos, {g, -g});
      if (normal_form(padded) != nf) violation("cancelling pair changed the normal form", w);
    }

    // The permutation and exponent-sum filters agree with equality.
    {
      BraidWord v = random_word(strands, 40);
      bool eq = braid_equal(w, v);
      bool same_perm = permutation_image(w) == permutation_image(v);
      bool same_exp = exponent_sum(w) == exponent_sum(v);
      if (eq && (!same_perm || !same_exp))
        violation("equal braids disagree on a cheap invariant", w);
      if (!same_perm && eq) violation("permutation filter contradicts equality", w);
    }

    // A word times its inverse is trivial.
    {
      BraidWord prod = braid_concat(w, braid_inverse(w));
      GarsideNormalForm trivial = normal_form(prod);
      if (trivial.delta_power != 0 || !trivial.factors.empty())
        violation("w * w^-1 is not trivial", w);
    }

    // Factor sequence is left-weighted with no trivial or half-twist factor.
    {
      const int full = strands * (strands - 1) / 2;
      for (const Permutation& a : nf.factors) {
        if (a.is_identity()) violation("identity factor in normal form", w);
        if (static_cast<int>(permutation_braid_word(a).size()) == full)
          violation("half-twist factor left in normal form", w);
      }
      for (size_t k = 0; k + 1 < nf.factors.size(); ++k) {
        std::vector<int> s = starting_set(nf.factors[k + 1]);
        std::vector<int> f = finishing_set(nf.factors[k]);
        for (int idx : s)
          if (std::find(f.begin(), f.end(), idx) == f.end()) {
            violation("factor pair is not left-weighted", w);
            break;
          }
      }
    }
  }
  return res;
}

}  // namespace hilden
