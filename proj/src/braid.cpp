#include "hilden/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hilden {

namespace {

void check_strands(int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
}

void check_letter(int letter, int strands) {
  int idx = std::abs(letter);
  if (letter == 0 || idx > strands - 1)
    throw std::invalid_argument("crossing index " + std::to_string(idx) +
                                " out of range for " + std::to_string(strands) + " strands");
}

// Half-twist permutation i -> strands-1-i (0-based).
Permutation half_twist(int strands) {
  std::vector<int> img(strands);
  for (int i = 0; i < strands; ++i) img[i] = strands - 1 - i;
  return Permutation(std::move(img));
}

// Conjugation by the half twist (an involution on permutations).
Permutation flip(const Permutation& p) {
  int m = p.degree();
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[m - 1 - i] = m - 1 - p(i);
  return Permutation(std::move(img));
}

}  // namespace

BraidWord parse_braid_word(const std::string& text, int strands) {
  check_strands(strands);
  BraidWord w;
  w.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int letter = 0;
    if (tok[0] == 's' || tok[0] == 'S') {
      std::string body = tok.substr(1);
      bool inverted = false;
      if (auto pos = body.find("^-1"); pos != std::string::npos && pos + 3 == body.size()) {
        inverted = true;
        body = body.substr(0, pos);
      }
      if (body.empty() || !std::all_of(body.begin(), body.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("malformed braid token: " + tok);
      letter = std::stoi(body);
      if (inverted) letter = -letter;
    } else {
      size_t used = 0;
      try {
        letter = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed braid token: " + tok);
      }
      if (used != tok.size()) throw std::invalid_argument("malformed braid token: " + tok);
    }
    check_letter(letter, strands);
    w.letters.push_back(letter);
  }
  return w;
}

std::string format_braid_word(const BraidWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

BraidWord braid_inverse(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord braid_free_reduce(BraidWord w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (int letter : w.letters) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  w.letters = std::move(out);
  return w;
}

Permutation permutation_image(const BraidWord& w) {
  check_strands(w.strands);
  Permutation p = Permutation::identity(w.strands);
  for (int letter : w.letters) {
    check_letter(letter, w.strands);
    p = p.then(Permutation::transposition(w.strands, std::abs(letter) - 1));
  }
  return p;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int letter : w.letters) s += letter > 0 ? 1 : -1;
  return s;
}

std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> s;
  for (int i = 0; i + 1 < p.degree(); ++i)
    if (p(i) > p(i + 1)) s.push_back(i + 1);
  return s;
}

std::vector<int> finishing_set(const Permutation& p) {
  return starting_set(p.inverse());
}

std::vector<int> permutation_braid_word(const Permutation& p) {
  std::vector<int> word;
  Permutation q = p;
  while (!q.is_identity()) {
    int i = 0;
    while (q(i) <= q(i + 1)) ++i;
    word.push_back(i + 1);
    // Strip the emitted crossing from the front: q = transposition * rest.
    q = Permutation::transposition(q.degree(), i).then(q);
  }
  return word;
}

namespace {

// Local left-weighting move on an adjacent factor pair: shift crossings from
// the head of b to the tail of a while b starts with a crossing a does not
// finish with. Factors may become trivial or grow into the half twist.
void rebalance(Permutation& a, Permutation& b) {
  int m = a.degree();
  bool moved = true;
  while (moved) {
    moved = false;
    Permutation a_inv = a.inverse();
    for (int i = 0; i + 1 < m; ++i) {
      bool b_starts = b(i) > b(i + 1);
      bool a_finishes = a_inv(i) > a_inv(i + 1);
      if (b_starts && !a_finishes) {
        Permutation t = Permutation::transposition(m, i);
        a = a.then(t);
        b = t.then(b);
        moved = true;
        break;
      }
    }
  }
}

}  // namespace

GarsideNormalForm normal_form(const BraidWord& w) {
  check_strands(w.strands);
  const int m = w.strands;
  GarsideNormalForm nf;
  nf.strands = m;
  if (m == 1) return nf;

  // Convert to delta^-N * (positive factor sequence): each inverse letter
  // contributes one negative half twist plus the positive complement braid,
  // and every factor is conjugated once per half twist originating to its
  // right. Complement of crossing j: the permutation braid X with
  // sigma_j^-1 = delta^-1 X, whose permutation is transposition_j after the
  // half twist.
  long long negatives = 0;
  for (int letter : w.letters) {
    check_letter(letter, m);
    if (letter < 0) ++negatives;
  }

  const Permutation omega = half_twist(m);
  std::vector<Permutation> factors;
  factors.reserve(w.letters.size());
  long long remaining_neg = negatives;
  for (int letter : w.letters) {
    if (letter < 0) --remaining_neg;
    int idx = std::abs(letter) - 1;
    Permutation f = letter > 0 ? Permutation::transposition(m, idx)
                               : omega.then(Permutation::transposition(m, idx));
    if (remaining_neg % 2 != 0) f = flip(f);
    factors.push_back(std::move(f));
  }

  // Left-weight the positive factor sequence: sweep adjacent pairs to a
  // fixed point, dropping factors that empty out.
  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(factors, [](const Permutation& p) { return p.is_identity(); });
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      Permutation before = factors[i];
      rebalance(factors[i], factors[i + 1]);
      if (!(factors[i] == before)) changed = true;
    }
  }

  // Absorb leading half twists into the delta power.
  long long lead = 0;
  size_t head = 0;
  while (head < factors.size() && factors[head] == omega) {
    ++lead;
    ++head;
  }
  nf.delta_power = lead - negatives;
  nf.factors.assign(factors.begin() + head, factors.end());
  return nf;
}

BraidWord braid_word_of(const GarsideNormalForm& nf) {
  check_strands(nf.strands);
  BraidWord w;
  w.strands = nf.strands;
  if (nf.strands == 1) return w;
  std::vector<int> delta_word = permutation_braid_word(half_twist(nf.strands));
  if (nf.delta_power >= 0) {
    for (long long k = 0; k < nf.delta_power; ++k)
      w.letters.insert(w.letters.end(), delta_word.begin(), delta_word.end());
  } else {
    for (long long k = 0; k < -nf.delta_power; ++k)
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it)
        w.letters.push_back(-*it);
  }
  for (const Permutation& f : nf.factors) {
    std::vector<int> fw = permutation_braid_word(f);
    w.letters.insert(w.letters.end(), fw.begin(), fw.end());
  }
  return w;
}

std::string format_normal_form(const GarsideNormalForm& nf) {
  std::string s = "delta^" + std::to_string(nf.delta_power);
  for (const Permutation& f : nf.factors) {
    s += " [";
    std::vector<int> fw = permutation_braid_word(f);
    for (size_t i = 0; i < fw.size(); ++i) {
      if (i) s += ' ';
      s += 's' + std::to_string(fw[i]);
    }
    s += ']';
  }
  return s;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("cannot compare braid words on different strand counts");
  return normal_form(a) == normal_form(b);
}

}  // namespace hilden
