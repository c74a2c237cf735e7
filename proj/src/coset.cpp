#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hilden/action.hpp"

namespace hilden {

namespace {

// Coset table enumeration: relator scanning with on-demand coset definition,
// a coincidence queue merged through union-find, and a deduction-only
// lookahead pass when the live-coset budget is exhausted.
class CosetTable {
public:
  CosetTable(int num_gens, std::vector<std::vector<int>> relators, long long max_cosets)
      : cols_(2 * num_gens), relators_(std::move(relators)), max_cosets_(max_cosets) {
    new_coset();
  }

  static int inv(int col) { return col ^ 1; }

  int find(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  long long live() const { return live_; }

  void scan_subgroup_word(const std::vector<int>& word) {
    scan_and_fill(0, word);
    process_coincidences();
  }

  // Returns the index, or std::nullopt once live cosets exceed the budget
  // and lookahead cannot recover.
  std::optional<long long> run() {
    for (int current = 0; current < static_cast<int>(table_.size()); ++current) {
      if (find(current) != current) continue;
      for (const auto& rel : relators_) {
        scan_and_fill(current, rel);
        process_coincidences();
        if (find(current) != current) break;
      }
      if (find(current) != current) continue;
      for (int col = 0; col < cols_; ++col)
        if (entry(current, col) < 0) define(current, col);
      if (live_ > max_cosets_) {
        lookahead();
        if (live_ > max_cosets_) return std::nullopt;
      }
    }
    return live_;
  }

private:
  int cols_;
  std::vector<std::vector<int>> relators_;
  long long max_cosets_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> coincidences_;
  long long live_ = 0;

  int new_coset() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_;
    return static_cast<int>(table_.size()) - 1;
  }

  int entry(int c, int col) {
    int t = table_[c][col];
    return t < 0 ? -1 : find(t);
  }

  void set_entry(int c, int col, int d) {
    c = find(c);
    d = find(d);
    int existing = entry(c, col);
    if (existing >= 0) {
      if (existing != d) coincidences_.emplace_back(existing, d);
      return;
    }
    table_[c][col] = d;
    int mirror = entry(d, inv(col));
    if (mirror < 0)
      table_[d][inv(col)] = c;
    else if (mirror != c)
      coincidences_.emplace_back(mirror, c);
  }

  int define(int c, int col) {
    int d = new_coset();
    table_[find(c)][col] = d;
    table_[d][inv(col)] = find(c);
    return d;
  }

  // Scans `word` starting and ending at coset c, defining new cosets to
  // close the gap.
  void scan_and_fill(int c, const std::vector<int>& word) {
    if (word.empty()) return;
    int f = find(c);
    size_t i = 0;
    int b = find(c);
    size_t j = word.size();
    while (true) {
      while (i < j) {
        int next = entry(f, word[i]);
        if (next < 0) break;
        f = next;
        ++i;
      }
      if (i == j) {
        if (f != b) coincidences_.emplace_back(f, b);
        return;
      }
      while (j > i) {
        int prev = entry(b, inv(word[j - 1]));
        if (prev < 0) break;
        b = prev;
        --j;
      }
      if (i == j) {
        if (f != b) coincidences_.emplace_back(f, b);
        return;
      }
      if (i + 1 == j) {
        set_entry(f, word[i], b);
        return;
      }
      f = define(f, word[i]);
      ++i;
    }
  }

  // Deduction-only pass over every live coset and relator.
  void lookahead() {
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (find(c) != c) continue;
      for (const auto& rel : relators_) {
        scan_deduce(c, rel);
        process_coincidences();
        if (find(c) != c) break;
      }
    }
  }

  void scan_deduce(int c, const std::vector<int>& word) {
    if (word.empty()) return;
    int f = find(c);
    size_t i = 0;
    int b = find(c);
    size_t j = word.size();
    while (i < j) {
      int next = entry(f, word[i]);
      if (next < 0) break;
      f = next;
      ++i;
    }
    if (i == j) {
      if (f != b) coincidences_.emplace_back(f, b);
      return;
    }
    while (j > i) {
      int prev = entry(b, inv(word[j - 1]));
      if (prev < 0) break;
      b = prev;
      --j;
    }
    if (i == j) {
      if (f != b) coincidences_.emplace_back(f, b);
    } else if (i + 1 == j) {
      set_entry(f, word[i], b);
    }
  }

  void process_coincidences() {
    while (!coincidences_.empty()) {
      auto [x, y] = coincidences_.front();
      coincidences_.pop_front();
      int a = find(x), b = find(y);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent_[b] = a;
      --live_;
      for (int col = 0; col < cols_; ++col) {
        int t = table_[b][col];
        if (t < 0) continue;
        t = find(t);
        int u = entry(a, col);
        if (u < 0) {
          table_[a][col] = t;
          int mirror = entry(t, inv(col));
          if (mirror < 0)
            table_[t][inv(col)] = a;
          else if (mirror != a)
            coincidences_.emplace_back(mirror, a);
        } else if (u != t) {
          coincidences_.emplace_back(u, t);
        }
      }
    }
  }
};

}  // namespace

std::optional<long long> coset_enumerate(const Presentation& p,
                                         const std::vector<GroupWord>& subgroup,
                                         long long max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("coset limit must be positive");
  std::map<std::string, int> gen_ids;
  for (size_t k = 0; k < p.generators.size(); ++k)
    gen_ids[p.generators[k]] = static_cast<int>(k);
  auto to_cols = [&](const GroupWord& w) {
    std::vector<int> cols;
    cols.reserve(w.letters.size());
    for (const GroupLetter& l : w.letters) {
      auto it = gen_ids.find(l.name);
      if (it == gen_ids.end())
        throw std::invalid_argument("word uses unknown generator: " + l.name);
      cols.push_back(2 * it->second + (l.inverted ? 1 : 0));
    }
    return cols;
  };

  std::vector<std::vector<int>> relators;
  for (const GroupWord& r : p.relators) relators.push_back(to_cols(r));

  CosetTable table(static_cast<int>(p.generators.size()), std::move(relators), max_cosets);
  for (const GroupWord& w : subgroup) table.scan_subgroup_word(to_cols(w));
  return table.run();
}

}  // namespace hilden
