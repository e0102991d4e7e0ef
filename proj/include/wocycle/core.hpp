#pragma once

// Weak orders on [n] in height-word form, the relation notation for them,
// and the bijection with ordered set partitions.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wocycle {

// A plain symbol sequence. Prefixes, suffixes and overlap windows of weak
// orders are Words but usually not weak orders themselves (11 is a fine
// prefix on n = 3), so most machinery works on Word and validation is opt-in.
using Word = std::vector<int>;

enum class errc {
  gap,                   // some level in 0..max is unused
  missing_zero,          // max > 0 but no letter 0
  out_of_range,          // letter < 0 or >= n
  bad_relation,
  bad_partition,
  bad_descriptor,
  parameter,
  empty_family,
  overlap_out_of_range,
  length_mismatch,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::gap: return "gap";
    case errc::missing_zero: return "missing_zero";
    case errc::out_of_range: return "out_of_range";
    case errc::bad_relation: return "bad_relation";
    case errc::bad_partition: return "bad_partition";
    case errc::bad_descriptor: return "bad_descriptor";
    case errc::parameter: return "parameter";
    case errc::empty_family: return "empty_family";
    case errc::overlap_out_of_range: return "overlap_out_of_range";
    case errc::length_mismatch: return "length_mismatch";
  }
  return "unknown";
}

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

inline int height_of(const Word& w) {
  int h = 0;
  for (int v : w) h = std::max(h, v);
  return h;
}

inline int weight_of(const Word& w) {
  return std::accumulate(w.begin(), w.end(), 0);
}

inline Word sorted_multiset(const Word& w) {
  Word m = w;
  std::sort(m.begin(), m.end());
  return m;
}

inline Word take_prefix(const Word& w, std::size_t s) {
  if (s > w.size()) throw domain_error(errc::parameter, "prefix length exceeds word length");
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
}

inline Word take_suffix(const Word& w, std::size_t s) {
  if (s > w.size()) throw domain_error(errc::parameter, "suffix length exceeds word length");
  return Word(w.end() - static_cast<std::ptrdiff_t>(s), w.end());
}

inline Word rotate_word(const Word& w) {
  if (w.empty()) return w;
  Word r(w.begin() + 1, w.end());
  r.push_back(w.front());
  return r;
}

inline std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

/// Height word w1..wn of a weak order on [n]: letter wj is the height of
/// element j, the number of strict steps below it. The distinct letters of a
/// valid word are exactly {0,...,ht(w)} for some ht(w) <= n-1.
class HeightWord {
 public:
  /// Checks the contiguity invariant (letters, deduplicated, form the run
  /// 0..max) plus the range bound letter < n. Throws domain_error with code
  /// out_of_range, missing_zero or gap.
  static HeightWord validate(Word symbols) {
    if (symbols.empty())
      throw domain_error(errc::parameter, "height word must be non-empty");
    const int n = static_cast<int>(symbols.size());
    for (int v : symbols) {
      if (v < 0 || v >= n)
        throw domain_error(errc::out_of_range,
                           "letter " + std::to_string(v) + " outside [0," +
                               std::to_string(n - 1) + "]");
    }
    const int h = height_of(symbols);
    std::vector<char> seen(static_cast<std::size_t>(h) + 1, 0);
    for (int v : symbols) seen[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v <= h; ++v) {
      if (!seen[static_cast<std::size_t>(v)]) {
        if (v == 0)
          throw domain_error(errc::missing_zero,
                             "letter 0 missing while height is " + std::to_string(h));
        throw domain_error(errc::gap, "letter " + std::to_string(v) +
                                          " missing below height " + std::to_string(h));
      }
    }
    HeightWord w;
    w.symbols_ = std::move(symbols);
    return w;
  }

  static bool is_valid(const Word& symbols) noexcept {
    if (symbols.empty()) return false;
    const int n = static_cast<int>(symbols.size());
    int h = 0;
    for (int v : symbols) {
      if (v < 0 || v >= n) return false;
      h = std::max(h, v);
    }
    std::vector<char> seen(static_cast<std::size_t>(h) + 1, 0);
    for (int v : symbols) seen[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v <= h; ++v)
      if (!seen[static_cast<std::size_t>(v)]) return false;
    return true;
  }

  const Word& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  int height() const { return height_of(symbols_); }
  int weight() const { return weight_of(symbols_); }
  Word multiset() const { return sorted_multiset(symbols_); }

  // Valid by permutation closure: rearranging letters never breaks contiguity.
  HeightWord rotated() const {
    HeightWord r;
    r.symbols_ = rotate_word(symbols_);
    return r;
  }

  friend bool operator==(const HeightWord&, const HeightWord&) = default;

 private:
  HeightWord() = default;
  Word symbols_;
};

/// Parses relation notation such as "2<1=3": element labels are decimal
/// numbers 1..n, "=" ties two elements, "<" steps one level up. Whitespace is
/// ignored; operators separate labels, so multi-digit labels stay unambiguous.
/// The height of element j is the number of "<" before it.
inline HeightWord parse_relation(std::string_view text) {
  std::vector<std::pair<int, int>> labeled;  // (element, height)
  int level = 0;
  bool expect_label = true;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (expect_label) {
      if (text[i] < '0' || text[i] > '9')
        throw domain_error(errc::bad_relation,
                           "expected element label at position " + std::to_string(i));
      long label = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        label = label * 10 + (text[i] - '0');
        if (label > 1'000'000)
          throw domain_error(errc::bad_relation, "element label too large");
        ++i;
      }
      labeled.emplace_back(static_cast<int>(label), level);
      expect_label = false;
    } else {
      if (text[i] == '=') {
        // same level
      } else if (text[i] == '<') {
        ++level;
      } else {
        throw domain_error(errc::bad_relation,
                           "expected '=' or '<' at position " + std::to_string(i));
      }
      ++i;
      expect_label = true;
    }
    skip_ws();
  }
  if (expect_label)
    throw domain_error(errc::bad_relation, "relation ends with an operator or is empty");

  const int n = static_cast<int>(labeled.size());
  Word w(static_cast<std::size_t>(n), -1);
  for (auto [e, hgt] : labeled) {
    if (e < 1 || e > n)
      throw domain_error(errc::bad_relation,
                         "labels must be a permutation of 1.." + std::to_string(n));
    if (w[static_cast<std::size_t>(e - 1)] != -1)
      throw domain_error(errc::bad_relation, "element " + std::to_string(e) + " repeated");
    w[static_cast<std::size_t>(e - 1)] = hgt;
  }
  return HeightWord::validate(std::move(w));
}

/// Inverse of parse_relation. Canonical form: tied elements listed in
/// ascending numeric order, groups from lowest to highest level.
inline std::string format_relation(const HeightWord& w) {
  const int h = w.height();
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(h) + 1);
  for (int j = 0; j < w.size(); ++j)
    groups[static_cast<std::size_t>(w.symbols()[static_cast<std::size_t>(j)])].push_back(j + 1);
  std::string out;
  for (int lvl = 0; lvl <= h; ++lvl) {
    if (lvl) out += '<';
    const auto& g = groups[static_cast<std::size_t>(lvl)];
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (t) out += '=';
      out += std::to_string(g[t]);
    }
  }
  return out;
}

/// Ordered partition of [n]: a sequence of disjoint non-empty blocks whose
/// union is exactly {1,...,n}. Blocks are kept sorted ascending.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Block i+1 collects the elements at height i; contiguity of the height word
/// guarantees every block is non-empty.
inline OrderedPartition to_ordered_partition(const HeightWord& w) {
  OrderedPartition p;
  p.blocks.resize(static_cast<std::size_t>(w.height()) + 1);
  for (int j = 0; j < w.size(); ++j)
    p.blocks[static_cast<std::size_t>(w.symbols()[static_cast<std::size_t>(j)])].push_back(j + 1);
  return p;
}

inline HeightWord from_ordered_partition(const OrderedPartition& p) {
  std::size_t n = 0;
  for (const auto& b : p.blocks) {
    if (b.empty()) throw domain_error(errc::bad_partition, "empty block");
    n += b.size();
  }
  if (n == 0) throw domain_error(errc::bad_partition, "partition has no blocks");
  Word w(n, -1);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (int e : p.blocks[i]) {
      if (e < 1 || static_cast<std::size_t>(e) > n)
        throw domain_error(errc::bad_partition,
                           "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      if (w[static_cast<std::size_t>(e - 1)] != -1)
        throw domain_error(errc::bad_partition,
                           "element " + std::to_string(e) + " appears in two blocks");
      w[static_cast<std::size_t>(e - 1)] = static_cast<int>(i);
    }
  }
  return HeightWord::validate(std::move(w));
}

/// Blocks joined by '|'. Elements are concatenated while labels are single
/// digits and comma-separated from n = 10 on, where "113" would be ambiguous.
inline std::string format_partition(const OrderedPartition& p) {
  std::size_t n = 0;
  for (const auto& b : p.blocks) n += b.size();
  const bool commas = n >= 10;
  std::string out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += '|';
    auto block = p.blocks[i];
    std::sort(block.begin(), block.end());
    for (std::size_t t = 0; t < block.size(); ++t) {
      if (commas && t) out += ',';
      out += std::to_string(block[t]);
    }
  }
  return out;
}

/// Accepts both renderings of format_partition. Structural errors only;
/// semantic validation happens in from_ordered_partition.
inline OrderedPartition parse_partition(std::string_view text) {
  OrderedPartition p;
  std::size_t start = 0;
  auto parse_block = [&](std::string_view b) {
    if (b.empty()) throw domain_error(errc::bad_partition, "empty block");
    std::vector<int> block;
    if (b.find(',') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= b.size()) {
        std::size_t comma = b.find(',', pos);
        std::string_view tok = b.substr(pos, comma == std::string_view::npos ? b.size() - pos
                                                                             : comma - pos);
        if (tok.empty()) throw domain_error(errc::bad_partition, "empty element label");
        int v = 0;
        for (char c : tok) {
          if (c < '0' || c > '9')
            throw domain_error(errc::bad_partition, "bad element label");
          v = v * 10 + (c - '0');
        }
        block.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    } else {
      for (char c : b) {
        if (c < '0' || c > '9') throw domain_error(errc::bad_partition, "bad element label");
        block.push_back(c - '0');
      }
      // Digit-split is the n <= 9 reading. When it cannot possibly be a set
      // of labels (a 0, or a repeat inside the block), the block must be one
      // multi-digit label, as in "10" or "11".
      const bool zero = std::find(block.begin(), block.end(), 0) != block.end();
      auto dedup = block;
      std::sort(dedup.begin(), dedup.end());
      const bool repeat = std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end();
      if (block.size() > 1 && (zero || repeat)) {
        int v = 0;
        for (char c : b) v = v * 10 + (c - '0');
        block.assign(1, v);
      }
    }
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  };
  while (true) {
    std::size_t bar = text.find('|', start);
    if (bar == std::string_view::npos) {
      parse_block(text.substr(start));
      break;
    }
    parse_block(text.substr(start, bar - start));
    start = bar + 1;
  }
  return p;
}

}  // namespace wocycle
