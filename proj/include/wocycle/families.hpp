#pragma once

// The word families cycles are built over: all weak orders W(n), the fixed
// height / weight / multiset subfamilies (full-word and prefix-notation
// variants), multiset permutations, and plain bitstrings for calibration.

#include <cstdint>
#include <optional>

#include "core.hpp"

namespace wocycle {

enum class FamilyKind {
  all_weak_orders,             // wn       W(n)
  fixed_height,                // wnh      weak orders with ht(w) = h
  fixed_weight_prefix,         // wkn      prefixes of weight-k weak orders
  fixed_weight_height_prefix,  // wknh     prefixes, weight k and height h
  fixed_weight,                // wk-full  full weight-k weak orders
  fixed_weight_height,         // wkh-full full words, weight k and height h
  multiset_perms,              // ms       permutations of a fixed multiset
  binary,                      // bin      all length-n bitstrings
};

// enumerate() sizes explode far earlier, and the closed-form counters stay
// inside uint64 up to here.
inline constexpr int kMaxFamilyN = 20;

inline int max_weight(int n) { return n * (n - 1) / 2; }

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return acc;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t acc = 1;
  for (int i = 2; i <= n; ++i) acc *= static_cast<std::uint64_t>(i);
  return acc;
}

/// Stirling numbers of the second kind, S(n,r).
inline std::uint64_t stirling2(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (n == 0) return r == 0 ? 1 : 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(r) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, r); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          static_cast<std::uint64_t>(j) * row[static_cast<std::size_t>(j)] +
          row[static_cast<std::size_t>(j - 1)];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(r)];
}

/// Ordered Bell numbers 1, 1, 3, 13, 75, 541, ... via
/// a(n) = sum_{j=1..n} C(n,j) a(n-j). Counts weak orders on [n].
inline std::uint64_t fubini(int n) {
  if (n < 0) throw domain_error(errc::parameter, "fubini: n must be >= 0");
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t acc = 0;
    for (int j = 1; j <= m; ++j) acc += binomial(m, j) * a[static_cast<std::size_t>(m - j)];
    a[static_cast<std::size_t>(m)] = acc;
  }
  return a[static_cast<std::size_t>(n)];
}

/// A named, parameterized family of equal-length words.
struct Family {
  FamilyKind kind = FamilyKind::all_weak_orders;
  int n = 0;   // ground set size; word length for full-word kinds
  int k = -1;  // weight, where applicable
  int h = -1;  // height, where applicable
  Word ms;     // multiset_perms only, kept sorted

  static Family all_weak_orders(int n);
  static Family fixed_height(int n, int h);
  static Family fixed_weight(int n, int k);
  static Family fixed_weight_height(int n, int k, int h);
  static Family fixed_weight_prefix(int n, int k);
  static Family fixed_weight_height_prefix(int n, int k, int h);
  static Family multiset_perms(Word multiset);
  static Family binary(int n);

  /// Parses a descriptor: "wn:n=5", "wnh:n=6,h=2", "wkn:n=6,k=4",
  /// "wknh:n=6,k=4,h=2", "wk-full:n=5,k=4", "wkh-full:n=5,k=4,h=2",
  /// "ms:0,0,1,2", "bin:n=3".
  static Family parse(std::string_view descriptor);
  std::string descriptor() const;

  int word_length() const {
    switch (kind) {
      case FamilyKind::fixed_weight_prefix:
      case FamilyKind::fixed_weight_height_prefix:
        return n - 1;
      case FamilyKind::multiset_perms:
        return static_cast<int>(ms.size());
      default:
        return n;
    }
  }

  bool is_prefix_kind() const {
    return kind == FamilyKind::fixed_weight_prefix ||
           kind == FamilyKind::fixed_weight_height_prefix;
  }

  friend bool operator==(const Family&, const Family&) = default;
};

namespace detail {

inline void check_n(int n) {
  if (n < 1 || n > kMaxFamilyN)
    throw domain_error(errc::parameter,
                       "n must be in 1.." + std::to_string(kMaxFamilyN));
}

inline std::uint64_t low_bits(int m) {
  return m >= 64 ? ~0ull : ((1ull << m) - 1);
}

/// Emits, in lexicographic order, every length-n word over {0..cap} whose
/// letter set is {0..max letter}, optionally with a fixed letter sum. Partial
/// words may have transient gaps (021 passes through the gapped prefix 02);
/// a branch survives only while the remaining positions can still plug every
/// gap and, when asked, land exactly on the target weight.
template <typename Emit>
void for_each_contiguous_word(int n, int cap, std::optional<int> target_weight, Emit&& emit) {
  Word w(static_cast<std::size_t>(n));
  std::uint64_t used = 0;
  int maxv = -1;
  int wsum = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      emit(static_cast<const Word&>(w));
      return;
    }
    const int rem = n - pos - 1;
    for (int v = 0; v <= cap; ++v) {
      const std::uint64_t used2 = used | (1ull << v);
      const int max2 = std::max(maxv, v);
      const int missing = max2 + 1 - std::popcount(used2 & low_bits(max2 + 1));
      if (missing > rem) {
        if (v > maxv) break;  // larger v only widens the gap
        continue;
      }
      if (target_weight) {
        const int need = *target_weight - wsum - v;
        if (need < 0) break;  // v ascending: heavier letters only overshoot
        if (need > cap * rem) continue;
      }
      const std::uint64_t su = used;
      const int sm = maxv;
      used = used2;
      maxv = max2;
      wsum += v;
      w[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      used = su;
      maxv = sm;
      wsum -= v;
    }
  };
  rec(rec, 0);
}

/// Family contents with no emptiness check; lexicographically sorted and
/// duplicate-free by construction.
inline std::vector<Word> enumerate_impl(const Family& f) {
  std::vector<Word> out;
  auto push = [&out](const Word& w) { out.push_back(w); };
  switch (f.kind) {
    case FamilyKind::all_weak_orders:
      for_each_contiguous_word(f.n, f.n - 1, std::nullopt, push);
      break;
    case FamilyKind::fixed_height:
      for_each_contiguous_word(f.n, f.h, std::nullopt, [&](const Word& w) {
        if (height_of(w) == f.h) out.push_back(w);
      });
      break;
    case FamilyKind::fixed_weight:
      for_each_contiguous_word(f.n, f.n - 1, f.k, push);
      break;
    case FamilyKind::fixed_weight_height:
      for_each_contiguous_word(f.n, f.h, f.k, [&](const Word& w) {
        if (height_of(w) == f.h) out.push_back(w);
      });
      break;
    case FamilyKind::fixed_weight_prefix:
      // The last letter is k minus the prefix sum, so truncation is injective
      // and preserves lexicographic order.
      for_each_contiguous_word(f.n, f.n - 1, f.k, [&](const Word& w) {
        out.emplace_back(w.begin(), w.end() - 1);
      });
      break;
    case FamilyKind::fixed_weight_height_prefix:
      for_each_contiguous_word(f.n, f.h, f.k, [&](const Word& w) {
        if (height_of(w) == f.h) out.emplace_back(w.begin(), w.end() - 1);
      });
      break;
    case FamilyKind::multiset_perms: {
      Word w = f.ms;
      do {
        out.push_back(w);
      } while (std::next_permutation(w.begin(), w.end()));
      break;
    }
    case FamilyKind::binary: {
      for (std::uint64_t x = 0; x < (1ull << f.n); ++x) {
        Word w(static_cast<std::size_t>(f.n));
        for (int i = 0; i < f.n; ++i)
          w[static_cast<std::size_t>(i)] = static_cast<int>((x >> (f.n - 1 - i)) & 1);
        out.push_back(std::move(w));
       }
      break;
    }
  }
  return out;
}

}  // namespace detail

inline Family Family::all_weak_orders(int n) {
  detail::check_n(n);
  Family f;
  f.kind = FamilyKind::all_weak_orders;
  f.n = n;
  return f;
}

inline Family Family::fixed_height(int n, int h) {
  detail::check_n(n);
  if (h < 0 || h > n - 1)
    throw domain_error(errc::parameter, "h must be in 0.." + std::to_string(n - 1));
  Family f;
  f.kind = FamilyKind::fixed_height;
  f.n = n;
  f.h = h;
  return f;
}

inline Family Family::fixed_weight(int n, int k) {
  detail::check_n(n);
  if (k < 0 || k > max_weight(n))
    throw domain_error(errc::parameter,
                       "k must be in 0.." + std::to_string(max_weight(n)) +
                           " (the maximum weight on " + std::to_string(n) + " letters)");
  Family f;
  f.kind = FamilyKind::fixed_weight;
  f.n = n;
  f.k = k;
  return f;
}

inline Family Family::fixed_weight_height(int n, int k, int h) {
  Family f = fixed_weight(n, k);
  if (h < 0 || h > n - 1)
    throw domain_error(errc::parameter, "h must be in 0.." + std::to_string(n - 1));
  f.kind = FamilyKind::fixed_weight_height;
  f.h = h;
  return f;
}

inline Family Family::fixed_weight_prefix(int n, int k) {
  if (n < 2) throw domain_error(errc::parameter, "prefix families need n >= 2");
  Family f = fixed_weight(n, k);
  f.kind = FamilyKind::fixed_weight_prefix;
  return f;
}

inline Family Family::fixed_weight_height_prefix(int n, int k, int h) {
  if (n < 2) throw domain_error(errc::parameter, "prefix families need n >= 2");
  Family f = fixed_weight_height(n, k, h);
  f.kind = FamilyKind::fixed_weight_height_prefix;
  return f;
}

inline Family Family::multiset_perms(Word multiset) {
  if (multiset.empty() || multiset.size() > kMaxFamilyN)
    throw domain_error(errc::parameter,
                       "multiset size must be in 1.." + std::to_string(kMaxFamilyN));
  for (int v : multiset)
    if (v < 0 || v > 1'000'000)
      throw domain_error(errc::parameter, "multiset values must be naturals");
  std::sort(multiset.begin(), multiset.end());
  Family f;
  f.kind = FamilyKind::multiset_perms;
  f.n = static_cast<int>(multiset.size());
  f.ms = std::move(multiset);
  return f;
}

inline Family Family::binary(int n) {
  detail::check_n(n);
  Family f;
  f.kind = FamilyKind::binary;
  f.n = n;
  return f;
}

inline Family Family::parse(std::string_view d) {
  const std::size_t colon = d.find(':');
  if (colon == std::string_view::npos)
    throw domain_error(errc::bad_descriptor, "descriptor needs the form kind:params");
  const std::string_view kind = d.substr(0, colon);
  const std::string_view rest = d.substr(colon + 1);

  auto split = [](std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string_view::npos) {
        parts.push_back(s.substr(pos));
        break;
      }
      parts.push_back(s.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return parts;
  };
  auto to_int = [](std::string_view s) {
    if (s.empty()) throw domain_error(errc::bad_descriptor, "empty integer");
    long v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw domain_error(errc::bad_descriptor,
                           "bad integer '" + std::string(s) + "' in descriptor");
      v = v * 10 + (c - '0');
      if (v > 100'000'000) throw domain_error(errc::bad_descriptor, "integer too large");
    }
    return static_cast<int>(v);
  };

  if (kind == "ms") {
    Word m;
    for (auto part : split(rest)) m.push_back(to_int(part));
    return multiset_perms(std::move(m));
  }

  int n = -1, k = -1, h = -1;
  for (auto part : split(rest)) {
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos)
      throw domain_error(errc::bad_descriptor, "expected key=value in descriptor");
    const std::string_view key = part.substr(0, eq);
    const int value = to_int(part.substr(eq + 1));
    if (key == "n")
      n = value;
    else if (key == "k")
      k = value;
    else if (key == "h")
      h = value;
    else
      throw domain_error(errc::bad_descriptor, "unknown key '" + std::string(key) + "'");
  }
  auto need = [&](bool have_n, bool have_k, bool have_h) {
    if (have_n != (n >= 0) || have_k != (k >= 0) || have_h != (h >= 0))
      throw domain_error(errc::bad_descriptor,
                         "wrong parameters for '" + std::string(kind) + "'");
  };
  if (kind == "wn") {
    need(true, false, false);
    return all_weak_orders(n);
  }
  if (kind == "wnh") {
    need(true, false, true);
    return fixed_height(n, h);
  }
  if (kind == "wkn") {
    need(true, true, false);
    return fixed_weight_prefix(n, k);
  }
  if (kind == "wknh") {
    need(true, true, true);
    return fixed_weight_height_prefix(n, k, h);
  }
  if (kind == "wk-full") {
    need(true, true, false);
    return fixed_weight(n, k);
  }
  if (kind == "wkh-full") {
    need(true, true, true);
    return fixed_weight_height(n, k, h);
  }
  if (kind == "bin") {
    need(true, false, false);
    return binary(n);
  }
  throw domain_error(errc::bad_descriptor, "unknown family kind '" + std::string(kind) + "'");
}

inline std::string Family::descriptor() const {
  switch (kind) {
    case FamilyKind::all_weak_orders:
      return "wn:n=" + std::to_string(n);
    case FamilyKind::fixed_height:
      return "wnh:n=" + std::to_string(n) + ",h=" + std::to_string(h);
    case FamilyKind::fixed_weight_prefix:
      return "wkn:n=" + std::to_string(n) + ",k=" + std::to_string(k);
    case FamilyKind::fixed_weight_height_prefix:
      return "wknh:n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",h=" + std::to_string(h);
    case FamilyKind::fixed_weight:
      return "wk-full:n=" + std::to_string(n) + ",k=" + std::to_string(k);
    case FamilyKind::fixed_weight_height:
      return "wkh-full:n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",h=" + std::to_string(h);
    case FamilyKind::multiset_perms: {
      std::string out = "ms:";
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ms[i]);
      }
      return out;
    }
    case FamilyKind::binary:
      return "bin:n=" + std::to_string(n);
  }
  return "?";
}

/// Lexicographically sorted, duplicate-free, exhaustive list of the family's
/// words. Throws empty_family when no word satisfies the constraints (e.g.
/// wknh with k below the mandatory C(h+1,2)).
inline std::vector<Word> enumerate(const Family& f) {
  auto words = detail::enumerate_impl(f);
  if (words.empty())
    throw domain_error(errc::empty_family, "family " + f.descriptor() + " is empty");
  return words;
}

/// The unique full word extending a prefix-notation word: the last letter is
/// k minus the prefix sum. Throws when that letter is negative, the result is
/// not a weak order, or (wknh) the height is off.
inline HeightWord prefix_extend(const Word& prefix, const Family& f) {
  if (!f.is_prefix_kind())
    throw domain_error(errc::parameter, "prefix_extend needs a prefix-notation family");
  if (static_cast<int>(prefix.size()) != f.n - 1)
    throw domain_error(errc::length_mismatch,
                       "prefix must have " + std::to_string(f.n - 1) + " letters");
  const int last = f.k - weight_of(prefix);
  if (last < 0)
    throw domain_error(errc::out_of_range, "computed last letter is negative");
  Word full = prefix;
  full.push_back(last);
  HeightWord w = HeightWord::validate(std::move(full));
  if (f.kind == FamilyKind::fixed_weight_height_prefix && w.height() != f.h)
    throw domain_error(errc::parameter,
                       "extended word has height " + std::to_string(w.height()) +
                           ", family needs " + std::to_string(f.h));
  return w;
}

inline bool member(const Word& w, const Family& f) {
  if (static_cast<int>(w.size()) != f.word_length()) return false;
  switch (f.kind) {
    case FamilyKind::all_weak_orders:
      return HeightWord::is_valid(w);
    case FamilyKind::fixed_height:
      return HeightWord::is_valid(w) && height_of(w) == f.h;
    case FamilyKind::fixed_weight:
      return HeightWord::is_valid(w) && weight_of(w) == f.k;
    case FamilyKind::fixed_weight_height:
      return HeightWord::is_valid(w) && weight_of(w) == f.k && height_of(w) == f.h;
    case FamilyKind::fixed_weight_prefix:
    case FamilyKind::fixed_weight_height_prefix:
      try {
        prefix_extend(w, f);
        return true;
      } catch (const domain_error&) {
        return false;
      }
    case FamilyKind::multiset_perms:
      return sorted_multiset(w) == f.ms;
    case FamilyKind::binary:
      for (int v : w)
        if (v != 0 && v != 1) return false;
      return true;
  }
  return false;
}

/// Family size. Uses an independent closed form where one exists (Fubini
/// recurrence, surjection counts, multinomials, powers of two) and direct
/// enumeration otherwise; enumerate() agreement is part of the test suite.
inline std::uint64_t count(const Family& f) {
  switch (f.kind) {
    case FamilyKind::all_weak_orders:
      return fubini(f.n);
    case FamilyKind::fixed_height:
      return factorial(f.h + 1) * stirling2(f.n, f.h + 1);
    case FamilyKind::multiset_perms: {
      std::uint64_t c = factorial(static_cast<int>(f.ms.size()));
      std::size_t i = 0;
      while (i < f.ms.size()) {
        std::size_t j = i;
        while (j < f.ms.size() && f.ms[j] == f.ms[i]) ++j;
        c /= factorial(static_cast<int>(j - i));
        i = j;
      }
      return c;
    }
    case FamilyKind::binary:
      return 1ull << f.n;
    default:
      return detail::enumerate_impl(f).size();
  }
}

/// The words' length-(L-1) prefixes. Only meaningful where truncation is
/// injective; for multiset permutations the dropped letter is what remains of
/// the multiset, so |prefixes| = |permutations|.
inline std::vector<Word> prefix_words(const Family& f) {
  if (f.kind != FamilyKind::multiset_perms)
    throw domain_error(errc::parameter,
                       "prefix_words is defined for multiset permutation families");
  if (f.ms.size() < 2)
    throw domain_error(errc::parameter, "prefix notation needs words of length >= 2");
  auto words = enumerate(f);
  for (auto& w : words) w.pop_back();
  return words;
}

}  // namespace wocycle
