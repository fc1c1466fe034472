#include "scrambled/words.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>

namespace scrambled {

Word Word::of(std::initializer_list<int> ids) {
  std::vector<Letter> letters;
  letters.reserve(ids.size());
  for (int id : ids) {
    if (id < 0 || id > 255) throw Error("letter id out of range");
    letters.push_back(Letter{static_cast<std::uint8_t>(id)});
  }
  return Word(std::move(letters));
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw Error("invalid letter '" + std::string(1, c) + "' (words use a-z)");
    }
    letters.push_back(Letter{static_cast<std::uint8_t>(c - 'a')});
  }
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter a : letters_) {
    out.push_back(a.id < 26 ? static_cast<char>('a' + a.id) : '?');
  }
  return out;
}

bool Word::contains(Letter a) const {
  return std::find(letters_.begin(), letters_.end(), a) != letters_.end();
}

std::vector<Letter> Word::support() const {
  std::vector<Letter> s = letters_;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw Error("substr position out of range");
  const std::size_t end = len == std::string::npos ? letters_.size()
                                                   : std::min(letters_.size(), pos + len);
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Word Word::without(std::size_t pos) const {
  if (pos >= letters_.size()) throw Error("deletion position out of range");
  std::vector<Letter> out;
  out.reserve(letters_.size() - 1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != pos) out.push_back(letters_[i]);
  }
  return Word(std::move(out));
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<Letter> out = lhs.letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << (w.empty() ? std::string("∅") : w.str());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter a : w) {
    h ^= a.id + 1u;
    h *= 1099511628211ull;
  }
  return h;
}

ReducedForm::ReducedForm(const Word& word) {
  if (word.empty()) throw Error("empty word has no reduced form");
  for (Letter a : word) {
    if (!runs_.empty() && runs_.back().letter == a) {
      ++runs_.back().exponent;
    } else {
      runs_.push_back(Run{a, 1});
    }
  }
}

std::vector<std::size_t> ReducedForm::exponents() const {
  std::vector<std::size_t> out;
  out.reserve(runs_.size());
  for (const Run& r : runs_) out.push_back(r.exponent);
  return out;
}

Word ReducedForm::expand() const {
  Word out;
  for (const Run& r : runs_) {
    for (std::size_t i = 0; i < r.exponent; ++i) out.push_back(r.letter);
  }
  return out;
}

ReducedForm ReducedForm::slice(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > runs_.size()) throw Error("run slice out of range");
  ReducedForm out;
  out.runs_.assign(runs_.begin() + static_cast<std::ptrdiff_t>(first),
                   runs_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return out;
}

ReducedForm ReducedForm::reversed() const {
  ReducedForm out;
  out.runs_.assign(runs_.rbegin(), runs_.rend());
  return out;
}

std::string ReducedForm::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) os << ' ';
    os << Word(std::vector<Letter>{runs_[i].letter}).str();
    if (runs_[i].exponent != 1) os << '^' << runs_[i].exponent;
  }
  return os.str();
}

ReducedForm reduced_form(const Word& word) { return ReducedForm(word); }

Word canonicalize(const Word& word) {
  std::array<int, 256> rename;
  rename.fill(-1);
  int next = 0;
  std::vector<Letter> out;
  out.reserve(word.size());
  for (Letter a : word) {
    if (rename[a.id] < 0) rename[a.id] = next++;
    out.push_back(Letter{static_cast<std::uint8_t>(rename[a.id])});
  }
  return Word(std::move(out));
}

Word alternating_word(std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Letter{static_cast<std::uint8_t>(i % 2)});
  return Word(std::move(out));
}

bool is_subword(const Word& v, const Word& w) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size() && j < v.size(); ++i) {
    if (w[i] == v[j]) ++j;
  }
  return j == v.size();
}

Word arrow(const Word& word, Letter a) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == a) return word.substr(i + 1);
  }
  throw Error("arrow: letter '" + Word(std::vector<Letter>{a}).str() +
              "' is not in the support of " + word.str());
}

Word arrow_chain(const Word& word, const Word& v) {
  Word out = word;
  for (Letter a : v) out = arrow(out, a);
  return out;
}

namespace {

// next[p] maps letter id -> least index q >= p with word[q] == letter, or n.
struct NextOccurrence {
  std::vector<Letter> alphabet;
  std::vector<std::vector<std::size_t>> next;

  explicit NextOccurrence(const Word& word) : alphabet(word.support()) {
    const std::size_t n = word.size();
    next.assign(n + 1, std::vector<std::size_t>(alphabet.size(), n));
    for (std::size_t p = n; p-- > 0;) {
      next[p] = next[p + 1];
      const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), word[p]);
      next[p][static_cast<std::size_t>(it - alphabet.begin())] = p;
    }
  }
};

// Each distinct subword is produced exactly once through its leftmost
// embedding.
void visit_from(const Word& word, const NextOccurrence& occ, std::size_t pos, Word& current,
                const std::function<void(const Word&)>& visit) {
  const std::size_t n = word.size();
  for (std::size_t x = 0; x < occ.alphabet.size(); ++x) {
    const std::size_t q = occ.next[pos][x];
    if (q == n) continue;
    current.push_back(occ.alphabet[x]);
    visit(current);
    visit_from(word, occ, q + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_distinct_subword(const Word& word,
                               const std::function<void(const Word&)>& visit) {
  if (word.empty()) return;
  const NextOccurrence occ(word);
  Word current;
  visit_from(word, occ, 0, current, visit);
}

std::vector<Word> distinct_subwords(const Word& word) {
  std::vector<Word> out;
  for_each_distinct_subword(word, [&](const Word& v) { out.push_back(v); });
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::size_t> subword_counts(const Word& word) {
  std::vector<std::size_t> counts(word.size(), 0);
  for_each_distinct_subword(word, [&](const Word& v) { ++counts[v.size() - 1]; });
  return counts;
}

std::int64_t euler_direct(const Word& word) {
  std::int64_t e = -1;
  for_each_distinct_subword(word, [&](const Word& v) { e += v.size() % 2 == 1 ? 1 : -1; });
  return e;
}

std::int64_t euler_recursive(const Word& word) {
  // Every w↓x is a suffix of w, so suffixes are keyed by their length.
  std::map<std::size_t, std::int64_t> memo;
  std::function<std::int64_t(const Word&)> rec = [&](const Word& suffix) -> std::int64_t {
    if (auto it = memo.find(suffix.size()); it != memo.end()) return it->second;
    std::int64_t e = -1;
    for (Letter x : suffix.support()) e -= rec(arrow(suffix, x));
    memo.emplace(suffix.size(), e);
    return e;
  };
  return rec(word);
}

std::int64_t euler_theorem(const Word& word) { return classify(word).is_spherical ? -1 : 0; }

WordClassification classify(const Word& word) {
  WordClassification c;
  if (word.empty()) {
    c.is_spherical = true;
    return c;
  }
  c.is_conical = !word.substr(1).contains(word.front());

  std::vector<Word> factors;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const Letter a = word[pos];
    std::size_t close = pos + 1;
    while (close < word.size() && word[close] != a) ++close;
    if (close == word.size()) break;
    factors.push_back(word.substr(pos, close - pos + 1));
    pos = close + 1;
  }
  if (pos == word.size()) {
    c.is_spherical = true;
    c.is_circular = factors.size() == 1;
    c.circular_factors = std::move(factors);
  } else {
    c.spherical_prefix = word.substr(0, pos);
    c.conical_tail = word.substr(pos);
  }
  return c;
}

Word fundamental_subword(const Word& word) {
  const WordClassification c = classify(word);
  if (!c.is_spherical) throw Error("fundamental subword requires a spherical word: " + word.str());
  Word out;
  for (const Word& f : c.circular_factors) {
    out.push_back(f.front());
    out.push_back(f.front());
  }
  return out;
}

std::string HomotopyType::str() const {
  if (kind == Kind::Contractible) return "contractible";
  return "S^" + std::to_string(sphere_dimension);
}

HomotopyType predict_homotopy(const Word& word) {
  if (word.empty()) throw Error("homotopy type of the empty word is undefined");
  const WordClassification c = classify(word);
  if (!c.is_spherical) return HomotopyType::contractible();
  return HomotopyType::sphere(2 * static_cast<int>(c.circular_factors.size()) - 1);
}

std::optional<std::pair<Word, Word>> is_decomposable(const Word& word) {
  for (std::size_t split = 1; split < word.size(); ++split) {
    bool disjoint = true;
    for (std::size_t i = 0; i < split && disjoint; ++i) {
      for (std::size_t j = split; j < word.size(); ++j) {
        if (word[i] == word[j]) {
          disjoint = false;
          break;
        }
      }
    }
    if (disjoint) return std::make_pair(word.substr(0, split), word.substr(split));
  }
  return std::nullopt;
}

namespace {

void grow_canonical(std::size_t len, std::size_t max_alphabet, Word& current, int used,
                    std::vector<Word>& out) {
  if (current.size() == len) {
    out.push_back(current);
    return;
  }
  const int limit = std::min<int>(used + 1, static_cast<int>(max_alphabet));
  for (int id = 0; id < limit; ++id) {
    current.push_back(Letter{static_cast<std::uint8_t>(id)});
    grow_canonical(len, max_alphabet, current, std::max(used, id + 1), out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_canonical_words(std::size_t max_len, std::size_t max_alphabet,
                                            const EnumerationOptions& options) {
  if (max_len < 1) throw Error("enumeration requires max_len >= 1");
  if (max_alphabet > 26) throw Error("at most 26 letters are supported");
  std::vector<Word> out;
  for (std::size_t len = std::max<std::size_t>(options.min_len, 1); len <= max_len; ++len) {
    std::vector<Word> batch;
    Word current;
    grow_canonical(len, max_alphabet, current, 0, batch);
    for (Word& w : batch) {
      if (options.indecomposable_only && is_decomposable(w)) continue;
      if (options.dedup_reversal && canonicalize(w.reversed()) < w) continue;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace scrambled
