// Word combinatorics underlying the scrambled simplices: letters, words,
// reduced forms, subwords, the arrow operator, reduced Euler
// characteristics and the circular/spherical/conical classification.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scrambled {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An alphabet element. Letters carry no meaning beyond their id.
struct Letter {
  std::uint8_t id = 0;

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// A finite (possibly empty) sequence of letters.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word of(std::initializer_list<int> ids);

  /// Parses an ASCII word over a-z; any other character throws.
  static Word parse(std::string_view text);

  /// ASCII rendering, letter id i printed as 'a' + i.
  std::string str() const;

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  bool contains(Letter a) const;

  /// Distinct letters in increasing id order.
  std::vector<Letter> support() const;

  Word reversed() const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  /// The word with the letter at `pos` deleted.
  Word without(std::size_t pos) const;

  void push_back(Letter a) { letters_.push_back(a); }
  void pop_back() { letters_.pop_back(); }

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// One maximal block a^e of a reduced form.
struct Run {
  Letter letter;
  std::size_t exponent = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length encoding a_1^{α_1} ... a_t^{α_t} with a_i != a_{i+1}.
class ReducedForm {
 public:
  explicit ReducedForm(const Word& word);

  std::size_t size() const noexcept { return runs_.size(); }
  const Run& operator[](std::size_t i) const { return runs_[i]; }
  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::vector<std::size_t> exponents() const;
  Word expand() const;
  /// Runs [first, first + count) as a reduced form of their own.
  ReducedForm slice(std::size_t first, std::size_t count) const;
  ReducedForm reversed() const;
  /// Human-readable power notation, e.g. "a^2 b a^2 b^2".
  std::string str() const;

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;

 private:
  ReducedForm() = default;

  std::vector<Run> runs_;
};

/// Throws Error("empty word has no reduced form") on the empty word.
ReducedForm reduced_form(const Word& word);

/// Renames letters to 0, 1, 2, ... in order of first occurrence.
Word canonicalize(const Word& word);

/// The alternating word abab... of length n.
Word alternating_word(std::size_t n);

/// True if v is a (scattered) subword of w.
bool is_subword(const Word& v, const Word& w);

/// w↓a: the suffix of w strictly after the leftmost occurrence of a.
Word arrow(const Word& word, Letter a);

/// w↓v: left fold of `arrow` over the letters of v.
Word arrow_chain(const Word& word, const Word& v);

/// Calls `visit` once for every distinct nonempty subword of `word`.
void for_each_distinct_subword(const Word& word,
                               const std::function<void(const Word&)>& visit);

/// All distinct nonempty subwords, ordered by length then lexicographically.
std::vector<Word> distinct_subwords(const Word& word);

/// Number of distinct subwords of each length 1..l(w); entry i has length i+1.
std::vector<std::size_t> subword_counts(const Word& word);

/// Reduced Euler characteristic as the signed count of distinct subwords,
/// the empty subword contributing -1.
std::int64_t euler_direct(const Word& word);

/// Reduced Euler characteristic through E(w) = -Σ_{x ∈ supp w} E(w↓x) - 1,
/// memoized on suffixes.
std::int64_t euler_recursive(const Word& word);

/// Euler value predicted from the classification: -1 if spherical, else 0.
std::int64_t euler_theorem(const Word& word);

struct WordClassification {
  bool is_circular = false;
  bool is_conical = false;
  bool is_spherical = false;
  /// Circular factors, left to right; empty unless spherical.
  std::vector<Word> circular_factors;
  /// Set only for nonempty non-spherical words.
  std::optional<Word> spherical_prefix;
  std::optional<Word> conical_tail;
};

WordClassification classify(const Word& word);

/// a_1^2 ... a_q^2 for the circular factorization a_1 v_1 a_1 ... a_q v_q a_q.
/// Throws for non-spherical words.
Word fundamental_subword(const Word& word);

struct HomotopyType {
  enum class Kind { Contractible, Sphere };

  Kind kind = Kind::Contractible;
  /// Odd dimension 2q-1 when kind == Sphere, otherwise 0.
  int sphere_dimension = 0;

  static HomotopyType contractible() { return {}; }
  static HomotopyType sphere(int dim) { return {Kind::Sphere, dim}; }

  std::string str() const;
  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

/// Contractible, or S^{2q-1} for a spherical word with q circular factors.
HomotopyType predict_homotopy(const Word& word);

/// Leftmost split w = w1 w2 with disjoint supports, if any.
std::optional<std::pair<Word, Word>> is_decomposable(const Word& word);

struct EnumerationOptions {
  /// Keep only one of w and the canonical form of its reversal.
  bool dedup_reversal = false;
  /// Skip words having a disjoint-support splitting.
  bool indecomposable_only = false;
  /// Smallest length to emit.
  std::size_t min_len = 1;
};

/// All canonical words with min_len <= l(w) <= max_len over at most
/// max_alphabet letters, by length and then lexicographically.
std::vector<Word> enumerate_canonical_words(std::size_t max_len,
                                            std::size_t max_alphabet,
                                            const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Exponential presentations.
//
// With w = a_1^{α_1} ... a_t^{α_t} fixed, a subword v is recorded by a tuple
// β with 0 <= β_i <= α_i expanding to a_1^{β_1} ... a_t^{β_t} = v. Run
// positions handed to `p_shifted`, `height` and the Morse routines are
// 1-based run numbers, as are t-prefix lengths.

using ExpPresentation = std::vector<std::size_t>;

Word expand(const ReducedForm& w, const ExpPresentation& beta);

/// F_w(v), sorted lexicographically. Empty when v is not a subword.
std::vector<ExpPresentation> exp_presentations(const ReducedForm& w, const Word& v);

/// Lexicographically maximal element of F_w(v).
ExpPresentation left_shifted(const ReducedForm& w, const Word& v);
/// Colexicographically maximal element of F_w(v).
ExpPresentation right_shifted(const ReducedForm& w, const Word& v);

/// Starting from the left-shifted presentation: left-shift runs 1..p, then
/// right-shift runs p..t. Unique among p-shifted presentations whenever the
/// result has β_p >= 1.
ExpPresentation p_shifted(const ReducedForm& w, const Word& v, std::size_t p);

/// True if (β_1..β_p) is left-shifted in a_1^{α_1}..a_p^{α_p} and
/// (β_p..β_t) is right-shifted in a_p^{α_p}..a_t^{α_t}.
bool is_p_shifted(const ReducedForm& w, const ExpPresentation& beta, std::size_t p);

bool colex_less(const ExpPresentation& lhs, const ExpPresentation& rhs);

/// ξ(n) = 4⌊n/2⌋ + 1 - n.
constexpr std::size_t xi(std::size_t n) noexcept { return n % 2 == 0 ? n + 1 : n - 1; }

/// h_t(β): the least run number k in 1..t with β_k < α_k, or t when there is
/// none. Requires α_1..α_{t-1} even and β <= α.
std::size_t height(const ExpPresentation& beta, const ReducedForm& w, std::size_t t);

}  // namespace scrambled
