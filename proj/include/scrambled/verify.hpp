// Exhaustive sweeps cross-checking the classification of scrambled simplices
// against computed invariants.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scrambled/homology.hpp"
#include "scrambled/words.hpp"

namespace scrambled {

struct WordReport {
  Word word;
  std::vector<std::size_t> f_vector;
  std::int64_t euler_direct = 0;
  std::int64_t euler_recursive = 0;
  std::int64_t euler_fvector = 0;
  std::int64_t euler_theorem = 0;
  /// "circular", "spherical", "conical" or "other".
  std::string classification;
  std::size_t circular_factors = 0;
  HomotopyType predicted;
  HomologyProfile homology;
  HomologyAudit audit;

  // (a) homology is that of the predicted type.
  bool homology_match = false;
  // (b) the four Euler values agree.
  bool euler_agree = false;
  // (c) H~_1 = Z iff circular, else 0.
  bool h1_law = false;
  // (d) full matching audit, when α_1..α_{t-1} are even.
  bool matching_applicable = false;
  bool matching_valid = true;
  std::string matching_failures;
  // (d) reduce_to_core reaches the expected core through valid steps.
  bool reduction_valid = false;
  std::string reduction_terminal;
  // (e) pseudomanifold iff the reduced form is a_1^2 ... a_t^2.
  bool pseudomanifold = false;
  bool pseudomanifold_law = false;
  // (f) no free pairs when every exponent is at least 2.
  std::size_t free_pair_count = 0;
  bool free_pairs_law = false;

  bool passed() const;
  /// Comma-separated names of the failing checks.
  std::string failed_checks() const;
};

/// Runs every check on one word.
WordReport analyze_word(const Word& w);

struct SweepOptions {
  std::size_t max_len = 8;
  std::size_t max_alphabet = 4;
  bool dedup_reversal = false;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 0;
};

struct SweepFailure {
  Word word;
  std::string checks;
};

struct SweepReport {
  SweepOptions options;
  /// Canonical word order, independent of scheduling.
  std::vector<WordReport> words;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Throws on max_len == 0.
SweepReport sweep(const SweepOptions& options);

struct TableCheck {
  std::size_t length_min = 0;
  std::size_t length_max = 0;
  std::vector<Word> expected;
  std::vector<Word> found;

  bool ok() const { return expected == found; }
  /// Listed but not enumerated.
  std::vector<Word> missing() const;
  /// Enumerated but not listed.
  std::vector<Word> extra() const;
};

struct TablesReport {
  TableCheck up_to_four;
  TableCheck length_five;

  bool ok() const { return up_to_four.ok() && length_five.ok(); }
};

/// Representative of w up to renaming letters and reversal.
Word reversal_class(const Word& w);

/// Indecomposable canonical words in [min_len, max_len], one per class
/// under renaming and reversal, sorted.
std::vector<Word> indecomposable_classes(std::size_t min_len, std::size_t max_len);

TablesReport check_tables();

}  // namespace scrambled
