// Discrete-Morse matchings on scrambled simplices: the involution μ_t, the
// full matching, collapsing orders, word reductions and the explicit
// collapses of alternating words.
//
// Matchings are recorded through subwords and their exponential
// presentations; resolve() turns them into cells of a concrete Δ_w.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scrambled/complex.hpp"
#include "scrambled/words.hpp"

namespace scrambled {

/// μ_t(β) = (α_1, ..., α_{h-1}, ξ(β_h), β_{h+1}, ..., β_t) with h = h_t(β),
/// applied to the first t runs of w. Throws unless α_1..α_{t-1} are even,
/// β is left-shifted in those runs, and the result stays below α.
ExpPresentation mu(const ReducedForm& w, std::size_t t, const ExpPresentation& beta);

struct MatchedPair {
  /// Lower cell; the empty word stands for the augmentation cell.
  Word sigma;
  Word tau;
  ExpPresentation sigma_presentation;
  ExpPresentation tau_presentation;
  std::string rule;
};

struct Matching {
  std::vector<MatchedPair> pairs;
  std::vector<Word> critical;
};

/// The matching μ_t over all subwords of w (the empty subword included).
/// Requires α_1..α_{t-1} even. Critical cells: none if α_t is odd, the top
/// simplex otherwise.
Matching full_matching(const ReducedForm& w);

using CollapsingOrder = std::vector<std::pair<CellRef, CellRef>>;

/// Pairs with a nonempty σ, sorted by dim σ descending, then by σ's
/// presentation lexicographically.
CollapsingOrder collapsing_order(const DeltaComplex& x, const Matching& m);

struct PairCheck {
  bool dimension = false;  // dim σ = dim τ - 1
  bool incidence = false;  // [σ:τ] = ±1
  bool closure = false;    // P(X)_{>=σ} inside the pairs seen so far

  bool ok() const { return dimension && incidence && closure; }
};

struct OrderReport {
  std::vector<PairCheck> pairs;
  bool valid = true;
  /// Position of the first failing pair.
  std::optional<std::size_t> first_failure;
};

/// Checks every pair against the three collapsing-order conditions. Throws
/// if a pair names a cell that does not exist in X.
OrderReport validate_collapsing_order(const DeltaComplex& x, const CollapsingOrder& order);

/// Results of checking a full matching against Δ_w.
struct MatchingAudit {
  bool involution = true;
  bool presentations = true;  // partners are left-shifted presentations
  bool dimensions = true;
  bool incidences = true;
  bool partition = true;  // pairs and critical cells cover Δ_w exactly once
  /// A cover γ ≠ μ(σ) of a lower cell σ is lower, or the partner of a lower
  /// cell that precedes σ in collapsing_order().
  bool coface_locality = true;
  /// The stronger statement with no escape clause: γ = μ(σ) or γ lower.
  /// Informational; it fails already for a^2 b^2 a.
  bool locality_literal = true;
  bool critical_count = true;
  bool order_valid = true;

  bool ok() const {
    return involution && presentations && dimensions && incidences && partition &&
           coface_locality && critical_count && order_valid;
  }
  std::string failures() const;
};

/// Full audit of full_matching(reduced_form(w)) on Δ_w; the collapsing order
/// is validated on Δ_w with its critical cell removed.
MatchingAudit audit_full_matching(const Word& w);

struct ReductionStep {
  enum class Kind { Reduce, Flip, FullMatching };

  Kind kind = Kind::Reduce;
  Word before;
  Word after;
  /// 1-based run number k of the reduction; 0 for other kinds.
  std::size_t k = 0;
  Matching matching;
  /// Collapsing-order validation of the matching on Δ_before.
  bool valid = true;
};

std::string to_string(ReductionStep::Kind kind);

/// Removes one letter of run k+1 for the least k with α_k odd. The removed
/// simplices (those with β_{k+1} = α_{k+1} in their (k+1)-shifted
/// presentation) are matched by μ_k. Throws Error("word is fully reduced")
/// when no k <= t-1 exists. The step is validated against Δ_w before
/// returning; inconsistencies throw.
std::pair<Word, Matching> reduce_step(const Word& w);

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Word terminal;
  bool valid = true;
};

/// Reduces w to its fundamental subword (spherical words) or to a single
/// letter, flipping the word when reduce_step gets stuck.
ReductionTrace reduce_to_core(const Word& w);

struct AlternatingStep {
  FreePair pair;
  Word sigma;
  Word tau;
  std::string rule;
};

struct AlternatingCollapse {
  std::size_t n = 0;
  Word word;
  /// Terminal target: the letter a, or the fundamental subword when 3 | n.
  Word target;
  std::vector<AlternatingStep> steps;
  /// Cells of Δ_alt(n) surviving every collapse.
  std::vector<Word> remaining;
};

/// Rule-driven collapse sequence of Δ_alt(n); each pair is checked as an
/// elementary collapse at its turn, and any failure throws CollapseError.
AlternatingCollapse alternating_collapse(std::size_t n);

/// The rule partner of a subword u of an alternating word, paired within
/// {a, b}^*, or nullopt for the empty-word pair. `upper` reports whether u
/// is the larger cell.
struct RulePartner {
  Word partner;
  bool upper = false;
  std::string rule;
};
std::optional<RulePartner> alternating_partner(const Word& u);

/// True if w is abab... or baba... up to renaming, length >= 1.
bool is_alternating(const Word& w);

}  // namespace scrambled
