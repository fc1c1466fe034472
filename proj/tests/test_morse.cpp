#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "scrambled/complex.hpp"
#include "scrambled/morse.hpp"

using namespace scrambled;

namespace {

Word W(const std::string& s) { return Word::parse(s); }
using P = ExpPresentation;

bool even_prefix(const std::string& s) {
  const oracle::Runs r = oracle::runs(s);
  for (std::size_t i = 0; i + 1 < r.exps.size(); ++i) {
    if (r.exps[i] % 2 != 0) return false;
  }
  return true;
}

std::vector<std::string> valid_words(std::size_t max_len, std::size_t alphabet) {
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const std::string& s : oracle::all_words(len, alphabet)) {
      if (oracle::canonical(s) == s && even_prefix(s)) out.push_back(s);
    }
  }
  return out;
}

std::size_t total_betti(const std::string& s) {
  std::size_t sum = 0;
  for (std::size_t b : oracle::betti_mod_p(s)) sum += b;
  return sum;
}

}  // namespace

TEST_SUITE("morse") {

TEST_CASE("mu on fixed inputs") {
  CHECK(mu(ReducedForm(W("aabba")), 3, P{2, 1, 1}) == P{2, 0, 1});
  CHECK(mu(ReducedForm(W("aaa")), 1, P{3}) == P{2});
  CHECK(mu(ReducedForm(W("aaa")), 1, P{0}) == P{1});
  CHECK_THROWS_AS(mu(ReducedForm(W("aba")), 3, P{1, 1, 1}), Error);
  // Not left-shifted: (0, 0, 1) spells a with a larger presentation (1, 0, 0).
  CHECK_THROWS_AS(mu(ReducedForm(W("aabba")), 3, P{0, 0, 1}), Error);
  // ξ(α_t) = α_t + 1 leaves the box.
  CHECK_THROWS_AS(mu(ReducedForm(W("aa")), 1, P{2}), Error);
}

TEST_CASE("mu is an involution preserving the height, l(w) <= 7") {
  std::size_t checked = 0;
  for (const std::string& s : valid_words(7, 3)) {
    const ReducedForm w(W(s));
    const std::size_t t = w.size();
    std::size_t even = 0, odd = 0;
    for (const std::string& v : oracle::subwords(s)) {
      const P beta = left_shifted(w, W(v));
      if (t > 0 && w[t - 1].exponent % 2 == 0 && beta == w.exponents()) continue;  // critical
      const P image = mu(w, t, beta);
      CHECK(mu(w, t, image) == beta);
      CHECK(image == left_shifted(w, expand(w, image)));
      const std::size_t h = height(beta, w, t);
      CHECK(height(image, w, t) == h);
      CHECK(beta[h - 1] % 2 != image[h - 1] % 2);
      (beta[h - 1] % 2 == 0 ? even : odd) += 1;
      ++checked;
    }
    // Σ_0 and Σ_1 are in bijection; the empty word counts toward Σ_0.
    CHECK(even + 1 == odd);
  }
  CHECK(checked > 500);
}

TEST_CASE("full matching on a^3 and a^2 b^2") {
  const Matching m3 = full_matching(ReducedForm(W("aaa")));
  CHECK(m3.critical.empty());
  REQUIRE(m3.pairs.size() == 2);
  CHECK(m3.pairs[0].sigma.empty());
  CHECK(m3.pairs[0].tau == W("a"));

  const Matching m22 = full_matching(ReducedForm(W("aabb")));
  REQUIRE(m22.critical.size() == 1);
  CHECK(m22.critical[0] == W("aabb"));
  CHECK(2 * m22.pairs.size() + 1 == build(W("aabb")).num_cells() + 1);

  CHECK_THROWS_AS(full_matching(ReducedForm(W("aba"))), Error);
}

TEST_CASE("full matching pairs are dimension adjacent with unit incidence") {
  for (const std::string& s : valid_words(7, 3)) {
    const Matching m = full_matching(ReducedForm(W(s)));
    const DeltaComplex x = build(W(s));
    std::size_t covered = m.critical.size();
    for (const MatchedPair& p : m.pairs) {
      CHECK(p.tau.size() == p.sigma.size() + 1);
      covered += 2;
      if (p.sigma.empty()) continue;
      CHECK(std::abs(oracle::incidence(p.sigma.str(), p.tau.str())) == 1);
      CHECK(x.find(p.sigma.str()));
      CHECK(x.find(p.tau.str()));
    }
    // Every cell plus the empty word is used once.
    CHECK(covered == x.num_cells() + 1);
    CHECK(m.critical.size() == total_betti(s));
  }
}

TEST_CASE("audit of the full matching, l(w) <= 7") {
  std::size_t literal_failures = 0;
  for (const std::string& s : valid_words(7, 3)) {
    const MatchingAudit a = audit_full_matching(W(s));
    CHECK_MESSAGE(a.ok(), s << ": " << a.failures());
    literal_failures += !a.locality_literal;
  }
  // The escape-free locality statement does not hold in general.
  CHECK_FALSE(audit_full_matching(W("aabba")).locality_literal);
  CHECK(literal_failures > 0);
}

TEST_CASE("collapsing order validation") {
  const DeltaComplex a3 = build(W("aaa"));
  const Matching m3 = full_matching(ReducedForm(W("aaa")));
  const CollapsingOrder o3 = collapsing_order(a3, m3);
  CHECK(validate_collapsing_order(a3, o3).valid);

  const DeltaComplex a5 = build(W("aaaaa"));
  const CollapsingOrder o5 = collapsing_order(a5, full_matching(ReducedForm(W("aaaaa"))));
  REQUIRE(o5.size() == 2);
  CHECK(o5[0].first.dim > o5[1].first.dim);
  CHECK(validate_collapsing_order(a5, o5).valid);
  const CollapsingOrder increasing(o5.rbegin(), o5.rend());
  const OrderReport bad = validate_collapsing_order(a5, increasing);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.first_failure);
  CHECK(*bad.first_failure == 0);
  CHECK_FALSE(bad.pairs[0].closure);
  CHECK(bad.pairs[0].dimension);
  CHECK(bad.pairs[0].incidence);

  CHECK(validate_collapsing_order(a5, {}).valid);
  CHECK(validate_collapsing_order(build(W("abc")), {}).valid);

  // Zero incidence and a dimension gap.
  const DeltaComplex aa = build(W("aa"));
  const OrderReport zero = validate_collapsing_order(aa, {{aa.at("a"), aa.at("aa")}});
  CHECK_FALSE(zero.pairs[0].incidence);
  const DeltaComplex abc = build(W("abc"));
  CHECK_FALSE(validate_collapsing_order(abc, {{abc.at("a"), abc.at("abc")}}).pairs[0].dimension);
  CHECK_THROWS_AS(validate_collapsing_order(aa, {{CellRef{3, 0}, CellRef{4, 0}}}), Error);
}

TEST_CASE("reduce_step") {
  {
    const auto [next, m] = reduce_step(W("aba"));
    CHECK(next == W("aa"));
    REQUIRE(m.pairs.size() == 2);
    CHECK(m.pairs[0].sigma == W("b"));
    CHECK(m.pairs[0].tau == W("ab"));
    CHECK(m.pairs[1].sigma == W("ba"));
    CHECK(m.pairs[1].tau == W("aba"));
  }
  CHECK(reduce_step(W("abaa")).first == W("aaa"));
  CHECK(reduce_step(W("aaba")).first == W("aab"));
  CHECK_THROWS_WITH_AS(reduce_step(W("aabb")), "word is fully reduced", Error);
  CHECK_THROWS_WITH_AS(reduce_step(W("aaa")), "word is fully reduced", Error);
  CHECK_THROWS_AS(reduce_step(W("")), Error);
}

TEST_CASE("reduce_step cell accounting, l(w) <= 7") {
  std::size_t steps = 0;
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const std::string& s : oracle::all_words(len, 3)) {
      if (oracle::canonical(s) != s) continue;
      std::pair<Word, Matching> r;
      try {
        r = reduce_step(W(s));
      } catch (const Error&) {
        continue;
      }
      ++steps;
      const std::set<std::string> before = oracle::subwords(s);
      const std::set<std::string> after = oracle::subwords(r.first.str());
      CHECK(before.size() - after.size() == 2 * r.second.pairs.size());
      CHECK(oracle::is_subword(r.first.str(), s));
      CHECK(r.first.size() + 1 == s.size());
      for (const MatchedPair& p : r.second.pairs) {
        CHECK(before.count(p.sigma.str()) == 1);
        CHECK(after.count(p.sigma.str()) == 0);
        CHECK(after.count(p.tau.str()) == 0);
        CHECK(std::abs(oracle::incidence(p.sigma.str(), p.tau.str())) == 1);
      }
      CHECK(oracle::euler(r.first.str()) == oracle::euler(s));
    }
  }
  CHECK(steps > 500);
}

TEST_CASE("reduce_to_core") {
  const ReductionTrace ab3 = reduce_to_core(W("ababab"));
  CHECK(ab3.valid);
  CHECK(ab3.terminal == W("aabb"));
  for (std::size_t k = 0; k <= 4; ++k) {
    const ReductionTrace t = reduce_to_core(Word(std::vector<Letter>(2 * k + 1, Letter{0})));
    CHECK(t.valid);
    CHECK(t.terminal == W("a"));
  }
  const ReductionTrace fixed = reduce_to_core(W("aabb"));
  CHECK(fixed.steps.empty());
  CHECK(fixed.terminal == W("aabb"));
  CHECK(reduce_to_core(W("a")).steps.empty());

  for (std::size_t len = 1; len <= 7; ++len) {
    for (const std::string& s : oracle::all_words(len, 3)) {
      if (oracle::canonical(s) != s) continue;
      const ReductionTrace t = reduce_to_core(W(s));
      CHECK_MESSAGE(t.valid, s);
      if (oracle::spherical_factors(s) >= 0) {
        CHECK(t.terminal == fundamental_subword(W(s)));
      } else {
        CHECK(t.terminal.size() == 1);
      }
      Word current = W(s);
      for (const ReductionStep& step : t.steps) {
        CHECK(step.before == current);
        CHECK(step.valid);
        if (step.kind == ReductionStep::Kind::Flip) CHECK(step.after == step.before.reversed());
        current = step.after;
      }
      CHECK(current == t.terminal);
    }
  }
}

TEST_CASE("alternating rule partners") {
  CHECK(is_alternating(W("abab")));
  CHECK(is_alternating(W("ba")));
  CHECK(is_alternating(W("a")));
  CHECK_FALSE(is_alternating(W("aab")));
  CHECK_FALSE(is_alternating(W("")));

  for (std::size_t n = 1; n <= 10; ++n) {
    if (n % 3 == 0) continue;
    const std::string s = alternating_word(n).str();
    for (const std::string& u : oracle::subwords(s)) {
      const auto p = alternating_partner(W(u));
      if (!p || p->partner.empty()) continue;
      if (!oracle::is_subword(p->partner.str(), s)) continue;
      CHECK(p->partner.size() == (p->upper ? u.size() - 1 : u.size() + 1));
      const auto back = alternating_partner(p->partner);
      REQUIRE(back);
      CHECK(back->partner == W(u));
      CHECK(back->upper != p->upper);
      CHECK(back->rule == p->rule);
    }
  }
}

TEST_CASE("alternating collapses, n = 1..12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const AlternatingCollapse c = alternating_collapse(n);
    const Word w = alternating_word(n);
    CHECK(c.word == w);
    const DeltaComplex x = build(w);
    // Replay against an independent session.
    CollapseSession session(x);
    for (const AlternatingStep& step : c.steps) {
      CHECK(x.label(step.pair.sigma) == step.sigma.str());
      CHECK(x.label(step.pair.tau) == step.tau.str());
      CHECK(std::abs(incidence(x, step.pair.sigma, step.pair.tau)) == 1);
      CHECK(session.violated_condition(step.pair.sigma, step.pair.tau) == 0);
      session.collapse(step.pair.sigma, step.pair.tau);
    }
    std::set<std::string> remaining;
    for (const Word& r : c.remaining) remaining.insert(r.str());
    CHECK(remaining.size() == session.alive_count());
    if (n % 3 == 0) {
      CHECK(c.target == fundamental_subword(w));
      CHECK(remaining == oracle::subwords(c.target.str()));
    } else {
      CHECK(c.target == W("a"));
      CHECK(remaining == std::set<std::string>{"a"});
    }
    CHECK(2 * c.steps.size() + remaining.size() == x.num_cells());
  }
  CHECK_THROWS_AS(alternating_collapse(0), Error);
}

}  // TEST_SUITE
