#include "doctest.h"
#include "oracles.hpp"
#include "scrambled/words.hpp"

using namespace scrambled;

namespace {

Word W(const std::string& s) { return Word::parse(s); }
using P = ExpPresentation;

bool lex_greater(const P& a, const P& b) { return b < a; }

// p-shiftedness straight from the definition, over the oracle's tuples.
bool p_shifted_by_definition(const oracle::Runs& r, const P& beta, std::size_t p) {
  const std::string v = oracle::expand(r, beta);
  const P head(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(p));
  const P tail(beta.begin() + static_cast<std::ptrdiff_t>(p - 1), beta.end());
  for (const P& other : oracle::presentations(r, v)) {
    const P oh(other.begin(), other.begin() + static_cast<std::ptrdiff_t>(p));
    const P ot(other.begin() + static_cast<std::ptrdiff_t>(p - 1), other.end());
    // Same prefix word but lex larger head, or same suffix word but colex larger tail.
    auto prefix_word = [&](const P& h) {
      std::string s;
      for (std::size_t i = 0; i < h.size(); ++i) s += std::string(h[i], r.letters[i]);
      return s;
    };
    auto suffix_word = [&](const P& t) {
      std::string s;
      for (std::size_t i = 0; i < t.size(); ++i) s += std::string(t[i], r.letters[p - 1 + i]);
      return s;
    };
    if (prefix_word(oh) == prefix_word(head) && lex_greater(oh, head)) return false;
    if (suffix_word(ot) == suffix_word(tail) && colex_less(tail, ot)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("presentations") {

TEST_CASE("presentation sets") {
  const ReducedForm aba(W("aba"));
  CHECK(exp_presentations(aba, W("a")) == std::vector<P>{{0, 0, 1}, {1, 0, 0}});
  CHECK(exp_presentations(aba, W("aba")) == std::vector<P>{{1, 1, 1}});
  CHECK(exp_presentations(aba, W("bb")).empty());
  CHECK(left_shifted(aba, W("a")) == P{1, 0, 0});
  CHECK(right_shifted(aba, W("a")) == P{0, 0, 1});
  CHECK_THROWS_AS(left_shifted(aba, W("bb")), Error);

  const ReducedForm w(W("aabba"));
  CHECK(exp_presentations(w, W("aaa")) == oracle::presentations(oracle::runs("aabba"), "aaa"));
  CHECK(left_shifted(w, W("aabba")) == w.exponents());
  CHECK(expand(w, P{2, 0, 1}) == W("aaa"));
}

TEST_CASE("p-shifted representative with a zero entry") {
  const ReducedForm aba(W("aba"));
  const P two = p_shifted(aba, W("a"), 2);
  CHECK((two == P{1, 0, 0} || two == P{0, 0, 1}));
  CHECK(is_p_shifted(aba, P{1, 0, 0}, 2));
  CHECK(is_p_shifted(aba, P{0, 0, 1}, 2));
  for (std::size_t p = 1; p <= 3; ++p) CHECK(p_shifted(aba, W("aba"), p) == P{1, 1, 1});
  CHECK_THROWS_AS(p_shifted(aba, W("a"), 0), Error);
  CHECK_THROWS_AS(p_shifted(aba, W("a"), 4), Error);
  CHECK_THROWS_AS(p_shifted(aba, W("bb"), 1), Error);
}

TEST_CASE("height") {
  const ReducedForm w(W("aabba"));
  CHECK(height(P{2, 1, 1}, w, 3) == 2);
  CHECK(height(P{2, 2, 1}, w, 3) == 3);
  CHECK(height(P{0, 0, 0}, w, 3) == 1);
  CHECK_THROWS_AS(height(P{0, 0, 0}, ReducedForm(W("aba")), 3), Error);
  CHECK_THROWS_AS(height(P{3, 0, 0}, w, 3), Error);
}

TEST_CASE("exhaustive presentation properties for l(w) <= 7") {
  std::size_t p_checked = 0;
  std::size_t unique_checked = 0;
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const std::string& s : oracle::all_words(len, 3)) {
      if (oracle::canonical(s) != s) continue;
      const ReducedForm w(W(s));
      const oracle::Runs r = oracle::runs(s);
      for (const std::string& v : oracle::subwords(s)) {
        const std::vector<P> all = oracle::presentations(r, v);
        REQUIRE(!all.empty());
        CHECK(exp_presentations(w, W(v)) == all);
        const P left = left_shifted(w, W(v));
        const P right = right_shifted(w, W(v));
        CHECK(left == *std::max_element(all.begin(), all.end()));
        CHECK(right == *std::max_element(all.begin(), all.end(), colex_less));
        for (std::size_t p = 1; p <= w.size(); ++p) {
          const P beta = p_shifted(w, W(v), p);
          CHECK(expand(w, beta) == W(v));
          CHECK(is_p_shifted(w, beta, p));
          CHECK(p_shifted_by_definition(r, beta, p));
          ++p_checked;
          if (beta[p - 1] >= 1) {
            std::size_t count = 0;
            for (const P& other : all) count += p_shifted_by_definition(r, other, p);
            CHECK(count == 1);
            ++unique_checked;
          }
        }
      }
    }
  }
  CHECK(p_checked > 1000);
  CHECK(unique_checked > 500);
}

}  // TEST_SUITE
