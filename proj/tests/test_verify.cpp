#include "doctest.h"
#include "oracles.hpp"
#include "scrambled/verify.hpp"

using namespace scrambled;

namespace {

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

const WordReport& find(const SweepReport& r, const std::string& s) {
  for (const WordReport& w : r.words) {
    if (w.word.str() == s) return w;
  }
  throw Error("word not swept: " + s);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("single word analysis") {
  const WordReport aba = analyze_word(Word::parse("aba"));
  CHECK(aba.passed());
  CHECK(aba.classification == "circular");
  CHECK(aba.predicted.str() == "S^1");
  CHECK(aba.f_vector == std::vector<std::size_t>{2, 3, 1});
  CHECK(aba.euler_direct == -1);
  CHECK_FALSE(aba.matching_applicable);

  const WordReport a3 = analyze_word(Word::parse("aaa"));
  CHECK(a3.passed());
  CHECK(a3.matching_applicable);
  CHECK(a3.reduction_terminal == "a");
  CHECK(a3.free_pair_count == 0);
  CHECK_FALSE(a3.pseudomanifold);

  const WordReport a2b2 = analyze_word(Word::parse("aabb"));
  CHECK(a2b2.pseudomanifold);
  CHECK(a2b2.homology[3].betti == 1);
  CHECK(a2b2.failed_checks().empty());
}

TEST_CASE("sweep(1, 1) and sweep(3, 3)") {
  SweepOptions one;
  one.max_len = 1;
  one.max_alphabet = 1;
  const SweepReport r1 = sweep(one);
  REQUIRE(r1.words.size() == 1);
  CHECK(r1.words[0].word.str() == "a");
  CHECK(r1.words[0].predicted.str() == "contractible");
  CHECK(r1.ok());

  SweepOptions three;
  three.max_len = 3;
  three.max_alphabet = 3;
  const SweepReport r3 = sweep(three);
  CHECK(r3.ok());
  CHECK(find(r3, "abc").homology.all_trivial());
  CHECK(find(r3, "aab").homology.all_trivial());
  CHECK(find(r3, "aaa").homology.all_trivial());
  CHECK(find(r3, "aba").homology[1].betti == 1);
  CHECK(find(r3, "aba").predicted.str() == "S^1");

  SweepOptions zero;
  zero.max_len = 0;
  CHECK_THROWS_AS(sweep(zero), Error);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  SweepOptions a;
  a.max_len = 6;
  a.max_alphabet = 3;
  a.jobs = 1;
  SweepOptions b = a;
  b.jobs = 4;
  const SweepReport ra = sweep(a);
  const SweepReport rb = sweep(b);
  REQUIRE(ra.words.size() == rb.words.size());
  for (std::size_t i = 0; i < ra.words.size(); ++i) {
    CHECK(ra.words[i].word == rb.words[i].word);
    CHECK(ra.words[i].homology == rb.words[i].homology);
    CHECK(ra.words[i].failed_checks() == rb.words[i].failed_checks());
  }
  CHECK(ra.ok());

  SweepOptions dedup = a;
  dedup.dedup_reversal = true;
  const SweepReport rd = sweep(dedup);
  CHECK(rd.words.size() < ra.words.size());
  CHECK(rd.ok());
}

TEST_CASE("sweep agrees with brute-force Betti numbers") {
  SweepOptions o;
  o.max_len = 6;
  o.max_alphabet = 3;
  for (const WordReport& w : sweep(o).words) {
    const std::vector<std::size_t> betti = oracle::betti_mod_p(w.word.str());
    REQUIRE(betti.size() == w.homology.groups.size());
    for (std::size_t n = 0; n < betti.size(); ++n) CHECK(w.homology.groups[n].betti == betti[n]);
  }
}

TEST_CASE("reversal classes") {
  CHECK(reversal_class(Word::parse("aab")).str() == "aab");
  CHECK(reversal_class(Word::parse("abb")).str() == "aab");
  CHECK(reversal_class(Word::parse("cab")).str() == "abc");
}

TEST_CASE("indecomposable classes by brute force") {
  // Independent count: canonical words, no split into two disjoint-alphabet
  // halves, one per renaming-and-reversal class.
  auto indecomposable = [](const std::string& s) {
    for (std::size_t cut = 1; cut < s.size(); ++cut) {
      const std::string l = s.substr(0, cut), r = s.substr(cut);
      if (l.find_first_of(r) == std::string::npos) return false;
    }
    return true;
  };
  for (std::size_t len = 1; len <= 6; ++len) {
    std::set<std::string> classes;
    for (const std::string& s : oracle::all_words(len, len)) {
      if (!indecomposable(s)) continue;
      std::string rev(s.rbegin(), s.rend());
      classes.insert(std::min(oracle::canonical(s), oracle::canonical(rev)));
    }
    const std::vector<Word> got = indecomposable_classes(len, len);
    CHECK(strs(got) == std::vector<std::string>(classes.begin(), classes.end()));
  }
}

TEST_CASE("table comparison") {
  const TablesReport t = check_tables();
  CHECK(t.up_to_four.ok());
  CHECK(t.up_to_four.found.size() == 9);
  CHECK(t.length_five.expected.size() == 13);
  // Two length-5 classes are absent from the printed list.
  CHECK(strs(t.length_five.extra()) == std::vector<std::string>{"abcab", "abcba"});
  CHECK(t.length_five.missing().empty());
  CHECK(t.length_five.found.size() == 15);
}

}  // TEST_SUITE
