#include "scrambled/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <thread>

#include "scrambled/complex.hpp"
#include "scrambled/morse.hpp"

namespace scrambled {

namespace {

bool even_prefix(const ReducedForm& r) {
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (r[i].exponent % 2 != 0) return false;
  }
  return true;
}

bool homology_of(const HomologyProfile& h, const HomotopyType& type) {
  for (const HomologyGroup& g : h.groups) {
    if (!g.torsion.empty()) return false;
    const bool sphere_dim = type.kind == HomotopyType::Kind::Sphere && g.dim == type.sphere_dimension;
    if (g.betti != (sphere_dim ? 1u : 0u)) return false;
  }
  // The sphere dimension must exist in the complex.
  return type.kind == HomotopyType::Kind::Contractible ||
         static_cast<std::size_t>(type.sphere_dimension) < h.groups.size();
}

std::string classification_name(const WordClassification& c) {
  if (c.is_circular) return "circular";
  if (c.is_spherical) return "spherical";
  if (c.is_conical) return "conical";
  return "other";
}

}  // namespace

bool WordReport::passed() const { return failed_checks().empty(); }

std::string WordReport::failed_checks() const {
  std::string out;
  auto note = [&](bool flag, const char* name) {
    if (flag) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  note(homology_match, "homology");
  note(euler_agree, "euler");
  note(h1_law, "h1");
  note(matching_valid, "matching");
  note(reduction_valid, "reduction");
  note(pseudomanifold_law, "pseudomanifold");
  note(free_pairs_law, "free_pairs");
  note(audit.chain_complex, "chain_complex");
  note(audit.certificates, "snf_certificate");
  return out;
}

WordReport analyze_word(const Word& w) {
  WordReport rep;
  rep.word = w;
  const DeltaComplex x = build(w);
  const ReducedForm r(w);
  const WordClassification cls = classify(w);

  rep.f_vector = x.f_vector();
  rep.euler_direct = euler_direct(w);
  rep.euler_recursive = euler_recursive(w);
  rep.euler_fvector = reduced_euler(x);
  rep.euler_theorem = euler_theorem(w);
  rep.euler_agree = rep.euler_direct == rep.euler_recursive &&
                    rep.euler_recursive == rep.euler_fvector &&
                    rep.euler_fvector == rep.euler_theorem;

  rep.classification = classification_name(cls);
  rep.circular_factors = cls.circular_factors.size();
  rep.predicted = predict_homotopy(w);
  rep.homology = reduced_homology(x, rep.audit);
  rep.homology_match = homology_of(rep.homology, rep.predicted);

  const HomologyGroup& h1 = rep.homology[1];
  rep.h1_law = cls.is_circular ? (h1.betti == 1 && h1.torsion.empty()) : h1.trivial();

  rep.matching_applicable = even_prefix(r);
  if (rep.matching_applicable) {
    const MatchingAudit audit = audit_full_matching(w);
    rep.matching_valid = audit.ok();
    rep.matching_failures = audit.failures();
  }

  const ReductionTrace trace = reduce_to_core(w);
  rep.reduction_terminal = trace.terminal.str();
  rep.reduction_valid = trace.valid && (cls.is_spherical ? trace.terminal == fundamental_subword(w)
                                                         : trace.terminal.size() == 1);

  bool all_two = true;
  bool all_at_least_two = true;
  for (const Run& run : r.runs()) {
    all_two = all_two && run.exponent == 2;
    all_at_least_two = all_at_least_two && run.exponent >= 2;
  }
  rep.pseudomanifold = is_pseudomanifold(x);
  rep.pseudomanifold_law = rep.pseudomanifold == all_two;
  rep.free_pair_count = free_pairs(x).size();
  rep.free_pairs_law = !all_at_least_two || rep.free_pair_count == 0;
  return rep;
}

SweepReport sweep(const SweepOptions& options) {
  if (options.max_len == 0) throw Error("sweep needs max_len >= 1");
  EnumerationOptions enumeration;
  enumeration.dedup_reversal = options.dedup_reversal;
  const std::vector<Word> words =
      enumerate_canonical_words(options.max_len, options.max_alphabet, enumeration);

  SweepReport report;
  report.options = options;
  report.words.resize(words.size());
  std::size_t jobs = options.jobs != 0 ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::max<std::size_t>(1, std::min(jobs, words.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < words.size(); i = next++) {
      report.words[i] = analyze_word(words[i]);
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  for (const WordReport& w : report.words) {
    if (!w.passed()) report.failures.push_back({w.word, w.failed_checks()});
  }
  return report;
}

Word reversal_class(const Word& w) { return std::min(canonicalize(w), canonicalize(w.reversed())); }

std::vector<Word> indecomposable_classes(std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  EnumerationOptions o;
  o.indecomposable_only = true;
  o.min_len = min_len;
  for (const Word& w : enumerate_canonical_words(max_len, max_len, o)) out.push_back(reversal_class(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> TableCheck::missing() const {
  std::vector<Word> out;
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Word> TableCheck::extra() const {
  std::vector<Word> out;
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                      std::back_inserter(out));
  return out;
}

TablesReport check_tables() {
  auto classes = [](std::initializer_list<const char*> words) {
    std::vector<Word> out;
    for (const char* s : words) out.push_back(reversal_class(Word::parse(s)));
    std::sort(out.begin(), out.end());
    return out;
  };
  TablesReport rep;
  rep.up_to_four.length_min = 1;
  rep.up_to_four.length_max = 4;
  rep.up_to_four.expected =
      classes({"a", "aa", "aaa", "aba", "aaaa", "abaa", "abab", "abba", "abca"});
  rep.up_to_four.found = indecomposable_classes(1, 4);

  rep.length_five.length_min = 5;
  rep.length_five.length_max = 5;
  rep.length_five.expected =
      classes({"aaaaa", "abaaa", "aabaa", "ababb", "abbab", "abbba", "abbaa", "ababa", "abcaa",
               "abaca", "abacb", "abbca", "abcda"});
  rep.length_five.found = indecomposable_classes(5, 5);
  return rep;
}

}  // namespace scrambled
