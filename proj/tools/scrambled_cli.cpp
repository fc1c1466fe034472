// Command-line front end: analysis, homology, Morse traces, exports and sweeps.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "scrambled/complex.hpp"
#include "scrambled/export.hpp"
#include "scrambled/homology.hpp"
#include "scrambled/morse.hpp"
#include "scrambled/verify.hpp"
#include "scrambled/words.hpp"

namespace {

using namespace scrambled;

constexpr std::size_t kMaxUnforcedLength = 14;
constexpr const char* kReportDirEnv = "SCRAMBLED_REPORT_DIR";

// Raised for bad input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string word;
  bool json = false;
  bool force = false;
  std::string format = "json";
  std::size_t times = 1;
  std::size_t max_len = 8;
  std::size_t alphabet = 4;
  bool dedup_reversal = false;
  std::size_t jobs = 0;
};

Word parse_word(const Options& o) {
  Word w;
  try {
    w = Word::parse(o.word);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (w.empty()) throw UsageError("the word must be nonempty");
  if (w.size() > kMaxUnforcedLength && !o.force) {
    throw UsageError("words longer than " + std::to_string(kMaxUnforcedLength) +
                     " letters need --force");
  }
  return w;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

void write_report(const std::string& name, const std::string& content) {
  const char* dir = std::getenv(kReportDirEnv);
  if (dir == nullptr || *dir == '\0') return;
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

int run_analyze(const Options& o) {
  const Word w = parse_word(o);
  const ReducedForm r(w);
  const WordClassification c = classify(w);
  const DeltaComplex x = build(w);
  const HomotopyType type = predict_homotopy(w);
  const std::string kind = c.is_circular    ? "circular"
                           : c.is_spherical ? "spherical"
                           : c.is_conical   ? "conical"
                                            : "neither spherical nor conical";
  if (o.json) {
    Json letters = Json::array();
    for (const Letter a : w) letters.push_back(a.id);
    Json j = {{"word", w.str()},
              {"letters", letters},
              {"reduced_form", r.str()},
              {"classification",
               {{"circular", c.is_circular}, {"spherical", c.is_spherical}, {"conical", c.is_conical}}},
              {"circular_factors", c.circular_factors.size()},
              {"fundamental_subword", c.is_spherical ? Json(fundamental_subword(w).str()) : Json()},
              {"euler", euler_recursive(w)},
              {"homotopy", type.str()},
              {"f_vector", x.f_vector()}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "word:            " << w << '\n'
            << "reduced form:    " << r.str() << '\n'
            << "classification:  " << kind;
  if (c.is_spherical) std::cout << ", q = " << c.circular_factors.size();
  std::cout << '\n';
  if (c.is_spherical) std::cout << "fundamental:     " << fundamental_subword(w) << '\n';
  std::cout << "E(w):            " << euler_recursive(w) << '\n'
            << "homotopy type:   " << type.str() << '\n'
            << "f-vector:        " << join_sizes(x.f_vector()) << '\n';
  return 0;
}

int run_homology(const Options& o) {
  const Word w = parse_word(o);
  HomologyAudit audit;
  const HomologyProfile h = reduced_homology(build(w), audit);
  const bool sane = audit.chain_complex && audit.certificates;
  if (o.json) {
    std::cout << Json{{"word", w.str()}, {"homology", homology_json(h)}, {"certified", sane}}.dump(2)
              << '\n';
  } else {
    std::cout << w << ": " << h.str() << '\n';
    if (!sane) std::cout << "warning: homology certificates failed\n";
  }
  return sane ? 0 : 1;
}

int run_morse(const Options& o) {
  const Word w = parse_word(o);
  const ReducedForm r(w);
  bool even = true;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) even = even && r[i].exponent % 2 == 0;
  if (even) {
    const Matching m = full_matching(r);
    const MatchingAudit audit = audit_full_matching(w);
    if (o.json) {
      Json critical = Json::array();
      for (const Word& c : m.critical) critical.push_back(c.str());
      std::cout << Json{{"word", w.str()},
                        {"kind", "full_matching"},
                        {"steps", matching_json(m)},
                        {"critical", critical},
                        {"valid", audit.ok()}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "full matching mu_" << r.size() << " on " << w << '\n' << matching_text(m);
      std::cout << (audit.ok() ? "valid collapsing order\n" : "INVALID: " + audit.failures() + "\n");
    }
    return audit.ok() ? 0 : 1;
  }
  const ReductionTrace t = reduce_to_core(w);
  if (o.json) {
    Json j = reduction_json(t);
    j["word"] = w.str();
    j["kind"] = "reduction";
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << reduction_text(t);
  }
  return t.valid ? 0 : 1;
}

int run_collapse(const Options& o) {
  const Word w = parse_word(o);
  if (is_alternating(w)) {
    const AlternatingCollapse c = alternating_collapse(w.size());
    if (o.json) {
      Json remaining = Json::array();
      for (const Word& r : c.remaining) remaining.push_back(r.str());
      std::cout << Json{{"word", c.word.str()},
                        {"kind", "alternating"},
                        {"target", c.target.str()},
                        {"steps", alternating_json(c)},
                        {"remaining", remaining}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << alternating_text(c);
    }
    return 0;
  }
  return run_morse(o);
}

int run_subdivide(const Options& o) {
  const Word w = parse_word(o);
  DeltaComplex x = build(w);
  for (std::size_t i = 0; i < o.times; ++i) x = barycentric_subdivide(x);
  const bool simplicial = is_simplicial(x);
  const std::size_t free = free_pairs(x).size();
  if (o.json) {
    std::cout << Json{{"word", w.str()},
                      {"times", o.times},
                      {"f_vector", x.f_vector()},
                      {"cells", x.num_cells()},
                      {"simplicial", simplicial},
                      {"free_pairs", free},
                      {"euler", reduced_euler(x)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "sd^" << o.times << "(" << w << "): f-vector " << join_sizes(x.f_vector()) << ", "
              << x.num_cells() << " cells, " << (simplicial ? "simplicial" : "not simplicial")
              << ", " << free << " free pairs, reduced Euler " << reduced_euler(x) << '\n';
  }
  return 0;
}

int run_export(const Options& o) {
  const Word w = parse_word(o);
  const DeltaComplex x = build(w);
  if (o.format == "json") {
    std::cout << complex_json(x, w.str()).dump(2) << '\n';
  } else if (o.format == "dot") {
    std::cout << complex_dot(x, w.str());
  } else {
    std::cout << complex_csv(x);
  }
  return 0;
}

int run_sweep(const Options& o) {
  if (o.max_len == 0) throw UsageError("--max-len must be at least 1");
  if (o.alphabet == 0) throw UsageError("--alphabet must be at least 1");
  SweepOptions so;
  so.max_len = o.max_len;
  so.max_alphabet = o.alphabet;
  so.dedup_reversal = o.dedup_reversal;
  so.jobs = o.jobs;
  const SweepReport r = sweep(so);
  const Json j = sweep_json(r);
  write_report("sweep.json", j.dump(2) + "\n");
  write_report("sweep.csv", sweep_csv(r));
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "swept " << r.words.size() << " canonical words (l <= " << o.max_len << ", <= "
              << o.alphabet << " letters): " << r.failures.size() << " failures\n";
    for (const SweepFailure& f : r.failures) std::cout << "  FAIL " << f.word << ": " << f.checks << '\n';
  }
  return r.ok() ? 0 : 1;
}

int run_tables(const Options& o) {
  const TablesReport r = check_tables();
  if (o.json) {
    std::cout << tables_json(r).dump(2) << '\n';
  } else {
    auto show = [](const char* title, const TableCheck& t) {
      std::cout << title << ": " << t.found.size() << " words, " << (t.ok() ? "match" : "MISMATCH")
                << "\n ";
      for (const Word& w : t.found) std::cout << ' ' << ReducedForm(w).str() << ';';
      std::cout << '\n';
      for (const Word& w : t.missing()) std::cout << "  listed but not found: " << w << '\n';
      for (const Word& w : t.extra()) std::cout << "  found but not listed: " << w << '\n';
    };
    show("indecomposable, length <= 4", r.up_to_four);
    show("indecomposable, length 5", r.length_five);
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scrambled simplices: homology, Morse matchings and verification sweeps"};
  app.require_subcommand(1);
  Options o;

  auto with_word = [&](CLI::App* sub) {
    sub->add_option("word", o.word, "word over a-z")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_flag("--force", o.force, "allow words longer than 14 letters");
    return sub;
  };
  auto* analyze = with_word(app.add_subcommand("analyze", "classification summary"));
  auto* homology = with_word(app.add_subcommand("homology", "reduced integral homology"));
  auto* morse = with_word(app.add_subcommand("morse", "Morse matching or reduction trace"));
  auto* collapse = with_word(app.add_subcommand("collapse", "collapse sequence"));
  auto* subdivide = with_word(app.add_subcommand("subdivide", "iterated barycentric subdivision"));
  subdivide->add_option("--times", o.times, "number of subdivisions")->check(CLI::Range(0, 4));
  auto* exporter = app.add_subcommand("export", "dump the complex");
  exporter->add_option("word", o.word, "word over a-z")->required();
  exporter->add_flag("--force", o.force, "allow words longer than 14 letters");
  exporter->add_option("--format", o.format, "json, dot or csv")
      ->check(CLI::IsMember({"json", "dot", "csv"}));
  auto* sweeper = app.add_subcommand("sweep", "exhaustive verification sweep");
  sweeper->add_option("--max-len", o.max_len, "longest word");
  sweeper->add_option("--alphabet", o.alphabet, "largest alphabet");
  sweeper->add_flag("--dedup-reversal", o.dedup_reversal, "skip reversed duplicates");
  sweeper->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
  sweeper->add_flag("--json", o.json, "print the JSON report");
  auto* tables = app.add_subcommand("tables", "indecomposable word tables");
  tables->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(o);
    if (homology->parsed()) return run_homology(o);
    if (morse->parsed()) return run_morse(o);
    if (collapse->parsed()) return run_collapse(o);
    if (subdivide->parsed()) return run_subdivide(o);
    if (exporter->parsed()) return run_export(o);
    if (sweeper->parsed()) return run_sweep(o);
    if (tables->parsed()) return run_tables(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
