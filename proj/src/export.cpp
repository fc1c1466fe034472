#include "scrambled/export.hpp"

#include <map>
#include <sstream>

namespace scrambled {

namespace {

std::string shown(const Word& w) { return w.empty() ? "()" : w.str(); }

Json pairs_json(const std::vector<MatchedPair>& pairs) {
  Json out = Json::array();
  for (const MatchedPair& p : pairs) {
    out.push_back({{"pair", {p.sigma.str(), p.tau.str()}},
                   {"dim", static_cast<int>(p.sigma.size()) - 1},
                   {"rule", p.rule}});
  }
  return out;
}

Json big(const BigInt& v) {
  // Invariant factors of these complexes fit comfortably in 64 bits; larger
  // values are written as decimal strings.
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace

Json complex_json(const DeltaComplex& x, const std::string& word) {
  Json cells = Json::array();
  Json boundary = Json::array();
  for (const CellRef c : x.all_cells()) {
    const std::size_t id = x.global_index(c);
    cells.push_back({{"id", id}, {"dim", c.dim}, {"subword", x.label(c)}});
    const auto& faces = x.cell(c).faces;
    for (std::size_t k = 0; k < faces.size(); ++k) {
      boundary.push_back({{"cell", id},
                          {"face_index", k},
                          {"target", x.global_index(CellRef{c.dim - 1, faces[k]})}});
    }
  }
  return {{"word", word}, {"f_vector", x.f_vector()}, {"cells", cells}, {"boundary", boundary}};
}

std::string complex_dot(const DeltaComplex& x, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const CellRef c : x.all_cells()) {
    os << "  c" << x.global_index(c) << " [label=\"" << x.label(c) << "\"];\n";
  }
  for (int d = 0; d <= x.dimension(); ++d) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < x.num_cells(d); ++i) os << " c" << x.global_index({d, i}) << ";";
    os << " }\n";
  }
  for (const CellRef c : x.all_cells()) {
    if (c.dim == 0) continue;
    std::map<std::size_t, std::size_t> mult;
    for (std::size_t f : x.cell(c).faces) ++mult[f];
    for (const auto& [f, m] : mult) {
      os << "  c" << x.global_index({c.dim - 1, f}) << " -> c" << x.global_index(c);
      if (m > 1) os << " [label=\"" << m << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string complex_csv(const DeltaComplex& x) {
  std::string out;
  for (int n = 0; n <= x.dimension(); ++n) {
    if (n > 0) out += '\n';
    out += "# boundary " + std::to_string(n) + "\n";
    out += boundary_matrix_csv(x, boundary_matrix(x, n));
  }
  return out;
}

Json homology_json(const HomologyProfile& h) {
  Json out = Json::array();
  for (const HomologyGroup& g : h.groups) {
    Json torsion = Json::array();
    for (const BigInt& t : g.torsion) torsion.push_back(big(t));
    out.push_back({{"dim", g.dim}, {"betti", g.betti}, {"torsion", torsion}});
  }
  return out;
}

Json matching_json(const Matching& m) { return pairs_json(m.pairs); }

Json alternating_json(const AlternatingCollapse& c) {
  Json out = Json::array();
  for (const AlternatingStep& s : c.steps) {
    out.push_back({{"pair", {s.sigma.str(), s.tau.str()}}, {"dim", s.pair.sigma.dim}, {"rule", s.rule}});
  }
  return out;
}

Json reduction_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const ReductionStep& s : t.steps) {
    steps.push_back({{"kind", to_string(s.kind)},
                     {"before", s.before.str()},
                     {"after", s.after.str()},
                     {"k", s.k},
                     {"valid", s.valid},
                     {"pairs", pairs_json(s.matching.pairs)}});
  }
  return {{"steps", steps}, {"terminal", t.terminal.str()}, {"valid", t.valid}};
}

std::string matching_text(const Matching& m) {
  std::ostringstream os;
  for (const MatchedPair& p : m.pairs) {
    os << "  " << shown(p.sigma) << " -> " << p.tau << "  [" << p.rule << "]\n";
  }
  for (const Word& c : m.critical) os << "  critical " << c << "\n";
  return os.str();
}

std::string alternating_text(const AlternatingCollapse& c) {
  std::ostringstream os;
  os << "collapse of " << c.word << " onto " << c.target << " (" << c.steps.size()
     << " elementary collapses)\n";
  for (const AlternatingStep& s : c.steps) {
    os << "  " << s.sigma << " -> " << s.tau << "  [" << s.rule << "]\n";
  }
  os << "remaining cells:";
  for (const Word& w : c.remaining) os << ' ' << w;
  os << '\n';
  return os.str();
}

std::string reduction_text(const ReductionTrace& t) {
  std::ostringstream os;
  for (const ReductionStep& s : t.steps) {
    os << to_string(s.kind) << ": " << s.before << " => " << s.after;
    if (s.kind == ReductionStep::Kind::Reduce) os << " (k=" << s.k << ")";
    if (!s.valid) os << " INVALID";
    os << '\n' << matching_text(s.matching);
  }
  os << "terminal: " << t.terminal << (t.valid ? "" : " (invalid trace)") << '\n';
  return os.str();
}

Json word_report_json(const WordReport& w) {
  return {{"word", w.word.str()},
          {"f_vector", w.f_vector},
          {"euler", {{"direct", w.euler_direct},
                     {"recursive", w.euler_recursive},
                     {"f_vector", w.euler_fvector},
                     {"theorem", w.euler_theorem}}},
          {"classification", w.classification},
          {"circular_factors", w.circular_factors},
          {"predicted", w.predicted.str()},
          {"homology", homology_json(w.homology)},
          {"checks", {{"homology", w.homology_match},
                      {"euler", w.euler_agree},
                      {"h1", w.h1_law},
                      {"matching", w.matching_valid},
                      {"reduction", w.reduction_valid},
                      {"pseudomanifold", w.pseudomanifold_law},
                      {"free_pairs", w.free_pairs_law},
                      {"chain_complex", w.audit.chain_complex},
                      {"snf_certificate", w.audit.certificates}}},
          {"matching_applicable", w.matching_applicable},
          {"reduction_terminal", w.reduction_terminal},
          {"pseudomanifold", w.pseudomanifold},
          {"free_pair_count", w.free_pair_count}};
}

Json sweep_json(const SweepReport& r) {
  Json words = Json::array();
  for (const WordReport& w : r.words) words.push_back(word_report_json(w));
  Json failures = Json::array();
  for (const SweepFailure& f : r.failures) {
    failures.push_back({{"word", f.word.str()}, {"checks", f.checks}});
  }
  return {{"max_len", r.options.max_len},
          {"max_alphabet", r.options.max_alphabet},
          {"dedup_reversal", r.options.dedup_reversal},
          {"word_count", r.words.size()},
          {"ok", r.ok()},
          {"failures", failures},
          {"words", words}};
}

std::string sweep_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "word,f_vector,euler_direct,euler_recursive,euler_fvector,euler_theorem,classification,"
        "predicted,homology,pseudomanifold,free_pairs,passed,failed_checks\n";
  for (const WordReport& w : r.words) {
    std::string f;
    for (std::size_t i = 0; i < w.f_vector.size(); ++i) f += (i ? ";" : "") + std::to_string(w.f_vector[i]);
    os << w.word << ',' << f << ',' << w.euler_direct << ',' << w.euler_recursive << ','
       << w.euler_fvector << ',' << w.euler_theorem << ',' << w.classification << ','
       << w.predicted.str() << ",\"" << w.homology.str() << "\"," << w.pseudomanifold << ','
       << w.free_pair_count << ',' << w.passed() << ",\"" << w.failed_checks() << "\"\n";
  }
  return os.str();
}

Json tables_json(const TablesReport& r) {
  auto table = [](const TableCheck& t) {
    Json expected = Json::array();
    Json found = Json::array();
    Json missing = Json::array();
    Json extra = Json::array();
    for (const Word& w : t.expected) expected.push_back(w.str());
    for (const Word& w : t.found) found.push_back(w.str());
    for (const Word& w : t.missing()) missing.push_back(w.str());
    for (const Word& w : t.extra()) extra.push_back(w.str());
    return Json{{"min_len", t.length_min}, {"max_len", t.length_max}, {"count", t.found.size()},
                {"expected", expected},    {"found", found},          {"missing", missing},
                {"extra", extra},          {"ok", t.ok()}};
  };
  return {{"up_to_four", table(r.up_to_four)}, {"length_five", table(r.length_five)}, {"ok", r.ok()}};
}

}  // namespace scrambled
