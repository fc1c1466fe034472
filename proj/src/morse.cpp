#include "scrambled/morse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace scrambled {

namespace {

using WordSet = std::unordered_set<Word, WordHash>;

void require_even_prefix(const ReducedForm& w, std::size_t t) {
  for (std::size_t i = 0; i + 1 < t; ++i) {
    if (w[i].exponent % 2 != 0) {
      throw Error("exponent of run " + std::to_string(i + 1) + " of " + w.str() + " is odd");
    }
  }
}

std::optional<std::size_t> reduction_index(const ReducedForm& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].exponent % 2 != 0) {
      if (i + 1 < r.size()) return i + 1;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

CellRef resolve(const DeltaComplex& x, const Word& v) { return x.at(v.str()); }

bool order_is_valid(const DeltaComplex& x, const Matching& m) {
  return validate_collapsing_order(x, collapsing_order(x, m)).valid;
}

}  // namespace

ExpPresentation mu(const ReducedForm& w, std::size_t t, const ExpPresentation& beta) {
  if (t < 1 || t > w.size()) throw Error("mu: prefix length out of range");
  if (beta.size() != w.size()) throw Error("mu: presentation length differs from run count");
  require_even_prefix(w, t);
  const ReducedForm head = w.slice(0, t);
  const ExpPresentation head_beta(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(t));
  if (left_shifted(head, expand(head, head_beta)) != head_beta) {
    throw Error("mu: presentation is not left-shifted");
  }
  const std::size_t h = height(beta, w, t);
  ExpPresentation out = beta;
  for (std::size_t i = 0; i + 1 < h; ++i) out[i] = w[i].exponent;
  out[h - 1] = xi(beta[h - 1]);
  if (out[h - 1] > w[h - 1].exponent) throw Error("mu: image leaves the word");
  return out;
}

Matching full_matching(const ReducedForm& w) {
  const std::size_t t = w.size();
  require_even_prefix(w, t);
  const Word word = w.expand();
  std::vector<Word> cells{Word{}};
  for (Word& v : distinct_subwords(word)) cells.push_back(std::move(v));

  Matching m;
  const ExpPresentation alpha = w.exponents();
  for (const Word& v : cells) {
    const ExpPresentation beta = left_shifted(w, v);
    if (beta == alpha && alpha.back() % 2 == 0) {
      m.critical.push_back(v);
      continue;
    }
    const std::size_t h = height(beta, w, t);
    if (beta[h - 1] % 2 != 0) continue;
    MatchedPair p;
    p.sigma = v;
    p.sigma_presentation = beta;
    p.tau_presentation = mu(w, t, beta);
    p.tau = expand(w, p.tau_presentation);
    p.rule = "mu_" + std::to_string(t);
    m.pairs.push_back(std::move(p));
  }
  return m;
}

CollapsingOrder collapsing_order(const DeltaComplex& x, const Matching& m) {
  std::vector<const MatchedPair*> kept;
  for (const MatchedPair& p : m.pairs) {
    if (!p.sigma.empty()) kept.push_back(&p);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const MatchedPair* l, const MatchedPair* r) {
    if (l->sigma.size() != r->sigma.size()) return l->sigma.size() > r->sigma.size();
    return l->sigma_presentation < r->sigma_presentation;
  });
  CollapsingOrder out;
  for (const MatchedPair* p : kept) out.emplace_back(resolve(x, p->sigma), resolve(x, p->tau));
  return out;
}

OrderReport validate_collapsing_order(const DeltaComplex& x, const CollapsingOrder& order) {
  auto exists = [&](CellRef c) {
    return c.dim >= 0 && c.dim <= x.dimension() && c.index < x.num_cells(c.dim);
  };
  for (const auto& [sigma, tau] : order) {
    if (!exists(sigma) || !exists(tau)) throw Error("collapsing order names a cell outside X");
  }
  const FacePoset poset(x);
  std::vector<char> seen(x.num_cells(), 0);
  std::vector<std::size_t> stamp(x.num_cells(), 0);
  std::vector<CellRef> stack;
  OrderReport report;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& [sigma, tau] = order[i];
    PairCheck check;
    check.dimension = tau.dim == sigma.dim + 1;
    check.incidence = check.dimension && std::abs(incidence(x, sigma, tau)) == 1;
    seen[x.global_index(sigma)] = 1;
    seen[x.global_index(tau)] = 1;
    // Walk P(X)_{>=σ} looking for a cell not yet listed.
    check.closure = true;
    stack.assign(1, sigma);
    stamp[x.global_index(sigma)] = i + 1;
    while (!stack.empty() && check.closure) {
      const CellRef cur = stack.back();
      stack.pop_back();
      if (!seen[x.global_index(cur)]) check.closure = false;
      for (const Coface& cf : poset.cofaces(cur)) {
        const std::size_t g = x.global_index(cf.cell);
        if (stamp[g] != i + 1) {
          stamp[g] = i + 1;
          stack.push_back(cf.cell);
        }
      }
    }
    if (!check.ok() && report.valid) {
      report.valid = false;
      report.first_failure = i;
    }
    report.pairs.push_back(check);
  }
  return report;
}

std::string MatchingAudit::failures() const {
  std::string out;
  auto note = [&](bool flag, const char* name) {
    if (flag) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  note(involution, "involution");
  note(presentations, "presentations");
  note(dimensions, "dimensions");
  note(incidences, "incidences");
  note(partition, "partition");
  note(coface_locality, "coface_locality");
  note(critical_count, "critical_count");
  note(order_valid, "order");
  return out;
}

MatchingAudit audit_full_matching(const Word& w) {
  const ReducedForm r(w);
  const std::size_t t = r.size();
  const DeltaComplex x = build(w);
  const Matching m = full_matching(r);
  MatchingAudit audit;

  std::unordered_map<Word, Word, WordHash> partner;
  WordSet lower;
  std::size_t covered = 0;
  for (const MatchedPair& p : m.pairs) {
    if (mu(r, t, p.tau_presentation) != p.sigma_presentation) audit.involution = false;
    if (left_shifted(r, p.sigma) != p.sigma_presentation ||
        left_shifted(r, p.tau) != p.tau_presentation) {
      audit.presentations = false;
    }
    if (p.tau.size() != p.sigma.size() + 1) audit.dimensions = false;
    if (!p.sigma.empty() && audit.dimensions &&
        std::abs(incidence(x, resolve(x, p.sigma), resolve(x, p.tau))) != 1) {
      audit.incidences = false;
    }
    if (!partner.emplace(p.sigma, p.tau).second || !partner.emplace(p.tau, p.sigma).second) {
      audit.partition = false;
    }
    lower.insert(p.sigma);
    covered += 2;
  }
  for (const Word& c : m.critical) {
    if (!partner.emplace(c, c).second) audit.partition = false;
    lower.insert(c);
    ++covered;
  }
  if (covered != x.num_cells() + 1 || partner.size() != covered) audit.partition = false;
  audit.critical_count = m.critical.size() == (r.exponents().back() % 2 == 0 ? 1u : 0u);

  // Rank of each lower cell in the collapsing order.
  std::vector<const MatchedPair*> ordered;
  for (const MatchedPair& p : m.pairs) ordered.push_back(&p);
  std::stable_sort(ordered.begin(), ordered.end(), [](const MatchedPair* l, const MatchedPair* r2) {
    if (l->sigma.size() != r2->sigma.size()) return l->sigma.size() > r2->sigma.size();
    return l->sigma_presentation < r2->sigma_presentation;
  });
  std::unordered_map<Word, std::size_t, WordHash> rank;
  for (std::size_t i = 0; i < ordered.size(); ++i) rank.emplace(ordered[i]->sigma, i);

  // Every other cover of a lower cell is lower itself or already gone.
  const FacePoset poset(x);
  for (const Word& s : lower) {
    if (s.empty() || !rank.count(s)) continue;
    const Word& own = partner.at(s);
    for (const Coface& cf : poset.cofaces(resolve(x, s))) {
      const Word g = subword_of(x, cf.cell);
      if (g == own || lower.count(g)) continue;
      audit.locality_literal = false;
      const auto it = partner.find(g);
      if (it == partner.end() || !rank.count(it->second) || rank.at(it->second) >= rank.at(s)) {
        audit.coface_locality = false;
      }
    }
  }

  if (audit.partition) {
    std::set<CellRef> critical;
    for (const Word& c : m.critical) critical.insert(resolve(x, c));
    audit.order_valid = order_is_valid(remove_cells(x, critical), m);
  } else {
    audit.order_valid = false;
  }
  return audit;
}

std::string to_string(ReductionStep::Kind kind) {
  switch (kind) {
    case ReductionStep::Kind::Reduce:
      return "reduce";
    case ReductionStep::Kind::Flip:
      return "flip";
    case ReductionStep::Kind::FullMatching:
      return "full_matching";
  }
  return "unknown";
}

std::pair<Word, Matching> reduce_step(const Word& w) {
  const ReducedForm r(w);
  const std::optional<std::size_t> k = reduction_index(r);
  if (!k) throw Error("word is fully reduced");

  std::size_t pos = 0;
  for (std::size_t i = 0; i < *k; ++i) pos += r[i].exponent;
  const Word reduced = w.without(pos);
  const std::size_t alpha_next = r[*k].exponent;

  Matching m;
  std::unordered_map<Word, ExpPresentation, WordHash> removed;
  for_each_distinct_subword(w, [&](const Word& v) {
    ExpPresentation beta = p_shifted(r, v, *k + 1);
    const bool gone = beta[*k] == alpha_next;
    if (gone == is_subword(v, reduced)) {
      throw Error("removed simplices of " + w.str() + " disagree with the subwords of " +
                  reduced.str() + " at " + v.str());
    }
    if (gone) removed.emplace(v, std::move(beta));
  });

  WordSet matched;
  for (const auto& [v, beta] : removed) {
    const std::size_t h = height(beta, r, *k);
    if (beta[h - 1] % 2 != 0) continue;
    MatchedPair p;
    p.sigma = v;
    p.sigma_presentation = beta;
    p.tau_presentation = mu(r, *k, beta);
    p.tau = expand(r, p.tau_presentation);
    p.rule = "mu_" + std::to_string(*k);
    const auto it = removed.find(p.tau);
    if (it == removed.end() || it->second != p.tau_presentation) {
      throw Error("matching partner of " + v.str() + " in " + w.str() +
                  " does not resolve to a removed simplex");
    }
    if (!matched.insert(p.sigma).second || !matched.insert(p.tau).second) {
      throw Error("matching collision at " + p.tau.str() + " in " + w.str());
    }
    m.pairs.push_back(std::move(p));
  }
  if (matched.size() != removed.size()) {
    throw Error("removed simplices of " + w.str() + " are not perfectly matched");
  }
  std::sort(m.pairs.begin(), m.pairs.end(), [](const MatchedPair& l, const MatchedPair& r2) {
    if (l.sigma.size() != r2.sigma.size()) return l.sigma.size() < r2.sigma.size();
    return l.sigma < r2.sigma;
  });
  return {reduced, std::move(m)};
}

ReductionTrace reduce_to_core(const Word& w) {
  if (w.empty()) throw Error("cannot reduce the empty word");
  ReductionTrace trace;
  Word current = w;
  for (;;) {
    if (current.size() == 1) break;
    const WordClassification c = classify(current);
    if (c.is_spherical && fundamental_subword(current) == current) break;

    const ReducedForm r(current);
    ReductionStep step;
    step.before = current;
    if (reduction_index(r)) {
      auto [next, matching] = reduce_step(current);
      step.kind = ReductionStep::Kind::Reduce;
      step.k = *reduction_index(r);
      step.matching = std::move(matching);
      step.valid = order_is_valid(build(current), step.matching);
      step.after = std::move(next);
    } else if (trace.steps.empty() || trace.steps.back().kind != ReductionStep::Kind::Flip) {
      step.kind = ReductionStep::Kind::Flip;
      step.after = current.reversed();
    } else if (r.size() == 1) {
      // a^m with m odd: the full matching collapses everything onto one vertex.
      step.kind = ReductionStep::Kind::FullMatching;
      step.matching = full_matching(r);
      step.valid = step.matching.critical.empty() && order_is_valid(build(current), step.matching);
      step.after = Word({r[0].letter});
    } else {
      throw Error("reduction of " + w.str() + " is stuck at " + current.str());
    }
    trace.valid = trace.valid && step.valid;
    current = step.after;
    trace.steps.push_back(std::move(step));
  }
  trace.terminal = current;
  return trace;
}

bool is_alternating(const Word& w) {
  return !w.empty() && canonicalize(w) == alternating_word(w.size());
}

std::optional<RulePartner> alternating_partner(const Word& u) {
  const Letter a{0}, b{1};
  for (Letter x : u) {
    if (x != a && x != b) throw Error("alternating rules apply to words over a, b");
  }
  std::size_t k = 0;
  while (4 * k + 4 <= u.size() && u[4 * k] == a && u[4 * k + 1] == a && u[4 * k + 2] == b &&
         u[4 * k + 3] == b) {
    ++k;
  }
  const Word prefix = u.substr(0, 4 * k);
  const Word x = u.substr(4 * k);
  auto with = [&](std::initializer_list<int> ids, const Word& rest) {
    return prefix + Word::of(ids) + rest;
  };

  if (x.empty()) {
    if (k == 0) return std::nullopt;
    return RulePartner{with({0}, {}), false, "R3"};
  }
  if (x[0] == b) return RulePartner{with({0}, x), false, "R1"};
  if (x.size() == 1) {
    if (k == 0) return std::nullopt;
    return RulePartner{prefix, true, "R3"};
  }
  if (x[1] == b) return RulePartner{prefix + x.substr(1), true, "R1"};
  const Word y = x.substr(2);
  if (y.empty()) return RulePartner{with({0, 0, 1}, {}), false, "R4"};
  if (y == Word::of({1})) return RulePartner{with({0, 0}, {}), true, "R4"};
  if (y[0] == a) return RulePartner{with({0, 0, 1, 0}, y.substr(1)), false, "R2"};
  if (y.size() >= 2 && y[1] == a) return RulePartner{with({0, 0, 0}, y.substr(2)), true, "R2"};
  throw Error("no alternating rule applies to " + u.str());
}

AlternatingCollapse alternating_collapse(std::size_t n) {
  if (n == 0) throw Error("alternating collapse needs n >= 1");
  AlternatingCollapse out;
  out.n = n;
  out.word = alternating_word(n);
  out.target = n % 3 == 0 ? fundamental_subword(out.word) : Word::of({0});
  const DeltaComplex x = build(out.word);

  struct Planned {
    Word sigma, tau;
    std::string rule;
  };
  std::vector<Planned> plan;
  for (const CellRef c : x.all_cells()) {
    const Word u = subword_of(x, c);
    const std::optional<RulePartner> p = alternating_partner(u);
    if (!p || p->upper || !is_subword(p->partner, out.word)) continue;
    const std::optional<RulePartner> back = alternating_partner(p->partner);
    if (!back || back->partner != u || !back->upper) {
      throw Error("alternating rules are not involutive at " + u.str());
    }
    if (n % 3 == 0) {
      const bool in_u = is_subword(u, out.target);
      if (in_u != is_subword(p->partner, out.target)) {
        throw Error("rule pair (" + u.str() + ", " + p->partner.str() + ") straddles the core");
      }
      if (in_u) continue;
    }
    plan.push_back({u, p->partner, p->rule});
  }
  std::stable_sort(plan.begin(), plan.end(), [](const Planned& l, const Planned& r) {
    if (l.sigma.size() != r.sigma.size()) return l.sigma.size() > r.sigma.size();
    return l.sigma < r.sigma;
  });

  // Highest dimension first; within that, the first pair that is free now.
  CollapseSession session(x);
  std::vector<char> done(plan.size(), 0);
  for (std::size_t left = plan.size(); left > 0; --left) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < plan.size() && !pick; ++i) {
      if (done[i]) continue;
      if (session.violated_condition(x.at(plan[i].sigma.str()), x.at(plan[i].tau.str())) == 0) {
        pick = i;
      }
    }
    if (!pick) {
      // Nothing is free: surface the first pending pair's violation.
      std::size_t i = 0;
      while (done[i]) ++i;
      session.collapse(x.at(plan[i].sigma.str()), x.at(plan[i].tau.str()));
    }
    const Planned& p = plan[*pick];
    done[*pick] = 1;
    const CellRef sigma = x.at(p.sigma.str());
    const CellRef tau = x.at(p.tau.str());
    session.collapse(sigma, tau);
    std::size_t face_index = 0;
    const auto& faces = x.cell(tau).faces;
    while (faces[face_index] != sigma.index) ++face_index;
    out.steps.push_back({FreePair{sigma, tau, face_index}, p.sigma, p.tau, p.rule});
  }

  for (const CellRef c : x.all_cells()) {
    if (session.alive(c)) out.remaining.push_back(subword_of(x, c));
  }
  std::vector<Word> expected = distinct_subwords(out.target);
  if (n % 3 != 0) expected = {out.target};
  std::vector<Word> got = out.remaining;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  if (got != expected) {
    throw Error("alternating collapse of length " + std::to_string(n) +
                " does not end at the expected subcomplex");
  }
  return out;
}

}  // namespace scrambled
