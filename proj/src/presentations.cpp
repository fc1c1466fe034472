#include <algorithm>
#include <string>

#include "scrambled/words.hpp"

namespace scrambled {

namespace {

void check_shape(const ReducedForm& w, const ExpPresentation& beta) {
  if (beta.size() != w.size()) throw Error("presentation length differs from run count");
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] > w[i].exponent) throw Error("presentation is not dominated by the exponents");
  }
}

void collect(const ReducedForm& w, const Word& v, std::size_t run, std::size_t pos,
             ExpPresentation& beta, std::vector<ExpPresentation>& out) {
  if (run == w.size()) {
    if (pos == v.size()) out.push_back(beta);
    return;
  }
  for (std::size_t b = 0; b <= w[run].exponent; ++b) {
    if (b > 0 && (pos + b > v.size() || v[pos + b - 1] != w[run].letter)) break;
    beta[run] = b;
    collect(w, v, run + 1, pos + b, beta, out);
  }
  beta[run] = 0;
}

}  // namespace

Word expand(const ReducedForm& w, const ExpPresentation& beta) {
  check_shape(w, beta);
  Word out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (std::size_t k = 0; k < beta[i]; ++k) out.push_back(w[i].letter);
  }
  return out;
}

std::vector<ExpPresentation> exp_presentations(const ReducedForm& w, const Word& v) {
  std::vector<ExpPresentation> out;
  ExpPresentation beta(w.size(), 0);
  collect(w, v, 0, 0, beta, out);
  return out;
}

ExpPresentation left_shifted(const ReducedForm& w, const Word& v) {
  // Placing as many letters as possible in each run keeps the remainder a
  // suffix of what any other choice leaves, so greedy is lex-maximal.
  ExpPresentation beta(w.size(), 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    while (beta[i] < w[i].exponent && pos < v.size() && v[pos] == w[i].letter) {
      ++beta[i];
      ++pos;
    }
  }
  if (pos != v.size()) throw Error(v.str() + " is not a subword of " + w.expand().str());
  return beta;
}

ExpPresentation right_shifted(const ReducedForm& w, const Word& v) {
  ExpPresentation beta = left_shifted(w.reversed(), v.reversed());
  std::reverse(beta.begin(), beta.end());
  return beta;
}

ExpPresentation p_shifted(const ReducedForm& w, const Word& v, std::size_t p) {
  if (p < 1 || p > w.size()) throw Error("p-shift index out of range");
  ExpPresentation beta = left_shifted(w, v);

  const ReducedForm head = w.slice(0, p);
  const ExpPresentation head_beta(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(p));
  const ExpPresentation head_shifted = left_shifted(head, expand(head, head_beta));
  std::copy(head_shifted.begin(), head_shifted.end(), beta.begin());

  const ReducedForm tail = w.slice(p - 1, w.size() - p + 1);
  const ExpPresentation tail_beta(beta.begin() + static_cast<std::ptrdiff_t>(p - 1), beta.end());
  const ExpPresentation tail_shifted = right_shifted(tail, expand(tail, tail_beta));
  std::copy(tail_shifted.begin(), tail_shifted.end(),
            beta.begin() + static_cast<std::ptrdiff_t>(p - 1));
  return beta;
}

bool is_p_shifted(const ReducedForm& w, const ExpPresentation& beta, std::size_t p) {
  check_shape(w, beta);
  if (p < 1 || p > w.size()) throw Error("p-shift index out of range");
  const ReducedForm head = w.slice(0, p);
  const ExpPresentation head_beta(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(p));
  if (left_shifted(head, expand(head, head_beta)) != head_beta) return false;
  const ReducedForm tail = w.slice(p - 1, w.size() - p + 1);
  const ExpPresentation tail_beta(beta.begin() + static_cast<std::ptrdiff_t>(p - 1), beta.end());
  return right_shifted(tail, expand(tail, tail_beta)) == tail_beta;
}

bool colex_less(const ExpPresentation& lhs, const ExpPresentation& rhs) {
  return std::lexicographical_compare(lhs.rbegin(), lhs.rend(), rhs.rbegin(), rhs.rend());
}

std::size_t height(const ExpPresentation& beta, const ReducedForm& w, std::size_t t) {
  check_shape(w, beta);
  if (t < 1 || t > w.size()) throw Error("height: prefix length out of range");
  for (std::size_t i = 0; i + 1 < t; ++i) {
    if (w[i].exponent % 2 != 0) {
      throw Error("height: exponent of run " + std::to_string(i + 1) + " is odd");
    }
  }
  for (std::size_t k = 0; k < t; ++k) {
    if (beta[k] + 1 <= w[k].exponent) return k + 1;
  }
  return t;
}

}  // namespace scrambled
