#include "pfq/pfaffian.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfq {

namespace {

// Parity of the inversion count; 0 on repeated values.
int word_parity(const std::vector<int>& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) return 0;
      if (w[i] > w[j]) ++inv;
    }
  }
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

int perm_sign(const Word& word, int n) {
  if (static_cast<int>(word.size()) != n) {
    throw std::invalid_argument("perm_sign: word length must equal n");
  }
  for (int v : word) {
    if (v < 1 || v > n) throw std::out_of_range("perm_sign: letter outside [n]");
  }
  return word_parity(word);
}

int s_sign(const Word& alpha, const Word& beta) {
  auto has_repeat = [](const Word& w) {
    Word s = w;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) != s.end();
  };
  if (has_repeat(alpha) || has_repeat(beta)) return 0;
  for (int b : beta) {
    if (std::find(alpha.begin(), alpha.end(), b) == alpha.end()) return 0;
  }
  // Positions (within alpha) of the word "beta followed by alpha minus beta".
  std::vector<int> target;
  target.reserve(alpha.size());
  auto pos_in_alpha = [&](int v) {
    return static_cast<int>(std::find(alpha.begin(), alpha.end(), v) -
                            alpha.begin());
  };
  for (int b : beta) target.push_back(pos_in_alpha(b));
  for (int a : alpha) {
    if (std::find(beta.begin(), beta.end(), a) == beta.end()) {
      target.push_back(pos_in_alpha(a));
    }
  }
  return word_parity(target);
}

std::vector<std::vector<std::pair<int, int>>> perfect_pairings(int n) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("perfect_pairings: n must be even");
  if (n > 12) throw std::invalid_argument("perfect_pairings: capped at n = 12");
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    for (int v = 1; v <= n; ++v) {
      if (!used[static_cast<size_t>(v)]) {
        first = v;
        break;
      }
    }
    if (first == 0) {
      out.push_back(current);
      return;
    }
    used[static_cast<size_t>(first)] = true;
    for (int v = first + 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = true;
      current.emplace_back(first, v);
      self(self);
      current.pop_back();
      used[static_cast<size_t>(v)] = false;
    }
    used[static_cast<size_t>(first)] = false;
  };
  rec(rec);
  return out;
}

Rational pf_definition(const SkewMatrix& a) {
  const int n = a.order();
  if (n % 2 != 0) return rat(0);
  if (n == 0) return rat(1);
  if (n > 12) {
    throw std::invalid_argument(
        "pf_definition: (n-1)!! terms, capped at n = 12; use pf() instead");
  }
  Rational total = 0;
  Word word(static_cast<size_t>(n));
  for (const auto& pairing : perfect_pairings(n)) {
    size_t t = 0;
    for (const auto& [s, u] : pairing) {
      word[t++] = s;
      word[t++] = u;
    }
    int sign = word_parity(word);
    Rational term = rat(sign);
    for (const auto& [s, u] : pairing) {
      if (term == 0) break;
      term *= a.at(s, u);
    }
    total += term;
  }
  return total;
}

Rational pf(const SkewMatrix& a) {
  const int n = a.order();
  if (n % 2 != 0) return rat(0);
  if (n == 0) return rat(1);

  // Working copy, 0-based full grid.
  std::vector<Rational> w(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto cell = [&](int i, int j) -> Rational& {
    return w[static_cast<size_t>(i) * static_cast<size_t>(n) +
             static_cast<size_t>(j)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cell(i, j) = a.at(i + 1, j + 1);
  }

  Rational result = 1;
  for (int s = 0; s < n; s += 2) {
    int piv = -1;
    for (int j = s + 1; j < n; ++j) {
      if (cell(s, j) != 0) {
        piv = j;
        break;
      }
    }
    if (piv < 0) return rat(0);
    if (piv != s + 1) {
      for (int r = 0; r < n; ++r) std::swap(cell(r, piv), cell(r, s + 1));
      for (int c = 0; c < n; ++c) std::swap(cell(piv, c), cell(s + 1, c));
      result = -result;
    }
    const Rational pivot = cell(s, s + 1);
    result *= pivot;
    for (int i = s + 2; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Rational upd =
            cell(i, j) +
            (cell(s, j) * cell(s + 1, i) - cell(s, i) * cell(s + 1, j)) / pivot;
        cell(i, j) = upd;
        cell(j, i) = -upd;
      }
    }
  }
  return result;
}

Rational pf_minor(const SkewMatrix& a, const IndexSet& kept) {
  if (kept.max_index() > a.order()) throw std::out_of_range("pf_minor: index > n");
  return pf(keep_rows_cols(a, kept));
}

Rational cayley_residual(const SkewMatrix& a) {
  Rational p = pf(a);
  return det(a.as_matrix()) - p * p;
}

}  // namespace pfq
