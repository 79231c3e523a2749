#include "tlt/permutation.hpp"

#include <algorithm>

#include "tlt/errors.hpp"

namespace tlt {

bool is_permutation(const Permutation& s) {
  const int n = s.size();
  std::vector<char> seen(n + 1, 0);
  for (int v : s.word) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return n >= 1;
}

Permutation phi(const InsertionCode& code) {
  const int n = static_cast<int>(code.entries.size()) + 1;
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i + 1;
  std::vector<int> word(n, 0);
  for (int k = n; k >= 1; --k) {
    const int m = k >= 2 ? code.entries[k - 2] : 1;
    if (m < 1 || m > static_cast<int>(remaining.size()))
      throw DomainError("code entry out of range in phi");
    word[k - 1] = remaining[m - 1];
    remaining.erase(remaining.begin() + (m - 1));
  }
  return {std::move(word)};
}

std::vector<int> non_inversion_table(const Permutation& s) {
  const int n = s.size();
  std::vector<int> t(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (s.word[j] < s.word[i]) ++t[i];
  return t;
}

InsertionCode phi_inverse(const Permutation& s) {
  if (!is_permutation(s)) throw DomainError("not a permutation");
  auto t = non_inversion_table(s);
  InsertionCode code;
  for (size_t i = 1; i < t.size(); ++i) code.entries.push_back(t[i] + 1);
  return code;
}

std::set<int> corner_indices_perm(const Permutation& s) {
  const int n = s.size();
  std::set<int> out;
  for (int k = 2; k <= n; ++k) {
    const int sk = s.word[k - 1], sk1 = s.word[k - 2];
    if (!(sk1 == sk + 1 || sk1 < sk)) continue;
    bool tail_ok = true;
    for (int j = k + 1; j <= n; ++j)
      if (s.word[j - 1] <= sk + 1) {
        tail_ok = false;
        break;
      }
    if (tail_ok) out.insert(k);
  }
  return out;
}

std::set<int> corner_indices_geom(const Tableau& t, const PointTrace& trace) {
  std::set<int> out;
  for (const Corner& c : corners(t)) {
    if (!c.occupied) continue;
    int k = trace.label(c.cell);
    if (k >= 2) out.insert(k);
  }
  return out;
}

Int count_pk_in_corner(int n, int k) {
  if (k < 2 || k > n)
    throw DomainError("k must satisfy 2 <= k <= n, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  Int num = factorial(n);
  Int den = Int(n - k + 2) * (n - k + 1);
  if (num % den != 0) throw DomainError("closed form not integral; bad (n,k)");
  Int v = num / den;
  if (k == n) v += factorial(n - 1);
  return v;
}

std::string to_string(const Permutation& s) {
  std::string out;
  const bool compact = s.size() <= 9;
  for (int i = 0; i < s.size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(s.word[i]);
  }
  return out;
}

}  // namespace tlt
