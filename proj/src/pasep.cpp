#include "tlt/pasep.hpp"

#include <random>

#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"
#include "tlt/tableau.hpp"

namespace tlt {

PasepState index_to_state(int n, unsigned mask) {
  PasepState s(n, '0');
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s[i] = '1';
  return s;
}

unsigned state_to_index(const PasepState& s) {
  unsigned mask = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] == '1') mask |= 1u << i;
  return mask;
}

StateDistribution tableau_distribution(int n) {
  if (n < 0) throw DomainError("n must be >= 0");
  StateDistribution dist;
  Int total = factorial(n + 1);
  std::map<PasepState, Int> counts;
  generate_all(n + 1, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    ++counts[project_state(t)];
  });
  for (auto& [s, c] : counts) dist.probs[s] = Rat(c) / Rat(total);
  return dist;
}

int X_of_state(const PasepState& s) {
  // corner count of the bordered word E..s..N, with particles as E steps
  std::string w = "E";
  for (char ch : s) w.push_back(ch == '1' ? 'E' : 'N');
  w.push_back('N');
  int c = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 'E' && w[i + 1] == 'N') ++c;
  return 2 * c - 1;
}

std::vector<std::vector<Rat>> transition_matrix(int n, const PasepParams& params) {
  if (n < 1) throw DomainError("n must be >= 1");
  for (const Rat* r : {&params.alpha, &params.beta, &params.q})
    if (*r < 0 || *r > 1) throw InvalidParams("rates must lie in [0,1]");

  const unsigned nstates = 1u << n;
  const Rat loc = Rat(1) / (n + 1);
  std::vector<std::vector<Rat>> m(nstates, std::vector<Rat>(nstates, Rat(0)));
  for (unsigned s = 0; s < nstates; ++s) {
    Rat stay = 1;
    auto hop = [&](unsigned to, const Rat& rate) {
      m[s][to] += loc * rate;
      stay -= loc * rate;
    };
    // left boundary: an empty first site admits a particle
    if (!(s & 1u)) hop(s | 1u, params.alpha);
    // right boundary: a particle on the last site leaves
    if (s & (1u << (n - 1))) hop(s & ~(1u << (n - 1)), params.beta);
    // interior gaps between sites i and i+1
    for (int i = 0; i + 1 < n; ++i) {
      const bool a = s & (1u << i), b = s & (1u << (i + 1));
      if (a && !b) hop(s ^ (3u << i), Rat(1));   // particle hops right
      if (!a && b) hop(s ^ (3u << i), params.q); // particle hops left
    }
    m[s][s] += stay;
  }
  return m;
}

StateDistribution stationary(const std::vector<std::vector<Rat>>& m) {
  const size_t nstates = m.size();
  const int n = [&] {
    int bits = 0;
    while ((1u << bits) < nstates) ++bits;
    return bits;
  }();
  if ((1u << n) != nstates) throw DomainError("matrix size must be a power of two");

  // Solve pi M = pi with sum(pi) = 1: rows of A are (M^T - I), plus the
  // normalization row; exact elimination, first-nonzero pivoting.
  const size_t rows = nstates + 1, cols = nstates + 1;
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols, Rat(0)));
  for (size_t i = 0; i < nstates; ++i) {
    for (size_t j = 0; j < nstates; ++j) a[i][j] = m[j][i];
    a[i][i] -= 1;
  }
  for (size_t j = 0; j < nstates; ++j) a[nstates][j] = 1;
  a[nstates][nstates] = 1;  // rhs

  size_t rank = 0;
  for (size_t col = 0; col < nstates && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[rank][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  if (rank < nstates) throw NotIrreducible("fixed space of the chain is degenerate");
  // consistency: no row reduced to (0 ... 0 | nonzero)
  for (size_t r = rank; r < rows; ++r)
    if (a[r][nstates] != 0) throw NotIrreducible("no stationary vector satisfies the system");

  std::vector<Rat> pi(nstates);
  for (size_t r = 0; r < rank; ++r) {
    size_t lead = 0;
    while (lead < nstates && a[r][lead] == 0) ++lead;
    if (lead < nstates) pi[lead] = a[r][nstates] / a[r][lead];
  }

  StateDistribution dist;
  for (unsigned s = 0; s < nstates; ++s) dist.probs[index_to_state(n, s)] = pi[s];
  return dist;
}

Rat expected_X(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  Int sum = 0;
  generate_all(n + 1, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    sum += 2 * corner_count(t) - 1;
  });
  return Rat(sum) / Rat(factorial(n + 1));
}

StateDistribution mc_sample(int n, const PasepParams& params, std::uint64_t steps,
                            std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (steps < 1) throw DomainError("steps must be >= 1");
  for (const Rat* r : {&params.alpha, &params.beta, &params.q})
    if (*r < 0 || *r > 1) throw InvalidParams("rates must lie in [0,1]");

  const double alpha = static_cast<double>(params.alpha);
  const double beta = static_cast<double>(params.beta);
  const double q = static_cast<double>(params.q);

  std::mt19937_64 rng(seed);
  auto uniform = [&] { return (rng() >> 11) * 0x1.0p-53; };

  unsigned s = 0;
  const std::uint64_t burn = steps / 10;
  std::vector<std::uint64_t> occ(1u << n, 0);
  std::uint64_t counted = 0;
  for (std::uint64_t step = 0; step < steps; ++step) {
    const unsigned loc = static_cast<unsigned>(rng() % (n + 1));
    if (loc == 0) {
      if (!(s & 1u) && uniform() < alpha) s |= 1u;
    } else if (loc == static_cast<unsigned>(n)) {
      if ((s & (1u << (n - 1))) && uniform() < beta) s &= ~(1u << (n - 1));
    } else {
      const unsigned i = loc - 1;  // gap between sites i and i+1
      const bool a = s & (1u << i), b = s & (1u << (i + 1));
      if (a && !b)
        s ^= 3u << i;  // right hop, rate 1
      else if (!a && b && uniform() < q)
        s ^= 3u << i;
    }
    if (step >= burn) {
      ++occ[s];
      ++counted;
    }
  }

  StateDistribution dist;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    dist.probs[index_to_state(n, mask)] = Rat(occ[mask]) / Rat(counted);
  return dist;
}

Rat total_variation(const StateDistribution& a, const StateDistribution& b) {
  Rat tv = 0;
  for (const auto& [s, p] : a.probs) {
    auto it = b.probs.find(s);
    Rat diff = p - (it == b.probs.end() ? Rat(0) : it->second);
    tv += diff < 0 ? Rat(-diff) : diff;
  }
  for (const auto& [s, p] : b.probs)
    if (!a.probs.count(s)) tv += p;
  return tv / 2;
}

}  // namespace tlt
