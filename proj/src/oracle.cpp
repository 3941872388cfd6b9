#include "moff/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "moff/coherence.hpp"

namespace moff {

namespace {

std::vector<std::uint64_t> all_subsets(std::size_t m, std::size_t l) {
  std::vector<std::uint64_t> out;
  if (l > m) return out;
  // Gosper's hack enumerates l-subsets of [m] in increasing mask order.
  std::uint64_t v = (l == 0) ? 0 : ((std::uint64_t{1} << l) - 1);
  std::uint64_t limit = std::uint64_t{1} << m;
  if (l == 0) {
    out.push_back(0);
    return out;
  }
  while (v < limit) {
    out.push_back(v);
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

struct CliqueSearch {
  const std::vector<std::uint64_t>& verts;
  std::size_t c;
  SearchBudget budget;
  std::chrono::steady_clock::time_point start;
  std::uint64_t nodes = 0;
  bool truncated = false;
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;

  bool compatible(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(std::popcount(verts[a] & verts[b])) <= c;
  }

  bool over_budget() {
    if (nodes > budget.max_nodes) return true;
    if ((nodes & 0x3ff) == 0) {
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (s > budget.max_seconds) return true;
    }
    return false;
  }

  // Greedy coloring of the candidate set; returns candidates reordered so the
  // highest color class comes last, with their color numbers (upper bounds).
  void color(const std::vector<std::size_t>& cand, std::vector<std::size_t>& order,
             std::vector<std::size_t>& colors) {
    order.clear();
    colors.clear();
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : cand) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool fits = true;
        for (std::size_t u : classes[k]) {
          if (compatible(v, u)) { fits = false; break; }
        }
        if (fits) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (std::size_t v : classes[k]) {
        order.push_back(v);
        colors.push_back(k + 1);
      }
    }
  }

  void expand(std::vector<std::size_t>& cand) {
    ++nodes;
    if (over_budget()) { truncated = true; return; }
    std::vector<std::size_t> order, colors;
    color(cand, order, colors);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colors[idx] <= best.size()) return;
      std::size_t v = order[idx];
      current.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < idx; ++j) {
        if (compatible(v, order[j])) next.push_back(order[j]);
      }
      if (current.size() > best.size()) best = current;
      if (!next.empty()) expand(next);
      current.pop_back();
      if (truncated) return;
    }
  }
};

}  // namespace

CliqueResult max_cohesive_family(std::size_t m, std::size_t l, std::size_t c,
                                 SearchBudget budget) {
  if (m == 0 || l == 0 || l > m || m > 24)
    throw std::invalid_argument("max_cohesive_family: need 0 < l <= m <= 24");
  auto verts = all_subsets(m, l);

  CliqueSearch search{verts, c, budget, std::chrono::steady_clock::now(), 0, false, {}, {}};

  // Order vertices by descending compatibility degree; ties by mask.
  std::vector<std::size_t> idx(verts.size());
  std::vector<std::size_t> deg(verts.size(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (search.compatible(i, j)) { ++deg[i]; ++deg[j]; }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

  search.expand(idx);

  CliqueResult res;
  res.size = search.best.size();
  res.nodes = search.nodes;
  res.complete = !search.truncated;
  res.witness.m = m;
  res.witness.l = l;
  for (std::size_t v : search.best) res.witness.blocks.push_back(verts[v]);
  std::sort(res.witness.blocks.begin(), res.witness.blocks.end());
  return res;
}

bool extendability_check(const BlockFamily& f, std::size_t c) {
  auto verts = all_subsets(f.m, f.l);
  for (std::uint64_t cand : verts) {
    bool already = false;
    bool ok = true;
    for (std::uint64_t b : f.blocks) {
      if (b == cand) { already = true; break; }
      if (static_cast<std::size_t>(std::popcount(b & cand)) > c) { ok = false; break; }
    }
    if (!already && ok) return true;
  }
  return false;
}

std::map<long long, std::size_t> direct_design_count(const BlockFamily& f, int t) {
  std::map<long long, std::size_t> hist;
  for (std::uint64_t tset : all_subsets(f.m, static_cast<std::size_t>(t))) {
    long long count = 0;
    for (std::uint64_t b : f.blocks)
      if ((b & tset) == tset) ++count;
    ++hist[count];
  }
  return hist;
}

FusionFrame random_frame(std::size_t m, std::size_t l, std::size_t n,
                         std::uint64_t seed, Field field) {
  if (l == 0 || l > m) throw std::invalid_argument("random_frame: need 0 < l <= m");
  std::mt19937_64 rng(seed);
  FusionFrame ff;
  ff.field = field;
  ff.m = m;
  ff.l = l;
  ff.exact = false;
  for (std::size_t k = 0; k < n; ++k) {
    FloatMatrix u = haar_random_unitary(m, field, rng);
    FloatMatrix p(m, m);
    // P = U diag(1^l, 0^{m-l}) U*.
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::complex<double> s = 0.0;
        for (std::size_t r = 0; r < l; ++r) s += u.at(i, r) * std::conj(u.at(j, r));
        p.at(i, j) = s;
      }
    ff.fprojections.push_back(std::move(p));
  }
  return ff;
}

}  // namespace moff
