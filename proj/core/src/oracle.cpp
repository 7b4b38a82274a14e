#include <bit>
#include <cstdint>
#include <numeric>

#include "plutus/verification.hpp"

namespace plutus {

namespace {

using Mask = std::uint32_t;

// Bitmask view of a small graph; shares no code with the checkers above.
class SmallGraph {
 public:
  explicit SmallGraph(const Graph& g) : n_(g.node_count()), adj_(g.node_count(), 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
    }
  }

  bool connected(Mask set) const {
    if (set == 0) return false;
    Mask seen = set & (~set + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  }

  bool m_connected(Mask set, int m) const {
    if (!connected(set)) return false;
    if (m == 1) return true;
    if (std::popcount(set) < m + 1) return false;
    for (Mask a = set; a != 0; a &= a - 1) {
      const Mask without_a = set & ~(a & (~a + 1));
      if (!connected(without_a)) return false;
      if (m == 3) {
        for (Mask b = without_a; b != 0; b &= b - 1) {
          if (!connected(without_a & ~(b & (~b + 1)))) return false;
        }
      }
    }
    return true;
  }

  bool k_dominating(Mask set, int k) const {
    for (Vertex v = 0; v < n_; ++v) {
      if (set >> v & 1) continue;
      if (std::popcount(adj_[v] & set) < k) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<Mask> adj_;
};

// Advances `idx` (strictly increasing, values < n) to the next combination
// in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int size = static_cast<int>(idx.size());
  int i = size - 1;
  while (i >= 0 && idx[i] == n - size + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

OracleResult brute_force_min_mcds(const Graph& g, int k, int m, std::optional<int> size_cap) {
  const int n = g.node_count();
  if (n > kOracleMaxNodes) {
    throw Error(ErrorKind::TooLarge,
                "oracle enumerates 2^n subsets; n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kOracleMaxNodes));
  }
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (m < 1 || m > 3) throw Error(ErrorKind::InvalidArgument, "m must be 1, 2 or 3");

  OracleResult result;
  if (n == 0) {
    result.optimum_size = 0;
    return result;
  }
  const SmallGraph small(g);
  const int cap = std::min(n, size_cap.value_or(n));
  for (int size = 1; size <= cap; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ++result.sets_examined;
      Mask set = 0;
      for (int v : idx) set |= Mask{1} << v;
      if (small.k_dominating(set, k) && small.m_connected(set, m)) {
        result.optimum_size = static_cast<std::size_t>(size);
        result.optimum_witness.assign(idx.begin(), idx.end());
        return result;
      }
    } while (next_combination(idx, n));
  }
  return result;
}

}  // namespace plutus
