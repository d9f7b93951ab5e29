#include "mwist/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "mwist/error.hpp"

namespace mwist {

namespace {

using Mask = std::uint64_t;

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, const TreeVisitor& visit, std::int64_t max_trees)
      : g_(g), visit_(visit), max_trees_(max_trees), n_(g.n()), m_(g.m()) {
    suffix_.assign(static_cast<std::size_t>(m_ + 1) * n_, 0);
    for (int i = m_ - 1; i >= 0; --i) {
      for (int v = 0; v < n_; ++v) suffix_[i * n_ + v] = suffix_[(i + 1) * n_ + v];
      const auto& e = g.edges()[i];
      suffix_[i * n_ + e.u] |= Mask{1} << e.v;
      suffix_[i * n_ + e.v] |= Mask{1} << e.u;
    }
    inc_adj_.assign(n_, 0);
    deg_.assign(n_, 0);
    comp_.resize(n_);
    for (int v = 0; v < n_; ++v) comp_[v] = v;
  }

  std::int64_t run() {
    if (n_ <= 1) {
      emit();
      return count_;
    }
    rec(0);
    return count_;
  }

 private:
  void emit() {
    if (++count_ > max_trees_)
      throw budget_exceeded_error("spanning-tree enumeration exceeded " + std::to_string(max_trees_) +
                                  " trees");
    visit_(chosen_, deg_);
  }

  // u and v connected using included edges plus edges with index >= from
  bool reachable(int u, int v, int from) const {
    Mask seen = Mask{1} << u, frontier = seen;
    const Mask* suf = &suffix_[static_cast<std::size_t>(from) * n_];
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        int x = std::countr_zero(f);
        next |= inc_adj_[x] | suf[x];
      }
      next &= ~seen;
      if (next >> v & 1) return true;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  void rec(int i) {
    const int have = static_cast<int>(chosen_.size());
    if (have == n_ - 1) {
      emit();
      return;
    }
    if (m_ - i < n_ - 1 - have) return;
    const Edge e = g_.edges()[i];
    const int cu = comp_[e.u], cv = comp_[e.v];
    if (cu != cv) {
      std::vector<int> saved;
      for (int x = 0; x < n_; ++x)
        if (comp_[x] == cv) {
          saved.push_back(x);
          comp_[x] = cu;
        }
      inc_adj_[e.u] |= Mask{1} << e.v;
      inc_adj_[e.v] |= Mask{1} << e.u;
      ++deg_[e.u];
      ++deg_[e.v];
      chosen_.push_back(e);
      rec(i + 1);
      chosen_.pop_back();
      --deg_[e.u];
      --deg_[e.v];
      inc_adj_[e.u] &= ~(Mask{1} << e.v);
      inc_adj_[e.v] &= ~(Mask{1} << e.u);
      for (int x : saved) comp_[x] = cv;
      if (!reachable(e.u, e.v, i + 1)) return;
    }
    rec(i + 1);
  }

  const Graph& g_;
  const TreeVisitor& visit_;
  std::int64_t max_trees_;
  int n_, m_;
  std::vector<Mask> suffix_;
  std::vector<Mask> inc_adj_;
  std::vector<int> deg_, comp_;
  std::vector<Edge> chosen_;
  std::int64_t count_ = 0;
};

}  // namespace

std::int64_t enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit,
                                      const OracleBudget& budget) {
  if (g.n() > budget.max_vertices || g.n() > 64)
    throw budget_exceeded_error("oracle limited to " + std::to_string(budget.max_vertices) +
                                " vertices, graph has " + std::to_string(g.n()));
  if (!is_connected(g)) throw disconnected_error("graph is disconnected");
  return TreeEnumerator(g, visit, budget.max_trees).run();
}

ExactResult exact_mwist(const Graph& g, const OracleBudget& budget) {
  ExactResult r;
  r.opt = -1;
  r.trees_enumerated = enumerate_spanning_trees(
      g,
      [&](std::span<const Edge> edges, std::span<const int> deg) {
        Weight w = 0;
        for (int v = 0; v < g.n(); ++v)
          if (deg[v] >= 2) w += g.weight(v);
        if (w > r.opt) {
          r.opt = w;
          r.tree.edges.assign(edges.begin(), edges.end());
        }
      },
      budget);
  return r;
}

std::int64_t count_spanning_trees(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 1;
  const int k = n - 1;
  std::vector<__int128> a(static_cast<std::size_t>(k) * k, 0);
  auto at = [&](int i, int j) -> __int128& { return a[static_cast<std::size_t>(i) * k + j]; };
  for (const auto& e : g.edges()) {
    if (e.u < k) ++at(e.u, e.u);
    if (e.v < k) ++at(e.v, e.v);
    if (e.u < k && e.v < k) {
      --at(e.u, e.v);
      --at(e.v, e.u);
    }
  }
  __int128 prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (at(p, p) == 0) {
      int r = p + 1;
      while (r < k && at(r, p) == 0) ++r;
      if (r == k) return 0;
      for (int c = 0; c < k; ++c) std::swap(at(p, c), at(r, c));
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
      at(i, p) = 0;
    }
    prev = at(p, p);
  }
  return static_cast<std::int64_t>(sign * at(k - 1, k - 1));
}

}  // namespace mwist
