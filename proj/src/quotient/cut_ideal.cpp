#include "theta/quotient.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace theta {

namespace {

using VertexMask = std::uint64_t;

std::string label_of(VertexMask t, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!((t >> v) & 1U)) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(v + 1);
  }
  return out + "}";
}

class CutOracle final : public QuotientOracle {
 public:
  CutOracle(const Graph& g, int k, std::size_t max_edges)
      : QuotientOracle(IdealKind::CutIdeal, g.edges().size()), graph_(g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edges().size();
    if (n > 64) throw std::invalid_argument("cut ideal supports at most 64 vertices");
    if (m == 0) throw std::invalid_argument("cut ideal needs at least one edge");
    if (k >= 2 && m > max_edges) {
      throw std::invalid_argument("minimal T-join search is capped at " + std::to_string(max_edges) +
                                  " edges for k >= 2 (graph has " + std::to_string(m) + ")");
    }
    auto comps = g.components();
    const std::size_t ncomp = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
    const std::size_t reachable_exp = n - ncomp;  // number of joinable T is 2^(n - #components)
    const std::size_t max_size = static_cast<std::size_t>(2 * k);

    struct Entry {
      VertexMask t;
      std::vector<std::size_t> join;
    };
    std::vector<Entry> found{{0, {}}};
    joins_.emplace(0, 0);
    bool all_found = reachable_exp == 0;

    std::vector<std::size_t> combo;
    for (std::size_t size = 1; size <= std::min(max_size, m) && !all_found; ++size) {
      combo.resize(size);
      for (std::size_t i = 0; i < size; ++i) combo[i] = i;
      while (true) {
        VertexMask t = 0;
        for (auto e : combo) t ^= (VertexMask{1} << g.edges()[e].first) ^ (VertexMask{1} << g.edges()[e].second);
        if (joins_.emplace(t, found.size()).second) {
          found.push_back({t, combo});
          if (reachable_exp < 63 && found.size() == (std::size_t{1} << reachable_exp)) {
            all_found = true;
            break;
          }
        }
        // next combination in lexicographic order
        std::size_t i = size;
        while (i > 0 && combo[i - 1] == m - size + i - 1) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
      }
    }

    auto monomial_of = [m](const std::vector<std::size_t>& join) {
      std::vector<std::uint32_t> e(m, 0);
      for (auto idx : join) e[idx] = 1;
      return Monomial(std::move(e));
    };
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<Monomial> monos;
    for (const auto& f : found) monos.push_back(monomial_of(f.join));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (monos[a].degree() != monos[b].degree()) return monos[a].degree() < monos[b].degree();
      return compare_monomials(monos[a], monos[b]) == std::strong_ordering::greater;
    });
    joins_.clear();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const auto& f = found[order[pos]];
      basis_.elements.push_back(monos[order[pos]]);
      basis_.labels.push_back(label_of(f.t, n));
      joins_.emplace(f.t, pos);
    }
    level_ = k;
    complete_ = all_found;

    for (const auto& p : cut_points(g)) {
      std::vector<double> q;
      for (const auto& c : p) q.push_back(c.get_d());
      samples_.push_back(std::move(q));
    }
    finalize();
  }

 protected:
  SparseVector reduce_monomial(const Monomial& mono) const override {
    VertexMask t = 0;
    std::size_t odd = 0;
    for (std::size_t e = 0; e < mono.nvars(); ++e) {
      if (mono[e] % 2 == 1) {
        t ^= (VertexMask{1} << graph_.edges()[e].first) ^ (VertexMask{1} << graph_.edges()[e].second);
        ++odd;
      }
    }
    auto it = joins_.find(t);
    if (it == joins_.end()) {
      throw std::out_of_range("T-join class " + label_of(t, graph_.vertex_count()) +
                              " lies outside the enumerated basis");
    }
    // A minimal join never has more edges than any other T-join.
    if (basis_.elements[it->second].degree() > odd) {
      throw std::logic_error("minimal T-join is longer than a T-join found in a product");
    }
    return {{it->second, Rational(1)}};
  }

 private:
  Graph graph_;
  std::unordered_map<VertexMask, std::size_t> joins_;  // T -> basis index
};

}  // namespace

OraclePtr basis_cut_ideal(const Graph& graph, int k, std::size_t max_edges) {
  if (k < 1) throw std::invalid_argument("level k must be at least 1");
  return std::make_shared<CutOracle>(graph, k, max_edges);
}

std::vector<RationalPoint> cut_points(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > 24) throw std::invalid_argument("cut enumeration supports at most 24 vertices");
  std::set<RationalPoint> seen;
  std::vector<RationalPoint> out;
  const std::uint64_t count = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
  for (std::uint64_t side = 0; side < count; ++side) {
    RationalPoint p;
    for (auto [u, v] : graph.edges()) {
      bool cut = ((side >> u) & 1U) != ((side >> v) & 1U);
      p.emplace_back(cut ? -1 : 1);
    }
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace theta
