#include "theta/quotient.hpp"

#include <map>
#include <stdexcept>

namespace theta {

namespace {

using VertexSet = std::vector<std::size_t>;  // sorted

/// Stable sets of size <= max_size ordered by (size, lexicographic).
std::vector<VertexSet> enumerate_stable_sets(const Graph& g, std::size_t max_size, bool& exhausted) {
  std::vector<VertexSet> layer{VertexSet{}};
  std::vector<VertexSet> all{VertexSet{}};
  exhausted = false;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<VertexSet> next;
    for (const auto& s : layer) {
      std::size_t start = s.empty() ? 0 : s.back() + 1;
      for (std::size_t v = start; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (auto u : s) ok = ok && !g.adjacent(u, v);
        if (!ok) continue;
        VertexSet t = s;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    if (next.empty()) {
      exhausted = true;
      return all;
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  // One more layer decides whether larger stable sets exist.
  for (const auto& s : layer) {
    std::size_t start = s.empty() ? 0 : s.back() + 1;
    for (std::size_t v = start; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (auto u : s) ok = ok && !g.adjacent(u, v);
      if (ok) return all;
    }
  }
  exhausted = true;
  return all;
}

std::string label_of(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

class StableSetOracle final : public QuotientOracle {
 public:
  StableSetOracle(const Graph& g, int k) : QuotientOracle(IdealKind::StableSet, g.vertex_count()), graph_(g) {
    bool exhausted = false;
    auto sets = enumerate_stable_sets(g, static_cast<std::size_t>(2 * k), exhausted);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::vector<std::uint32_t> e(nvars(), 0);
      for (auto v : sets[i]) e[v] = 1;
      basis_.elements.emplace_back(std::move(e));
      basis_.labels.push_back(label_of(sets[i]));
      index_.emplace(sets[i], i);
    }
    level_ = k;
    complete_ = exhausted;
    if (exhausted || sets.size() <= 4096) {
      if (!exhausted) {
        bool all = false;
        auto every = enumerate_stable_sets(g, g.vertex_count(), all);
        sets = std::move(every);
      }
      for (const auto& s : sets) {
        std::vector<double> p(nvars(), 0.0);
        for (auto v : s) p[v] = 1.0;
        samples_.push_back(std::move(p));
      }
    }
    finalize();
  }

 protected:
  SparseVector reduce_monomial(const Monomial& m) const override {
    VertexSet support;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m[v] > 0) support.push_back(v);
    }
    for (std::size_t a = 0; a < support.size(); ++a) {
      for (std::size_t b = a + 1; b < support.size(); ++b) {
        if (graph_.adjacent(support[a], support[b])) return {};
      }
    }
    auto it = index_.find(support);
    if (it == index_.end()) {
      throw std::out_of_range("stable set " + label_of(support) + " lies outside the enumerated basis");
    }
    return {{it->second, Rational(1)}};
  }

 private:
  Graph graph_;
  std::map<VertexSet, std::size_t> index_;
};

}  // namespace

OraclePtr basis_stable_set(const Graph& graph, int k) {
  if (k < 1) throw std::invalid_argument("level k must be at least 1");
  return std::make_shared<StableSetOracle>(graph, k);
}

ReducerSet stable_set_reducers(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial::variable(n, i).pow(2) - Polynomial::variable(n, i));
  }
  for (auto [u, v] : graph.edges()) {
    gens.push_back(Polynomial::variable(n, u) * Polynomial::variable(n, v));
  }
  return ReducerSet(gens, MonomialOrder::GrevLex, /*confluent=*/true);
}

std::vector<RationalPoint> stable_set_points(const Graph& graph) {
  bool exhausted = false;
  auto sets = enumerate_stable_sets(graph, graph.vertex_count(), exhausted);
  std::vector<RationalPoint> out;
  for (const auto& s : sets) {
    RationalPoint p(graph.vertex_count(), Rational(0));
    for (auto v : s) p[v] = 1;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace theta
