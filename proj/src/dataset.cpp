#include "mhp/dataset.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "mhp/errors.hpp"

namespace mhp {

namespace {

struct Edge {
  std::size_t to;
  std::size_t record;
};

class Graph {
 public:
  std::size_t node(const Contract& c) {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i] == c) return i;
    nodes_.push_back(c);
    adj_.emplace_back();
    return nodes_.size() - 1;
  }

  std::optional<std::size_t> find(const Contract& c) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i] == c) return i;
    return std::nullopt;
  }

  void add(std::size_t from, std::size_t to, std::size_t record) { adj_[from].push_back({to, record}); }

  // Record indices along a shortest path from -> to (empty when from == to).
  std::optional<std::vector<std::size_t>> path(std::size_t from, std::size_t to) const {
    if (from == to) return std::vector<std::size_t>{};
    std::vector<std::optional<Edge>> parent(nodes_.size());
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<std::size_t> prev(nodes_.size(), 0);
    std::deque<std::size_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const Edge& e : adj_[x]) {
        if (seen[e.to]) continue;
        seen[e.to] = 1;
        parent[e.to] = e;
        prev[e.to] = x;
        if (e.to == to) {
          std::vector<std::size_t> out;
          for (std::size_t y = to; y != from; y = prev[y]) out.push_back(parent[y]->record);
          std::reverse(out.begin(), out.end());
          return out;
        }
        queue.push_back(e.to);
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<Contract> nodes_;
  std::vector<std::vector<Edge>> adj_;
};

bool sure_prize(const Contract& c) { return c.is_constant() && c.at(0).is_degenerate(); }
double prize(const Contract& c) { return c.at(0).support().front().prize; }

}  // namespace

DatasetReport dataset_consistency(const ChoiceDataset& d) {
  DatasetReport rep;
  if (d.records.empty()) return rep;
  const OutputSpace& space = d.records.front().first.space();
  Graph g;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t r = 0; r < d.records.size(); ++r) {
    const auto& rec = d.records[r];
    if (!(rec.first.space() == space) || !(rec.second.space() == space))
      throw InputError("dataset records mix output spaces");
    const std::size_t a = g.node(rec.first);
    const std::size_t b = g.node(rec.second);
    ends.emplace_back(a, b);
    g.add(a, b, r);
    if (rec.verdict == Recorded::indifferent) g.add(b, a, r);
  }

  for (std::size_t r = 0; r < d.records.size(); ++r) {
    if (d.records[r].verdict != Recorded::strict) continue;
    auto back = g.path(ends[r].second, ends[r].first);
    if (!back) continue;
    std::vector<std::size_t> cycle{r};
    cycle.insert(cycle.end(), back->begin(), back->end());
    std::vector<std::size_t> key = cycle;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    const bool dup = std::any_of(rep.cycles.begin(), rep.cycles.end(), [&](const std::vector<std::size_t>& c) {
      std::vector<std::size_t> k = c;
      std::sort(k.begin(), k.end());
      k.erase(std::unique(k.begin(), k.end()), k.end());
      return k == key;
    });
    if (!dup) rep.cycles.push_back(std::move(cycle));
  }

  for (std::size_t r = 0; r < d.records.size(); ++r) {
    const auto& rec = d.records[r];
    if (!sure_prize(rec.first) || !sure_prize(rec.second)) continue;
    const double x = prize(rec.first);
    const double y = prize(rec.second);
    if (x < y || (x == y && rec.verdict == Recorded::strict)) rep.monotonicity_violations.push_back(r);
  }

  // second(s) >= first(s) per the data: equal lotteries, ordered sure prizes,
  // or a chain of recorded choices between the corresponding constants.
  auto weakly_above = [&](const Lottery& hi, const Lottery& lo) {
    if (hi == lo) return true;
    if (hi.is_degenerate() && lo.is_degenerate() && hi.min_prize() >= lo.min_prize()) return true;
    const auto a = g.find(Contract::constant(space, hi));
    const auto b = g.find(Contract::constant(space, lo));
    return a && b && g.path(*a, *b).has_value();
  };
  for (std::size_t r = 0; r < d.records.size(); ++r) {
    const auto& rec = d.records[r];
    if (rec.verdict != Recorded::strict) continue;
    bool dominated = true;
    for (std::size_t s = 0; s < space.size() && dominated; ++s)
      dominated = weakly_above(rec.second.at(s), rec.first.at(s));
    if (dominated) rep.dominance_violations.push_back(r);
  }

  rep.consistent = rep.cycles.empty() && rep.monotonicity_violations.empty() && rep.dominance_violations.empty();
  return rep;
}

}  // namespace mhp
