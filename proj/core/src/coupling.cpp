#include "secrecy/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "secrecy/channel.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/estimate.hpp"

namespace secrecy {

EmpiricalDist EmpiricalDist::from_samples(std::vector<double> xs) {
  if (xs.empty()) throw ConfigError("empirical distribution needs samples");
  std::sort(xs.begin(), xs.end());
  return EmpiricalDist{std::move(xs)};
}

void validate(const DiscreteDist& d) {
  if (d.atoms.empty() || d.atoms.size() != d.probs.size())
    throw ConfigError("discrete distribution needs matching atoms/probs");
  double total = 0.0;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    if (!std::isfinite(d.atoms[i]))
      throw ConfigError("discrete distribution atoms must be finite");
    if (!std::isfinite(d.probs[i]) || d.probs[i] < 0.0)
      throw ConfigError("discrete distribution probabilities must be >= 0");
    total += d.probs[i];
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ConfigError("discrete distribution probabilities must sum to 1");
}

double min_positive_gap(const EmpiricalDist& a, const EmpiricalDist& b) {
  if (a.samples.empty() || b.samples.empty())
    throw ConfigError("min_positive_gap needs non-empty samples");
  CompensatedSum acc;
  if (a.samples.size() == b.samples.size()) {
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
      const double d = a.samples[k] - b.samples[k];
      if (d > 0.0) acc.add(d);
    }
    return acc.value() / double(a.samples.size());
  }
  // Align on the midpoint quantile grid of the larger size; for equal sizes
  // this grid reproduces the direct sorted pairing above.
  const std::size_t m = std::max(a.samples.size(), b.samples.size());
  for (std::size_t k = 1; k <= m; ++k) {
    const double u = (double(k) - 0.5) / double(m);
    const double d =
        empirical_quantile(a.samples, u) - empirical_quantile(b.samples, u);
    if (d > 0.0) acc.add(d);
  }
  return acc.value() / double(m);
}

namespace {

struct WeightedAtoms {
  std::vector<double> atoms;
  std::vector<double> probs;
};

WeightedAtoms sorted_by_atom(const DiscreteDist& d) {
  std::vector<std::size_t> order(d.atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return d.atoms[i] < d.atoms[j];
  });
  WeightedAtoms out;
  out.atoms.reserve(order.size());
  out.probs.reserve(order.size());
  for (std::size_t i : order) {
    out.atoms.push_back(d.atoms[i]);
    out.probs.push_back(d.probs[i]);
  }
  return out;
}

}  // namespace

double min_positive_gap(const DiscreteDist& a, const DiscreteDist& b) {
  validate(a);
  validate(b);
  const WeightedAtoms sa = sorted_by_atom(a);
  const WeightedAtoms sb = sorted_by_atom(b);
  // Comonotone mass matching: walk both sorted supports, always pairing the
  // lowest unassigned probability mass on each side.
  CompensatedSum acc;
  std::size_t i = 0, j = 0;
  double ra = sa.probs[0], rb = sb.probs[0];
  while (i < sa.atoms.size() && j < sb.atoms.size()) {
    const double w = std::min(ra, rb);
    if (w > 0.0) {
      const double d = sa.atoms[i] - sb.atoms[j];
      if (d > 0.0) acc.add(w * d);
    }
    ra -= w;
    rb -= w;
    if (ra <= rb) {
      ++i;
      if (i < sa.atoms.size()) ra = sa.probs[i];
    } else {
      ++j;
      if (j < sb.atoms.size()) rb = sb.probs[j];
    }
  }
  return acc.value();
}

// ---------------------------------------------------------------------------
// Transportation simplex (MODI method) with Bland's anti-cycling rule.
// ---------------------------------------------------------------------------
namespace {

struct BasicCell {
  std::size_t i, j;
  double w;
};

class TransportSimplex {
 public:
  TransportSimplex(std::vector<double> supply, std::vector<double> demand,
                   const std::vector<double>& cost)
      : m_(supply.size()),
        n_(demand.size()),
        cost_(cost),
        supply_(std::move(supply)),
        demand_(std::move(demand)) {}

  void solve() {
    northwest_corner();
    const std::size_t max_iters = 50 * m_ * n_ + 1000;
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
      compute_potentials();
      std::size_t ei = 0, ej = 0;
      if (!find_entering(ei, ej)) return;
      pivot(ei, ej);
    }
    throw std::runtime_error("transportation simplex failed to converge");
  }

  const std::vector<BasicCell>& basis() const { return basis_; }

 private:
  double c(std::size_t i, std::size_t j) const { return cost_[i * n_ + j]; }

  bool is_basic(std::size_t i, std::size_t j) const {
    for (const auto& cell : basis_)
      if (cell.i == i && cell.j == j) return true;
    return false;
  }

  void northwest_corner() {
    std::vector<double> rp = supply_, cq = demand_;
    std::size_t i = 0, j = 0;
    // Exactly m+n-1 cells: each step allocates one cell and retires one row
    // or one column (never both, except at the terminal cell).
    while (basis_.size() < m_ + n_ - 1) {
      const double w = std::min(rp[i], cq[j]);
      basis_.push_back({i, j, w});
      rp[i] -= w;
      cq[j] -= w;
      if (i + 1 < m_ && (rp[i] <= cq[j] || j + 1 == n_))
        ++i;
      else
        ++j;
    }
  }

  void compute_potentials() {
    u_.assign(m_, 0.0);
    v_.assign(n_, 0.0);
    std::vector<char> known_u(m_, 0), known_v(n_, 0);
    known_u[0] = 1;
    // Propagate u_i + v_j = c_ij over the basis tree.
    std::size_t resolved = 1;
    while (resolved < m_ + n_) {
      bool progressed = false;
      for (const auto& cell : basis_) {
        if (known_u[cell.i] && !known_v[cell.j]) {
          v_[cell.j] = c(cell.i, cell.j) - u_[cell.i];
          known_v[cell.j] = 1;
          ++resolved;
          progressed = true;
        } else if (!known_u[cell.i] && known_v[cell.j]) {
          u_[cell.i] = c(cell.i, cell.j) - v_[cell.j];
          known_u[cell.i] = 1;
          ++resolved;
          progressed = true;
        }
      }
      if (!progressed)
        throw std::runtime_error("transportation basis is not a spanning tree");
    }
  }

  // Smallest-index entering cell with negative reduced cost (Bland).
  bool find_entering(std::size_t& ei, std::size_t& ej) const {
    constexpr double kTol = 1e-11;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (is_basic(i, j)) continue;
        if (c(i, j) - u_[i] - v_[j] < -kTol) {
          ei = i;
          ej = j;
          return true;
        }
      }
    return false;
  }

  // The unique basis-tree path from row node ei to column node ej, as a list
  // of basis indices.  Nodes: rows 0..m-1, columns m..m+n-1.
  std::vector<std::size_t> tree_path(std::size_t ei, std::size_t ej) const {
    const std::size_t nodes = m_ + n_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const std::size_t r = basis_[k].i, col = m_ + basis_[k].j;
      adj[r].push_back({col, k});
      adj[col].push_back({r, k});
    }
    std::vector<std::int64_t> parent_edge(nodes, -1);
    std::vector<std::int64_t> parent_node(nodes, -1);
    std::vector<char> seen(nodes, 0);
    std::queue<std::size_t> queue;
    queue.push(ei);
    seen[ei] = 1;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop();
      if (x == m_ + ej) break;
      for (const auto& [y, k] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        parent_edge[y] = std::int64_t(k);
        parent_node[y] = std::int64_t(x);
        queue.push(y);
      }
    }
    std::vector<std::size_t> path;
    std::size_t cur = m_ + ej;
    if (!seen[cur])
      throw std::runtime_error("transportation basis is disconnected");
    while (cur != ei) {
      path.push_back(std::size_t(parent_edge[cur]));
      cur = std::size_t(parent_node[cur]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  void pivot(std::size_t ei, std::size_t ej) {
    const auto path = tree_path(ei, ej);
    // Walking row->col->row->..., edges at even path positions lose mass
    // when the entering cell gains it.
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leaving = basis_.size();
    auto lex_less = [&](std::size_t x, std::size_t y) {
      return basis_[x].i != basis_[y].i ? basis_[x].i < basis_[y].i
                                        : basis_[x].j < basis_[y].j;
    };
    for (std::size_t p = 0; p < path.size(); p += 2) {
      const double w = basis_[path[p]].w;
      // Ties resolved by smallest (i,j) — Bland's rule, prevents cycling.
      if (w < theta || (w == theta && lex_less(path[p], leaving))) {
        theta = w;
        leaving = path[p];
      }
    }
    for (std::size_t p = 0; p < path.size(); ++p) {
      if (p % 2 == 0)
        basis_[path[p]].w -= theta;
      else
        basis_[path[p]].w += theta;
    }
    basis_[leaving] = BasicCell{ei, ej, theta};
  }

  std::size_t m_, n_;
  const std::vector<double>& cost_;
  std::vector<double> supply_, demand_;
  std::vector<BasicCell> basis_;
  std::vector<double> u_, v_;
};

}  // namespace

LpSolution lp_oracle(const DiscreteDist& a, const DiscreteDist& b) {
  validate(a);
  validate(b);
  const std::size_t m = a.atoms.size(), n = b.atoms.size();
  std::vector<double> cost(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cost[i * n + j] = std::max(a.atoms[i] - b.atoms[j], 0.0);

  // Balance marginals exactly (each sums to 1 only within tolerance).
  std::vector<double> supply = a.probs, demand = b.probs;
  const double sa = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double sb = std::accumulate(demand.begin(), demand.end(), 0.0);
  for (double& q : demand) q *= sa / sb;

  TransportSimplex simplex(std::move(supply), std::move(demand), cost);
  simplex.solve();

  LpSolution out;
  out.plan = CouplingMatrix(m, n);
  CompensatedSum value;
  for (const auto& cell : simplex.basis()) {
    const double w = cell.w > 0.0 ? cell.w : 0.0;
    out.plan.at(cell.i, cell.j) += w;
    value.add(w * cost[cell.i * n + cell.j]);
  }
  out.value = value.value();
  return out;
}

double independent_gap(const EmpiricalDist& a, const EmpiricalDist& b,
                       const RngStream& rng, int rounds) {
  if (a.samples.empty() || b.samples.empty())
    throw ConfigError("independent_gap needs non-empty samples");
  if (rounds < 1) throw ConfigError("independent_gap needs rounds >= 1");
  const std::size_t n = std::min(a.samples.size(), b.samples.size());
  CompensatedSum acc;
  std::vector<double> shuffled = b.samples;
  for (int round = 0; round < rounds; ++round) {
    const RngStream r = rng.substream(std::uint64_t(round));
    // Fisher-Yates over b, then pair positionally with a.
    for (std::size_t k = shuffled.size() - 1; k > 0; --k)
      std::swap(shuffled[k], shuffled[r.bits64(k) % (k + 1)]);
    for (std::size_t k = 0; k < n; ++k) {
      const double d = a.samples[k] - shuffled[k];
      if (d > 0.0) acc.add(d);
    }
  }
  return acc.value() / (double(rounds) * double(n));
}

}  // namespace secrecy
