#include "tlsbpg/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tlsbpg/errors.hpp"

namespace tlsbpg {

void TransferPlan::validate(int n_players) const {
  if (horizon < 1) throw ConfigError("transfer: horizon must be >= 1");
  if (beta_tf < 0.0 || beta_tf > 1.0) throw ConfigError("transfer: beta_tf must be in [0,1]");
  if (alpha_mom < 0.0 || alpha_mom > 1.0) throw ConfigError("transfer: alpha_mom must be in [0,1]");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : pairs) {
    if (i == j) throw ConfigError("transfer: player paired with itself");
    if (i < 0 || j < 0 || i >= n_players || j >= n_players) {
      throw ConfigError("transfer: pair references unknown player");
    }
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw ConfigError("transfer: duplicate pair");
  }
}

double sw_loss(std::span<const double> history_i, std::span<const double> history_j, int horizon) {
  if (horizon < 1) throw ConfigError("sw_loss: horizon must be >= 1");
  if (history_i.empty() || history_j.empty()) throw ConfigError("sw_loss: empty action history");
  auto at = [](std::span<const double> h, int k) {
    // k steps back from the most recent entry; pad with the oldest entry.
    const int n = static_cast<int>(h.size());
    return k < n ? h[n - 1 - k] : h[0];
  };
  double sum = 0.0;
  for (int k = 0; k < horizon; ++k) {
    const double d = at(history_i, k) - at(history_j, k);
    sum += d * d;
  }
  return sum;
}

double MomState::update(double a_i, double a_j, double alpha_mom) {
  if (alpha_mom < 0.0 || alpha_mom > 1.0) throw ConfigError("mom_loss: alpha_mom must be in [0,1]");
  const double gap2 = (a_i - a_j) * (a_i - a_j);
  h_prev_ = started_ ? alpha_mom * h_prev_ + (1.0 - alpha_mom) * gap2 : gap2;
  started_ = true;
  return h_prev_;
}

VisitDistribution::VisitDistribution(int dims, int bins) : bins_(bins) {
  if (dims < 1) throw ConfigError("visit distribution: dims must be >= 1");
  if (bins < 2) throw ConfigError("visit distribution: bins must be >= 2");
  counts_.assign(static_cast<std::size_t>(dims), std::vector<std::uint64_t>(bins, 0));
}

void VisitDistribution::record(std::span<const int> index) {
  if (index.size() != counts_.size()) throw ConfigError("visit distribution: index dimension mismatch");
  for (std::size_t d = 0; d < counts_.size(); ++d) {
    if (index[d] < 0 || index[d] >= bins_) throw ConfigError("visit distribution: bin out of range");
    ++counts_[d][static_cast<std::size_t>(index[d])];
  }
  ++total_;
}

std::vector<double> VisitDistribution::distribution(int dim) const {
  const auto& c = counts_.at(static_cast<std::size_t>(dim));
  std::vector<double> p(c.size());
  const double denom = static_cast<double>(total_) + static_cast<double>(bins_);
  for (std::size_t b = 0; b < c.size(); ++b) {
    p[b] = (static_cast<double>(c[b]) + 1.0) / denom;
  }
  return p;
}

namespace {

void check_distribution(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v > 0.0)) throw InvalidDistribution("jsd: entries must be strictly positive");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidDistribution("jsd: vector does not sum to 1");
}

double kl2(std::span<const double> a, std::span<const double> m) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * std::log2(a[i] / m[i]);
  }
  return s;
}

}  // namespace

double jsd(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InvalidDistribution("jsd: length mismatch");
  if (p.empty()) throw InvalidDistribution("jsd: empty distribution");
  check_distribution(p);
  check_distribution(q);
  // Canonical ordering: evaluate with the lexicographically smaller vector
  // first so both argument orders run the identical expression.
  if (std::lexicographical_compare(q.begin(), q.end(), p.begin(), p.end())) {
    std::swap(p, q);
  }
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  return 0.5 * kl2(p, m) + 0.5 * kl2(q, m);
}

double jsd_sum(const VisitDistribution& a, const VisitDistribution& b) {
  if (a.dims() != b.dims() || a.bins() != b.bins()) {
    throw InvalidDistribution("jsd_sum: histogram shapes differ");
  }
  double d = 0.0;
  for (int m = 0; m < a.dims(); ++m) {
    d += jsd(a.distribution(m), b.distribution(m));
  }
  return d;
}

double alpha_tf_from_divergence(double epsilon, double beta_tf, double divergence_sum) {
  if (epsilon >= beta_tf || divergence_sum >= 1.0) return 0.0;
  return 1.0 - divergence_sum;
}

double alpha_tf(double epsilon, double beta_tf, const VisitDistribution& visit_i,
                const VisitDistribution& visit_j) {
  return alpha_tf_from_divergence(epsilon, beta_tf, jsd_sum(visit_i, visit_j));
}

double modified_utility(double u_base, double alpha, double h_loss) {
  return u_base - alpha * h_loss;
}

}  // namespace tlsbpg
