#include "bpcg/herding/herding_model.hpp"

#include "bpcg/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace bpcg {

HerdingModel::HerdingModel(const EmbeddingCache& cache, const Eigen::VectorXd& x0, StepSizer sizer,
                           HerdingLmoOptions lmo_options)
    : cache_(cache), lmo_options_(lmo_options), active_(make_domain_point(x0)), sizer_(std::move(sizer)) {
  if (x0.size() != cache_.dimension() || x0.lpNorm<Eigen::Infinity>() > 1.0)
    throw ContractViolation("herding start point must lie in [-1, 1]^d");
  refresh();
  mmd_sq_ = mmd_squared_from_scratch();
}

const HerdingModel::NodeData& HerdingModel::node(const Atom& atom) {
  auto it = nodes_.find(atom.id());
  if (it != nodes_.end()) return it->second;
  NodeData data;
  if (last_lmo_ && last_lmo_->first == atom)
    data.z = last_lmo_->second;
  else
    data.z = cache_.z(domain_point(atom));
  data.column = cache_.pool_column(domain_point(atom));
  return nodes_.emplace(atom.id(), std::move(data)).first->second;
}

double HerdingModel::z_of(const ScoredAtom& w) {
  if (last_lmo_ && last_lmo_->first == w.atom) return last_lmo_->second;
  if (const auto i = active_.find(w.atom)) return node(active_.atom(*i)).z;
  return cache_.z(domain_point(w.atom));
}

void HerdingModel::refresh() {
  const std::size_t k = active_.size();
  std::unordered_set<std::uint64_t> live;
  for (std::size_t i = 0; i < k; ++i) {
    node(active_.atom(i));
    live.insert(active_.atom(i).id());
  }
  std::erase_if(nodes_, [&live](const auto& entry) { return !live.contains(entry.first); });

  g_.assign(k, 0.0);
  self_energy_ = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& xi = domain_point(active_.atom(i));
    double s = active_.weight(i);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) s += active_.weight(j) * cache_.kernel()(xi, domain_point(active_.atom(j)));
    const double z = nodes_.at(active_.atom(i).id()).z;
    g_[i] = s - z;
    self_energy_ += active_.weight(i) * s;
  }
  pool_g_ = -cache_.pool_z();
  for (std::size_t i = 0; i < k; ++i) pool_g_ += active_.weight(i) * nodes_.at(active_.atom(i).id()).column;
}

double HerdingModel::mmd_squared_from_scratch() const {
  double lin = 0.0;
  for (std::size_t i = 0; i < active_.size(); ++i) lin += active_.weight(i) * nodes_.at(active_.atom(i).id()).z;
  return self_energy_ - 2.0 * lin + cache_.c_mu();
}

std::vector<double> HerdingModel::active_scores() const {
  std::vector<double> s(g_.size());
  for (std::size_t i = 0; i < g_.size(); ++i) s[i] = 2.0 * g_[i];
  return s;
}

double HerdingModel::iterate_score() const {
  double s = 0.0;
  for (std::size_t i = 0; i < g_.size(); ++i) s += active_.weight(i) * g_[i];
  return 2.0 * s;
}

ScoredAtom HerdingModel::linear_minimizer() {
  const DiscreteMeasure xi = DiscreteMeasure::from_active_set(active_);
  const HerdingLmoResult r = herding_lmo(cache_, xi, pool_g_, g_, lmo_options_);
  ++lmo_calls_;
  Atom atom = r.node ? active_.atom(*r.node) : make_domain_point(r.point);
  last_lmo_ = std::make_pair(atom, r.z);
  return {std::move(atom), 2.0 * r.g};
}

LineStep HerdingModel::search(double slope, double energy, double lambda_max) {
  LineProblem line;
  line.value0 = mmd_sq_;
  line.slope = slope;
  line.norm_sq = energy;
  line.curvature = 2.0 * energy;
  const double f0 = mmd_sq_;
  line.value_at = [f0, slope, energy](double l) { return f0 - l * slope + l * l * energy; };
  line.slope_at = [slope, energy](double l) { return slope - 2.0 * l * energy; };
  pending_.slope = slope;
  pending_.norm_sq = energy;
  pending_.lambda = sizer_(line, lambda_max);
  return pending_;
}

LineStep HerdingModel::line_pairwise(std::size_t away, std::size_t local, double lambda_max) {
  const double k_as = cache_.kernel()(domain_point(active_.atom(away)), domain_point(active_.atom(local)));
  return search(2.0 * (g_[away] - g_[local]), std::max(0.0, 2.0 - 2.0 * k_as), lambda_max);
}

LineStep HerdingModel::line_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda_max) {
  const double k_aw = cache_.kernel()(domain_point(active_.atom(away)), domain_point(toward.atom));
  return search(2.0 * g_[away] - toward.score, std::max(0.0, 2.0 - 2.0 * k_aw), lambda_max);
}

LineStep HerdingModel::line_fw(const ScoredAtom& w) {
  const double cross = g_of(w) + z_of(w);  // sum_i w_i K(x_i, w)
  return search(iterate_score() - w.score, std::max(0.0, self_energy_ - 2.0 * cross + 1.0), 1.0);
}

LineStep HerdingModel::line_away(std::size_t away, double lambda_max) {
  const double cross = g_[away] + nodes_.at(active_.atom(away).id()).z;
  return search(2.0 * g_[away] - iterate_score(), std::max(0.0, 1.0 - 2.0 * cross + self_energy_), lambda_max);
}

void HerdingModel::after_step(double lambda_applied) {
  mmd_sq_ = mmd_sq_ - lambda_applied * pending_.slope + lambda_applied * lambda_applied * pending_.norm_sq;
  refresh();
  if (++steps_since_check_ >= kDriftCheckInterval) {
    const double exact = mmd_squared_from_scratch();
    max_drift_ = std::max(max_drift_, std::abs(exact - mmd_sq_));
    ++drift_checks_;
    mmd_sq_ = exact;
    steps_since_check_ = 0;
  }
}

StepKind HerdingModel::apply_pairwise(std::size_t away, std::size_t local, double lambda) {
  const double lambda_max = active_.weight(away);
  const StepKind kind = active_.apply_pairwise(away, local, lambda);
  after_step(kind == StepKind::DropStep ? lambda_max : lambda);
  return kind;
}

StepKind HerdingModel::apply_pairwise_toward(std::size_t away, const ScoredAtom& toward, double lambda) {
  const double lambda_max = active_.weight(away);
  const StepKind kind = active_.apply_pairwise_toward(away, toward.atom, lambda);
  after_step(kind == StepKind::DropStep ? lambda_max : lambda);
  return kind;
}

void HerdingModel::apply_fw(const ScoredAtom& w, double lambda) {
  active_.apply_fw(w.atom, lambda);
  after_step(lambda);
}

StepKind HerdingModel::apply_away(std::size_t away, double lambda) {
  const double lambda_max = active_.max_away_step(away);
  const StepKind kind = active_.apply_away(away, lambda);
  after_step(kind == StepKind::DropStep ? lambda_max : lambda);
  return kind;
}

}  // namespace bpcg
