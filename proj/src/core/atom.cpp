#include "bpcg/core/atom.hpp"

#include "bpcg/core/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace bpcg {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

class Fnv1a {
 public:
  void mix(std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      state_ ^= (word >> (8 * byte)) & 0xffU;
      state_ *= kFnvPrime;
    }
  }
  void mix(double v) {
    // -0.0 == 0.0 under the equality contract, so hash them alike.
    mix(std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v));
  }
  void mix(const Eigen::VectorXd& v) {
    mix(static_cast<std::uint64_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) mix(v[i]);
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = kFnvOffset;
};

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) throw ContractViolation(std::string(what) + " payload has non-finite components");
}

void validate(const AtomPayload& payload) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BasisVertex>) {
          if (p.dimension < 1 || p.index < 0 || p.index >= p.dimension)
            throw ContractViolation("basis vertex index out of range");
        } else if constexpr (std::is_same_v<T, DenseVertex>) {
          if (p.values.size() == 0) throw ContractViolation("empty dense vertex");
          require_finite(p.values, "dense vertex");
        } else if constexpr (std::is_same_v<T, Permutation>) {
          const auto n = p.map.size();
          if (n == 0) throw ContractViolation("empty permutation");
          std::vector<bool> seen(n, false);
          for (int j : p.map) {
            if (j < 0 || static_cast<std::size_t>(j) >= n || seen[j])
              throw ContractViolation("permutation map is not a bijection");
            seen[j] = true;
          }
        } else if constexpr (std::is_same_v<T, Rank1Factor>) {
          if (p.u.size() == 0) throw ContractViolation("empty rank-one factor");
          require_finite(p.u, "rank-one factor");
          if (std::abs(p.u.norm() - 1.0) > 1e-12) throw ContractViolation("rank-one factor must have unit norm");
        } else {
          if (p.x.size() == 0) throw ContractViolation("empty domain point");
          require_finite(p.x, "domain point");
        }
      },
      payload);
}

std::uint64_t content_hash(const AtomPayload& payload) {
  Fnv1a h;
  h.mix(static_cast<std::uint64_t>(payload.index()));
  std::visit(
      [&h](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BasisVertex>) {
          h.mix(static_cast<std::uint64_t>(p.index));
          h.mix(static_cast<std::uint64_t>(p.dimension));
        } else if constexpr (std::is_same_v<T, DenseVertex>) {
          h.mix(p.values);
        } else if constexpr (std::is_same_v<T, Permutation>) {
          for (int j : p.map) h.mix(static_cast<std::uint64_t>(j));
        } else if constexpr (std::is_same_v<T, Rank1Factor>) {
          h.mix(p.u);
        } else {
          h.mix(p.x);
        }
      },
      payload);
  return h.value();
}

bool same_values(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

}  // namespace

Atom::Atom(AtomPayload payload) {
  validate(payload);
  id_ = content_hash(payload);
  payload_ = std::make_shared<const AtomPayload>(std::move(payload));
}

Eigen::Index Atom::ambient_dimension() const {
  return std::visit(
      [](const auto& p) -> Eigen::Index {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BasisVertex>) {
          return p.dimension;
        } else if constexpr (std::is_same_v<T, DenseVertex>) {
          return p.values.size();
        } else if constexpr (std::is_same_v<T, Permutation>) {
          const auto n = static_cast<Eigen::Index>(p.map.size());
          return n * n;
        } else if constexpr (std::is_same_v<T, Rank1Factor>) {
          return p.u.size() * p.u.size();
        } else {
          return 0;
        }
      },
      *payload_);
}

double Atom::dot(const Eigen::VectorXd& direction) const {
  if (direction.size() != ambient_dimension() || ambient_dimension() == 0)
    throw ContractViolation("atom/direction dimension mismatch");
  return std::visit(
      [&direction](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BasisVertex>) {
          return direction[p.index];
        } else if constexpr (std::is_same_v<T, DenseVertex>) {
          return direction.dot(p.values);
        } else if constexpr (std::is_same_v<T, Permutation>) {
          const auto n = static_cast<Eigen::Index>(p.map.size());
          double s = 0.0;
          for (Eigen::Index i = 0; i < n; ++i) s += direction[i + p.map[i] * n];
          return s;
        } else if constexpr (std::is_same_v<T, Rank1Factor>) {
          const auto n = p.u.size();
          Eigen::Map<const Eigen::MatrixXd> g(direction.data(), n, n);
          return p.u.dot(g * p.u);
        } else {
          return 0.0;
        }
      },
      *payload_);
}

void Atom::add_to(Eigen::VectorXd& x, double scale) const {
  if (x.size() != ambient_dimension() || ambient_dimension() == 0)
    throw ContractViolation("atom/iterate dimension mismatch");
  std::visit(
      [&x, scale](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BasisVertex>) {
          x[p.index] += scale;
        } else if constexpr (std::is_same_v<T, DenseVertex>) {
          x.noalias() += scale * p.values;
        } else if constexpr (std::is_same_v<T, Permutation>) {
          const auto n = static_cast<Eigen::Index>(p.map.size());
          for (Eigen::Index i = 0; i < n; ++i) x[i + p.map[i] * n] += scale;
        } else if constexpr (std::is_same_v<T, Rank1Factor>) {
          const auto n = p.u.size();
          Eigen::Map<Eigen::MatrixXd> m(x.data(), n, n);
          m.noalias() += scale * p.u * p.u.transpose();
        }
      },
      *payload_);
}

Eigen::VectorXd Atom::to_dense() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(ambient_dimension());
  add_to(v, 1.0);
  return v;
}

bool operator==(const Atom& a, const Atom& b) {
  if (a.payload_ == b.payload_) return true;
  if (a.id_ != b.id_ || a.payload_->index() != b.payload_->index()) return false;
  return std::visit(
      [&b](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        const auto& q = std::get<T>(*b.payload_);
        if constexpr (std::is_same_v<T, BasisVertex>) {
          return p.index == q.index && p.dimension == q.dimension;
        } else if constexpr (std::is_same_v<T, DenseVertex>) {
          return same_values(p.values, q.values);
        } else if constexpr (std::is_same_v<T, Permutation>) {
          return p.map == q.map;
        } else if constexpr (std::is_same_v<T, Rank1Factor>) {
          return same_values(p.u, q.u);
        } else {
          return same_values(p.x, q.x);
        }
      },
      *a.payload_);
}

Atom make_basis_vertex(Eigen::Index index, Eigen::Index dimension) { return Atom(BasisVertex{index, dimension}); }
Atom make_dense_vertex(Eigen::VectorXd values) { return Atom(DenseVertex{std::move(values)}); }
Atom make_permutation(std::vector<int> map) { return Atom(Permutation{std::move(map)}); }
Atom make_rank1(Eigen::VectorXd u) { return Atom(Rank1Factor{std::move(u)}); }
Atom make_domain_point(Eigen::VectorXd x) { return Atom(DomainPoint{std::move(x)}); }

const Eigen::VectorXd& domain_point(const Atom& atom) {
  const auto* p = std::get_if<DomainPoint>(&atom.payload());
  if (p == nullptr) throw ContractViolation("atom is not a domain point");
  return p->x;
}

}  // namespace bpcg
