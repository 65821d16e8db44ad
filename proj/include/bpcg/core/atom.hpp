#ifndef BPCG_CORE_ATOM_HPP
#define BPCG_CORE_ATOM_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace bpcg {

/// Standard basis vector e_index of R^dimension (simplex vertex).
struct BasisVertex {
  Eigen::Index index = 0;
  Eigen::Index dimension = 0;
};

/// Arbitrary dense extreme point (l_p-ball boundary point).
struct DenseVertex {
  Eigen::VectorXd values;
};

/// Permutation matrix P with P(i, map[i]) = 1. The ambient representation is
/// the column-major flattening of the n x n matrix.
struct Permutation {
  std::vector<int> map;
};

/// Rank-one spectrahedron vertex u u^T with |u|_2 = 1, flattened column-major.
struct Rank1Factor {
  Eigen::VectorXd u;
};

/// Point x of the herding domain, standing for the Dirac measure delta_x.
/// Has no finite ambient representation.
struct DomainPoint {
  Eigen::VectorXd x;
};

using AtomPayload = std::variant<BasisVertex, DenseVertex, Permutation, Rank1Factor, DomainPoint>;

/// One extreme point of a feasible region.
///
/// Atoms are immutable and cheap to copy (the payload is shared). Equality is
/// exact element-wise payload equality; the id is a content hash, so equal
/// atoms always carry equal ids.
class Atom {
 public:
  explicit Atom(AtomPayload payload);

  const AtomPayload& payload() const { return *payload_; }
  std::uint64_t id() const { return id_; }

  /// Length of the flattened ambient vector, or 0 for domain points.
  Eigen::Index ambient_dimension() const;
  bool has_ambient_representation() const { return ambient_dimension() > 0; }

  /// <direction, v> for the flattened ambient representation v of this atom.
  double dot(const Eigen::VectorXd& direction) const;

  /// x += scale * v.
  void add_to(Eigen::VectorXd& x, double scale) const;

  Eigen::VectorXd to_dense() const;

  friend bool operator==(const Atom& a, const Atom& b);

 private:
  std::shared_ptr<const AtomPayload> payload_;
  std::uint64_t id_ = 0;
};

inline bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }

Atom make_basis_vertex(Eigen::Index index, Eigen::Index dimension);
Atom make_dense_vertex(Eigen::VectorXd values);
Atom make_permutation(std::vector<int> map);
Atom make_rank1(Eigen::VectorXd u);
Atom make_domain_point(Eigen::VectorXd x);

/// Returns the point of a DomainPoint atom; throws ContractViolation otherwise.
const Eigen::VectorXd& domain_point(const Atom& atom);

}  // namespace bpcg

#endif
