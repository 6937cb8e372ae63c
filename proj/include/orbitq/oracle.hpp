#pragma once

#include "orbitq/exact_matrix.hpp"
#include "orbitq/orbits.hpp"
#include "orbitq/partition.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace orbitq {

/// sl_n, so_n or sp_n inside the n x n matrices. so and sp preserve the
/// anti-diagonal form J (J[i][n-1-i] = 1, and -1 for i >= n/2 in the
/// symplectic case).
class MatrixRealization
{
  public:
	explicit MatrixRealization(ClassicalFamily family);

	ClassicalFamily const &family() const { return family_; }
	int n() const { return family_.n(); }
	int dim() const { return static_cast<int>(basis_.size()); }
	/// Identity for sl_n.
	IntMatrix const &form() const { return form_; }
	std::vector<IntMatrix> const &basis() const { return basis_; }

	/// trace zero for sl, x^T J + J x = 0 otherwise
	bool contains(IntMatrix const &x) const;
	/// Coordinates over the basis; throws if x is not in the span.
	std::vector<std::int64_t> coords(IntMatrix const &x) const;

  private:
	ClassicalFamily family_;
	IntMatrix form_;
	std::vector<IntMatrix> basis_;
	// an entry that is nonzero in basis_[k] and zero in every other basis element
	std::vector<std::pair<int, int>> pivots_;
};

/// Built once per family, with dimension and bracket closure verified.
MatrixRealization const &realization(ClassicalFamily const &family);

struct NilpotentRep
{
	ClassicalFamily family;
	Partition partition;
	IntMatrix matrix;
};

/// rank(x^k) = sum_i max(lambda_i - k, 0) for every k >= 0.
bool satisfies_rank_identity(IntMatrix const &x, Partition const &p);

/// A representative of the orbit with Jordan type p. Different variants give
/// different matrices of the same orbit. Very even partitions are accepted.
NilpotentRep nilpotent_from_partition(ClassicalFamily const &family, Partition const &p,
                                      int variant = 0);

/// Smallest N with (ad x)^N = 0; the zero matrix has order 1.
int ad_nilpotency_order(NilpotentRep const &rep);
/// Order on the vector representation (so odd) or on Lambda^2 (sp).
int little_adjoint_order(NilpotentRep const &rep);
/// dim of the kernel of ad x on the Lie algebra.
int centralizer_nullity(NilpotentRep const &rep);

/// Measured data for the orbit with Jordan type p, computed once and cached.
struct OrbitMeasure
{
	int ad_order;
	int little_order; // 0 when the family has lacing number 1
	int centralizer;
};
OrbitMeasure measure_orbit(ClassicalFamily const &family, Partition const &p);

struct OracleMax
{
	Partition partition;
	int dim = 0;
	bool unique = true;
	std::vector<Partition> tied;
	int candidates = 0; // partitions inside the variety
};

/// The orbit of largest dimension inside N_q = {(ad x)^{2q} = 0} for the principal
/// and extended cases, or inside ^L N_{q/2} = {pi(x)^q = 0} for the coprincipal case.
OracleMax max_orbit_in_Nq(ClassicalFamily const &family, int q, OrbitCase c, int max_n = 10);

} // namespace orbitq
