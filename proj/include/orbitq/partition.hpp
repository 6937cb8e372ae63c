#pragma once

#include "orbitq/root_system.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbitq {

/// Weakly decreasing sequence of positive integers. No zero parts are stored.
class Partition
{
  public:
	Partition() = default;
	/// Parts must already be weakly decreasing and positive.
	explicit Partition(std::vector<int> parts);
	/// Drops zeros and sorts, for partitions assembled from case formulas.
	static Partition normalized(std::vector<int> parts);

	std::span<int const> parts() const { return parts_; }
	int size() const { return sum_; }
	int length() const { return static_cast<int>(parts_.size()); }
	int largest() const { return parts_.empty() ? 0 : parts_.front(); }
	int multiplicity(int part) const;
	int count_odd_parts() const;
	bool very_even() const;

	/// "(3,3,1)", with exponents folded as "(3^2,1)" when asked.
	std::string str(bool compact = false) const;

	friend auto operator<=>(Partition const &, Partition const &) = default;

  private:
	std::vector<int> parts_;
	int sum_ = 0;
};

Partition dual_partition(Partition const &p);

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

enum class MatrixFamily { SL, SO, SP };

/// sl_n, so_n or sp_n. SL needs n >= 2, SO n >= 5, SP n even.
class ClassicalFamily
{
  public:
	ClassicalFamily(MatrixFamily kind, int n);

	MatrixFamily kind() const { return kind_; }
	int n() const { return n_; }
	std::string str() const;

	int dim() const;
	int rank() const;
	/// lacing number: 2 for so_odd and sp, 1 otherwise
	int lacing() const;
	/// The family of type A/B/C/D when it lies within the root-system rank bounds.
	std::optional<CartanType> cartan_type() const;
	static ClassicalFamily from_cartan_type(CartanType ct);

	friend auto operator<=>(ClassicalFamily const &, ClassicalFamily const &) = default;

  private:
	MatrixFamily kind_;
	int n_;
};

/// Membership in P(n), P_1(n) or P_{-1}(n). Very even partitions are members of P_1(n).
bool is_member(ClassicalFamily const &family, Partition const &p);

/// The partition of the regular nilpotent orbit.
Partition regular_partition(ClassicalFamily const &family);

/// Valid (family, partition) pair; throws on invalid or very even input.
class ClassicalOrbit
{
  public:
	ClassicalOrbit(ClassicalFamily family, Partition partition);

	ClassicalFamily const &family() const { return family_; }
	Partition const &partition() const { return partition_; }

	friend bool operator==(ClassicalOrbit const &, ClassicalOrbit const &) = default;

  private:
	ClassicalFamily family_;
	Partition partition_;
};

int centralizer_dim(ClassicalOrbit const &orbit);
int orbit_dim(ClassicalOrbit const &orbit);

} // namespace orbitq
