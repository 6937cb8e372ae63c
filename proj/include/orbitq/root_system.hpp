#pragma once

#include "orbitq/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitq {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// A simple Lie algebra type X_rank. Construction validates the rank bounds
/// A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2.
class CartanType
{
  public:
	CartanType(Family family, int rank);

	/// Parses "E8", "B3", "a2" and so on.
	static CartanType parse(std::string_view text);
	static bool valid(Family family, int rank);

	Family family() const { return family_; }
	int rank() const { return rank_; }
	bool is_classical() const;
	bool is_exceptional() const { return !is_classical(); }
	std::string str() const;

	friend auto operator<=>(CartanType const &, CartanType const &) = default;

  private:
	Family family_;
	int rank_;
};

/// B and C are exchanged; every other type is self-dual.
CartanType langlands_dual(CartanType ct);

/// Coefficients of a root over the simple roots (Bourbaki numbering).
struct Root
{
	std::vector<int> coords;

	friend auto operator<=>(Root const &, Root const &) = default;
	Root operator-() const;
	std::string str() const;
};

/// Element of the rational span of the simple roots, in simple-root coordinates.
struct Weight
{
	std::vector<Rational> coords;

	static Weight zero(int rank) { return Weight{std::vector<Rational>(rank)}; }

	friend bool operator==(Weight const &, Weight const &) = default;
	friend Weight operator+(Weight a, Weight const &b);
	friend Weight operator-(Weight a, Weight const &b);
	friend Weight operator*(Rational const &c, Weight w);
	friend Weight operator/(Weight w, Rational const &c);
	std::string str() const;
};

/// Finite root system with the invariant form normalized so that (theta|theta) = 2.
/// Immutable after construction.
class RootSystem
{
  public:
	explicit RootSystem(CartanType ct);

	CartanType type() const { return type_; }
	int rank() const { return type_.rank(); }

	/// a[i][j] = <alpha_j, alpha_i^vee>
	std::vector<std::vector<int>> const &cartan_matrix() const { return cartan_; }
	/// d_i = (alpha_i|alpha_i)/2
	std::vector<Rational> const &symmetrizers() const { return symmetrizers_; }

	/// Positive roots sorted by height, followed by their negatives in the same order.
	std::span<Root const> roots() const { return roots_; }
	std::span<Root const> positive_roots() const
	{
		return std::span<Root const>(roots_).first(roots_.size() / 2);
	}

	Weight const &rho() const { return rho_; }
	Weight const &rho_check() const { return rho_check_; }
	Root const &theta() const { return roots_[theta_]; }
	Root const &theta_short() const { return roots_[theta_short_]; }

	int lacing() const { return lacing_; }
	int coxeter_number() const { return coxeter_; }
	int dual_coxeter_number() const { return dual_coxeter_; }
	std::vector<int> const &exponents() const { return exponents_; }
	/// p_i = number of positive roots of height i, for i = 1 .. h-1.
	std::vector<int> const &height_multiplicities() const { return height_mult_; }

	int dim() const { return static_cast<int>(roots_.size()) + rank(); }
	/// dim of the nilpotent cone, i.e. the number of roots.
	int nilcone_dim() const { return static_cast<int>(roots_.size()); }

	std::optional<std::size_t> index_of(Root const &r) const;
	bool contains(Root const &r) const { return index_of(r).has_value(); }

	/// Throws InvalidInput if r is not a root.
	int height(Root const &r) const;
	Rational norm2(Root const &r) const;
	bool is_long(Root const &r) const;

	Weight as_weight(Root const &r) const;
	Rational form(Weight const &a, Weight const &b) const;
	/// <w, alpha^vee> = 2 (w|alpha)/(alpha|alpha)
	Rational pairing(Weight const &w, Root const &alpha) const;
	/// Coefficients of alpha^vee over the simple coroots (always integers).
	std::vector<int> coroot_coords(Root const &alpha) const;

  private:
	std::size_t require(Root const &r) const;

	CartanType type_;
	std::vector<std::vector<int>> cartan_;
	std::vector<Rational> symmetrizers_;
	std::vector<std::vector<Rational>> gram_;
	std::vector<Root> roots_;
	std::map<std::vector<int>, std::size_t> index_;
	// per root: norm and the integers <alpha_i, alpha^vee>
	std::vector<Rational> norms_;
	std::vector<std::vector<int>> coroot_pairings_;
	Weight rho_;
	Weight rho_check_;
	std::size_t theta_ = 0;
	std::size_t theta_short_ = 0;
	int lacing_ = 1;
	int coxeter_ = 0;
	int dual_coxeter_ = 0;
	std::vector<int> height_mult_;
	std::vector<int> exponents_;
};

/// Shared, lazily built instance per type. Thread-safe.
RootSystem const &root_system(CartanType ct);

/// All supported types up to the given classical rank, plus the exceptional ones.
std::vector<CartanType> supported_types(int max_classical_rank);

} // namespace orbitq
