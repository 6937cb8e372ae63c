#pragma once

#include "orbitq/partition.hpp"
#include "orbitq/root_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orbitq {

/// Which branch of lambda_q / O_q applies to a denominator q.
enum class OrbitCase {
	Principal,   // (q, r) = 1
	Coprincipal, // (q, r) = r
	Extended,    // (q, r) != 1 but principal formulas used anyway (exploratory)
};

std::string_view to_string(OrbitCase c);
OrbitCase parse_orbit_case(std::string_view text);

/// Principal when gcd(q, lacing) = 1, coprincipal otherwise.
OrbitCase natural_case(int lacing, int q);

/// First q from which O_q is the regular orbit: h for the principal case and
/// lacing * dual Coxeter number of the Langlands dual for the coprincipal one.
int stable_q(CartanType ct, OrbitCase c);
int stable_q(ClassicalFamily const &family, OrbitCase c);

struct OrbitQResult
{
	std::variant<ClassicalOrbit, std::string> orbit;
	int dim = 0;
	OrbitCase case_tag = OrbitCase::Principal;
	/// names of the case-list entries that produced the orbit (classical only)
	std::vector<std::string> subcases;
	/// |Delta(lambda_q)| as tabulated (exceptional only)
	std::optional<int> tabulated_count;

	std::string label() const;
	ClassicalOrbit const *classical() const { return std::get_if<ClassicalOrbit>(&orbit); }
};

/// O_q for sl_n, so_n, sp_n from the closed-form case lists. Throws
/// ConsistencyError if the lists select no partition or more than one.
OrbitQResult orbit_q_classical(ClassicalFamily const &family, int q, OrbitCase c);

/// One parsed item of an exceptional table q column.
struct QItem
{
	int q;
	bool not_coprime; // printed in parentheses
};

struct QRange
{
	std::vector<QItem> items;
	std::optional<int> at_least;
	std::string text; // as written in the data file

	static QRange parse(std::string_view text);
	/// Plain items (and the open tail) when extended is false; parenthesized
	/// items (and the open tail) when extended is true.
	bool contains(int q, bool extended) const;
};

struct ExceptionalRow
{
	CartanType type;
	OrbitCase table; // Principal or Coprincipal
	QRange q;
	std::string label;
	int dim;
	int integral_roots;
};

/// Every row of the exceptional tables, in file order.
std::vector<ExceptionalRow> const &exceptional_rows();
std::vector<ExceptionalRow> exceptional_table(CartanType ct, OrbitCase table);
/// The raw table text compiled into the library.
std::string_view exceptional_table_source();

/// Lookup for G2, F4, E6, E7, E8. With extended set and (q, r) != 1 the
/// parenthesized principal rows are used.
OrbitQResult orbit_q_exceptional(CartanType ct, int q, bool extended = false);

/// O_q for any supported type, dispatching on the family.
OrbitQResult orbit_q(CartanType ct, int q, bool extended = false);

/// dim of N_q or of ^L N_{q/r}, whichever closure equals O_q.
int dim_Nq(CartanType ct, int q, bool extended = false);

} // namespace orbitq
