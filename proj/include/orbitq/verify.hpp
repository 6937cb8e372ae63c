#pragma once

#include "orbitq/orbits.hpp"
#include "orbitq/partition.hpp"
#include "orbitq/report.hpp"
#include "orbitq/root_system.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace orbitq {

struct VerifyOptions
{
	std::set<std::string> checks;
	bool with_oracle = false;
	int oracle_max_n = 10;
	int window = 0; // 0: 3q
	bool extended = false;
};

/// ekv, duality, paths, reduction, centralizer, table, stable, oracle, prop24
std::set<std::string> const &known_checks();
/// Everything except oracle (switched on by with_oracle) and prop24.
std::set<std::string> default_checks();
/// "default", "all" or a comma separated list of check names.
std::set<std::string> parse_checks(std::string_view text);

VerifyOptions default_verify_options();

/// Verification record for a simple type; classical types go through their
/// matrix family.
Record verify_type(CartanType ct, int q, VerifyOptions const &opts);
Record verify_classical(ClassicalFamily const &family, int q, VerifyOptions const &opts);

/// 1 .. max(h, r * dual Coxeter number of the dual) + 2
int default_q_max(CartanType ct);
/// "2..40", "5", "1,3,5", "1..4,9"
std::vector<int> parse_int_list(std::string_view text);

/// Both sides for q not coprime to the lacing number: dim N - |Delta(rho/q - rho)|
/// against dim N_q (parenthesized table entries, or the matrix oracle for B and C).
struct ExploreRecord
{
	std::string type;
	std::string family;
	int q = 0;
	std::string orbit;
	int dim_Nq = 0;
	int var_dim_joseph = 0;
	std::string source;

	bool equal() const { return dim_Nq == var_dim_joseph; }
};

ExploreRecord explore_noncoprime(CartanType ct, int q, int oracle_max_n = 12);
std::string emit(std::vector<ExploreRecord> const &records, Format f);

struct TableRow
{
	std::string q;
	std::string orbit;
	int dim = 0;
	int integral_count = 0;
	std::string oracle; // empty unless the oracle was asked for
};

/// Rows of the exceptional data tables, recomputed q by q and grouped by orbit.
std::vector<TableRow> exceptional_table_rows(CartanType ct, OrbitCase table);
/// One row per q, case chosen by gcd(q, lacing).
std::vector<TableRow> classical_table_rows(ClassicalFamily const &family, std::vector<int> const &qs,
                                           bool with_oracle, int oracle_max_n = 10);
std::string render_table(std::vector<TableRow> const &rows, Format f, std::string_view title);

/// "(3), 4, 5" style q column; runs of four or more consecutive plain values
/// become "a, ..., b" and the open tail is written ">=q".
std::string format_q_items(std::vector<QItem> const &items, std::optional<int> at_least);

} // namespace orbitq
