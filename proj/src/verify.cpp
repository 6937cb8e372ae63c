#include "orbitq/verify.hpp"

#include "orbitq/affine.hpp"
#include "orbitq/ekv.hpp"
#include "orbitq/errors.hpp"
#include "orbitq/integral_roots.hpp"
#include "orbitq/oracle.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <functional>
#include <numeric>

namespace orbitq {

std::set<std::string> const &known_checks()
{
	static std::set<std::string> const names{"ekv",   "duality", "paths",  "reduction", "centralizer",
	                                          "table", "stable",  "oracle", "prop24"};
	return names;
}

std::set<std::string> default_checks()
{
	auto s = known_checks();
	s.erase("oracle");
	s.erase("prop24");
	return s;
}

std::set<std::string> parse_checks(std::string_view text)
{
	if (text == "default")
		return default_checks();
	if (text == "all")
		return known_checks();
	std::set<std::string> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		auto end = std::min(text.find(',', start), text.size());
		std::string name(text.substr(start, end - start));
		if (!name.empty()) {
			if (!known_checks().contains(name))
				throw InvalidInput(fmt::format("unknown check '{}'", name));
			out.insert(name);
		}
		start = end + 1;
	}
	return out;
}

VerifyOptions default_verify_options() { return VerifyOptions{default_checks(), false, 10, 0, false}; }

int default_q_max(CartanType ct)
{
	int top = stable_q(ct, OrbitCase::Principal);
	if (root_system(ct).lacing() > 1)
		top = std::max(top, stable_q(ct, OrbitCase::Coprincipal));
	return top + 2;
}

std::vector<int> parse_int_list(std::string_view text)
{
	auto num = [&](std::string_view s) {
		int v = 0;
		auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
		if (ec != std::errc() || p != s.data() + s.size())
			throw InvalidInput(fmt::format("bad number '{}' in '{}'", s, text));
		return v;
	};
	std::vector<int> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		auto end = std::min(text.find(',', start), text.size());
		auto item = text.substr(start, end - start);
		if (item.empty())
			throw InvalidInput(fmt::format("empty item in '{}'", text));
		if (auto dots = item.find(".."); dots != std::string_view::npos) {
			int lo = num(item.substr(0, dots)), hi = num(item.substr(dots + 2));
			if (lo > hi)
				throw InvalidInput(fmt::format("empty range '{}'", item));
			for (int v = lo; v <= hi; ++v)
				out.push_back(v);
		} else {
			out.push_back(num(item));
		}
		start = end + 1;
	}
	return out;
}

namespace {

bool guarded(std::function<bool()> const &f)
{
	try {
		return f();
	} catch (ConsistencyError const &) {
		return false;
	}
}

void common_checks(Record &rec, CartanType ct, LambdaQ const &lq, OrbitQResult const &o,
                   VerifyOptions const &opts)
{
	auto const &rs = root_system(ct);
	auto dual = langlands_dual(ct);
	auto want = [&](char const *name) { return opts.checks.contains(name); };
	int q = lq.q;

	IntegralCounts counts{-1, -1};
	try {
		counts = integral_counts(lq);
	} catch (ConsistencyError const &) {
	}
	rec.integral_count = counts.by_pairing;
	rec.var_dim_joseph = rs.nilcone_dim() - counts.by_pairing;

	if (want("paths"))
		rec.checks["paths"] = counts.by_heights >= 0 && counts.by_pairing == counts.by_heights;
	if (want("reduction") && lq.case_tag != OrbitCase::Coprincipal)
		rec.checks["reduction"] = guarded(
		    [&] { return counts.by_heights == d_via_heights(root_system(dual), q) - rs.rank(); });
	if (want("duality"))
		rec.checks["duality"] =
		    guarded([&] { return d_via_heights(rs, q) == d_via_heights(root_system(dual), q); });
	if (want("table") && o.tabulated_count)
		rec.checks["table"] = *o.tabulated_count == counts.by_pairing;
	if (want("stable")) {
		auto c = lq.case_tag == OrbitCase::Coprincipal ? OrbitCase::Coprincipal : OrbitCase::Principal;
		if (q >= stable_q(ct, c))
			rec.checks["stable"] = o.dim == rs.nilcone_dim();
	}
	if (want("prop24") && lq.case_tag != OrbitCase::Extended)
		rec.checks["prop24"] = guarded(
		    [&] { return verify_prop_2_4(ct, minimal_admissible_p(ct, q), q, opts.window).passed(); });
}

} // namespace

Record verify_classical(ClassicalFamily const &family, int q, VerifyOptions const &opts)
{
	auto ct_opt = family.cartan_type();
	if (!ct_opt)
		throw InvalidInput(family.str() + " has no simple Cartan type within the rank bounds");
	CartanType ct = *ct_opt;
	auto c = natural_case(family.lacing(), q);
	if (c == OrbitCase::Coprincipal && opts.extended)
		throw InvalidInput(fmt::format("{} q={}: the non-coprime classical case is handled by "
		                               "explore-noncoprime",
		                               family.str(), q));
	auto lq = lambda_q(ct, q);

	Record rec;
	rec.type = ct.str();
	rec.family = family.str();
	rec.q = q;
	rec.case_tag = std::string(to_string(c));
	std::optional<OrbitQResult> found;
	try {
		found = orbit_q_classical(family, q, c);
	} catch (ConsistencyError const &) {
		rec.orbit = "?";
		rec.dim_orbit = -1;
		rec.checks["orbit"] = false;
		return rec;
	}
	auto const &o = *found;
	rec.orbit = o.label();
	rec.dim_orbit = o.dim;
	common_checks(rec, ct, lq, o, opts);

	auto want = [&](char const *name) { return opts.checks.contains(name); };
	auto const &orbit = *o.classical();
	if (want("ekv"))
		rec.checks["ekv"] = guarded([&] { return d_via_heights(root_system(ct), q) == d_classical(family, q); });
	if (want("centralizer"))
		rec.checks["centralizer"] = guarded([&] {
			int expect = c == OrbitCase::Principal ? d_classical(family, q)
			                                       : coprincipal_centralizer_prediction(family, q);
			return centralizer_dim(orbit) == expect;
		});
	if ((opts.with_oracle || want("oracle")) && family.n() <= opts.oracle_max_n)
		rec.checks["oracle"] = guarded([&] {
			auto m = max_orbit_in_Nq(family, q, c, opts.oracle_max_n);
			auto rep = nilpotent_from_partition(family, orbit.partition());
			return m.unique && m.partition == orbit.partition() &&
			       centralizer_nullity(rep) == centralizer_dim(orbit);
		});
	return rec;
}

Record verify_type(CartanType ct, int q, VerifyOptions const &opts)
{
	if (ct.is_classical())
		return verify_classical(ClassicalFamily::from_cartan_type(ct), q, opts);
	auto lq = lambda_q(ct, q, opts.extended);
	Record rec;
	rec.type = ct.str();
	rec.q = q;
	rec.case_tag = std::string(to_string(lq.case_tag));
	auto o = orbit_q_exceptional(ct, q, opts.extended);
	rec.orbit = o.label();
	rec.dim_orbit = o.dim;
	common_checks(rec, ct, lq, o, opts);
	return rec;
}

ExploreRecord explore_noncoprime(CartanType ct, int q, int oracle_max_n)
{
	auto const &rs = root_system(ct);
	if (rs.lacing() == 1 || q % rs.lacing() != 0)
		throw InvalidInput(fmt::format("{}: q = {} is coprime to the lacing number", ct.str(), q));
	ExploreRecord r;
	r.type = ct.str();
	r.q = q;
	r.var_dim_joseph = var_dim_joseph(ct, q, true);
	if (ct.is_exceptional()) {
		auto o = orbit_q_exceptional(ct, q, true);
		r.orbit = o.label();
		r.dim_Nq = o.dim;
		r.source = "table";
	} else {
		auto family = ClassicalFamily::from_cartan_type(ct);
		r.family = family.str();
		auto m = max_orbit_in_Nq(family, q, OrbitCase::Extended, oracle_max_n);
		if (!m.unique)
			throw ConsistencyError(fmt::format("{} q={}: N_q has no unique maximal orbit", family.str(), q));
		r.orbit = m.partition.str();
		r.dim_Nq = m.dim;
		r.source = "matrix oracle";
	}
	return r;
}

std::string emit(std::vector<ExploreRecord> const &records, Format f)
{
	std::string out;
	switch (f) {
	case Format::Json: {
		nlohmann::json arr = nlohmann::json::array();
		for (auto const &r : records)
			arr.push_back({{"type", r.type},
			               {"family", r.family.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.family)},
			               {"q", r.q},
			               {"orbit", r.orbit},
			               {"dim_Nq", r.dim_Nq},
			               {"var_dim_joseph", r.var_dim_joseph},
			               {"source", r.source},
			               {"equal", r.equal()},
			               {"status", "CONJECTURAL"}});
		return nlohmann::json{{"records", arr}}.dump(2) + "\n";
	}
	case Format::Csv:
		out = "type,family,q,orbit,dim_Nq,var_dim_joseph,source,equal,status\r\n";
		for (auto const &r : records)
			out += fmt::format("{},{},{},{},{},{},{},{},CONJECTURAL\r\n", r.type, csv_field(r.family), r.q,
			                   csv_field(r.orbit), r.dim_Nq, r.var_dim_joseph, csv_field(r.source),
			                   r.equal() ? "yes" : "no");
		return out;
	case Format::Markdown:
		out = "| type | q | orbit | dim N_q | dim N - #Delta(rho/q - rho) | source | equal | status |\n"
		      "|---|---|---|---|---|---|---|---|\n";
		for (auto const &r : records)
			out += fmt::format("| {} | {} | {} | {} | {} | {} | {} | CONJECTURAL |\n",
			                   r.family.empty() ? r.type : r.type + " " + r.family, r.q, r.orbit, r.dim_Nq,
			                   r.var_dim_joseph, r.source, r.equal() ? "yes" : "no");
		return out;
	}
	return out;
}

std::string format_q_items(std::vector<QItem> const &items, std::optional<int> at_least)
{
	std::vector<std::string> parts;
	for (std::size_t i = 0; i < items.size();) {
		std::size_t j = i;
		while (!items[i].not_coprime && j + 1 < items.size() && !items[j + 1].not_coprime &&
		       items[j + 1].q == items[j].q + 1)
			++j;
		if (j - i + 1 >= 4) {
			parts.push_back(std::to_string(items[i].q));
			parts.push_back("...");
			parts.push_back(std::to_string(items[j].q));
			i = j + 1;
			continue;
		}
		parts.push_back(items[i].not_coprime ? fmt::format("({})", items[i].q) : std::to_string(items[i].q));
		++i;
	}
	if (at_least)
		parts.push_back(fmt::format(">={}", *at_least));
	return fmt::format("{}", fmt::join(parts, ", "));
}

std::vector<TableRow> exceptional_table_rows(CartanType ct, OrbitCase table)
{
	if (!ct.is_exceptional())
		throw InvalidInput(ct.str() + " is not exceptional");
	auto const &rs = root_system(ct);
	int const r = rs.lacing();
	if (table == OrbitCase::Coprincipal && r == 1)
		throw InvalidInput(ct.str() + " has no coprincipal table");
	if (table == OrbitCase::Extended)
		throw InvalidInput("tables are either principal or coprincipal");
	int const stable = stable_q(ct, table);
	int const step = table == OrbitCase::Coprincipal ? r : 1;
	int const first = table == OrbitCase::Coprincipal ? r : 2;

	struct Cell
	{
		QItem item;
		std::string label;
		int dim;
		int count;
	};
	auto compute = [&](int q) {
		bool paren = table == OrbitCase::Principal && std::gcd(q, r) != 1;
		auto o = orbit_q_exceptional(ct, q, paren);
		int count = integral_count(lambda_q(ct, q, paren));
		return Cell{{q, paren}, o.label(), o.dim, count};
	};

	std::vector<Cell> cells;
	int tail = -1;
	for (int q = first;; q += step) {
		auto cell = compute(q);
		cells.push_back(cell);
		if (q >= stable && !cell.item.not_coprime) {
			tail = q;
			break;
		}
	}
	// the open row must really be constant
	for (int q = tail + step; q <= tail + 4 * r * step; q += step) {
		auto cell = compute(q);
		if (cell.label != cells.back().label || cell.count != cells.back().count)
			throw ConsistencyError(fmt::format("{}: q = {} differs from the stable row", ct.str(), q));
	}

	std::vector<TableRow> rows;
	std::size_t i = 0;
	while (i < cells.size()) {
		std::size_t j = i;
		while (j + 1 < cells.size() && cells[j + 1].label == cells[i].label &&
		       cells[j + 1].dim == cells[i].dim && cells[j + 1].count == cells[i].count)
			++j;
		std::vector<QItem> items;
		std::optional<int> open;
		for (std::size_t k = i; k <= j; ++k) {
			if (cells[k].item.q == tail)
				open = tail;
			else
				items.push_back(cells[k].item);
		}
		rows.push_back({format_q_items(items, open), cells[i].label, cells[i].dim, cells[i].count, {}});
		i = j + 1;
	}
	return rows;
}

std::vector<TableRow> classical_table_rows(ClassicalFamily const &family, std::vector<int> const &qs,
                                           bool with_oracle, int oracle_max_n)
{
	auto ct = family.cartan_type();
	std::vector<TableRow> rows;
	for (int q : qs) {
		auto c = natural_case(family.lacing(), q);
		auto o = orbit_q_classical(family, q, c);
		TableRow row{std::to_string(q), o.classical()->partition().str(true), o.dim, 0, {}};
		if (ct)
			row.integral_count = integral_count(lambda_q(*ct, q));
		else
			row.integral_count = family.dim() - family.rank() - o.dim;
		if (with_oracle) {
			if (family.n() > oracle_max_n) {
				row.oracle = "skipped";
			} else {
				auto m = max_orbit_in_Nq(family, q, c, oracle_max_n);
				row.oracle = (m.unique && m.partition == o.classical()->partition()) ? "agrees" : "DIFFERS";
			}
		}
		rows.push_back(std::move(row));
	}
	return rows;
}

std::string render_table(std::vector<TableRow> const &rows, Format f, std::string_view title)
{
	bool oracle = std::any_of(rows.begin(), rows.end(), [](TableRow const &r) { return !r.oracle.empty(); });
	std::string out;
	switch (f) {
	case Format::Markdown:
		out = oracle ? "| q | O_q | dim O_q | #Delta(lambda_q) | oracle |\n|---|---|---|---|---|\n"
		             : "| q | O_q | dim O_q | #Delta(lambda_q) |\n|---|---|---|---|\n";
		for (auto const &r : rows) {
			out += fmt::format("| {} | {} | {} | {} |", r.q, r.orbit, r.dim, r.integral_count);
			out += oracle ? fmt::format(" {} |\n", r.oracle) : "\n";
		}
		return out;
	case Format::Csv:
		out = oracle ? "q,orbit,dim,integral_count,oracle\r\n" : "q,orbit,dim,integral_count\r\n";
		for (auto const &r : rows) {
			out += fmt::format("{},{},{},{}", csv_field(r.q), csv_field(r.orbit), r.dim, r.integral_count);
			out += oracle ? "," + csv_field(r.oracle) + "\r\n" : "\r\n";
		}
		return out;
	case Format::Json: {
		nlohmann::json arr = nlohmann::json::array();
		for (auto const &r : rows) {
			nlohmann::json j = {{"q", r.q}, {"orbit", r.orbit}, {"dim", r.dim}, {"integral_count", r.integral_count}};
			if (oracle)
				j["oracle"] = r.oracle;
			arr.push_back(j);
		}
		return nlohmann::json{{"table", title}, {"rows", arr}}.dump(2) + "\n";
	}
	}
	return out;
}

} // namespace orbitq
