// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero if any hard criterion fails.

#include "orbitq/affine.hpp"
#include "orbitq/ekv.hpp"
#include "orbitq/integral_roots.hpp"
#include "orbitq/oracle.hpp"
#include "orbitq/orbits.hpp"
#include "orbitq/verify.hpp"

#include "fixtures.hpp"

#include <fmt/core.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace orbitq;

namespace {

struct Outcome
{
	bool pass = true;
	std::string detail;
	// a known failure that is reported but does not affect the exit status
	bool fatal = true;
};

std::vector<ClassicalFamily> classical_range(int max_sl, int max_so, int max_sp)
{
	std::vector<ClassicalFamily> out;
	for (int n = 2; n <= max_sl; ++n)
		out.emplace_back(MatrixFamily::SL, n);
	for (int n = 5; n <= max_so; ++n) {
		ClassicalFamily f(MatrixFamily::SO, n);
		if (f.cartan_type())
			out.push_back(f);
	}
	for (int n = 4; n <= max_sp; n += 2)
		out.emplace_back(MatrixFamily::SP, n);
	return out;
}

// A_l for l <= 13, B_l and D_l for l <= 25, C_l for l <= 24
std::vector<ClassicalFamily> scale_range() { return classical_range(14, 51, 48); }

std::string read_file(std::string const &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		return {};
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Outcome tables()
{
	struct Item
	{
		char const *type;
		OrbitCase table;
		char const *file;
	};
	Item const items[] = {
	    {"G2", OrbitCase::Principal, "G2_principal.md"},   {"G2", OrbitCase::Coprincipal, "G2_coprincipal.md"},
	    {"F4", OrbitCase::Principal, "F4_principal.md"},   {"F4", OrbitCase::Coprincipal, "F4_coprincipal.md"},
	    {"E6", OrbitCase::Principal, "E6_principal.md"},   {"E7", OrbitCase::Principal, "E7_principal.md"},
	    {"E8", OrbitCase::Principal, "E8_principal.md"},
	};
	Outcome o;
	int cells = 0;
	for (auto const &it : items) {
		auto expected = read_file(std::string(ORBITQ_GOLDEN_DIR) + "/" + it.file);
		auto rows = exceptional_table_rows(CartanType::parse(it.type), it.table);
		auto got = render_table(rows, Format::Markdown, "");
		cells += 4 * static_cast<int>(rows.size());
		if (expected.empty() || got != expected) {
			o.pass = false;
			o.detail += fmt::format(" {} differs;", it.file);
		}
	}
	if (o.pass)
		o.detail = fmt::format("7 tables, {} cells identical", cells);
	return o;
}

// records of criterion 2, shared with criterion 7
struct ClassicalRecord
{
	std::string family;
	int q;
	int by_pairing;
	int by_heights;
	int orbit_dim;
	int joseph;
};

std::vector<ClassicalRecord> const &classical_records()
{
	static std::vector<ClassicalRecord> const records = [] {
		std::vector<ClassicalRecord> out;
		for (auto const &f : scale_range()) {
			auto ct = *f.cartan_type();
			int h = root_system(ct).coxeter_number();
			for (int q = 1; q <= 2 * h; ++q) {
				auto lq = lambda_q(ct, q);
				auto counts = integral_counts(lq);
				auto orbit = orbit_q_classical(f, q, lq.case_tag);
				out.push_back({f.str(), q, counts.by_pairing, counts.by_heights, orbit.dim,
				               root_system(ct).nilcone_dim() - counts.by_pairing});
			}
		}
		return out;
	}();
	return records;
}

Outcome identity_at_scale()
{
	Outcome o;
	int bad = 0;
	for (auto const &r : classical_records())
		if (r.joseph != r.orbit_dim) {
			if (++bad <= 3)
				o.detail += fmt::format(" {} q={}: {} != {};", r.family, r.q, r.joseph, r.orbit_dim);
		}
	o.pass = bad == 0;
	if (o.pass)
		o.detail = fmt::format("{} records", classical_records().size());
	return o;
}

Outcome ekv_and_duality()
{
	Outcome o;
	int checked = 0, bad = 0;
	for (auto const &f : scale_range()) {
		auto const &rs = root_system(*f.cartan_type());
		for (int q = 1; q <= 2 * rs.coxeter_number(); ++q, ++checked)
			if (d_via_heights(rs, q) != d_classical(f, q)) {
				++bad;
				o.detail += fmt::format(" ekv {} q={};", f.str(), q);
			}
	}
	for (auto ct : supported_types(25)) {
		auto const &rs = root_system(ct);
		auto const &dual = root_system(langlands_dual(ct));
		for (int q = 1; q <= 2 * rs.coxeter_number(); ++q, ++checked)
			if (d_via_heights(rs, q) != d_via_heights(dual, q)) {
				++bad;
				o.detail += fmt::format(" duality {} q={};", ct.str(), q);
			}
	}
	o.pass = bad == 0;
	if (o.pass)
		o.detail = fmt::format("{} equalities", checked);
	return o;
}

Outcome oracle_equivalence()
{
	Outcome o;
	int maxima = 0, nullities = 0, bad = 0;
	for (auto const &f : classical_range(10, 10, 10)) {
		for (int q = 1; q <= f.n() + 2; ++q, ++maxima) {
			auto c = natural_case(f.lacing(), q);
			auto expected = orbit_q_classical(f, q, c).classical()->partition();
			auto got = max_orbit_in_Nq(f, q, c);
			if (!got.unique || got.partition != expected) {
				++bad;
				o.detail += fmt::format(" {} q={}: {};", f.str(), q, got.partition.str());
			}
		}
	}
	// SP(2) and SO(6) are outside the root-system ranges but still matrix families
	auto all8 = classical_range(8, 8, 8);
	all8.emplace_back(MatrixFamily::SP, 2);
	all8.emplace_back(MatrixFamily::SO, 6);
	for (auto const &f : all8)
		for (auto const &p : partitions_of(f.n())) {
			if (!is_member(f, p) || (f.kind() == MatrixFamily::SO && p.very_even()))
				continue;
			++nullities;
			if (measure_orbit(f, p).centralizer != centralizer_dim(ClassicalOrbit(f, p))) {
				++bad;
				o.detail += fmt::format(" nullity {} {};", f.str(), p.str());
			}
		}
	o.pass = bad == 0;
	if (o.pass)
		o.detail = fmt::format("{} unique maxima, {} centralizer dimensions", maxima, nullities);
	return o;
}

Outcome steinberg()
{
	Outcome o;
	int n = 0;
	for (auto ct : supported_types(25)) {
		auto const &rs = root_system(ct);
		std::vector<int> e = testing::exponent_fixture(ct);
		bool ok = rs.exponents() == e;
		std::sort(e.rbegin(), e.rend());
		ok = ok && dual_partition(Partition(rs.height_multiplicities())) == Partition(e);
		++n;
		if (!ok) {
			o.pass = false;
			o.detail += " " + ct.str();
		}
	}
	if (o.pass)
		o.detail = fmt::format("{} types", n);
	return o;
}

Outcome prop24()
{
	struct Tuple
	{
		char const *type;
		int p;
		int q;
	};
	Tuple const listed[] = {{"A1", 3, 2}, {"A2", 4, 3}, {"B2", 5, 2}, {"C3", 7, 2},
	                        {"G2", 7, 3}, {"F4", 9, 2}, {"E6", 13, 2}};
	Outcome o;
	int passed = 0;
	std::vector<std::string> failed;
	for (auto const &t : listed) {
		auto ct = CartanType::parse(t.type);
		std::string name = fmt::format("({},{},{})", t.type, t.p, t.q);
		if (!is_admissible_number(ct, t.p, t.q)) {
			auto rep = verify_prop_2_4(ct, t.p, t.q, 0, false);
			failed.push_back(fmt::format("{} is not admissible (p >= {} needed), {} window failures", name,
			                             minimal_admissible_p(ct, t.q), rep.failures.size()));
			continue;
		}
		auto rep = verify_prop_2_4(ct, t.p, t.q);
		if (rep.passed() && rep.bezout.size() == 2)
			++passed;
		else
			failed.push_back(fmt::format("{}: {}", name, rep.failures.empty() ? "?" : rep.failures.front()));
	}
	// the smallest admissible level for F4 with q = 2
	auto sub = verify_prop_2_4(CartanType::parse("F4"), 13, 2);
	o.detail = fmt::format("{}/7 listed tuples pass", passed);
	for (auto const &f : failed)
		o.detail += "; " + f;
	o.detail += fmt::format("; (F4,13,2) {}", sub.passed() ? "passes" : "fails");
	o.pass = failed.empty() && sub.passed();
	// only inadmissible tuples may fail without failing the run
	bool only_inadmissible = true;
	for (auto const &f : failed)
		only_inadmissible = only_inadmissible && f.find("not admissible") != std::string::npos;
	o.fatal = !(only_inadmissible && sub.passed() && passed == 6);
	return o;
}

Outcome path_agreement()
{
	Outcome o;
	int bad = 0;
	for (auto const &r : classical_records())
		if (r.by_pairing != r.by_heights) {
			if (++bad <= 3)
				o.detail += fmt::format(" {} q={};", r.family, r.q);
		}
	o.pass = bad == 0;
	if (o.pass)
		o.detail = fmt::format("{} records", classical_records().size());
	return o;
}

Outcome noncoprime_rows()
{
	Outcome o;
	o.fatal = false;
	int n = 0;
	auto run = [&](char const *type, std::vector<int> const &qs) {
		for (int q : qs) {
			auto r = explore_noncoprime(CartanType::parse(type), q);
			++n;
			if (!r.equal() || r.source != "table") {
				o.pass = false;
				o.detail += fmt::format(" {} q={}: {} vs {};", type, q, r.dim_Nq, r.var_dim_joseph);
			}
		}
	};
	run("G2", {3, 6});
	run("F4", {2, 4, 6, 8, 10, 12});
	if (o.pass)
		o.detail = fmt::format("{} rows, both sides equal (reported only)", n);
	return o;
}

} // namespace

int main()
{
	struct Criterion
	{
		int id;
		char const *name;
		std::function<Outcome()> run;
	};
	std::vector<Criterion> const criteria = {
	    {1, "exceptional tables", tables},
	    {2, "classical identity at scale", identity_at_scale},
	    {3, "EKV relation and duality", ekv_and_duality},
	    {4, "matrix oracle equivalence", oracle_equivalence},
	    {5, "Steinberg duality and exponents", steinberg},
	    {6, "affine window check", prop24},
	    {7, "integral count path agreement", path_agreement},
	    {8, "non-coprime rows", noncoprime_rows},
	};
	int hard_failures = 0;
	for (auto const &c : criteria) {
		auto start = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.run();
		} catch (std::exception const &e) {
			o.pass = false;
			o.fatal = true;
			o.detail = std::string("exception: ") + e.what();
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		std::string status = o.pass ? "PASS" : (o.fatal ? "FAIL" : "FAIL (known, non-fatal)");
		fmt::print("{} criterion {}: {} [{:.2f} s] {}\n", status, c.id, c.name, secs, o.detail);
		std::fflush(stdout);
		if (!o.pass && o.fatal)
			++hard_failures;
	}
	return hard_failures == 0 ? 0 : 1;
}
