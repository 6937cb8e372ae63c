#include "orbitq/affine.hpp"
#include "orbitq/errors.hpp"
#include "orbitq/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>

using namespace orbitq;

namespace {

struct Common
{
	std::string type;
	std::string family;
	std::string n;
	std::string q;
	std::string format = "md";
	std::string out;
	bool principal = false;
	bool coprincipal = false;
	bool extended = false;
	bool with_oracle = false;
	int oracle_max_n = 10;
	int window = 0;
};

void write_output(std::string const &text, std::string const &path)
{
	if (path.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(path, std::ios::binary);
	if (!f)
		throw InvalidInput("cannot open " + path + " for writing");
	f << text;
}

std::vector<CartanType> parse_types(std::string const &text)
{
	std::vector<CartanType> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		auto end = std::min(text.find(',', start), text.size());
		auto item = text.substr(start, end - start);
		if (item == "exceptional") {
			for (auto t : {"E6", "E7", "E8", "F4", "G2"})
				out.push_back(CartanType::parse(t));
		} else if (item == "all") {
			auto all = supported_types(8);
			out.insert(out.end(), all.begin(), all.end());
		} else {
			out.push_back(CartanType::parse(item));
		}
		start = end + 1;
	}
	return out;
}

std::optional<ClassicalFamily> family_for(char letter, int n)
{
	MatrixFamily kind;
	switch (std::toupper(static_cast<unsigned char>(letter))) {
	case 'A': kind = MatrixFamily::SL; break;
	case 'B':
		if (n % 2 == 0)
			return std::nullopt;
		kind = MatrixFamily::SO;
		break;
	case 'C':
		if (n % 2 == 1)
			return std::nullopt;
		kind = MatrixFamily::SP;
		break;
	case 'D':
		if (n % 2 == 1)
			return std::nullopt;
		kind = MatrixFamily::SO;
		break;
	default: throw InvalidInput(fmt::format("--family must be one of A, B, C, D (got '{}')", letter));
	}
	try {
		ClassicalFamily f(kind, n);
		if (!f.cartan_type())
			return std::nullopt;
		return f;
	} catch (InvalidInput const &) {
		return std::nullopt;
	}
}

std::vector<ClassicalFamily> parse_families(Common const &c)
{
	if (c.family.size() != 1)
		throw InvalidInput("--family takes a single letter A, B, C or D");
	if (c.n.empty())
		throw InvalidInput("--family needs --n (matrix size, e.g. --n 4..12)");
	std::vector<ClassicalFamily> out;
	for (int n : parse_int_list(c.n)) {
		if (auto f = family_for(c.family[0], n))
			out.push_back(*f);
		else
			std::cerr << fmt::format("note: skipping n = {} for family {}\n", n, c.family);
	}
	return out;
}

bool keep_q(Common const &c, int lacing, int q)
{
	bool coprime = std::gcd(q, lacing) == 1;
	if (c.principal && !coprime)
		return false;
	if (c.coprincipal && coprime)
		return false;
	return true;
}

std::vector<int> q_values(Common const &c, CartanType ct)
{
	if (!c.q.empty())
		return parse_int_list(c.q);
	std::vector<int> qs(default_q_max(ct));
	std::iota(qs.begin(), qs.end(), 1);
	return qs;
}

int run_verify(Common const &c, std::string const &checks)
{
	auto opts = default_verify_options();
	opts.checks = parse_checks(checks);
	opts.with_oracle = c.with_oracle;
	if (c.with_oracle)
		opts.checks.insert("oracle");
	opts.oracle_max_n = c.oracle_max_n;
	opts.window = c.window;
	opts.extended = c.extended;

	VerificationReport report;
	auto add = [&](CartanType ct, std::optional<ClassicalFamily> fam) {
		int lacing = root_system(ct).lacing();
		for (int q : q_values(c, ct)) {
			if (!keep_q(c, lacing, q))
				continue;
			if (fam) {
				if (c.extended && std::gcd(q, lacing) != 1) {
					std::cerr << fmt::format("note: {} q={} skipped, use explore-noncoprime\n", fam->str(), q);
					continue;
				}
				report.records.push_back(verify_classical(*fam, q, opts));
			} else {
				report.records.push_back(verify_type(ct, q, opts));
			}
		}
	};
	if (!c.family.empty()) {
		for (auto const &f : parse_families(c))
			add(*f.cartan_type(), f);
	} else {
		if (c.type.empty())
			throw InvalidInput("verify needs --type or --family");
		for (auto ct : parse_types(c.type))
			add(ct, ct.is_classical() ? std::optional(ClassicalFamily::from_cartan_type(ct)) : std::nullopt);
	}
	write_output(emit(report, parse_format(c.format)), c.out);
	for (auto const &r : report.records)
		if (!r.passed())
			std::cerr << fmt::format("FAILED: {} {} q={} orbit {} dim {} vs {}\n", r.type, r.family, r.q,
			                         r.orbit, r.dim_orbit, r.var_dim_joseph);
	std::cerr << fmt::format("{} records, {} passed, {} failed\n", report.records.size(),
	                         report.passed_count(), report.failed_count());
	return report.all_passed() ? 0 : 1;
}

int run_table(Common const &c)
{
	auto fmt_ = parse_format(c.format);
	std::string text;
	if (!c.family.empty()) {
		for (auto const &f : parse_families(c)) {
			auto ct = *f.cartan_type();
			auto rows = classical_table_rows(f, q_values(c, ct), c.with_oracle, c.oracle_max_n);
			text += render_table(rows, fmt_, f.str());
		}
	} else {
		if (c.type.empty())
			throw InvalidInput("table needs --type or --family");
		for (auto ct : parse_types(c.type)) {
			if (ct.is_classical()) {
				auto f = ClassicalFamily::from_cartan_type(ct);
				text += render_table(classical_table_rows(f, q_values(c, ct), c.with_oracle, c.oracle_max_n),
				                     fmt_, f.str());
				continue;
			}
			auto table = c.coprincipal ? OrbitCase::Coprincipal : OrbitCase::Principal;
			text += render_table(exceptional_table_rows(ct, table), fmt_,
			                     fmt::format("{} {}", ct.str(), to_string(table)));
		}
	}
	write_output(text, c.out);
	return 0;
}

int run_explore(Common const &c)
{
	if (c.type.empty())
		throw InvalidInput("explore-noncoprime needs --type");
	std::vector<ExploreRecord> records;
	for (auto ct : parse_types(c.type)) {
		int lacing = root_system(ct).lacing();
		if (lacing == 1) {
			std::cerr << fmt::format("note: {} is simply laced, nothing to explore\n", ct.str());
			continue;
		}
		for (int q : q_values(c, ct))
			if (q % lacing == 0)
				records.push_back(explore_noncoprime(ct, q, std::max(c.oracle_max_n, 12)));
	}
	write_output(emit(records, parse_format(c.format)), c.out);
	std::cerr << "CONJECTURAL: both sides are reported, no equality is asserted\n";
	return 0;
}

int run_prop24(Common const &c, int p)
{
	if (c.type.empty() || c.q.empty())
		throw InvalidInput("prop24 needs --type and --q");
	bool all_ok = true;
	std::string text;
	bool json = parse_format(c.format) == Format::Json;
	for (auto ct : parse_types(c.type))
		for (int q : parse_int_list(c.q)) {
			int pp = p > 0 ? p : minimal_admissible_p(ct, q);
			auto rep = verify_prop_2_4(ct, pp, q, c.window);
			all_ok = all_ok && rep.passed();
			if (json) {
				text += fmt::format(
				    "{{\"type\": \"{}\", \"p\": {}, \"q\": {}, \"window\": {}, \"case\": \"{}\", "
				    "\"bezout\": [[{}, {}], [{}, {}]], \"roots_checked\": {}, \"integral\": {}, \"passed\": {}}}\n",
				    ct.str(), pp, q, rep.window, to_string(rep.case_tag), rep.bezout[0].c, rep.bezout[0].d,
				    rep.bezout[1].c, rep.bezout[1].d, rep.roots_checked, rep.integral_in_window,
				    rep.passed() ? "true" : "false");
			} else {
				text += fmt::format("{} p={} q={} window={} case={} bezout=({},{}) ({},{}) roots={} integral={}: {}\n",
				                    ct.str(), pp, q, rep.window, to_string(rep.case_tag), rep.bezout[0].c,
				                    rep.bezout[0].d, rep.bezout[1].c, rep.bezout[1].d, rep.roots_checked,
				                    rep.integral_in_window, rep.passed() ? "pass" : "FAIL");
				for (auto const &f : rep.failures)
					text += "  " + f + "\n";
			}
		}
	write_output(text, c.out);
	return all_ok ? 0 : 1;
}

void add_common(CLI::App *app, Common &c, bool families)
{
	app->add_option("--type", c.type, "Cartan types, e.g. E8 or G2,F4; 'exceptional' or 'all'");
	if (families) {
		app->add_option("--family", c.family, "classical family letter A, B, C or D");
		app->add_option("--n", c.n, "matrix sizes for --family, e.g. 4..12");
	}
	app->add_option("--q", c.q, "denominators: 5, 2..40 or 1,3,5");
	app->add_option("--format", c.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
	app->add_option("--out", c.out, "write to a file instead of stdout");
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Nilpotent orbits O_q, integral roots of lambda_q and admissible levels"};
	app.require_subcommand(1);
	Common c;
	std::string checks = "default";
	int p = 0;

	auto *verify = app.add_subcommand("verify", "check dim Var(J_lambda_q) = dim O_q with cross-checks");
	add_common(verify, c, true);
	verify->add_flag("--principal", c.principal, "only q coprime to the lacing number");
	verify->add_flag("--coprincipal", c.coprincipal, "only q divisible by the lacing number");
	verify->add_flag("--extended", c.extended, "use rho/q - rho and the parenthesized rows for G2, F4");
	verify->add_flag("--with-oracle", c.with_oracle, "add the matrix oracle check (classical, n <= bound)");
	verify->add_option("--oracle-max-n", c.oracle_max_n, "largest matrix size for the oracle");
	verify->add_option("--checks", checks, "default, all, or a list of check names");
	verify->add_option("--window", c.window, "|n| bound for the prop24 check (default 3q)");

	auto *table = app.add_subcommand("table", "print the O_q table of a type");
	add_common(table, c, true);
	auto *pr = table->add_flag("--principal", c.principal, "the (q, r) = 1 table (default)");
	table->add_flag("--coprincipal", c.coprincipal, "the (q, r) = r table")->excludes(pr);
	table->add_flag("--with-oracle", c.with_oracle, "compare classical rows with the matrix oracle");
	table->add_option("--oracle-max-n", c.oracle_max_n, "largest matrix size for the oracle");

	auto *explore = app.add_subcommand("explore-noncoprime",
	                                   "both sides for q not coprime to the lacing number (conjectural)");
	add_common(explore, c, false);
	explore->add_flag("--extended", c.extended, "accepted for symmetry; always on here");
	explore->add_option("--oracle-max-n", c.oracle_max_n, "largest matrix size for the oracle (at least 12)");

	auto *prop = app.add_subcommand("prop24", "window check of the integral root system of lambda_hat_q");
	add_common(prop, c, false);
	prop->add_option("--p", p, "numerator of k + h^vee (default: smallest admissible)");
	prop->add_option("--window", c.window, "|n| bound (default 3q)");

	CLI11_PARSE(app, argc, argv);
	try {
		if (*verify)
			return run_verify(c, checks);
		if (*table)
			return run_table(c);
		if (*explore)
			return run_explore(c);
		if (*prop)
			return run_prop24(c, p);
	} catch (InvalidInput const &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (std::exception const &e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 3;
	}
	return 0;
}
