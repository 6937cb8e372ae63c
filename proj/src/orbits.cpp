#include "orbitq/orbits.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orbitq {

namespace detail {
extern std::string_view const exceptional_table_text;
}

std::string_view to_string(OrbitCase c)
{
	switch (c) {
	case OrbitCase::Principal: return "principal";
	case OrbitCase::Coprincipal: return "coprincipal";
	case OrbitCase::Extended: return "extended";
	}
	return "?";
}

OrbitCase parse_orbit_case(std::string_view text)
{
	if (text == "principal")
		return OrbitCase::Principal;
	if (text == "coprincipal")
		return OrbitCase::Coprincipal;
	if (text == "extended")
		return OrbitCase::Extended;
	throw InvalidInput(fmt::format("unknown case '{}'", text));
}

OrbitCase natural_case(int lacing, int q)
{
	return std::gcd(q, lacing) == 1 ? OrbitCase::Principal : OrbitCase::Coprincipal;
}

int stable_q(CartanType ct, OrbitCase c)
{
	auto const &rs = root_system(ct);
	if (c == OrbitCase::Coprincipal) {
		if (rs.lacing() == 1)
			throw InvalidInput(ct.str() + " is simply laced and has no coprincipal case");
		return rs.lacing() * root_system(langlands_dual(ct)).dual_coxeter_number();
	}
	return rs.coxeter_number();
}

int stable_q(ClassicalFamily const &family, OrbitCase c)
{
	int n = family.n();
	bool so_odd = family.kind() == MatrixFamily::SO && n % 2 == 1;
	if (c == OrbitCase::Coprincipal) {
		// 2 * dual Coxeter number of the Langlands dual: C_l for B_l, B_l for C_l
		if (so_odd)
			return n + 1;
		if (family.kind() == MatrixFamily::SP)
			return 2 * n - 2;
		throw InvalidInput(family.str() + " has no coprincipal case");
	}
	switch (family.kind()) {
	case MatrixFamily::SL: return n;
	case MatrixFamily::SO: return so_odd ? n - 1 : n - 2;
	case MatrixFamily::SP: return n;
	}
	return 0;
}

std::string OrbitQResult::label() const
{
	if (auto const *c = classical())
		return c->partition().str();
	return std::get<std::string>(orbit);
}

namespace {

enum class Par { Any, Even, Odd };

bool parity_ok(Par p, int v)
{
	switch (p) {
	case Par::Any: return true;
	case Par::Even: return v % 2 == 0;
	case Par::Odd: return v % 2 != 0;
	}
	return false;
}

using Shape = std::vector<int> (*)(int unit, int m, int s);

std::vector<int> run(int unit, int m)
{
	return std::vector<int>(static_cast<std::size_t>(m), unit);
}

template <class... Tail>
std::vector<int> cat(std::vector<int> head, Tail... tail)
{
	(head.push_back(tail), ...);
	return head;
}

std::vector<int> prepend(int first, std::vector<int> rest)
{
	rest.insert(rest.begin(), first);
	return rest;
}

// One entry of the case lists for O_q. "unit" is q, except for sp in the
// coprincipal case where it is q/2. The remainder s runs over
// [0, unit + s_hi_offset] subject to its parity.
struct Subcase
{
	char const *name;
	MatrixFamily kind;
	Par n_par;
	OrbitCase c;
	Par unit_par;
	Par m_par;
	Par s_par;
	int s_hi_offset;
	Shape shape;
};

// clang-format off
Subcase const kSubcases[] = {
	{"sl: (q^m,s)", MatrixFamily::SL, Par::Any, OrbitCase::Principal, Par::Any, Par::Any, Par::Any, -1,
	 [](int u, int m, int s) { return cat(run(u, m), s); }},

	{"so even 1: (q^m,s)", MatrixFamily::SO, Par::Even, OrbitCase::Principal, Par::Odd, Par::Odd, Par::Odd, 0,
	 [](int u, int m, int s) { return cat(run(u, m), s); }},
	{"so even 2: (q^m,s,1)", MatrixFamily::SO, Par::Even, OrbitCase::Principal, Par::Odd, Par::Even, Par::Odd, -1,
	 [](int u, int m, int s) { return cat(run(u, m), s, 1); }},
	{"so even 3: (q+1,q^m,s)", MatrixFamily::SO, Par::Even, OrbitCase::Principal, Par::Even, Par::Even, Par::Odd, -1,
	 [](int u, int m, int s) { return prepend(u + 1, cat(run(u, m), s)); }},
	{"so even 4: (q+1,q^m,q-1,s,1)", MatrixFamily::SO, Par::Even, OrbitCase::Principal, Par::Even, Par::Even, Par::Odd, -1,
	 [](int u, int m, int s) { return prepend(u + 1, cat(run(u, m), u - 1, s, 1)); }},

	{"so odd 1: (q^m,s)", MatrixFamily::SO, Par::Odd, OrbitCase::Principal, Par::Odd, Par::Even, Par::Odd, 0,
	 [](int u, int m, int s) { return cat(run(u, m), s); }},
	{"so odd 2: (q^m,s,1)", MatrixFamily::SO, Par::Odd, OrbitCase::Principal, Par::Odd, Par::Odd, Par::Odd, -1,
	 [](int u, int m, int s) { return cat(run(u, m), s, 1); }},

	{"sp 1: (q^m,s)", MatrixFamily::SP, Par::Any, OrbitCase::Principal, Par::Odd, Par::Even, Par::Even, -1,
	 [](int u, int m, int s) { return cat(run(u, m), s); }},
	{"sp 2: (q^m,q-1,s)", MatrixFamily::SP, Par::Any, OrbitCase::Principal, Par::Odd, Par::Even, Par::Even, -1,
	 [](int u, int m, int s) { return cat(run(u, m), u - 1, s); }},

	{"so odd coprincipal 1: (q^m,s)", MatrixFamily::SO, Par::Odd, OrbitCase::Coprincipal, Par::Even, Par::Even, Par::Odd, -1,
	 [](int u, int m, int s) { return cat(run(u, m), s); }},
	{"so odd coprincipal 2: (q^m,q-1,s,1)", MatrixFamily::SO, Par::Odd, OrbitCase::Coprincipal, Par::Even, Par::Even, Par::Odd, -1,
	 [](int u, int m, int s) { return cat(run(u, m), u - 1, s, 1); }},

	// m is unrestricted here: with q/2 even every such partition lies in P_{-1}(n)
	{"sp coprincipal 1: ((q/2)^m,s)", MatrixFamily::SP, Par::Any, OrbitCase::Coprincipal, Par::Even, Par::Any, Par::Even, -1,
	 [](int u, int m, int s) { return cat(run(u, m), s); }},
	{"sp coprincipal 2: (q/2+1,(q/2)^m,s)", MatrixFamily::SP, Par::Any, OrbitCase::Coprincipal, Par::Odd, Par::Even, Par::Even, -1,
	 [](int u, int m, int s) { return prepend(u + 1, cat(run(u, m), s)); }},
	{"sp coprincipal 3: (q/2+1,(q/2)^m,q/2-1,s)", MatrixFamily::SP, Par::Any, OrbitCase::Coprincipal, Par::Odd, Par::Even, Par::Even, -1,
	 [](int u, int m, int s) { return prepend(u + 1, cat(run(u, m), u - 1, s)); }},
};
// clang-format on

} // namespace

OrbitQResult orbit_q_classical(ClassicalFamily const &family, int q, OrbitCase c)
{
	if (q < 1)
		throw InvalidInput("q must be positive");
	int const n = family.n();
	int const lacing = family.lacing();
	if (c == OrbitCase::Principal && std::gcd(q, lacing) != 1)
		throw InvalidInput(fmt::format("{}: q = {} is not coprime to the lacing number", family.str(), q));
	if (c == OrbitCase::Coprincipal && (lacing == 1 || q % lacing != 0))
		throw InvalidInput(fmt::format("{}: no coprincipal case for q = {}", family.str(), q));
	if (c == OrbitCase::Extended)
		throw InvalidInput("classical O_q for q not coprime to the lacing number is only "
		                   "available from the matrix oracle");

	int const unit = (family.kind() == MatrixFamily::SP && c == OrbitCase::Coprincipal) ? q / 2 : q;

	std::map<Partition, std::vector<std::string>> found;
	for (auto const &sc : kSubcases) {
		if (sc.kind != family.kind() || sc.c != c || !parity_ok(sc.n_par, n) ||
		    !parity_ok(sc.unit_par, unit))
			continue;
		for (int m = 0; m <= n / unit + 1; ++m) {
			if (!parity_ok(sc.m_par, m))
				continue;
			for (int s = 0; s <= unit + sc.s_hi_offset; ++s) {
				if (!parity_ok(sc.s_par, s))
					continue;
				auto parts = sc.shape(unit, m, s);
				if (std::accumulate(parts.begin(), parts.end(), 0) != n)
					continue;
				if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
					continue;
				found[Partition::normalized(std::move(parts))].push_back(sc.name);
			}
		}
	}
	if (q >= stable_q(family, c))
		found[regular_partition(family)].push_back("stable: regular orbit");

	if (found.size() != 1) {
		std::vector<std::string> desc;
		for (auto const &[p, names] : found)
			desc.push_back(fmt::format("{} from [{}]", p.str(), fmt::join(names, "; ")));
		throw ConsistencyError(fmt::format("{} q={} {}: expected exactly one partition, got {}: {}",
		                                   family.str(), q, to_string(c), found.size(),
		                                   fmt::join(desc, ", ")));
	}
	auto const &[partition, names] = *found.begin();
	if (!is_member(family, partition) ||
	    (family.kind() == MatrixFamily::SO && partition.very_even()))
		throw ConsistencyError(fmt::format("{} q={}: selected partition {} is not a valid orbit label",
		                                   family.str(), q, partition.str()));
	ClassicalOrbit orbit(family, partition);
	return OrbitQResult{orbit, orbit_dim(orbit), c, names, std::nullopt};
}

QRange QRange::parse(std::string_view text)
{
	QRange r;
	r.text = std::string(text);
	auto to_int = [&](std::string_view s) {
		int v = 0;
		auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
		if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
			throw InvalidInput(fmt::format("bad q-range item '{}' in '{}'", s, text));
		return v;
	};
	std::vector<std::string_view> tokens;
	std::size_t start = 0;
	while (start <= text.size()) {
		auto end = text.find(',', start);
		if (end == std::string_view::npos)
			end = text.size();
		auto tok = text.substr(start, end - start);
		while (!tok.empty() && tok.front() == ' ')
			tok.remove_prefix(1);
		while (!tok.empty() && tok.back() == ' ')
			tok.remove_suffix(1);
		tokens.push_back(tok);
		start = end + 1;
	}
	for (std::size_t i = 0; i < tokens.size(); ++i) {
		auto tok = tokens[i];
		if (tok == "...") {
			if (r.items.empty() || i + 1 >= tokens.size())
				throw InvalidInput(fmt::format("dangling ellipsis in '{}'", text));
			int lo = r.items.back().q;
			int hi = to_int(tokens[i + 1]);
			for (int v = lo + 1; v < hi; ++v)
				r.items.push_back({v, false});
		} else if (tok.starts_with(">=")) {
			if (i + 1 != tokens.size())
				throw InvalidInput(fmt::format("'>=' must come last in '{}'", text));
			r.at_least = to_int(tok.substr(2));
		} else if (tok.starts_with("(") && tok.ends_with(")")) {
			r.items.push_back({to_int(tok.substr(1, tok.size() - 2)), true});
		} else {
			r.items.push_back({to_int(tok), false});
		}
	}
	return r;
}

bool QRange::contains(int q, bool extended) const
{
	for (auto const &it : items)
		if (it.q == q && it.not_coprime == extended)
			return true;
	return at_least && q >= *at_least;
}

std::string_view exceptional_table_source() { return detail::exceptional_table_text; }

std::vector<ExceptionalRow> const &exceptional_rows()
{
	static std::vector<ExceptionalRow> const rows = [] {
		std::vector<ExceptionalRow> out;
		std::istringstream in{std::string(detail::exceptional_table_text)};
		std::string line;
		while (std::getline(in, line)) {
			auto hash = line.find('#');
			if (hash != std::string::npos)
				line.resize(hash);
			std::istringstream ls(line);
			std::string type, kase, qr, label;
			int dim = 0, integral = 0;
			if (!(ls >> type))
				continue;
			if (!(ls >> kase >> qr >> label >> dim >> integral))
				throw ConsistencyError("malformed exceptional table line: " + line);
			out.push_back({CartanType::parse(type), parse_orbit_case(kase), QRange::parse(qr), label,
			               dim, integral});
		}
		return out;
	}();
	return rows;
}

std::vector<ExceptionalRow> exceptional_table(CartanType ct, OrbitCase table)
{
	std::vector<ExceptionalRow> out;
	for (auto const &row : exceptional_rows())
		if (row.type == ct && row.table == table)
			out.push_back(row);
	return out;
}

OrbitQResult orbit_q_exceptional(CartanType ct, int q, bool extended)
{
	if (!ct.is_exceptional())
		throw InvalidInput(ct.str() + " is not exceptional");
	if (q < 1)
		throw InvalidInput("q must be positive");
	int lacing = root_system(ct).lacing();
	auto c = natural_case(lacing, q);
	bool noncoprime_lookup = extended && c == OrbitCase::Coprincipal;
	if (q == 1)
		return OrbitQResult{std::string("0"), 0, OrbitCase::Principal, {},
		                    root_system(ct).nilcone_dim()};

	auto table = noncoprime_lookup ? OrbitCase::Principal : c;
	std::vector<ExceptionalRow const *> hits;
	for (auto const &row : exceptional_rows())
		if (row.type == ct && row.table == table && row.q.contains(q, noncoprime_lookup))
			hits.push_back(&row);
	if (hits.empty() && noncoprime_lookup)
		throw InvalidInput(fmt::format("{}: no parenthesized principal entry for q = {}", ct.str(), q));
	if (hits.size() != 1)
		throw ConsistencyError(
		    fmt::format("{} q={}: {} matching table rows", ct.str(), q, hits.size()));
	return OrbitQResult{hits.front()->label, hits.front()->dim,
	                    noncoprime_lookup ? OrbitCase::Extended : c, {},
	                    hits.front()->integral_roots};
}

OrbitQResult orbit_q(CartanType ct, int q, bool extended)
{
	if (ct.is_exceptional())
		return orbit_q_exceptional(ct, q, extended);
	auto family = ClassicalFamily::from_cartan_type(ct);
	auto c = natural_case(family.lacing(), q);
	if (extended && c == OrbitCase::Coprincipal)
		c = OrbitCase::Extended;
	return orbit_q_classical(family, q, c);
}

int dim_Nq(CartanType ct, int q, bool extended) { return orbit_q(ct, q, extended).dim; }

} // namespace orbitq
