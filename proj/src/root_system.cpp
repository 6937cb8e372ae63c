#include "orbitq/root_system.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace orbitq {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool CartanType::valid(Family family, int rank)
{
	switch (family) {
	case Family::A: return rank >= 1;
	case Family::B:
	case Family::C: return rank >= 2;
	case Family::D: return rank >= 4;
	case Family::E: return rank >= 6 && rank <= 8;
	case Family::F: return rank == 4;
	case Family::G: return rank == 2;
	}
	return false;
}

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank)
{
	if (!valid(family, rank))
		throw InvalidInput(fmt::format("no simple Lie algebra of type {}{}",
		                               family_letter(family), rank));
}

CartanType CartanType::parse(std::string_view text)
{
	if (text.size() < 2)
		throw InvalidInput(fmt::format("cannot parse Cartan type '{}'", text));
	char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
	if (c < 'A' || c > 'G')
		throw InvalidInput(fmt::format("unknown family in '{}'", text));
	int rank = 0;
	auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
	if (ec != std::errc() || ptr != text.data() + text.size())
		throw InvalidInput(fmt::format("bad rank in '{}'", text));
	return CartanType(static_cast<Family>(c - 'A'), rank);
}

bool CartanType::is_classical() const
{
	return family_ == Family::A || family_ == Family::B || family_ == Family::C ||
	       family_ == Family::D;
}

std::string CartanType::str() const { return fmt::format("{}{}", family_letter(family_), rank_); }

CartanType langlands_dual(CartanType ct)
{
	switch (ct.family()) {
	case Family::B: return CartanType(Family::C, ct.rank());
	case Family::C: return CartanType(Family::B, ct.rank());
	default: return ct;
	}
}

Root Root::operator-() const
{
	Root r = *this;
	for (auto &c : r.coords)
		c = -c;
	return r;
}

std::string Root::str() const { return fmt::format("({})", fmt::join(coords, ",")); }

Weight operator+(Weight a, Weight const &b)
{
	for (std::size_t i = 0; i < a.coords.size(); ++i)
		a.coords[i] += b.coords[i];
	return a;
}

Weight operator-(Weight a, Weight const &b)
{
	for (std::size_t i = 0; i < a.coords.size(); ++i)
		a.coords[i] -= b.coords[i];
	return a;
}

Weight operator*(Rational const &c, Weight w)
{
	for (auto &x : w.coords)
		x *= c;
	return w;
}

Weight operator/(Weight w, Rational const &c)
{
	for (auto &x : w.coords)
		x /= c;
	return w;
}

std::string Weight::str() const
{
	std::vector<std::string> parts;
	for (auto const &c : coords)
		parts.push_back(c.str());
	return fmt::format("({})", fmt::join(parts, ","));
}

namespace {

struct DynkinData
{
	std::vector<Rational> lengths; // (alpha_i|alpha_i)
	std::vector<std::pair<int, int>> edges;
};

// Bourbaki numbering, 0-based.
DynkinData dynkin(CartanType ct)
{
	int l = ct.rank();
	DynkinData d;
	d.lengths.assign(l, Rational(2));
	auto chain = [&](int upto) {
		for (int i = 0; i + 1 < upto; ++i)
			d.edges.emplace_back(i, i + 1);
	};
	switch (ct.family()) {
	case Family::A: chain(l); break;
	case Family::B:
		chain(l);
		d.lengths[l - 1] = 1;
		break;
	case Family::C:
		chain(l);
		for (int i = 0; i + 1 < l; ++i)
			d.lengths[i] = 1;
		break;
	case Family::D:
		chain(l - 1);
		d.edges.emplace_back(l - 3, l - 1);
		break;
	case Family::E:
		d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
		for (int i = 4; i + 1 < l; ++i)
			d.edges.emplace_back(i, i + 1);
		break;
	case Family::F:
		chain(4);
		d.lengths[2] = d.lengths[3] = 1;
		break;
	case Family::G:
		chain(2);
		d.lengths[0] = Rational(2, 3);
		break;
	}
	return d;
}

int root_height(Root const &r) { return std::accumulate(r.coords.begin(), r.coords.end(), 0); }

} // namespace

RootSystem::RootSystem(CartanType ct) : type_(ct)
{
	int const l = ct.rank();
	auto dd = dynkin(ct);

	gram_.assign(l, std::vector<Rational>(l));
	for (int i = 0; i < l; ++i)
		gram_[i][i] = dd.lengths[i];
	for (auto [i, j] : dd.edges) {
		auto v = -std::max(dd.lengths[i], dd.lengths[j]) / Rational(2);
		gram_[i][j] = gram_[j][i] = v;
	}

	cartan_.assign(l, std::vector<int>(l));
	symmetrizers_.resize(l);
	for (int i = 0; i < l; ++i) {
		symmetrizers_[i] = gram_[i][i] / Rational(2);
		for (int j = 0; j < l; ++j)
			cartan_[i][j] = static_cast<int>((Rational(2) * gram_[i][j] / gram_[i][i]).to_integer());
	}

	// close the simple roots under simple reflections
	std::set<std::vector<int>> seen;
	std::deque<std::vector<int>> todo;
	for (int i = 0; i < l; ++i) {
		std::vector<int> e(l, 0);
		e[i] = 1;
		seen.insert(e);
		todo.push_back(e);
	}
	while (!todo.empty()) {
		auto beta = todo.front();
		todo.pop_front();
		for (int i = 0; i < l; ++i) {
			int c = 0;
			for (int j = 0; j < l; ++j)
				c += beta[j] * cartan_[i][j];
			if (c == 0)
				continue;
			auto img = beta;
			img[i] -= c;
			if (seen.insert(img).second)
				todo.push_back(img);
		}
	}

	std::vector<Root> pos;
	for (auto const &v : seen) {
		bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
		bool nonpos = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
		if (!nonneg && !nonpos)
			throw ConsistencyError("generated a root with mixed signs: " + Root{v}.str());
		if (nonneg)
			pos.push_back(Root{v});
	}
	std::sort(pos.begin(), pos.end(), [](Root const &a, Root const &b) {
		auto ha = root_height(a), hb = root_height(b);
		return ha != hb ? ha < hb : a.coords > b.coords;
	});
	if (2 * pos.size() != seen.size())
		throw ConsistencyError("root set is not symmetric under negation");
	roots_ = pos;
	for (auto const &r : pos)
		roots_.push_back(-r);
	for (std::size_t k = 0; k < roots_.size(); ++k)
		index_.emplace(roots_[k].coords, k);

	norms_.reserve(roots_.size());
	coroot_pairings_.reserve(roots_.size());
	for (auto const &r : roots_) {
		auto w = as_weight(r);
		auto n2 = form(w, w);
		norms_.push_back(n2);
		std::vector<int> cp(l);
		for (int i = 0; i < l; ++i) {
			Rational s = 0;
			for (int j = 0; j < l; ++j)
				s += gram_[i][j] * Rational(r.coords[j]);
			cp[i] = static_cast<int>((Rational(2) * s / n2).to_integer());
		}
		coroot_pairings_.push_back(std::move(cp));
	}

	auto npos = pos.size();
	Rational maxnorm = *std::max_element(norms_.begin(), norms_.end());
	Rational minnorm = *std::min_element(norms_.begin(), norms_.end());
	if (maxnorm != Rational(2))
		throw ConsistencyError("long roots do not have squared length 2");
	lacing_ = static_cast<int>((maxnorm / minnorm).to_integer());

	// highest root and highest short root: unique roots of maximal height
	auto highest = [&](bool short_only) {
		std::optional<std::size_t> best;
		int besth = -1, ties = 0;
		for (std::size_t k = 0; k < npos; ++k) {
			if (short_only && lacing_ > 1 && norms_[k] != minnorm)
				continue;
			int hk = root_height(roots_[k]);
			if (hk > besth) {
				besth = hk;
				best = k;
				ties = 1;
			} else if (hk == besth) {
				++ties;
			}
		}
		if (ties != 1)
			throw ConsistencyError("highest root is not unique");
		return *best;
	};
	theta_ = highest(false);
	theta_short_ = highest(true);

	rho_ = Weight::zero(l);
	rho_check_ = Weight::zero(l);
	for (std::size_t k = 0; k < npos; ++k) {
		auto w = as_weight(roots_[k]);
		rho_ = rho_ + w / Rational(2);
		rho_check_ = rho_check_ + w / norms_[k];
	}
	for (int i = 0; i < l; ++i) {
		Root simple{std::vector<int>(l, 0)};
		simple.coords[i] = 1;
		if (pairing(rho_, simple) != Rational(1) || form(rho_check_, as_weight(simple)) != Rational(1))
			throw ConsistencyError("rho or rho_check fails its defining property");
	}

	coxeter_ = root_height(theta()) + 1;
	if (form(rho_check_, as_weight(theta())) + Rational(1) != Rational(coxeter_))
		throw ConsistencyError("h != (rho_check|theta) + 1");
	dual_coxeter_ = static_cast<int>((pairing(rho_, theta()) + Rational(1)).to_integer());

	height_mult_.assign(coxeter_ - 1, 0);
	for (std::size_t k = 0; k < npos; ++k)
		++height_mult_[root_height(roots_[k]) - 1];
	if (!std::is_sorted(height_mult_.rbegin(), height_mult_.rend()) || height_mult_.front() != l)
		throw ConsistencyError("height multiplicities do not form a partition starting at rank");

	// exponents: conjugate of the height-multiplicity partition
	for (int j = 1; j <= height_mult_.front(); ++j) {
		int cnt = 0;
		for (int p : height_mult_)
			cnt += (p >= j);
		exponents_.push_back(cnt);
	}
	std::sort(exponents_.begin(), exponents_.end());
	if (static_cast<int>(exponents_.size()) != l ||
	    std::accumulate(exponents_.begin(), exponents_.end(), 0) != static_cast<int>(npos) ||
	    exponents_.front() != 1 || exponents_.back() != coxeter_ - 1)
		throw ConsistencyError("exponents inconsistent with rank, |positive roots| or h");
	for (int i = 0; i < l; ++i)
		if (exponents_[i] + exponents_[l - 1 - i] != coxeter_)
			throw ConsistencyError("exponents are not symmetric about h/2");
}

std::optional<std::size_t> RootSystem::index_of(Root const &r) const
{
	auto it = index_.find(r.coords);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

std::size_t RootSystem::require(Root const &r) const
{
	auto k = index_of(r);
	if (!k)
		throw InvalidInput(fmt::format("{} is not a root of {}", r.str(), type_.str()));
	return *k;
}

int RootSystem::height(Root const &r) const
{
	require(r);
	return root_height(r);
}

Rational RootSystem::norm2(Root const &r) const { return norms_[require(r)]; }

bool RootSystem::is_long(Root const &r) const { return norms_[require(r)] == Rational(2); }

Weight RootSystem::as_weight(Root const &r) const
{
	Weight w;
	w.coords.reserve(r.coords.size());
	for (int c : r.coords)
		w.coords.emplace_back(c);
	return w;
}

Rational RootSystem::form(Weight const &a, Weight const &b) const
{
	Rational s = 0;
	for (int i = 0; i < rank(); ++i) {
		if (a.coords[i].is_zero())
			continue;
		for (int j = 0; j < rank(); ++j)
			if (!b.coords[j].is_zero() && !gram_[i][j].is_zero())
				s += a.coords[i] * gram_[i][j] * b.coords[j];
	}
	return s;
}

Rational RootSystem::pairing(Weight const &w, Root const &alpha) const
{
	auto const &cp = coroot_pairings_[require(alpha)];
	Rational s = 0;
	for (int i = 0; i < rank(); ++i)
		if (cp[i] != 0)
			s += w.coords[i] * Rational(cp[i]);
	return s;
}

std::vector<int> RootSystem::coroot_coords(Root const &alpha) const
{
	auto n2 = norms_[require(alpha)];
	std::vector<int> out(rank());
	for (int i = 0; i < rank(); ++i)
		out[i] = static_cast<int>((Rational(alpha.coords[i]) * gram_[i][i] / n2).to_integer());
	return out;
}

RootSystem const &root_system(CartanType ct)
{
	static std::mutex mu;
	static std::map<CartanType, std::unique_ptr<RootSystem>> cache;
	std::lock_guard lock(mu);
	auto &slot = cache[ct];
	if (!slot)
		slot = std::make_unique<RootSystem>(ct);
	return *slot;
}

std::vector<CartanType> supported_types(int max_classical_rank)
{
	std::vector<CartanType> out;
	for (Family f : {Family::A, Family::B, Family::C, Family::D})
		for (int r = 1; r <= max_classical_rank; ++r)
			if (CartanType::valid(f, r))
				out.emplace_back(f, r);
	out.emplace_back(Family::E, 6);
	out.emplace_back(Family::E, 7);
	out.emplace_back(Family::E, 8);
	out.emplace_back(Family::F, 4);
	out.emplace_back(Family::G, 2);
	return out;
}

} // namespace orbitq
