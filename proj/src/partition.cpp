#include "orbitq/partition.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <numeric>

namespace orbitq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
	for (std::size_t i = 0; i < parts_.size(); ++i) {
		if (parts_[i] <= 0)
			throw InvalidInput("partition parts must be positive");
		if (i > 0 && parts_[i] > parts_[i - 1])
			throw InvalidInput("partition parts must be weakly decreasing");
	}
	sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::normalized(std::vector<int> parts)
{
	if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
		throw InvalidInput("negative part");
	std::erase(parts, 0);
	std::sort(parts.begin(), parts.end(), std::greater<>());
	return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const
{
	return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

int Partition::count_odd_parts() const
{
	return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x % 2; }));
}

bool Partition::very_even() const
{
	// every part even (hence each with even multiplicity inside P_1)
	return !parts_.empty() &&
	       std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 0; });
}

std::string Partition::str(bool compact) const
{
	if (!compact)
		return fmt::format("({})", fmt::join(parts_, ","));
	std::vector<std::string> out;
	for (std::size_t i = 0; i < parts_.size();) {
		std::size_t j = i;
		while (j < parts_.size() && parts_[j] == parts_[i])
			++j;
		if (j - i == 1)
			out.push_back(std::to_string(parts_[i]));
		else
			out.push_back(fmt::format("{}^{}", parts_[i], j - i));
		i = j;
	}
	return fmt::format("({})", fmt::join(out, ","));
}

Partition dual_partition(Partition const &p)
{
	std::vector<int> mu;
	for (int j = 1; j <= p.largest(); ++j) {
		int cnt = 0;
		for (int x : p.parts())
			cnt += (x >= j);
		mu.push_back(cnt);
	}
	return Partition(std::move(mu));
}

std::vector<Partition> partitions_of(int n)
{
	std::vector<Partition> out;
	std::vector<int> cur;
	std::function<void(int, int)> rec = [&](int rest, int maxpart) {
		if (rest == 0) {
			out.emplace_back(cur);
			return;
		}
		for (int k = std::min(rest, maxpart); k >= 1; --k) {
			cur.push_back(k);
			rec(rest - k, k);
			cur.pop_back();
		}
	};
	rec(n, n);
	return out;
}

ClassicalFamily::ClassicalFamily(MatrixFamily kind, int n) : kind_(kind), n_(n)
{
	bool ok = false;
	switch (kind) {
	case MatrixFamily::SL: ok = n >= 2; break;
	case MatrixFamily::SO: ok = n >= 5; break;
	case MatrixFamily::SP: ok = n >= 2 && n % 2 == 0; break;
	}
	if (!ok)
		throw InvalidInput("invalid classical family " + str());
}

std::string ClassicalFamily::str() const
{
	static char const *names[] = {"SL", "SO", "SP"};
	return fmt::format("{}({})", names[static_cast<int>(kind_)], n_);
}

int ClassicalFamily::dim() const
{
	switch (kind_) {
	case MatrixFamily::SL: return n_ * n_ - 1;
	case MatrixFamily::SO: return n_ * (n_ - 1) / 2;
	case MatrixFamily::SP: return n_ * (n_ + 1) / 2;
	}
	return 0;
}

int ClassicalFamily::rank() const { return kind_ == MatrixFamily::SL ? n_ - 1 : n_ / 2; }

int ClassicalFamily::lacing() const
{
	if (kind_ == MatrixFamily::SP || (kind_ == MatrixFamily::SO && n_ % 2 == 1))
		return 2;
	return 1;
}

std::optional<CartanType> ClassicalFamily::cartan_type() const
{
	switch (kind_) {
	case MatrixFamily::SL: return CartanType(Family::A, n_ - 1);
	case MatrixFamily::SO:
		if (n_ % 2 == 1)
			return CartanType(Family::B, n_ / 2);
		if (CartanType::valid(Family::D, n_ / 2))
			return CartanType(Family::D, n_ / 2);
		return std::nullopt;
	case MatrixFamily::SP:
		if (CartanType::valid(Family::C, n_ / 2))
			return CartanType(Family::C, n_ / 2);
		return std::nullopt;
	}
	return std::nullopt;
}

ClassicalFamily ClassicalFamily::from_cartan_type(CartanType ct)
{
	int l = ct.rank();
	switch (ct.family()) {
	case Family::A: return ClassicalFamily(MatrixFamily::SL, l + 1);
	case Family::B: return ClassicalFamily(MatrixFamily::SO, 2 * l + 1);
	case Family::C: return ClassicalFamily(MatrixFamily::SP, 2 * l);
	case Family::D: return ClassicalFamily(MatrixFamily::SO, 2 * l);
	default: throw InvalidInput(ct.str() + " is not a classical type");
	}
}

bool is_member(ClassicalFamily const &family, Partition const &p)
{
	if (p.size() != family.n())
		throw InvalidInput(fmt::format("partition {} does not have size {}", p.str(), family.n()));
	auto parts = p.parts();
	for (std::size_t i = 0; i < parts.size();) {
		std::size_t j = i;
		while (j < parts.size() && parts[j] == parts[i])
			++j;
		int mult = static_cast<int>(j - i);
		bool even_part = parts[i] % 2 == 0;
		if (family.kind() == MatrixFamily::SO && even_part && mult % 2)
			return false;
		if (family.kind() == MatrixFamily::SP && !even_part && mult % 2)
			return false;
		i = j;
	}
	return true;
}

Partition regular_partition(ClassicalFamily const &family)
{
	int n = family.n();
	if (family.kind() == MatrixFamily::SO && n % 2 == 0)
		return Partition({n - 1, 1});
	return Partition({n});
}

ClassicalOrbit::ClassicalOrbit(ClassicalFamily family, Partition partition)
    : family_(family), partition_(std::move(partition))
{
	if (!is_member(family_, partition_))
		throw InvalidInput(fmt::format("{} does not label a nilpotent orbit of {}",
		                               partition_.str(), family_.str()));
	if (family_.kind() == MatrixFamily::SO && partition_.very_even())
		throw VeryEvenPartition(fmt::format("very even partition {} of {} labels two orbits",
		                                    partition_.str(), family_.str()));
}

int centralizer_dim(ClassicalOrbit const &orbit)
{
	auto mu = dual_partition(orbit.partition());
	int sq = 0;
	for (int m : mu.parts())
		sq += m * m;
	int odd = orbit.partition().count_odd_parts();
	switch (orbit.family().kind()) {
	case MatrixFamily::SL: return sq - 1;
	case MatrixFamily::SO: return (sq - odd) / 2;
	case MatrixFamily::SP: return (sq + odd) / 2;
	}
	return 0;
}

int orbit_dim(ClassicalOrbit const &orbit) { return orbit.family().dim() - centralizer_dim(orbit); }

} // namespace orbitq
