#include "orbitq/oracle.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

namespace orbitq {

namespace {

IntMatrix anti_diagonal_form(ClassicalFamily const &family)
{
	int n = family.n();
	if (family.kind() == MatrixFamily::SL)
		return IntMatrix::identity(n);
	IntMatrix j(n, n);
	for (int i = 0; i < n; ++i)
		j(i, n - 1 - i) = (family.kind() == MatrixFamily::SP && i >= n / 2) ? -1 : 1;
	return j;
}

std::int64_t content(IntMatrix const &m)
{
	std::int64_t g = 0;
	for (int i = 0; i < m.rows(); ++i)
		for (int j = 0; j < m.cols(); ++j)
			g = std::gcd(g, m(i, j));
	return g;
}

IntMatrix primitive(IntMatrix m)
{
	auto g = content(m);
	if (g == 0)
		return m;
	std::int64_t sign = 0;
	for (int i = 0; i < m.rows() && sign == 0; ++i)
		for (int j = 0; j < m.cols() && sign == 0; ++j)
			if (m(i, j) != 0)
				sign = m(i, j) < 0 ? -1 : 1;
	for (int i = 0; i < m.rows(); ++i)
		for (int j = 0; j < m.cols(); ++j)
			m(i, j) = m(i, j) / g * sign;
	return m;
}

} // namespace

MatrixRealization::MatrixRealization(ClassicalFamily family)
    : family_(family), form_(anti_diagonal_form(family))
{
	int n = family.n();
	if (family.kind() == MatrixFamily::SL) {
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (i != j) {
					IntMatrix e(n, n);
					e(i, j) = 1;
					basis_.push_back(e);
				}
		for (int i = 0; i + 1 < n; ++i) {
			IntMatrix h(n, n);
			h(i, i) = 1;
			h(n - 1, n - 1) = -1;
			basis_.push_back(h);
		}
	} else {
		// x + sigma(x) with sigma(x) = -J^{-1} x^T J and J^{-1} = J^T
		IntMatrix jt = form_.transpose();
		for (int a = 0; a < n; ++a)
			for (int b = 0; b < n; ++b) {
				IntMatrix e(n, n);
				e(a, b) = 1;
				IntMatrix s = e - jt * e.transpose() * form_;
				if (s.is_zero())
					continue;
				s = primitive(s);
				if (std::find(basis_.begin(), basis_.end(), s) == basis_.end())
					basis_.push_back(s);
			}
	}
	if (dim() != family.dim())
		throw ConsistencyError(fmt::format("{}: realization has dimension {}, expected {}",
		                                   family.str(), dim(), family.dim()));

	for (int k = 0; k < dim(); ++k) {
		bool found = false;
		for (int i = 0; i < n && !found; ++i)
			for (int j = 0; j < n && !found; ++j) {
				if (basis_[k](i, j) == 0)
					continue;
				bool alone = true;
				for (int l = 0; l < dim() && alone; ++l)
					if (l != k && basis_[l](i, j) != 0)
						alone = false;
				if (alone) {
					pivots_.emplace_back(i, j);
					found = true;
				}
			}
		if (!found)
			throw ConsistencyError(family.str() + ": basis without a private entry");
		if (!contains(basis_[k]))
			throw ConsistencyError(family.str() + ": basis element outside the Lie algebra");
	}

	for (int a = 0; a < dim(); ++a)
		for (int b = a + 1; b < dim(); ++b)
			coords(commutator(basis_[a], basis_[b]));
}

bool MatrixRealization::contains(IntMatrix const &x) const
{
	if (family_.kind() == MatrixFamily::SL) {
		std::int64_t tr = 0;
		for (int i = 0; i < n(); ++i)
			tr = checked::add(tr, x(i, i));
		return tr == 0;
	}
	return (x.transpose() * form_ + form_ * x).is_zero();
}

std::vector<std::int64_t> MatrixRealization::coords(IntMatrix const &x) const
{
	std::vector<std::int64_t> c(basis_.size());
	IntMatrix rest = x;
	for (std::size_t k = 0; k < basis_.size(); ++k) {
		auto [i, j] = pivots_[k];
		auto b = basis_[k](i, j);
		if (x(i, j) % b != 0)
			throw ConsistencyError("matrix is not an integral combination of the basis");
		c[k] = x(i, j) / b;
		if (c[k] != 0)
			rest = rest - c[k] * basis_[k];
	}
	if (!rest.is_zero())
		throw ConsistencyError(family_.str() + ": matrix is not in the span of the basis");
	return c;
}

MatrixRealization const &realization(ClassicalFamily const &family)
{
	static std::mutex mu;
	static std::map<ClassicalFamily, std::unique_ptr<MatrixRealization>> cache;
	std::lock_guard lock(mu);
	auto &slot = cache[family];
	if (!slot)
		slot = std::make_unique<MatrixRealization>(family);
	return *slot;
}

bool satisfies_rank_identity(IntMatrix const &x, Partition const &p)
{
	int n = x.rows();
	if (p.size() != n)
		return false;
	IntMatrix power = IntMatrix::identity(n);
	for (int k = 0; k <= p.largest(); ++k) {
		int expected = 0;
		for (int part : p.parts())
			expected += std::max(part - k, 0);
		if (rank(power) != expected)
			return false;
		power = power * x;
	}
	return true;
}

namespace {

using Vec = std::vector<Rational>;

// Builds the representative on a direct sum of blocks with a block-adapted
// form, then rewrites it in a basis where the form becomes J.
struct BlockBuilder
{
	int n;
	bool symplectic;
	std::vector<std::vector<Rational>> x; // x[i][j]: coefficient of e_i in x e_j
	std::vector<std::pair<Vec, Vec>> hyperbolic;
	std::vector<Vec> middles; // orthogonal, norms alternating +1, -1, ...
	int next = 0;

	explicit BlockBuilder(int n_, bool sp) : n(n_), symplectic(sp), x(n_, std::vector<Rational>(n_)) {}

	Vec unit(int i) const
	{
		Vec v(n);
		v[i] = 1;
		return v;
	}

	// e_1 .. e_a with x e_i = e_{i-1}, starting at coordinate `at`
	void chain(int at, int a)
	{
		for (int i = 1; i < a; ++i)
			x[at + i - 1][at + i] = 1;
	}

	void pair_block(int a)
	{
		int w = next, ws = next + a;
		chain(w, a);
		// x w*_i = -w*_{i+1}
		for (int i = 0; i + 1 < a; ++i)
			x[ws + i + 1][ws + i] = -1;
		for (int i = 0; i < a; ++i)
			hyperbolic.emplace_back(unit(w + i), unit(ws + i));
		next += 2 * a;
	}

	// <e_i, e_j> = eps (-1)^i delta_{i+j, a+1}
	void self_dual_block(int a)
	{
		int at = next;
		chain(at, a);
		int eps = 1;
		if (a % 2 == 1) {
			int m = (a + 1) / 2;
			int want = middles.size() % 2 == 0 ? 1 : -1;
			eps = want * (m % 2 == 0 ? 1 : -1);
			middles.push_back(unit(at + m - 1));
		}
		for (int i = 1; 2 * i < a + 1; ++i) {
			int s = eps * (i % 2 == 0 ? 1 : -1);
			Vec u2 = unit(at + a - i);
			for (auto &c : u2)
				c *= Rational(s);
			hyperbolic.emplace_back(unit(at + i - 1), u2);
		}
		next += a;
	}

	void close_middles(std::optional<Vec> &centre)
	{
		std::size_t k = 0;
		for (; k + 1 < middles.size(); k += 2) {
			Vec u(n), u2(n);
			for (int i = 0; i < n; ++i) {
				u[i] = middles[k][i] + middles[k + 1][i];
				u2[i] = (middles[k][i] - middles[k + 1][i]) / Rational(2);
			}
			hyperbolic.emplace_back(u, u2);
		}
		if (k < middles.size())
			centre = middles[k];
	}
};

} // namespace

NilpotentRep nilpotent_from_partition(ClassicalFamily const &family, Partition const &p, int variant)
{
	int n = family.n();
	if (p.size() != n || !is_member(family, p))
		throw InvalidInput(fmt::format("{} is not a nilpotent orbit label for {}", p.str(), family.str()));

	std::vector<int> parts(p.parts().begin(), p.parts().end());
	if (variant % 2 == 1)
		std::reverse(parts.begin(), parts.end());

	if (family.kind() == MatrixFamily::SL) {
		IntMatrix x(n, n);
		int at = 0;
		for (int a : parts) {
			for (int i = 1; i < a; ++i)
				x(at + i - 1, at + i) = 1;
			at += a;
		}
		if (!satisfies_rank_identity(x, p))
			throw ConsistencyError("sl representative fails the rank identity");
		return {family, p, x};
	}

	BlockBuilder bb(n, family.kind() == MatrixFamily::SP);
	std::map<int, int> mult;
	for (int a : parts)
		mult[a] += 1;
	std::vector<int> order;
	for (int a : parts)
		if (order.empty() || order.back() != a)
			order.push_back(a);
	for (int a : order) {
		int m = mult[a];
		for (int k = 0; k < m / 2; ++k)
			bb.pair_block(a);
		if (m % 2 == 1)
			bb.self_dual_block(a);
	}
	std::optional<Vec> centre;
	bb.close_middles(centre);
	if (variant % 2 == 1)
		std::reverse(bb.hyperbolic.begin(), bb.hyperbolic.end());

	// columns of P are the new basis vectors v_1 .. v_n
	int h = static_cast<int>(bb.hyperbolic.size());
	if (2 * h + (centre ? 1 : 0) != n)
		throw ConsistencyError("block decomposition does not fill the space");
	std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n));
	auto put = [&](int col, Vec const &v) {
		for (int i = 0; i < n; ++i)
			P[i][col] = v[i];
	};
	for (int k = 0; k < h; ++k) {
		put(k, bb.hyperbolic[k].first);
		put(n - 1 - k, bb.hyperbolic[k].second);
	}
	if (centre)
		put(h, *centre);
	auto Pinv = inverse(P);

	std::vector<std::vector<Rational>> xq(n, std::vector<Rational>(n));
	std::vector<std::vector<Rational>> xp(n, std::vector<Rational>(n));
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			if (bb.x[i][k].is_zero())
				continue;
			for (int j = 0; j < n; ++j)
				if (!P[k][j].is_zero())
					xp[i][j] += bb.x[i][k] * P[k][j];
		}
	std::int64_t den = 1;
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			if (Pinv[i][k].is_zero())
				continue;
			for (int j = 0; j < n; ++j)
				if (!xp[k][j].is_zero())
					xq[i][j] += Pinv[i][k] * xp[k][j];
		}
	for (auto const &row : xq)
		for (auto const &v : row)
			den = std::lcm(den, v.den());
	IntMatrix x(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			x(i, j) = (xq[i][j] * Rational(den)).to_integer();
	auto g = std::max<std::int64_t>(content(x), 1);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			x(i, j) /= g;

	if (!realization(family).contains(x))
		throw ConsistencyError(fmt::format("{} {}: representative does not preserve the form",
		                                   family.str(), p.str()));
	if (!satisfies_rank_identity(x, p))
		throw ConsistencyError(fmt::format("{} {}: representative fails the rank identity",
		                                   family.str(), p.str()));
	return {family, p, x};
}

int ad_nilpotency_order(NilpotentRep const &rep)
{
	auto const &real = realization(rep.family);
	int order = 1;
	for (auto const &b : real.basis()) {
		IntMatrix v = b;
		int k = 0;
		while (!v.is_zero()) {
			v = commutator(rep.matrix, v);
			++k;
		}
		order = std::max(order, k);
	}
	return order;
}

namespace {

int operator_order(IntMatrix const &a)
{
	IntMatrix power = a;
	int k = 1;
	while (!power.is_zero()) {
		power = power * a;
		++k;
		if (k > 4 * a.rows() + 4)
			throw ConsistencyError("operator is not nilpotent");
	}
	return k;
}

} // namespace

int little_adjoint_order(NilpotentRep const &rep)
{
	auto const &f = rep.family;
	int n = f.n();
	if (f.kind() == MatrixFamily::SO && n % 2 == 1)
		return operator_order(rep.matrix);
	if (f.kind() != MatrixFamily::SP)
		throw InvalidInput(f.str() + " has lacing number 1");

	std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
	int d = 0;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			idx[i][j] = d++;
	IntMatrix L(d, d);
	// e_k ^ e_l with sign, dropping e_k ^ e_k
	auto add = [&](int col, int k, int l, std::int64_t c) {
		if (k == l || c == 0)
			return;
		if (k < l)
			L(idx[k][l], col) = checked::add(L(idx[k][l], col), c);
		else
			L(idx[l][k], col) = checked::sub(L(idx[l][k], col), c);
	};
	auto const &x = rep.matrix;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			int col = idx[i][j];
			for (int k = 0; k < n; ++k) {
				add(col, k, j, x(k, i));
				add(col, i, k, x(k, j));
			}
		}
	return operator_order(L);
}

int centralizer_nullity(NilpotentRep const &rep)
{
	auto const &real = realization(rep.family);
	IntMatrix ad(real.dim(), real.dim());
	for (int j = 0; j < real.dim(); ++j) {
		auto c = real.coords(commutator(rep.matrix, real.basis()[j]));
		for (int i = 0; i < real.dim(); ++i)
			ad(i, j) = c[i];
	}
	return real.dim() - rank(ad);
}

OrbitMeasure measure_orbit(ClassicalFamily const &family, Partition const &p)
{
	static std::mutex mu;
	static std::map<std::pair<ClassicalFamily, Partition>, OrbitMeasure> cache;
	auto key = std::make_pair(family, p);
	{
		std::lock_guard lock(mu);
		if (auto it = cache.find(key); it != cache.end())
			return it->second;
	}
	auto rep = nilpotent_from_partition(family, p);
	OrbitMeasure m{ad_nilpotency_order(rep), family.lacing() == 2 ? little_adjoint_order(rep) : 0,
	               centralizer_nullity(rep)};
	std::lock_guard lock(mu);
	cache.emplace(key, m);
	return m;
}

OracleMax max_orbit_in_Nq(ClassicalFamily const &family, int q, OrbitCase c, int max_n)
{
	if (family.n() > max_n)
		throw InvalidInput(fmt::format("{} is above the oracle bound n <= {}", family.str(), max_n));
	if (q < 1)
		throw InvalidInput("q must be positive");
	if (c == OrbitCase::Coprincipal && (family.lacing() != 2 || q % 2 != 0))
		throw InvalidInput(fmt::format("{}: no coprincipal case for q = {}", family.str(), q));

	OracleMax best;
	best.dim = -1;
	for (auto const &p : partitions_of(family.n())) {
		if (!is_member(family, p))
			continue;
		auto m = measure_orbit(family, p);
		// coprincipal: the variety is ^L N_{q/r}, i.e. pi(x)^{2q/r} = 0
		bool inside = c == OrbitCase::Coprincipal ? m.little_order <= 2 * q / family.lacing()
		                                          : m.ad_order <= 2 * q;
		if (!inside)
			continue;
		++best.candidates;
		int dim = family.dim() - m.centralizer;
		if (dim > best.dim) {
			best.dim = dim;
			best.partition = p;
			best.tied.clear();
			best.unique = true;
		} else if (dim == best.dim) {
			best.unique = false;
			best.tied.push_back(p);
		}
	}
	if (best.candidates == 0)
		throw ConsistencyError("the zero orbit should always qualify");
	return best;
}

} // namespace orbitq
