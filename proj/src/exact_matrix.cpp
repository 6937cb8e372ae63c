#include "orbitq/exact_matrix.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>

#include <numeric>

namespace orbitq {

IntMatrix IntMatrix::identity(int n)
{
	IntMatrix m(n, n);
	for (int i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

bool IntMatrix::is_zero() const
{
	for (auto v : data_)
		if (v != 0)
			return false;
	return true;
}

IntMatrix IntMatrix::transpose() const
{
	IntMatrix t(cols_, rows_);
	for (int i = 0; i < rows_; ++i)
		for (int j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

IntMatrix operator*(IntMatrix const &a, IntMatrix const &b)
{
	if (a.cols_ != b.rows_)
		throw InvalidInput("matrix shapes do not match");
	IntMatrix c(a.rows_, b.cols_);
	for (int i = 0; i < a.rows_; ++i)
		for (int k = 0; k < a.cols_; ++k) {
			auto aik = a(i, k);
			if (aik == 0)
				continue;
			for (int j = 0; j < b.cols_; ++j)
				if (b(k, j) != 0)
					c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
		}
	return c;
}

IntMatrix operator+(IntMatrix const &a, IntMatrix const &b)
{
	IntMatrix c = a;
	for (std::size_t i = 0; i < c.data_.size(); ++i)
		c.data_[i] = checked::add(c.data_[i], b.data_[i]);
	return c;
}

IntMatrix operator-(IntMatrix const &a, IntMatrix const &b)
{
	IntMatrix c = a;
	for (std::size_t i = 0; i < c.data_.size(); ++i)
		c.data_[i] = checked::sub(c.data_[i], b.data_[i]);
	return c;
}

IntMatrix operator*(std::int64_t s, IntMatrix const &a)
{
	IntMatrix c = a;
	for (auto &v : c.data_)
		v = checked::mul(s, v);
	return c;
}

std::string IntMatrix::str() const
{
	std::string out;
	for (int i = 0; i < rows_; ++i) {
		std::vector<std::int64_t> row(data_.begin() + std::size_t(i) * cols_,
		                              data_.begin() + std::size_t(i + 1) * cols_);
		out += fmt::format("[{}]\n", fmt::join(row, " "));
	}
	return out;
}

IntMatrix commutator(IntMatrix const &a, IntMatrix const &b) { return a * b - b * a; }

int rank(IntMatrix m)
{
	int const rows = m.rows(), cols = m.cols();
	int r = 0;
	for (int c = 0; c < cols && r < rows; ++c) {
		int piv = -1;
		for (int i = r; i < rows; ++i)
			if (m(i, c) != 0 && (piv < 0 || std::abs(m(i, c)) < std::abs(m(piv, c))))
				piv = i;
		if (piv < 0)
			continue;
		if (piv != r)
			for (int j = 0; j < cols; ++j)
				std::swap(m(r, j), m(piv, j));
		for (int i = r + 1; i < rows; ++i) {
			auto f = m(i, c);
			if (f == 0)
				continue;
			auto p = m(r, c);
			auto g = std::gcd(p, f);
			auto mp = p / g, mf = f / g;
			std::int64_t content = 0;
			for (int j = c; j < cols; ++j) {
				m(i, j) = checked::sub(checked::mul(mp, m(i, j)), checked::mul(mf, m(r, j)));
				content = std::gcd(content, m(i, j));
			}
			if (content > 1)
				for (int j = c; j < cols; ++j)
					m(i, j) /= content;
		}
		++r;
	}
	return r;
}

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> m)
{
	int n = static_cast<int>(m.size());
	std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
	for (int i = 0; i < n; ++i)
		inv[i][i] = 1;
	for (int c = 0; c < n; ++c) {
		int piv = c;
		while (piv < n && m[piv][c].is_zero())
			++piv;
		if (piv == n)
			throw InvalidInput("singular matrix");
		std::swap(m[piv], m[c]);
		std::swap(inv[piv], inv[c]);
		Rational d = m[c][c];
		for (int j = 0; j < n; ++j) {
			m[c][j] = m[c][j] / d;
			inv[c][j] = inv[c][j] / d;
		}
		for (int i = 0; i < n; ++i) {
			if (i == c || m[i][c].is_zero())
				continue;
			Rational f = m[i][c];
			for (int j = 0; j < n; ++j) {
				m[i][j] -= f * m[c][j];
				inv[i][j] -= f * inv[c][j];
			}
		}
	}
	return inv;
}

} // namespace orbitq
