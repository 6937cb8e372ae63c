#pragma once

#include "orbitq/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbitq {

/// Dense integer matrix with overflow-checked arithmetic.
class IntMatrix
{
  public:
	IntMatrix() = default;
	IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
	static IntMatrix identity(int n);

	int rows() const { return rows_; }
	int cols() const { return cols_; }
	std::int64_t &operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
	std::int64_t operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

	bool is_zero() const;
	IntMatrix transpose() const;
	friend bool operator==(IntMatrix const &, IntMatrix const &) = default;
	friend IntMatrix operator*(IntMatrix const &a, IntMatrix const &b);
	friend IntMatrix operator+(IntMatrix const &a, IntMatrix const &b);
	friend IntMatrix operator-(IntMatrix const &a, IntMatrix const &b);
	friend IntMatrix operator*(std::int64_t c, IntMatrix const &a);
	std::string str() const;

  private:
	int rows_ = 0;
	int cols_ = 0;
	std::vector<std::int64_t> data_;
};

/// [a, b] = ab - ba
IntMatrix commutator(IntMatrix const &a, IntMatrix const &b);

/// Rank over Q by fraction-free elimination; rows are divided by their content
/// after every step to keep entries small.
int rank(IntMatrix m);

/// Inverse over Q; throws if singular.
std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> m);

} // namespace orbitq
