#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orbitq {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b)
{
	std::int64_t r;
	if (__builtin_add_overflow(a, b, &r))
		throw std::overflow_error("integer overflow in addition");
	return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b)
{
	std::int64_t r;
	if (__builtin_sub_overflow(a, b, &r))
		throw std::overflow_error("integer overflow in subtraction");
	return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
	std::int64_t r;
	if (__builtin_mul_overflow(a, b, &r))
		throw std::overflow_error("integer overflow in multiplication");
	return r;
}

} // namespace checked

/// Exact fraction over int64 with overflow-checked arithmetic.
/// Always stored reduced with a positive denominator.
class Rational
{
  public:
	constexpr Rational() = default;
	Rational(std::int64_t n) : num_(n), den_(1) {}
	Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d)
	{
		if (d == 0)
			throw std::domain_error("zero denominator");
		normalize();
	}

	std::int64_t num() const { return num_; }
	std::int64_t den() const { return den_; }

	bool is_integer() const { return den_ == 1; }
	bool is_zero() const { return num_ == 0; }

	/// Numerator when integral; throws otherwise.
	std::int64_t to_integer() const
	{
		if (den_ != 1)
			throw std::domain_error("rational " + str() + " is not an integer");
		return num_;
	}

	std::string str() const
	{
		if (den_ == 1)
			return std::to_string(num_);
		return std::to_string(num_) + "/" + std::to_string(den_);
	}

	Rational operator-() const { return Rational(checked::sub(0, num_), den_); }

	friend Rational operator+(Rational const &a, Rational const &b)
	{
		auto g = std::gcd(a.den_, b.den_);
		auto l = a.den_ / g;
		return Rational(checked::add(checked::mul(a.num_, b.den_ / g),
		                             checked::mul(b.num_, l)),
		                checked::mul(l, b.den_));
	}
	friend Rational operator-(Rational const &a, Rational const &b) { return a + (-b); }
	friend Rational operator*(Rational const &a, Rational const &b)
	{
		// cross-cancel first to keep intermediates small
		auto g1 = std::gcd(a.num_, b.den_);
		auto g2 = std::gcd(b.num_, a.den_);
		if (g1 == 0)
			g1 = 1;
		if (g2 == 0)
			g2 = 1;
		return Rational(checked::mul(a.num_ / g1, b.num_ / g2),
		                checked::mul(a.den_ / g2, b.den_ / g1));
	}
	friend Rational operator/(Rational const &a, Rational const &b)
	{
		if (b.num_ == 0)
			throw std::domain_error("division by zero");
		return a * Rational(b.den_, b.num_);
	}

	Rational &operator+=(Rational const &o) { return *this = *this + o; }
	Rational &operator-=(Rational const &o) { return *this = *this - o; }
	Rational &operator*=(Rational const &o) { return *this = *this * o; }
	Rational &operator/=(Rational const &o) { return *this = *this / o; }

	friend bool operator==(Rational const &a, Rational const &b) = default;
	friend std::strong_ordering operator<=>(Rational const &a, Rational const &b)
	{
		// denominators are positive, so cross-multiplication preserves order
		return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
	}

	friend std::ostream &operator<<(std::ostream &os, Rational const &r)
	{
		return os << r.str();
	}

  private:
	void normalize()
	{
		if (den_ < 0) {
			num_ = checked::sub(0, num_);
			den_ = checked::sub(0, den_);
		}
		auto g = std::gcd(num_, den_);
		if (g > 1) {
			num_ /= g;
			den_ /= g;
		}
	}

	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
};

} // namespace orbitq
