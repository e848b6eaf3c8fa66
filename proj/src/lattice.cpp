#include "qiso/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace qiso {

bool GroupElement::is_zero() const
{
	for (auto c : coords_)
		if (c != 0)
			return false;
	return true;
}

std::size_t GroupElement::support_size() const
{
	std::size_t k = 0;
	for (auto c : coords_)
		k += c != 0;
	return k;
}

std::int64_t GroupElement::l1_norm() const
{
	std::int64_t s = 0;
	for (auto c : coords_)
		s += std::llabs(c);
	return s;
}

std::int64_t GroupElement::max_norm() const
{
	std::int64_t s = 0;
	for (auto c : coords_)
		s = std::max<std::int64_t>(s, std::llabs(c));
	return s;
}

GroupElement GroupElement::operator-() const
{
	GroupElement r(*this);
	for (auto &c : r.coords_)
		c = -c;
	return r;
}

GroupElement &GroupElement::operator+=(const GroupElement &other)
{
	if (other.rank() != rank())
		throw std::invalid_argument("rank mismatch in group element sum");
	for (std::size_t i = 0; i < coords_.size(); ++i)
		coords_[i] += other.coords_[i];
	return *this;
}

GroupElement &GroupElement::operator-=(const GroupElement &other)
{
	if (other.rank() != rank())
		throw std::invalid_argument("rank mismatch in group element difference");
	for (std::size_t i = 0; i < coords_.size(); ++i)
		coords_[i] -= other.coords_[i];
	return *this;
}

GroupElement operator*(std::int64_t k, GroupElement a)
{
	for (auto &c : a.coords_)
		c *= k;
	return a;
}

std::string GroupElement::to_string() const
{
	if (coords_.size() == 1)
		return std::to_string(coords_[0]);
	std::string s = "(";
	for (std::size_t i = 0; i < coords_.size(); ++i)
	{
		if (i)
			s += ',';
		s += std::to_string(coords_[i]);
	}
	return s + ")";
}

IntMatrix IntMatrix::identity(std::size_t n)
{
	IntMatrix m(n);
	for (std::size_t i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

GroupElement IntMatrix::apply(const GroupElement &g) const
{
	if (g.rank() != n_)
		throw std::invalid_argument("rank mismatch in matrix application");
	std::vector<std::int64_t> out(n_, 0);
	for (std::size_t r = 0; r < n_; ++r)
		for (std::size_t c = 0; c < n_; ++c)
			out[r] += at(r, c) * g[c];
	return GroupElement(std::move(out));
}

IntMatrix IntMatrix::operator*(const IntMatrix &other) const
{
	IntMatrix m(n_);
	for (std::size_t r = 0; r < n_; ++r)
		for (std::size_t k = 0; k < n_; ++k)
			for (std::size_t c = 0; c < n_; ++c)
				m.at(r, c) += at(r, k) * other.at(k, c);
	return m;
}

IntMatrix IntMatrix::operator-() const
{
	IntMatrix m(*this);
	for (auto &x : m.a_)
		x = -x;
	return m;
}

std::int64_t IntMatrix::determinant() const
{
	// Bareiss fraction-free elimination.
	if (n_ == 0)
		return 1;
	std::vector<std::int64_t> a = a_;
	std::int64_t sign = 1, prev = 1;
	for (std::size_t k = 0; k + 1 < n_; ++k)
	{
		if (a[k * n_ + k] == 0)
		{
			std::size_t p = k + 1;
			while (p < n_ && a[p * n_ + k] == 0)
				++p;
			if (p == n_)
				return 0;
			for (std::size_t c = 0; c < n_; ++c)
				std::swap(a[k * n_ + c], a[p * n_ + c]);
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n_; ++i)
			for (std::size_t j = k + 1; j < n_; ++j)
				a[i * n_ + j] = (a[i * n_ + j] * a[k * n_ + k] - a[i * n_ + k] * a[k * n_ + j]) / prev;
		prev = a[k * n_ + k];
	}
	return sign * a[(n_ - 1) * n_ + (n_ - 1)];
}

std::string IntMatrix::to_string() const
{
	std::ostringstream os;
	os << '[';
	for (std::size_t r = 0; r < n_; ++r)
	{
		if (r)
			os << ',';
		os << '[';
		for (std::size_t c = 0; c < n_; ++c)
		{
			if (c)
				os << ',';
			os << at(r, c);
		}
		os << ']';
	}
	os << ']';
	return os.str();
}

std::int64_t lattice_index(const std::vector<GroupElement> &vectors, std::size_t rank)
{
	std::vector<std::vector<std::int64_t>> rows;
	for (const auto &v : vectors)
	{
		if (v.rank() != rank)
			throw std::invalid_argument("rank mismatch in lattice_index");
		rows.push_back(v.coords());
	}
	// Row-style Hermite reduction by repeated Euclid on each column.
	std::size_t top = 0;
	std::int64_t index = 1;
	for (std::size_t col = 0; col < rank; ++col)
	{
		for (;;)
		{
			std::size_t pivot = rows.size();
			for (std::size_t r = top; r < rows.size(); ++r)
				if (rows[r][col] != 0 &&
				    (pivot == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[pivot][col])))
					pivot = r;
			if (pivot == rows.size())
				return 0;
			std::swap(rows[top], rows[pivot]);
			bool done = true;
			for (std::size_t r = top + 1; r < rows.size(); ++r)
			{
				std::int64_t q = rows[r][col] / rows[top][col];
				if (q != 0)
					for (std::size_t c = col; c < rank; ++c)
						rows[r][c] -= q * rows[top][c];
				if (rows[r][col] != 0)
					done = false;
			}
			if (done)
				break;
		}
		index *= std::llabs(rows[top][col]);
		++top;
	}
	return index;
}

std::vector<std::int64_t> bezout_coefficients(const std::vector<std::int64_t> &values,
                                              std::int64_t &gcd_out)
{
	std::vector<std::int64_t> coeffs(values.size(), 0);
	if (values.empty())
	{
		gcd_out = 0;
		return coeffs;
	}
	// Invariant: g = sum coeffs_i * values_i over processed prefix.
	std::int64_t g = values[0];
	coeffs[0] = 1;
	for (std::size_t i = 1; i < values.size(); ++i)
	{
		std::int64_t old_r = g, r = values[i];
		std::int64_t old_s = 1, s = 0, old_t = 0, t = 1;
		while (r != 0)
		{
			std::int64_t q = old_r / r;
			std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
			std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
			std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
		}
		for (std::size_t j = 0; j < i; ++j)
			coeffs[j] *= old_s;
		coeffs[i] = old_t;
		g = old_r;
	}
	if (g < 0)
	{
		g = -g;
		for (auto &c : coeffs)
			c = -c;
	}
	gcd_out = g;
	return coeffs;
}

} // namespace qiso
