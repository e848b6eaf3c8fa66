#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qiso {

// An element of the lattice group Z^n, written additively.
class GroupElement {
public:
	GroupElement() = default;
	explicit GroupElement(std::size_t rank) : coords_(rank, 0) {}
	explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
	GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

	std::size_t rank() const { return coords_.size(); }
	const std::vector<std::int64_t> &coords() const { return coords_; }
	std::int64_t operator[](std::size_t i) const { return coords_[i]; }

	bool is_zero() const;
	// Number of nonzero coordinates.
	std::size_t support_size() const;
	std::int64_t l1_norm() const;
	std::int64_t max_norm() const;

	GroupElement operator-() const;
	GroupElement &operator+=(const GroupElement &other);
	GroupElement &operator-=(const GroupElement &other);
	friend GroupElement operator+(GroupElement a, const GroupElement &b) { return a += b; }
	friend GroupElement operator-(GroupElement a, const GroupElement &b) { return a -= b; }
	friend GroupElement operator*(std::int64_t k, GroupElement a);

	// Lexicographic on coordinates; this is the fixed total order used for
	// symbol and monomial ordering.
	friend bool operator==(const GroupElement &, const GroupElement &) = default;
	friend std::strong_ordering operator<=>(const GroupElement &a, const GroupElement &b)
	{
		return a.coords_ <=> b.coords_;
	}

	// "3" for rank 1, "(2,-1)" otherwise.
	std::string to_string() const;

private:
	std::vector<std::int64_t> coords_;
};

// Integer matrix acting on Z^n column vectors; row-major.
class IntMatrix {
public:
	IntMatrix() = default;
	explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
	static IntMatrix identity(std::size_t n);

	std::size_t dim() const { return n_; }
	std::int64_t &at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
	std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

	GroupElement apply(const GroupElement &g) const;
	IntMatrix operator*(const IntMatrix &other) const;
	IntMatrix operator-() const;
	std::int64_t determinant() const;

	friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
	friend auto operator<=>(const IntMatrix &a, const IntMatrix &b) { return a.a_ <=> b.a_; }

	std::string to_string() const;

private:
	std::size_t n_ = 0;
	std::vector<std::int64_t> a_;
};

// Index of the sublattice spanned by `vectors` in Z^n: 0 when the span has
// lower rank, otherwise |det| of its Hermite basis. The vectors generate Z^n
// exactly when the index is 1.
std::int64_t lattice_index(const std::vector<GroupElement> &vectors, std::size_t rank);

// Extended Euclid over a list: coefficients m with sum m_i * values_i = gcd.
std::vector<std::int64_t> bezout_coefficients(const std::vector<std::int64_t> &values,
                                              std::int64_t &gcd_out);

} // namespace qiso
