#pragma once

// The group side: Z^n, symmetric generating sets, word length, and the group
// algebra with free-algebra coefficients where the images alpha(lambda_g) live.

#include "qiso/lattice.hpp"
#include "qiso/ncalg.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qiso {

class InvalidGenSet : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// Finite symmetric generating set of Z^n with 0 excluded.
class GenSet {
public:
	// Validates: common rank >= 1, nonempty, no zero, no duplicates, closed
	// under negation, generates Z^n. Throws InvalidGenSet naming the failure.
	GenSet(std::size_t rank, std::vector<GroupElement> gens);

	std::size_t rank() const { return rank_; }
	// Lexicographically sorted.
	const std::vector<GroupElement> &elements() const { return sorted_; }
	std::size_t size() const { return sorted_.size(); }
	bool contains(const GroupElement &g) const;

	// a1, -a1, a2, -a2, ... For rank 1 the a_i are the positive generators
	// in increasing order; otherwise the pairs keep their first appearance in
	// the input and a_i is the member whose first nonzero coordinate is
	// positive.
	const std::vector<GroupElement> &display_order() const { return display_; }
	// The representatives a_1, ..., a_k.
	std::vector<GroupElement> positive_representatives() const;

	const Alphabet &alphabet() const { return alphabet_; }
	std::int64_t max_norm() const;

private:
	std::size_t rank_;
	std::vector<GroupElement> sorted_;
	std::vector<GroupElement> display_;
	Alphabet alphabet_;
};

bool is_positive_representative(const GroupElement &g);

class SearchExhausted : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// Minimum number of generators summing to g, by breadth-first search on the
// Cayley graph. Throws SearchExhausted past `max_radius` layers.
int word_length(const GroupElement &g, const GenSet &S, int max_radius = 100000);

// All elements of word length <= radius, with their lengths.
std::map<GroupElement, int> word_length_ball(const GenSet &S, int radius);

// Finitely supported map Z^n -> free algebra; zero coefficients are never stored.
class ActionElement {
public:
	explicit ActionElement(std::size_t rank) : rank_(rank) {}
	static ActionElement unit(std::size_t rank);

	std::size_t rank() const { return rank_; }
	const std::map<GroupElement, NcPolynomial> &support() const { return support_; }
	void add(const GroupElement &g, const NcPolynomial &p);
	bool is_zero() const { return support_.empty(); }

	friend bool operator==(const ActionElement &, const ActionElement &) = default;

private:
	std::size_t rank_;
	std::map<GroupElement, NcPolynomial> support_;
};

// alpha(lambda_gamma) = sum_{gamma'} lambda_{gamma'} (x) q[gamma|gamma'].
ActionElement generator_action(const GroupElement &gamma, const GenSet &S);
ActionElement convolve(const ActionElement &x, const ActionElement &y);
NcPolynomial coefficient(const ActionElement &x, const GroupElement &g);

struct GroupWord {
	std::vector<GroupElement> letters;
	GroupElement sum;

	GroupWord() = default;
	GroupWord(std::vector<GroupElement> letters, std::size_t rank);
	std::size_t length() const { return letters.size(); }
	std::string to_string() const;

	friend bool operator==(const GroupWord &a, const GroupWord &b) { return a.letters == b.letters; }
	// Shorter first, then lexicographic on letters.
	friend bool operator<(const GroupWord &a, const GroupWord &b)
	{
		if (a.letters.size() != b.letters.size())
			return a.letters.size() < b.letters.size();
		return a.letters < b.letters;
	}
};

// alpha(lambda_{w_1}) ... alpha(lambda_{w_m}); the empty word gives the unit.
ActionElement word_action(const GroupWord &w, const GenSet &S);

using IdentityPair = std::pair<GroupWord, GroupWord>;

// Canonical words (letters sorted) of length <= max_len, grouped by sum;
// each group sorted by GroupWord order. Commutativity of Z^n makes letter
// order irrelevant to the sum.
std::map<GroupElement, std::vector<GroupWord>> identity_classes(const GenSet &S, int max_len);

// All unordered pairs of distinct canonical words with equal sum and lengths
// <= max_len, each pair ordered (first < second), the list sorted.
std::vector<IdentityPair> enumerate_identity_pairs(const GenSet &S, int max_len);

} // namespace qiso
