#pragma once

// Exact free *-algebra on the fundamental-unitary symbols q[r|c], r,c in S.
//
// Adjoints never appear as separate letters: q[r|c]* is the plain symbol
// q[-r|-c], so the involution and the antipode are index maps on letters.
// Words are packed into std::u16string (one code unit per symbol id), which
// gives small-buffer storage and substring search for rewriting.

#include "qiso/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qiso {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using Symbol = char16_t;
using SymbolWord = std::u16string;

std::string to_string(const Rational &r);

// Degree first, then lexicographic on symbol ids. Symbol ids follow the
// lexicographic order of (row, col) index vectors, so this is the
// deg-lex order on Z^n index pairs.
inline bool word_less(const SymbolWord &a, const SymbolWord &b)
{
	if (a.size() != b.size())
		return a.size() < b.size();
	return a < b;
}

struct WordLess {
	bool operator()(const SymbolWord &a, const SymbolWord &b) const { return word_less(a, b); }
};

// Symbol table for one generating set. Generators are kept sorted
// lexicographically; symbol id = row_index * |S| + col_index.
class Alphabet {
public:
	Alphabet() = default;
	explicit Alphabet(std::vector<GroupElement> generators);

	std::size_t generator_count() const { return gens_.size(); }
	std::size_t symbol_count() const { return gens_.size() * gens_.size(); }
	const std::vector<GroupElement> &generators() const { return gens_; }
	std::size_t index_of(const GroupElement &g) const;
	std::size_t negation_index(std::size_t i) const { return neg_[i]; }

	Symbol symbol(std::size_t row, std::size_t col) const
	{
		return static_cast<Symbol>(row * gens_.size() + col);
	}
	Symbol symbol(const GroupElement &row, const GroupElement &col) const
	{
		return symbol(index_of(row), index_of(col));
	}
	std::size_t row_index(Symbol s) const { return s / gens_.size(); }
	std::size_t col_index(Symbol s) const { return s % gens_.size(); }
	const GroupElement &row(Symbol s) const { return gens_[row_index(s)]; }
	const GroupElement &col(Symbol s) const { return gens_[col_index(s)]; }

	// (r,c) -> (-r,-c)
	Symbol adjoint(Symbol s) const { return symbol(neg_[row_index(s)], neg_[col_index(s)]); }
	// (r,c) -> (-c,-r)
	Symbol antipode(Symbol s) const { return symbol(neg_[col_index(s)], neg_[row_index(s)]); }

	// "q[r|c]"
	std::string render(Symbol s) const;
	std::string render(const SymbolWord &w) const;

private:
	std::vector<GroupElement> gens_;
	std::vector<std::size_t> neg_;
};

struct NcTerm {
	SymbolWord word;
	Rational coeff;
	friend bool operator==(const NcTerm &, const NcTerm &) = default;
};

// Canonical polynomial: terms strictly decreasing in the monomial order,
// no zero coefficients. Structural equality is algebra equality in the free
// algebra.
class NcPolynomial {
public:
	NcPolynomial() = default;
	explicit NcPolynomial(Rational c);
	explicit NcPolynomial(SymbolWord w, Rational c = Rational(1));
	static NcPolynomial from_terms(std::vector<NcTerm> terms);
	static NcPolynomial one() { return NcPolynomial(Rational(1)); }
	static NcPolynomial symbol(Symbol s) { return NcPolynomial(SymbolWord(1, s)); }

	const std::vector<NcTerm> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	// Leading (largest) term; precondition: nonzero.
	const NcTerm &leading() const { return terms_.front(); }
	std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().word.size(); }
	Rational constant_term() const;
	bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].word.empty()); }
	bool is_monomial() const { return terms_.size() == 1; }
	// Scaled so the leading coefficient is 1.
	NcPolynomial monic() const;
	std::set<Symbol> symbols() const;

	NcPolynomial operator-() const;
	NcPolynomial &operator+=(const NcPolynomial &other);
	NcPolynomial &operator-=(const NcPolynomial &other);
	NcPolynomial &operator*=(const Rational &c);
	friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial &b) { return a += b; }
	friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial &b) { return a -= b; }
	friend NcPolynomial operator*(const Rational &c, NcPolynomial p) { return p *= c; }
	friend bool operator==(const NcPolynomial &, const NcPolynomial &) = default;

	// "q[r|c]·q[r|c]" terms joined by " + " / " - "; "0" for zero.
	std::string render(const Alphabet &alphabet) const;
	// Same layout with caller-supplied symbol labels.
	std::string render(const std::function<std::string(Symbol)> &label) const;

private:
	std::vector<NcTerm> terms_;
};

NcPolynomial mul(const NcPolynomial &p, const NcPolynomial &q);
NcPolynomial operator*(const NcPolynomial &p, const NcPolynomial &q);
// Left/right multiplication by a single word.
NcPolynomial mul(const SymbolWord &left, const NcPolynomial &p, const SymbolWord &right);

SymbolWord adjoint(const SymbolWord &w, const Alphabet &alphabet);
SymbolWord antipode(const SymbolWord &w, const Alphabet &alphabet);
NcPolynomial adjoint(const NcPolynomial &p, const Alphabet &alphabet);
NcPolynomial antipode(const NcPolynomial &p, const Alphabet &alphabet);

class InconsistencyError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

enum class Fact : std::uint8_t { zero = 1, normal = 2, projection = 4 };

struct RewriteRule {
	SymbolWord lhs;
	NcPolynomial rhs;
};

// Oriented, interreduced string-rewriting rules over the free algebra.
// Rewriting is leftmost: the redex with the smallest start position is
// contracted first (rules are interreduced, so at most one lhs starts there).
class RewriteSystem {
public:
	RewriteSystem() = default;
	explicit RewriteSystem(std::size_t symbol_count);

	// Adds rel = 0. Returns true when the system changed. Throws
	// InconsistencyError when rel reduces to a nonzero constant.
	bool add_relation(const NcPolynomial &rel);

	NcPolynomial normal_form(const NcPolynomial &p) const;
	NcPolynomial normal_form(const SymbolWord &w) const;
	bool reduces_to_zero(const NcPolynomial &p) const { return normal_form(p).is_zero(); }

	std::size_t rule_count() const { return rules_.size(); }
	const std::map<SymbolWord, NcPolynomial, WordLess> &rules() const { return rules_; }
	// Relations lhs - rhs, in rule order.
	std::vector<NcPolynomial> relations() const;

	bool is_zero_symbol(Symbol s) const
	{
		return static_cast<std::size_t>(s) < zero_.size() && zero_[static_cast<std::size_t>(s)];
	}
	std::vector<Symbol> zero_symbols() const;
	void mark(Symbol s, Fact f);
	bool has(Symbol s, Fact f) const;

	// Largest number of single-letter reductions performed by one
	// normal_form call so far.
	std::size_t max_reduction_steps() const { return max_steps_; }

private:
	struct Redex {
		std::size_t pos;
		const RewriteRule *rule;
	};
	std::optional<Redex> find_redex(const SymbolWord &w) const;
	NcPolynomial reduce_word(const SymbolWord &w, std::size_t &steps) const;
	void rebuild_index() const;
	void ensure_symbol(Symbol s);

	std::map<SymbolWord, NcPolynomial, WordLess> rules_;
	std::vector<bool> zero_;
	std::vector<std::uint8_t> facts_;
	std::size_t symbol_count_ = 0;

	mutable bool index_dirty_ = true;
	mutable std::vector<RewriteRule> rule_list_;
	mutable std::vector<std::vector<std::uint32_t>> by_first_;
	mutable std::unordered_map<SymbolWord, NcPolynomial> cache_;
	mutable std::size_t max_steps_ = 0;
};

// Free-function form matching the value-oriented use in tests.
NcPolynomial normal_form(const NcPolynomial &p, const RewriteSystem &system);

} // namespace qiso
