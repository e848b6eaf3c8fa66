#pragma once

// Commutative model quantum groups: finite direct sums of Laurent polynomial
// algebras C[t_1^±, ..., t_m^±]. Doublings of C*(Z^n) and the classical
// isometry group T^n ⋊ Aut(Z^n, S) both live here, so every derived relation
// can be checked by exact evaluation.

#include "qiso/derive.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qiso {

class LaurentElem {
public:
	using Exponent = std::vector<std::int64_t>;

	LaurentElem() = default;
	explicit LaurentElem(std::size_t vars) : vars_(vars) {}
	static LaurentElem constant(std::size_t vars, const Rational &c);
	static LaurentElem monomial(Exponent e, const Rational &c = Rational(1));

	std::size_t vars() const { return vars_; }
	const std::map<Exponent, Rational> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	// Exponent negation; coefficients are real.
	LaurentElem star() const;

	LaurentElem &operator+=(const LaurentElem &o);
	LaurentElem &operator-=(const LaurentElem &o);
	friend LaurentElem operator+(LaurentElem a, const LaurentElem &b) { return a += b; }
	friend LaurentElem operator-(LaurentElem a, const LaurentElem &b) { return a -= b; }
	friend LaurentElem operator*(const LaurentElem &a, const LaurentElem &b);
	friend LaurentElem operator*(const Rational &c, const LaurentElem &a);
	friend bool operator==(const LaurentElem &, const LaurentElem &) = default;

	// "t1^2·t2^-1 - 3"
	std::string render() const;

private:
	void add_term(const Exponent &e, const Rational &c);

	std::size_t vars_ = 0;
	std::map<Exponent, Rational> terms_;
};

// Element of a direct sum of copies of one Laurent algebra.
class BlockAlgebraElem {
public:
	BlockAlgebraElem() = default;
	BlockAlgebraElem(std::size_t components, std::size_t vars);
	static BlockAlgebraElem unit(std::size_t components, std::size_t vars);

	std::size_t components() const { return parts_.size(); }
	const LaurentElem &operator[](std::size_t i) const { return parts_[i]; }
	LaurentElem &operator[](std::size_t i) { return parts_[i]; }
	bool is_zero() const;
	BlockAlgebraElem star() const;

	BlockAlgebraElem &operator+=(const BlockAlgebraElem &o);
	BlockAlgebraElem &operator-=(const BlockAlgebraElem &o);
	friend BlockAlgebraElem operator+(BlockAlgebraElem a, const BlockAlgebraElem &b) { return a += b; }
	friend BlockAlgebraElem operator-(BlockAlgebraElem a, const BlockAlgebraElem &b) { return a -= b; }
	friend BlockAlgebraElem operator*(const BlockAlgebraElem &a, const BlockAlgebraElem &b);
	friend BlockAlgebraElem operator*(const Rational &c, const BlockAlgebraElem &a);
	friend bool operator==(const BlockAlgebraElem &, const BlockAlgebraElem &) = default;

	// "(t, 0)"
	std::string render() const;

private:
	std::vector<LaurentElem> parts_;
};

struct ModelAssignment {
	std::string name;
	std::vector<std::string> labels;
	std::size_t vars = 0;
	// Indexed by symbol id.
	std::vector<BlockAlgebraElem> image;
	// theta = -id throughout.
	std::string theta = "x -> -x";
};

class TemplateInapplicable : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// Lattice automorphisms preserving S setwise, sorted.
struct MetricAutGroup {
	std::vector<IntMatrix> elements;
	std::size_t order() const { return elements.size(); }
	bool contains(const IntMatrix &m) const;
	bool closed_under_product() const;
};

MetricAutGroup metric_aut_group(const GenSet &S);

// q[r|c] -> t^c on component M when M r = c. One component per matrix.
ModelAssignment classical_assignment(const GenSet &S, const std::vector<IntMatrix> &group,
                                     std::vector<std::string> labels);
// Components {+,-}^n (diagonal sign matrices). Every generator must lie on
// an axis when n > 1.
ModelAssignment doubling_assignment(const GenSet &S);
// All of Aut(Z^n, S): the classical isometry group.
ModelAssignment isometry_assignment(const GenSet &S);

class UnassignedSymbol : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

BlockAlgebraElem evaluate(const NcPolynomial &p, const ModelAssignment &m);

struct Violation {
	// Log id, or -1 for rewrite rules and unitarity entries.
	long source = -1;
	std::string relation;
	std::string value;
};

struct SoundnessVerdict {
	std::string model;
	std::size_t relations_checked = 0;
	bool unitary = true;
	std::vector<Violation> violations;
	bool ok() const { return unitary && violations.empty(); }
};

// Evaluates every logged relation and every final rule; also checks both
// unitarity sums of the assigned matrix.
SoundnessVerdict verify_soundness(const DerivationReport &report, const ModelAssignment &m);
SoundnessVerdict verify_relations(const std::vector<NcPolynomial> &relations, const GenSet &S,
                                  const ModelAssignment &m);

enum class Commutativity { yes, unknown_at_budget };
const char *to_string(Commutativity c);

struct Invariants {
	// zero_pattern[r][c] for display-order indices
	std::vector<std::vector<bool>> zero_pattern;
	// One entry per family of blocks tied together by power relations: the
	// size of the largest block in the family. Sorted.
	std::vector<std::size_t> block_profile;
	Commutativity commutativity = Commutativity::unknown_at_budget;
	std::size_t aut_order = 0;
};

struct SurjectivityWitness {
	std::size_t axis = 0;
	// Integer combination sum m_i a_i = e_axis over the generators on the axis.
	std::vector<std::pair<GroupElement, std::int64_t>> combination;
	SymbolWord word;
	std::string rendered;
	BlockAlgebraElem image;
	bool verified = false;
};

struct Classification {
	bool matched = false;
	std::string template_name;
	std::string reason;
	std::vector<std::string> component_labels;
	// Surviving symbol -> rendered image.
	std::vector<std::pair<std::string, std::string>> assignment;
	std::vector<SurjectivityWitness> witnesses;
	Invariants invariants;
};

Invariants compute_invariants(const DerivationReport &report);
Classification classify(const DerivationReport &report);

struct Comparison {
	bool distinguished = false;
	std::vector<std::string> differing;
	bool zero_patterns_equal = false;
};

// Compares the generating-set independent invariants: template, block
// profile, commutativity and automorphism order.
Comparison compare(const Classification &a, const Classification &b);

struct CoassociativityCase {
	std::string generator; // "xi" or "eta"
	GroupElement m;
	std::size_t terms = 0;
	bool equal = false;
};

struct CoassociativityVerdict {
	std::size_t rank = 0;
	std::vector<CoassociativityCase> cases;
	bool ok() const;
};

// Expands (D⊗id)D and (id⊗D)D on xi(lambda_m), eta(lambda_m) for m in
// {0, ±e_i} with the doubled coproduct for theta = -id.
CoassociativityVerdict doubling_coassociativity_check(std::size_t rank);

} // namespace qiso
