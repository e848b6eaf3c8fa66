#pragma once

// Word-length spectral triple truncated to a ball, and exact checks of the
// Dirac commutation condition at the classical points of the isometry group.

#include "qiso/grpalg.hpp"
#include "qiso/models.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qiso {

struct TruncatedTriple {
	GenSet S;
	int radius = 0;
	// Ordered by word length, then lexicographically.
	std::vector<GroupElement> basis;
	// dirac[i] = l(basis[i])
	std::vector<int> dirac;
	std::map<GroupElement, std::size_t> position;
};

TruncatedTriple build_dirac(const GenSet &S, int radius);

struct PointIsometry {
	IntMatrix M;
};

// delta_g -> z^g delta_{M g}
struct PointUnitary {
	std::vector<std::size_t> target;
	std::vector<GroupElement> phase;
};

class NotAnIsometry : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// Throws NotAnIsometry unless M is in Aut(Z^n, S).
PointUnitary point_unitary(const PointIsometry &sigma, const TruncatedTriple &T);

struct CommutationWitness {
	GroupElement g;
	GroupElement image;
	int length = 0;
	int image_length = 0;
};

struct CommutationVerdict {
	std::string matrix;
	std::size_t checked = 0;
	bool commutes = true;
	bool trace_preserved = true;
	std::optional<CommutationWitness> witness;
	bool ok() const { return commutes && trace_preserved; }
};

// l(M g) = l(g) for every basis element, and M fixes 0. Works for any
// unimodular M so that non-isometries produce a witness.
CommutationVerdict commutation_check(const PointIsometry &sigma, const TruncatedTriple &T);

} // namespace qiso
