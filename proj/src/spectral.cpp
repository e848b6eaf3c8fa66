#include "qiso/spectral.hpp"

#include <algorithm>

namespace qiso {

TruncatedTriple build_dirac(const GenSet &S, int radius)
{
	if (radius < 1)
		throw std::invalid_argument("spectral radius must be at least 1");
	TruncatedTriple T{S, radius, {}, {}, {}};
	std::vector<std::pair<int, GroupElement>> order;
	for (const auto &[g, l] : word_length_ball(S, radius))
		order.emplace_back(l, g);
	std::sort(order.begin(), order.end());
	for (auto &[l, g] : order)
	{
		T.position.emplace(g, T.basis.size());
		T.basis.push_back(g);
		T.dirac.push_back(l);
	}
	return T;
}

PointUnitary point_unitary(const PointIsometry &sigma, const TruncatedTriple &T)
{
	const IntMatrix &M = sigma.M;
	if (M.dim() != T.S.rank())
		throw NotAnIsometry("matrix dimension does not match the rank");
	if (std::abs(M.determinant()) != 1)
		throw NotAnIsometry(M.to_string() + " is not invertible over Z");
	for (const auto &s : T.S.elements())
		if (!T.S.contains(M.apply(s)))
			throw NotAnIsometry(M.to_string() + " does not preserve S");
	PointUnitary U;
	for (const auto &g : T.basis)
	{
		auto it = T.position.find(M.apply(g));
		// Isometries preserve spheres, so the image stays in the ball.
		if (it == T.position.end())
			throw std::logic_error("point unitary leaves the truncation ball");
		U.target.push_back(it->second);
		U.phase.push_back(g);
	}
	return U;
}

CommutationVerdict commutation_check(const PointIsometry &sigma, const TruncatedTriple &T)
{
	const IntMatrix &M = sigma.M;
	CommutationVerdict v;
	v.matrix = M.to_string();
	GroupElement zero(T.S.rank());
	v.trace_preserved = M.apply(zero) == zero;
	for (std::size_t i = 0; i < T.basis.size(); ++i)
	{
		++v.checked;
		GroupElement img = M.apply(T.basis[i]);
		auto it = T.position.find(img);
		int l = it == T.position.end() ? word_length(img, T.S) : T.dirac[it->second];
		// Smallest failing length; within that shell the lexicographically largest element.
		if (v.witness && T.dirac[i] > v.witness->length)
			break;
		if (l != T.dirac[i])
		{
			v.commutes = false;
			if (!v.witness || v.witness->g < T.basis[i])
				v.witness = CommutationWitness{T.basis[i], img, T.dirac[i], l};
		}
	}
	return v;
}

} // namespace qiso
