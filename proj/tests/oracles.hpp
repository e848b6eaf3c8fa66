#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include "qiso/derive.hpp"
#include "qiso/grpalg.hpp"
#include "qiso/models.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace qiso;

inline GenSet make_set(std::size_t rank, const std::vector<std::vector<std::int64_t>> &gens)
{
	std::vector<GroupElement> v;
	for (const auto &g : gens)
		v.emplace_back(g);
	return GenSet(rank, v);
}

inline GenSet z_set(const std::vector<std::int64_t> &positive)
{
	std::vector<std::vector<std::int64_t>> g;
	for (auto a : positive)
	{
		g.push_back({a});
		g.push_back({-a});
	}
	return make_set(1, g);
}

inline GenSet s_prime() { return make_set(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
inline GenSet s_double_prime() { return make_set(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {2, 0}, {-2, 0}}); }

// Word length as an integer program: min sum |m_i| over integer vectors m with
// sum m_i a_i = g, a_i ranging over positive representatives, |m_i| <= bound.
inline std::map<GroupElement, int> length_table(const GenSet &S, int bound)
{
	auto reps = S.positive_representatives();
	std::map<GroupElement, int> best;
	std::function<void(std::size_t, GroupElement, int)> rec = [&](std::size_t i, GroupElement g, int cost) {
		if (cost > bound)
			return;
		if (i == reps.size())
		{
			auto it = best.find(g);
			if (it == best.end() || cost < it->second)
				best[g] = cost;
			return;
		}
		for (int m = -bound; m <= bound; ++m)
			rec(i + 1, g + m * reps[i], cost + std::abs(m));
	};
	rec(0, GroupElement(S.rank()), 0);
	return best;
}

// Identity pairs from letter-count vectors; letters of each word sorted as in S.elements().
inline std::set<std::pair<std::vector<GroupElement>, std::vector<GroupElement>>>
exhaustive_identity_pairs(const GenSet &S, int L)
{
	const auto &E = S.elements();
	std::map<GroupElement, std::vector<std::vector<GroupElement>>> classes;
	std::vector<int> count(E.size(), 0);
	std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
		if (i == E.size())
		{
			std::vector<GroupElement> w;
			GroupElement sum(S.rank());
			for (std::size_t j = 0; j < E.size(); ++j)
				for (int c = 0; c < count[j]; ++c)
				{
					w.push_back(E[j]);
					sum += E[j];
				}
			classes[sum].push_back(w);
			return;
		}
		for (int c = 0; used + c <= L; ++c)
		{
			count[i] = c;
			rec(i + 1, used + c);
		}
		count[i] = 0;
	};
	rec(0, 0);
	std::set<std::pair<std::vector<GroupElement>, std::vector<GroupElement>>> out;
	for (auto &[g, ws] : classes)
		for (std::size_t i = 0; i < ws.size(); ++i)
			for (std::size_t j = 0; j < ws.size(); ++j)
				if (i != j && GroupWord(ws[i], S.rank()) < GroupWord(ws[j], S.rank()))
					out.insert({ws[i], ws[j]});
	return out;
}

// (x * y)(g) = sum over h + k = g of x(h) y(k), computed on the raw maps.
inline std::map<GroupElement, NcPolynomial> double_sum(const std::map<GroupElement, NcPolynomial> &x,
                                                       const std::map<GroupElement, NcPolynomial> &y)
{
	std::map<GroupElement, NcPolynomial> out;
	for (const auto &[h, p] : x)
		for (const auto &[k, q] : y)
			out[h + k] += mul(p, q);
	for (auto it = out.begin(); it != out.end();)
		it = it->second.is_zero() ? out.erase(it) : std::next(it);
	return out;
}

struct PolyGen {
	std::mt19937_64 rng;
	std::size_t symbols;
	explicit PolyGen(std::size_t symbol_count, std::uint64_t seed = 20261017) : rng(seed), symbols(symbol_count) {}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

	SymbolWord word(int max_len)
	{
		SymbolWord w;
		int len = uniform(0, max_len);
		for (int i = 0; i < len; ++i)
			w.push_back(static_cast<Symbol>(uniform(0, static_cast<int>(symbols) - 1)));
		return w;
	}

	NcPolynomial poly(int max_terms = 4, int max_len = 3)
	{
		NcPolynomial p;
		int n = uniform(0, max_terms);
		for (int i = 0; i < n; ++i)
		{
			Rational c(uniform(-5, 5), uniform(1, 4));
			if (c != Rational(0))
				p += NcPolynomial(word(max_len), c);
		}
		return p;
	}
};

inline bool is_word_times_adjoint(const SymbolWord &w, const Alphabet &A)
{
	if (w.size() % 2)
		return false;
	SymbolWord u = w.substr(0, w.size() / 2);
	return w.substr(w.size() / 2) == adjoint(u, A);
}

} // namespace oracle
