#include "qiso/grpalg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace qiso {

bool is_positive_representative(const GroupElement &g)
{
	for (auto c : g.coords())
		if (c != 0)
			return c > 0;
	return false;
}

GenSet::GenSet(std::size_t rank, std::vector<GroupElement> gens) : rank_(rank)
{
	if (rank == 0)
		throw InvalidGenSet("rank must be at least 1");
	if (gens.empty())
		throw InvalidGenSet("generating set is empty");
	for (const auto &g : gens)
	{
		if (g.rank() != rank)
			throw InvalidGenSet("generator " + g.to_string() + " has rank " + std::to_string(g.rank()) +
			                    ", expected " + std::to_string(rank));
		if (g.is_zero())
			throw InvalidGenSet("generating set contains the identity 0");
	}
	std::set<GroupElement> seen;
	for (const auto &g : gens)
		if (!seen.insert(g).second)
			throw InvalidGenSet("duplicate generator " + g.to_string());
	for (const auto &g : gens)
		if (!seen.count(-g))
			throw InvalidGenSet("not symmetric: " + g.to_string() + " present but " + (-g).to_string() +
			                    " missing");
	if (lattice_index(gens, rank) != 1)
		throw InvalidGenSet("generators do not generate Z^" + std::to_string(rank));

	sorted_.assign(seen.begin(), seen.end());
	std::vector<GroupElement> reps;
	for (const auto &g : gens)
	{
		GroupElement r = is_positive_representative(g) ? g : -g;
		if (std::find(reps.begin(), reps.end(), r) == reps.end())
			reps.push_back(r);
	}
	if (rank == 1)
		std::sort(reps.begin(), reps.end());
	for (const auto &r : reps)
	{
		display_.push_back(r);
		display_.push_back(-r);
	}
	alphabet_ = Alphabet(sorted_);
}

bool GenSet::contains(const GroupElement &g) const
{
	return std::binary_search(sorted_.begin(), sorted_.end(), g);
}

std::vector<GroupElement> GenSet::positive_representatives() const
{
	std::vector<GroupElement> out;
	for (std::size_t i = 0; i < display_.size(); i += 2)
		out.push_back(display_[i]);
	return out;
}

std::int64_t GenSet::max_norm() const
{
	std::int64_t m = 0;
	for (const auto &g : sorted_)
		m = std::max(m, g.max_norm());
	return m;
}

int word_length(const GroupElement &g, const GenSet &S, int max_radius)
{
	if (g.rank() != S.rank())
		throw std::invalid_argument("rank mismatch in word_length");
	if (g.is_zero())
		return 0;
	std::set<GroupElement> visited{GroupElement(S.rank())};
	std::vector<GroupElement> frontier{GroupElement(S.rank())};
	for (int layer = 1; layer <= max_radius; ++layer)
	{
		std::vector<GroupElement> next;
		for (const auto &x : frontier)
			for (const auto &s : S.elements())
			{
				GroupElement y = x + s;
				if (y == g)
					return layer;
				if (visited.insert(y).second)
					next.push_back(std::move(y));
			}
		frontier = std::move(next);
	}
	throw SearchExhausted("word length search exceeded radius " + std::to_string(max_radius) + " for " +
	                      g.to_string());
}

std::map<GroupElement, int> word_length_ball(const GenSet &S, int radius)
{
	std::map<GroupElement, int> out{{GroupElement(S.rank()), 0}};
	std::vector<GroupElement> frontier{GroupElement(S.rank())};
	for (int layer = 1; layer <= radius; ++layer)
	{
		std::vector<GroupElement> next;
		for (const auto &x : frontier)
			for (const auto &s : S.elements())
			{
				GroupElement y = x + s;
				if (out.emplace(y, layer).second)
					next.push_back(std::move(y));
			}
		frontier = std::move(next);
	}
	return out;
}

ActionElement ActionElement::unit(std::size_t rank)
{
	ActionElement e(rank);
	e.add(GroupElement(rank), NcPolynomial::one());
	return e;
}

void ActionElement::add(const GroupElement &g, const NcPolynomial &p)
{
	if (g.rank() != rank_)
		throw std::invalid_argument("rank mismatch in ActionElement");
	if (p.is_zero())
		return;
	auto [it, inserted] = support_.emplace(g, p);
	if (!inserted)
	{
		it->second += p;
		if (it->second.is_zero())
			support_.erase(it);
	}
}

ActionElement generator_action(const GroupElement &gamma, const GenSet &S)
{
	if (!S.contains(gamma))
		throw std::invalid_argument(gamma.to_string() + " is not in the generating set");
	ActionElement x(S.rank());
	for (const auto &g : S.elements())
		x.add(g, NcPolynomial::symbol(S.alphabet().symbol(gamma, g)));
	return x;
}

ActionElement convolve(const ActionElement &x, const ActionElement &y)
{
	if (x.rank() != y.rank())
		throw std::invalid_argument("rank mismatch in convolve");
	std::map<GroupElement, std::vector<NcTerm>> acc;
	for (const auto &[h, p] : x.support())
		for (const auto &[k, q] : y.support())
		{
			auto &bucket = acc[h + k];
			for (const auto &a : p.terms())
				for (const auto &b : q.terms())
					bucket.push_back({a.word + b.word, a.coeff * b.coeff});
		}
	ActionElement out(x.rank());
	for (auto &[g, terms] : acc)
		out.add(g, NcPolynomial::from_terms(std::move(terms)));
	return out;
}

NcPolynomial coefficient(const ActionElement &x, const GroupElement &g)
{
	if (g.rank() != x.rank())
		throw std::invalid_argument("rank mismatch in coefficient");
	auto it = x.support().find(g);
	return it == x.support().end() ? NcPolynomial() : it->second;
}

GroupWord::GroupWord(std::vector<GroupElement> l, std::size_t rank) : letters(std::move(l)), sum(rank)
{
	for (const auto &x : letters)
		sum += x;
}

std::string GroupWord::to_string() const
{
	std::string s = "[";
	for (std::size_t i = 0; i < letters.size(); ++i)
	{
		if (i)
			s += ",";
		s += letters[i].to_string();
	}
	return s + "]";
}

ActionElement word_action(const GroupWord &w, const GenSet &S)
{
	ActionElement acc = ActionElement::unit(S.rank());
	for (const auto &g : w.letters)
		acc = convolve(acc, generator_action(g, S));
	return acc;
}

std::map<GroupElement, std::vector<GroupWord>> identity_classes(const GenSet &S, int max_len)
{
	std::map<GroupElement, std::vector<GroupWord>> classes;
	const auto &gens = S.elements();
	std::vector<GroupElement> letters;
	std::function<void(std::size_t)> extend = [&](std::size_t first) {
		GroupWord w(letters, S.rank());
		classes[w.sum].push_back(w);
		if (static_cast<int>(letters.size()) == max_len)
			return;
		for (std::size_t i = first; i < gens.size(); ++i)
		{
			letters.push_back(gens[i]);
			extend(i);
			letters.pop_back();
		}
	};
	extend(0);
	for (auto &[sum, words] : classes)
		std::sort(words.begin(), words.end());
	return classes;
}

std::vector<IdentityPair> enumerate_identity_pairs(const GenSet &S, int max_len)
{
	std::vector<IdentityPair> out;
	for (const auto &[sum, words] : identity_classes(S, max_len))
		for (std::size_t i = 0; i < words.size(); ++i)
			for (std::size_t j = i + 1; j < words.size(); ++j)
				out.emplace_back(words[i], words[j]);
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace qiso
