#include "qiso/models.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qiso {

LaurentElem LaurentElem::constant(std::size_t vars, const Rational &c)
{
	LaurentElem e(vars);
	e.add_term(Exponent(vars, 0), c);
	return e;
}

LaurentElem LaurentElem::monomial(Exponent x, const Rational &c)
{
	LaurentElem e(x.size());
	e.add_term(x, c);
	return e;
}

void LaurentElem::add_term(const Exponent &e, const Rational &c)
{
	if (c == Rational(0))
		return;
	auto [it, inserted] = terms_.emplace(e, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == Rational(0))
			terms_.erase(it);
	}
}

LaurentElem LaurentElem::star() const
{
	LaurentElem out(vars_);
	for (const auto &[e, c] : terms_)
	{
		Exponent neg(e.size());
		std::transform(e.begin(), e.end(), neg.begin(), std::negate<>());
		out.add_term(neg, c);
	}
	return out;
}

LaurentElem &LaurentElem::operator+=(const LaurentElem &o)
{
	vars_ = std::max(vars_, o.vars_);
	for (const auto &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

LaurentElem &LaurentElem::operator-=(const LaurentElem &o)
{
	vars_ = std::max(vars_, o.vars_);
	for (const auto &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

LaurentElem operator*(const LaurentElem &a, const LaurentElem &b)
{
	LaurentElem out(std::max(a.vars_, b.vars_));
	for (const auto &[ea, ca] : a.terms_)
		for (const auto &[eb, cb] : b.terms_)
		{
			if (ea.size() != eb.size())
				throw std::invalid_argument("Laurent variable count mismatch");
			LaurentElem::Exponent e(ea.size());
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] = ea[i] + eb[i];
			out.add_term(e, ca * cb);
		}
	return out;
}

LaurentElem operator*(const Rational &c, const LaurentElem &a)
{
	LaurentElem out(a.vars_);
	for (const auto &[e, x] : a.terms_)
		out.add_term(e, c * x);
	return out;
}

std::string LaurentElem::render() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	// Highest exponent first reads more naturally.
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		const auto &[e, c0] = *it;
		Rational c = c0;
		if (first)
		{
			if (c < Rational(0))
				out += "-";
		}
		else
			out += c < Rational(0) ? " - " : " + ";
		if (c < Rational(0))
			c = -c;
		first = false;
		std::string mono;
		for (std::size_t i = 0; i < e.size(); ++i)
		{
			if (e[i] == 0)
				continue;
			if (!mono.empty())
				mono += "·";
			mono += e.size() == 1 ? "t" : "t" + std::to_string(i + 1);
			if (e[i] != 1)
				mono += "^" + std::to_string(e[i]);
		}
		if (mono.empty())
			out += c.str();
		else
			out += (c == Rational(1) ? "" : c.str() + "·") + mono;
	}
	return out;
}

BlockAlgebraElem::BlockAlgebraElem(std::size_t components, std::size_t vars)
    : parts_(components, LaurentElem(vars))
{
}

BlockAlgebraElem BlockAlgebraElem::unit(std::size_t components, std::size_t vars)
{
	BlockAlgebraElem u(components, vars);
	for (auto &p : u.parts_)
		p = LaurentElem::constant(vars, Rational(1));
	return u;
}

bool BlockAlgebraElem::is_zero() const
{
	return std::all_of(parts_.begin(), parts_.end(), [](const LaurentElem &p) { return p.is_zero(); });
}

BlockAlgebraElem BlockAlgebraElem::star() const
{
	BlockAlgebraElem out = *this;
	for (auto &p : out.parts_)
		p = p.star();
	return out;
}

BlockAlgebraElem &BlockAlgebraElem::operator+=(const BlockAlgebraElem &o)
{
	if (parts_.size() != o.parts_.size())
		throw std::invalid_argument("component count mismatch");
	for (std::size_t i = 0; i < parts_.size(); ++i)
		parts_[i] += o.parts_[i];
	return *this;
}

BlockAlgebraElem &BlockAlgebraElem::operator-=(const BlockAlgebraElem &o)
{
	if (parts_.size() != o.parts_.size())
		throw std::invalid_argument("component count mismatch");
	for (std::size_t i = 0; i < parts_.size(); ++i)
		parts_[i] -= o.parts_[i];
	return *this;
}

BlockAlgebraElem operator*(const BlockAlgebraElem &a, const BlockAlgebraElem &b)
{
	if (a.parts_.size() != b.parts_.size())
		throw std::invalid_argument("component count mismatch");
	BlockAlgebraElem out = a;
	for (std::size_t i = 0; i < a.parts_.size(); ++i)
		out.parts_[i] = a.parts_[i] * b.parts_[i];
	return out;
}

BlockAlgebraElem operator*(const Rational &c, const BlockAlgebraElem &a)
{
	BlockAlgebraElem out = a;
	for (auto &p : out.parts_)
		p = c * p;
	return out;
}

std::string BlockAlgebraElem::render() const
{
	std::string out = "(";
	for (std::size_t i = 0; i < parts_.size(); ++i)
	{
		if (i)
			out += ", ";
		out += parts_[i].render();
	}
	return out + ")";
}

// --- automorphisms -----------------------------------------------------------

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

std::size_t rational_rank(RatMatrix m)
{
	std::size_t rank = 0;
	std::size_t cols = m.empty() ? 0 : m[0].size();
	for (std::size_t c = 0; c < cols && rank < m.size(); ++c)
	{
		std::size_t p = rank;
		while (p < m.size() && m[p][c] == Rational(0))
			++p;
		if (p == m.size())
			continue;
		std::swap(m[p], m[rank]);
		for (std::size_t r = 0; r < m.size(); ++r)
			if (r != rank && m[r][c] != Rational(0))
			{
				Rational f = m[r][c] / m[rank][c];
				for (std::size_t k = c; k < cols; ++k)
					m[r][k] -= f * m[rank][k];
			}
		++rank;
	}
	return rank;
}

std::optional<RatMatrix> inverse(RatMatrix m)
{
	std::size_t n = m.size();
	for (std::size_t i = 0; i < n; ++i)
	{
		m[i].resize(2 * n, Rational(0));
		m[i][n + i] = Rational(1);
	}
	for (std::size_t c = 0; c < n; ++c)
	{
		std::size_t p = c;
		while (p < n && m[p][c] == Rational(0))
			++p;
		if (p == n)
			return std::nullopt;
		std::swap(m[p], m[c]);
		Rational piv = m[c][c];
		for (auto &x : m[c])
			x /= piv;
		for (std::size_t r = 0; r < n; ++r)
			if (r != c && m[r][c] != Rational(0))
			{
				Rational f = m[r][c];
				for (std::size_t k = 0; k < 2 * n; ++k)
					m[r][k] -= f * m[c][k];
			}
	}
	RatMatrix inv(n, std::vector<Rational>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			inv[i][j] = m[i][n + j];
	return inv;
}

bool preserves(const IntMatrix &M, const GenSet &S)
{
	for (const auto &g : S.elements())
		if (!S.contains(M.apply(g)))
			return false;
	return true;
}

bool axis_aligned(const GroupElement &g) { return g.support_size() == 1; }

} // namespace

bool MetricAutGroup::contains(const IntMatrix &m) const
{
	return std::binary_search(elements.begin(), elements.end(), m);
}

bool MetricAutGroup::closed_under_product() const
{
	for (const auto &a : elements)
		for (const auto &b : elements)
			if (!contains(a * b))
				return false;
	return true;
}

MetricAutGroup metric_aut_group(const GenSet &S)
{
	const std::size_t n = S.rank();
	// Greedy basis of Q^n drawn from S.
	std::vector<GroupElement> basis;
	for (const auto &g : S.elements())
	{
		RatMatrix rows;
		for (const auto &b : basis)
			rows.emplace_back(b.coords().begin(), b.coords().end());
		rows.emplace_back(g.coords().begin(), g.coords().end());
		if (rational_rank(rows) == rows.size())
			basis.push_back(g);
		if (basis.size() == n)
			break;
	}
	// Columns of B are the basis vectors; M = B' B^{-1}.
	RatMatrix B(n, std::vector<Rational>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			B[i][j] = Rational(basis[j][i]);
	auto Binv = inverse(B);
	if (!Binv)
		throw std::logic_error("generating set does not span");

	std::set<IntMatrix> found;
	std::vector<std::size_t> choice(n, 0);
	const auto &elems = S.elements();
	for (;;)
	{
		IntMatrix M(n);
		bool integral = true;
		for (std::size_t i = 0; i < n && integral; ++i)
			for (std::size_t j = 0; j < n && integral; ++j)
			{
				Rational v(0);
				for (std::size_t k = 0; k < n; ++k)
					v += Rational(elems[choice[k]][i]) * (*Binv)[k][j];
				if (denominator(v) != 1)
					integral = false;
				else
					M.at(i, j) = static_cast<std::int64_t>(numerator(v));
			}
		if (integral && std::abs(M.determinant()) == 1 && preserves(M, S))
			found.insert(M);
		std::size_t k = 0;
		while (k < n && ++choice[k] == elems.size())
			choice[k++] = 0;
		if (k == n)
			break;
	}
	MetricAutGroup G;
	G.elements.assign(found.begin(), found.end());
	return G;
}

// --- assignments -------------------------------------------------------------

ModelAssignment classical_assignment(const GenSet &S, const std::vector<IntMatrix> &group,
                                     std::vector<std::string> labels)
{
	const auto &A = S.alphabet();
	const std::size_t n = S.rank();
	ModelAssignment m;
	m.labels = std::move(labels);
	m.vars = n;
	m.image.assign(A.symbol_count(), BlockAlgebraElem(group.size(), n));
	for (std::size_t s = 0; s < A.symbol_count(); ++s)
	{
		auto sym = static_cast<Symbol>(s);
		for (std::size_t k = 0; k < group.size(); ++k)
			if (group[k].apply(A.row(sym)) == A.col(sym))
				m.image[s][k] = LaurentElem::monomial(A.col(sym).coords());
	}
	return m;
}

ModelAssignment doubling_assignment(const GenSet &S)
{
	const std::size_t n = S.rank();
	if (n > 1)
		for (const auto &g : S.elements())
			if (!axis_aligned(g))
				throw TemplateInapplicable("generator " + g.to_string() + " is not on a coordinate axis");
	std::vector<IntMatrix> group;
	std::vector<std::string> labels;
	for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask)
	{
		IntMatrix M(n);
		std::string label;
		for (std::size_t i = 0; i < n; ++i)
		{
			// Most significant bit is the first coordinate, so "+" sorts first.
			bool minus = (mask >> (n - 1 - i)) & 1;
			M.at(i, i) = minus ? -1 : 1;
			label += minus ? "-" : "+";
		}
		group.push_back(M);
		labels.push_back(label);
	}
	auto m = classical_assignment(S, group, labels);
	m.name = n == 1 ? "doubling of C*(Z)" : "tensor product of " + std::to_string(n) + " doublings of C*(Z)";
	return m;
}

ModelAssignment isometry_assignment(const GenSet &S)
{
	auto G = metric_aut_group(S);
	std::vector<std::string> labels;
	for (const auto &M : G.elements)
		labels.push_back(M.to_string());
	auto m = classical_assignment(S, G.elements, labels);
	m.name = "classical isometry group T^" + std::to_string(S.rank()) + " ⋊ Aut(Z^" + std::to_string(S.rank()) +
	         ", S), order " + std::to_string(G.order());
	return m;
}

BlockAlgebraElem evaluate(const NcPolynomial &p, const ModelAssignment &m)
{
	const std::size_t comps = m.labels.size();
	BlockAlgebraElem out(comps, m.vars);
	for (const auto &t : p.terms())
	{
		BlockAlgebraElem term = BlockAlgebraElem::unit(comps, m.vars);
		for (auto s : t.word)
		{
			if (static_cast<std::size_t>(s) >= m.image.size())
				throw UnassignedSymbol("symbol " + std::to_string(static_cast<unsigned>(s)) + " has no image");
			term = term * m.image[s];
			if (term.is_zero())
				break;
		}
		out += t.coeff * term;
	}
	return out;
}

SoundnessVerdict verify_relations(const std::vector<NcPolynomial> &relations, const GenSet &S,
                                  const ModelAssignment &m)
{
	SoundnessVerdict v;
	v.model = m.name;
	for (const auto &r : relations)
	{
		++v.relations_checked;
		auto val = evaluate(r, m);
		if (!val.is_zero())
			v.violations.push_back({-1, r.render(S.alphabet()), val.render()});
	}
	for (auto &rel : unitarity_relations(S))
		if (!evaluate(rel, m).is_zero())
		{
			v.unitary = false;
			v.violations.push_back({-1, rel.render(S.alphabet()), evaluate(rel, m).render()});
		}
	return v;
}

SoundnessVerdict verify_soundness(const DerivationReport &report, const ModelAssignment &m)
{
	std::vector<NcPolynomial> rules = report.system.relations();
	SoundnessVerdict v = verify_relations(rules, report.S, m);
	for (const auto &d : report.log)
	{
		++v.relations_checked;
		auto val = evaluate(d.relation, m);
		if (!val.is_zero())
			v.violations.push_back(
			    {static_cast<long>(d.id), d.relation.render(report.S.alphabet()), val.render()});
	}
	return v;
}

// --- classification ----------------------------------------------------------

const char *to_string(Commutativity c) { return c == Commutativity::yes ? "yes" : "unknown-at-budget"; }

Invariants compute_invariants(const DerivationReport &report)
{
	const GenSet &S = report.S;
	const auto &A = S.alphabet();
	const auto &idx = S.display_order();
	const std::size_t d = idx.size();
	Invariants inv;
	inv.zero_pattern.assign(d, std::vector<bool>(d, false));
	for (std::size_t r = 0; r < d; ++r)
		for (std::size_t c = 0; c < d; ++c)
			inv.zero_pattern[r][c] = report.is_zero(A.symbol(idx[r], idx[c]));

	// Blocks: connected components of the surviving support.
	std::vector<std::size_t> parent(d);
	std::iota(parent.begin(), parent.end(), 0);
	std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
		return parent[x] == x ? x : parent[x] = find(parent[x]);
	};
	for (std::size_t r = 0; r < d; ++r)
		for (std::size_t c = 0; c < d; ++c)
			if (!inv.zero_pattern[r][c])
				parent[find(r)] = find(c);
	std::vector<std::size_t> block_of(d), block_size(d, 0);
	for (std::size_t i = 0; i < d; ++i)
	{
		block_of[i] = find(i);
		++block_size[block_of[i]];
	}
	auto block_of_symbol = [&](Symbol s) {
		std::size_t r = std::find(idx.begin(), idx.end(), A.row(s)) - idx.begin();
		return block_of[r];
	};
	// Families: blocks joined by a power relation x^p = y^q.
	std::vector<std::size_t> family(d);
	std::iota(family.begin(), family.end(), 0);
	std::function<std::size_t(std::size_t)> ffind = [&](std::size_t x) {
		return family[x] == x ? x : family[x] = ffind(family[x]);
	};
	const std::size_t max_pow = static_cast<std::size_t>(std::max(2, report.config.max_word_len));
	std::vector<std::vector<NcPolynomial>> powers;
	for (auto s : report.surviving_symbols)
	{
		std::vector<NcPolynomial> row;
		for (std::size_t p = 1; p <= max_pow; ++p)
			row.push_back(report.system.normal_form(SymbolWord(p, s)));
		powers.push_back(std::move(row));
	}
	for (std::size_t i = 0; i < powers.size(); ++i)
		for (std::size_t j = i + 1; j < powers.size(); ++j)
		{
			auto bi = block_of_symbol(report.surviving_symbols[i]);
			auto bj = block_of_symbol(report.surviving_symbols[j]);
			if (ffind(bi) == ffind(bj))
				continue;
			bool tied = false;
			for (std::size_t p = 0; p < max_pow && !tied; ++p)
				for (std::size_t q = 0; q < max_pow && !tied; ++q)
					tied = !powers[i][p].is_zero() && powers[i][p] == powers[j][q];
			if (tied)
				family[ffind(bi)] = ffind(bj);
		}
	std::map<std::size_t, std::size_t> fam_size;
	for (std::size_t i = 0; i < d; ++i)
		if (block_of[i] == i)
		{
			auto &m = fam_size[ffind(i)];
			m = std::max(m, block_size[i]);
		}
	for (const auto &[f, size] : fam_size)
		inv.block_profile.push_back(size);
	std::sort(inv.block_profile.begin(), inv.block_profile.end());

	inv.commutativity = Commutativity::yes;
	const auto &live = report.surviving_symbols;
	for (std::size_t i = 0; i < live.size() && inv.commutativity == Commutativity::yes; ++i)
		for (std::size_t j = i + 1; j < live.size(); ++j)
		{
			NcPolynomial comm =
			    NcPolynomial(SymbolWord{live[i], live[j]}) - NcPolynomial(SymbolWord{live[j], live[i]});
			if (!report.system.reduces_to_zero(comm))
			{
				inv.commutativity = Commutativity::unknown_at_budget;
				break;
			}
		}
	inv.aut_order = metric_aut_group(S).order();
	return inv;
}

namespace {

std::vector<SurjectivityWitness> surjectivity_witnesses(const GenSet &S, const ModelAssignment &m)
{
	const auto &A = S.alphabet();
	const std::size_t n = S.rank();
	std::vector<SurjectivityWitness> out;
	for (std::size_t axis = 0; axis < n; ++axis)
	{
		std::vector<GroupElement> gens;
		std::vector<std::int64_t> mags;
		for (const auto &g : S.positive_representatives())
			if (g.support_size() == 1 && g[axis] != 0)
			{
				gens.push_back(g);
				mags.push_back(g[axis]);
			}
		SurjectivityWitness w;
		w.axis = axis;
		if (gens.empty())
		{
			out.push_back(w);
			continue;
		}
		std::int64_t g = 0;
		auto coef = bezout_coefficients(mags, g);
		// Shift so the first coefficient is the least positive choice.
		if (mags.size() >= 2 && g == 1)
		{
			std::int64_t step = mags[1];
			std::int64_t k = coef[0] > 0 ? (coef[0] - 1) / step : -((-coef[0]) / step + 1);
			coef[0] -= k * step;
			coef[1] += k * mags[0];
		}
		std::string neg, pos;
		SymbolWord wn, wp;
		for (std::size_t i = 0; i < gens.size(); ++i)
		{
			w.combination.emplace_back(gens[i], coef[i]);
			Symbol s = A.symbol(gens[i], gens[i]);
			for (std::int64_t j = 0; j < std::abs(coef[i]); ++j)
			{
				if (coef[i] < 0)
				{
					wn.push_back(A.adjoint(s));
					neg += (neg.empty() ? "" : "·") + A.render(s) + "*";
				}
				else
				{
					wp.push_back(s);
					pos += (pos.empty() ? "" : "·") + A.render(s);
				}
			}
		}
		w.word = wn + wp;
		w.rendered = neg + (neg.empty() || pos.empty() ? "" : "·") + pos;
		w.image = evaluate(NcPolynomial(w.word), m);
		// Expected: t_axis on components with + in this coordinate, 0 elsewhere.
		BlockAlgebraElem expect(m.labels.size(), n);
		std::vector<std::int64_t> ex(n, 0);
		ex[axis] = 1;
		for (std::size_t k = 0; k < m.labels.size(); ++k)
			if (m.labels[k][axis] == '+')
				expect[k] = LaurentElem::monomial(ex);
		w.verified = g == 1 && w.image == expect;
		out.push_back(std::move(w));
	}
	return out;
}

} // namespace

Classification classify(const DerivationReport &report)
{
	const GenSet &S = report.S;
	const auto &A = S.alphabet();
	Classification out;
	out.invariants = compute_invariants(report);
	ModelAssignment m;
	try
	{
		m = doubling_assignment(S);
	}
	catch (const TemplateInapplicable &e)
	{
		out.reason = std::string("template inapplicable: ") + e.what();
		return out;
	}
	out.template_name = m.name;
	out.component_labels = m.labels;
	std::vector<std::string> problems;
	for (std::size_t s = 0; s < A.symbol_count(); ++s)
	{
		bool model_zero = m.image[s].is_zero();
		bool forced = report.is_zero(static_cast<Symbol>(s));
		if (model_zero && !forced)
		{
			problems.push_back("template zero " + A.render(static_cast<Symbol>(s)) + " is not forced");
			break;
		}
	}
	if (!report.fixpoint)
		problems.push_back("derivation did not reach a fixpoint");
	if (out.invariants.commutativity != Commutativity::yes)
		problems.push_back("commutativity of survivors not established");
	auto sound = verify_soundness(report, m);
	if (!sound.ok())
		problems.push_back(std::to_string(sound.violations.size()) + " relations fail in the template model");
	for (auto s : report.surviving_symbols)
		out.assignment.emplace_back(A.render(s), m.image[s].render());
	out.witnesses = surjectivity_witnesses(S, m);
	for (const auto &w : out.witnesses)
		if (!w.verified)
			problems.push_back("no surjectivity witness on axis " + std::to_string(w.axis + 1));
	out.matched = problems.empty();
	if (!out.matched)
	{
		out.reason = problems.front();
		for (std::size_t i = 1; i < problems.size(); ++i)
			out.reason += "; " + problems[i];
	}
	return out;
}

Comparison compare(const Classification &a, const Classification &b)
{
	Comparison c;
	std::string ta = a.matched ? a.template_name : "none";
	std::string tb = b.matched ? b.template_name : "none";
	if (ta != tb)
		c.differing.push_back("template");
	if (a.invariants.block_profile != b.invariants.block_profile)
		c.differing.push_back("block_profile");
	if (a.invariants.commutativity != b.invariants.commutativity)
		c.differing.push_back("commutativity");
	if (a.invariants.aut_order != b.invariants.aut_order)
		c.differing.push_back("aut_order");
	c.distinguished = !c.differing.empty();
	c.zero_patterns_equal = a.invariants.zero_pattern == b.invariants.zero_pattern;
	return c;
}

// --- doubling coproduct --------------------------------------------------------

namespace {

// Basis element of C*(Z^n) ⊕ C*(Z^n): tag 0 = xi, 1 = eta.
using Leg = std::pair<int, GroupElement>;
using Tensor2 = std::map<std::pair<Leg, Leg>, Rational>;
using Tensor3 = std::map<std::tuple<Leg, Leg, Leg>, Rational>;

Tensor2 coproduct(const Leg &x)
{
	const auto &[tag, m] = x;
	Tensor2 out;
	if (tag == 0)
	{
		out[{{0, m}, {0, m}}] += Rational(1);
		out[{{1, m}, {1, -m}}] += Rational(1);
	}
	else
	{
		out[{{0, m}, {1, m}}] += Rational(1);
		out[{{1, m}, {0, -m}}] += Rational(1);
	}
	return out;
}

void prune(Tensor3 &t)
{
	for (auto it = t.begin(); it != t.end();)
		it = it->second == Rational(0) ? t.erase(it) : std::next(it);
}

} // namespace

bool CoassociativityVerdict::ok() const
{
	return !cases.empty() &&
	       std::all_of(cases.begin(), cases.end(), [](const CoassociativityCase &c) { return c.equal; });
}

CoassociativityVerdict doubling_coassociativity_check(std::size_t rank)
{
	if (rank == 0)
		throw std::invalid_argument("rank must be at least 1");
	CoassociativityVerdict v;
	v.rank = rank;
	std::vector<GroupElement> ms{GroupElement(rank)};
	for (std::size_t i = 0; i < rank; ++i)
	{
		std::vector<std::int64_t> c(rank, 0);
		c[i] = 1;
		ms.emplace_back(c);
		ms.push_back(-GroupElement(c));
	}
	for (int tag = 0; tag < 2; ++tag)
		for (const auto &m : ms)
		{
			Tensor2 d = coproduct({tag, m});
			Tensor3 left, right;
			for (const auto &[k, c] : d)
			{
				for (const auto &[k2, c2] : coproduct(k.first))
					left[{k2.first, k2.second, k.second}] += c * c2;
				for (const auto &[k2, c2] : coproduct(k.second))
					right[{k.first, k2.first, k2.second}] += c * c2;
			}
			prune(left);
			prune(right);
			v.cases.push_back({tag == 0 ? "xi" : "eta", m, left.size(), left == right});
		}
	return v;
}

} // namespace qiso
