#include "nichols/pairing.hpp"

#include <algorithm>

namespace nichols {

CycScalar PairingTable::value(std::size_t a, std::size_t u) const
{
    auto it = values.find({a, u});
    return it == values.end() ? CycScalar(0) : it->second;
}

CycScalar PairingTable::value(const SparseVec& a, const SparseVec& u) const
{
    CycScalar out(0);
    for (const auto& [i, c] : a)
        for (const auto& [j, d] : u)
            out += c * d * value(i, j);
    return out;
}

void PairingTable::set(std::size_t a, std::size_t u, const CycScalar& c)
{
    if (c.is_zero())
        values.erase({a, u});
    else
        values[{a, u}] = c;
}

namespace {

// word pairing on T^n(V) x T^n(V*): gram[n][(a, u)] over word indices
std::vector<std::map<std::pair<std::size_t, std::size_t>, CycScalar>> word_gram(const DiagonalBraiding& b, int cap)
{
    const int theta = b.theta();
    std::vector<std::map<std::pair<std::size_t, std::size_t>, CycScalar>> gram(static_cast<std::size_t>(cap) + 1);
    gram[0][{0, 0}] = CycScalar(1);
    for (int n = 1; n <= cap; ++n) {
        // previous degree grouped by the right word
        std::map<std::size_t, std::vector<std::pair<std::size_t, CycScalar>>> by_right;
        for (const auto& [au, c] : gram[static_cast<std::size_t>(n - 1)])
            by_right[au.second].emplace_back(au.first, c);
        const std::size_t shift = word_count(theta, n - 1);
        auto& out = gram[static_cast<std::size_t>(n)];
        for (std::size_t u = 0; u < word_count(theta, n); ++u) {
            // (x_k a'|u) = sum (x_k|u_2)(a'|u_1) over the (n-1, 1) component
            for (const auto& [j, c] : shuffle_coproduct_word(word_at(u, n, theta), n - 1, b)) {
                const std::size_t u1 = j / static_cast<std::size_t>(theta);
                const std::size_t k = j % static_cast<std::size_t>(theta);
                auto it = by_right.find(u1);
                if (it == by_right.end())
                    continue;
                for (const auto& [a, v] : it->second) {
                    auto key = std::make_pair(k * shift + a, u);
                    CycScalar& slot = out[key];
                    slot += c * v;
                    if (slot.is_zero())
                        out.erase(key);
                }
            }
        }
    }
    return gram;
}

TruncatedHopf dual_side(TruncatedHopf h)
{
    for (auto& t : h.basis)
        std::replace(t.symbol.begin(), t.symbol.end(), 'x', 'y');
    h.name += " (dual letters)";
    return h;
}

std::vector<std::size_t> degree_offsets(const GradedQuotient& gq)
{
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (int n = 0; n <= gq.cap(); ++n) {
        off.push_back(total);
        total += gq.dim(n);
    }
    return off;
}

PairingTable quotient_pairing(const GradedQuotient& gq, int cap)
{
    PairingTable p;
    p.left = braided_nichols_hopf(gq, cap);
    p.right = dual_side(p.left);
    auto gram = word_gram(gq.braiding(), cap);
    auto off = degree_offsets(gq);
    for (int n = 0; n <= cap; ++n) {
        const auto& g = gram[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < gq.dim(n); ++k)
            for (std::size_t l = 0; l < gq.dim(n); ++l) {
                auto it = g.find({gq.basis(n)[k], gq.basis(n)[l]});
                if (it != g.end())
                    p.set(off[static_cast<std::size_t>(n)] + k, off[static_cast<std::size_t>(n)] + l, it->second);
            }
    }
    return p;
}

std::vector<std::size_t> of_degree(const TruncatedHopf& h, int n)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (h.degree(i) == n)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> up_to(const TruncatedHopf& h, int cap)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (h.degree(i) <= cap)
            out.push_back(i);
    return out;
}

} // namespace

PairingTable graded_dual_pairing(const DiagonalBraiding& b, int cap)
{
    return quotient_pairing(pre_nichols_quotient(b, {}, cap), cap);
}

PairingTable nichols_pairing(const DiagonalBraiding& b, int cap)
{
    return quotient_pairing(nichols_truncated(b, std::max(cap, 1)), cap);
}

std::vector<std::size_t> gram_ranks(const PairingTable& p, int cap)
{
    std::vector<std::size_t> out;
    for (int n = 0; n <= cap; ++n) {
        auto l = of_degree(p.left, n);
        auto r = of_degree(p.right, n);
        Matrix m(l.size(), r.size());
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j)
                m(i, j) = p.value(l[i], r[j]);
        out.push_back(rank(m));
    }
    return out;
}

bool nondegenerate(const PairingTable& p, int cap)
{
    auto ranks = gram_ranks(p, cap);
    for (int n = 0; n <= cap; ++n) {
        const std::size_t l = of_degree(p.left, n).size();
        const std::size_t r = of_degree(p.right, n).size();
        if (l != r || ranks[static_cast<std::size_t>(n)] != l)
            return false;
    }
    return true;
}

AxiomReport verify_hopf_pairing(const PairingTable& p, int cap)
{
    const std::string kMult = "(ab|u) = (a|u_2)(b|u_1)";
    const std::string kComult = "(a|uv) = (a_2|u)(a_1|v)";
    const std::string kAnti = "(S a|u) = (a|S u)";
    const std::string kUnit = "(1|u) = epsilon(u), (a|1) = epsilon(a)";
    AxiomReport rep;
    rep.declare(kMult);
    rep.declare(kComult);
    rep.declare(kUnit);
    const bool anti = p.left.antipode && p.right.antipode;
    if (anti)
        rep.declare(kAnti);
    else
        rep.notes.push_back("antipodes absent; the antipode identity is not checked");
    const TruncatedHopf& L = p.left;
    const TruncatedHopf& R = p.right;
    const auto ls = up_to(L, cap);
    const auto rs = up_to(R, cap);

    for (std::size_t u : rs) {
        ++rep.evaluations;
        if (p.value(L.unit, u) != R.counit[u])
            rep.fail({kUnit, "(1|" + R.basis[u].symbol + ")", p.value(L.unit, u).render(), R.counit[u].render()});
    }
    for (std::size_t a : ls) {
        ++rep.evaluations;
        if (p.value(a, R.unit) != L.counit[a])
            rep.fail({kUnit, "(" + L.basis[a].symbol + "|1)", p.value(a, R.unit).render(), L.counit[a].render()});
    }

    for (std::size_t a : ls)
        for (std::size_t b : ls) {
            if (L.degree(a) + L.degree(b) > cap)
                continue;
            const SparseVec* ab = L.product(a, b);
            if (!ab)
                continue;
            for (std::size_t u : rs) {
                CycScalar lhs = p.value(*ab, unit_vector(u));
                CycScalar rhs(0);
                for (const auto& [lr, c] : R.comult[u])
                    rhs += c * p.value(a, lr.second) * p.value(b, lr.first);
                ++rep.evaluations;
                if (lhs != rhs)
                    rep.fail({kMult, "(" + L.basis[a].symbol + " * " + L.basis[b].symbol + "|" + R.basis[u].symbol + ")",
                              lhs.render(), rhs.render()});
            }
        }

    for (std::size_t u : rs)
        for (std::size_t v : rs) {
            if (R.degree(u) + R.degree(v) > cap)
                continue;
            const SparseVec* uv = R.product(u, v);
            if (!uv)
                continue;
            for (std::size_t a : ls) {
                CycScalar lhs = p.value(unit_vector(a), *uv);
                CycScalar rhs(0);
                for (const auto& [lr, c] : L.comult[a])
                    rhs += c * p.value(lr.second, u) * p.value(lr.first, v);
                ++rep.evaluations;
                if (lhs != rhs)
                    rep.fail({kComult, "(" + L.basis[a].symbol + "|" + R.basis[u].symbol + " * " + R.basis[v].symbol + ")",
                              lhs.render(), rhs.render()});
            }
        }

    if (anti)
        for (std::size_t a : ls)
            for (std::size_t u : rs) {
                CycScalar lhs = p.value((*L.antipode)[a], unit_vector(u));
                CycScalar rhs = p.value(unit_vector(a), (*R.antipode)[u]);
                ++rep.evaluations;
                if (lhs != rhs)
                    rep.fail({kAnti, "(" + L.basis[a].symbol + "|" + R.basis[u].symbol + ")", lhs.render(), rhs.render()});
            }

    auto ranks = gram_ranks(p, cap);
    std::string line = "degree ranks:";
    for (int n = 0; n <= cap; ++n)
        line += " " + std::to_string(ranks[static_cast<std::size_t>(n)]) + "/" +
                std::to_string(of_degree(L, n).size());
    rep.notes.push_back(line);
    rep.notes.push_back(std::string("non-degenerate within cap: ") + (nondegenerate(p, cap) ? "yes" : "no"));
    return rep;
}

AxiomReport verify_action_compatibility(const PairingTable& p, const HopfAction& left, const HopfAction& right,
                                        int cap)
{
    if (!(left.lie == right.lie))
        throw Error("MismatchedLieAlgebras", "the two actions use different Lie algebras");
    const std::string axiom = "(x.a|u) = -(a|x.u)";
    AxiomReport rep;
    rep.declare(axiom);
    const auto ls = up_to(p.left, cap);
    const auto rs = up_to(p.right, cap);
    for (int x = 0; x < left.dim(); ++x)
        for (std::size_t a : ls)
            for (std::size_t u : rs) {
                CycScalar lhs = p.value(left.table[static_cast<std::size_t>(x)][a], unit_vector(u));
                CycScalar rhs = -p.value(unit_vector(a), right.table[static_cast<std::size_t>(x)][u]);
                ++rep.evaluations;
                if (lhs != rhs)
                    rep.fail({axiom,
                              "u" + std::to_string(x + 1) + " on (" + p.left.basis[a].symbol + "|" +
                                  p.right.basis[u].symbol + ")",
                              lhs.render(), rhs.render()});
            }
    return rep;
}

HopfAction transport_action(const PairingTable& p, const HopfAction& left, int cap)
{
    const auto ls = up_to(p.left, cap);
    const auto rs = up_to(p.right, cap);
    if (ls.size() != rs.size())
        throw Error("Degenerate", "truncations of different dimensions");
    const std::size_t n = ls.size();
    std::map<std::size_t, std::size_t> lpos;
    for (std::size_t i = 0; i < n; ++i)
        lpos.emplace(ls[i], i);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = p.value(ls[i], rs[j]);
    auto ginv = inverse(g);
    if (!ginv)
        throw Error("Degenerate", "the pairing matrix within cap is singular");
    HopfAction out = zero_action(p.right, left.dim());
    out.lie = left.lie;
    for (int x = 0; x < left.dim(); ++x) {
        Matrix at(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [k, c] : left.table[static_cast<std::size_t>(x)][ls[i]]) {
                auto it = lpos.find(k);
                if (it == lpos.end())
                    throw Error("Overflow", "the left action leaves the truncation");
                at(i, it->second) = c;
            }
        Matrix bm = (*ginv * at * g).scaled(CycScalar(-1));
        for (std::size_t j = 0; j < n; ++j) {
            SparseVec v;
            for (std::size_t l = 0; l < n; ++l)
                add_term(v, rs[l], bm(l, j));
            out.table[static_cast<std::size_t>(x)][rs[j]] = std::move(v);
        }
    }
    return out;
}

LemmaVerdict lemma_transfer_check(const PairingTable& p, const HopfAction& left, const HopfAction& right, int cap)
{
    AxiomReport hp = verify_hopf_pairing(p, cap);
    if (!hp.passed())
        throw Error("PreconditionFailed", "not a Hopf pairing: " + hp.summary());
    if (!nondegenerate(p, cap))
        throw Error("PreconditionFailed", "the pairing is degenerate within cap");
    AxiomReport compat = verify_action_compatibility(p, left, right, cap);
    if (!compat.passed())
        throw Error("PreconditionFailed", "actions are not compatible: " + compat.summary());
    LemmaVerdict v;
    v.left = check_module_hopf(p.left, left, cap);
    v.right = check_module_hopf(p.right, right, cap);
    v.agree = v.left.passed() == v.right.passed();
    return v;
}

} // namespace nichols
