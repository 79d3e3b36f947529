#include "nichols/hopf_core.hpp"

#include <algorithm>
#include <functional>

namespace nichols {

void add_term(Tensor2& t, std::size_t a, std::size_t b, const CycScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = t.emplace(std::make_pair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t.erase(it);
    }
}

void TruncatedHopf::set_product(std::size_t a, std::size_t b, SparseVec v)
{
    mult_[key(a, b)] = std::move(v);
}

const SparseVec* TruncatedHopf::product(std::size_t a, std::size_t b) const
{
    auto it = mult_.find(key(a, b));
    return it == mult_.end() ? nullptr : &it->second;
}

SparseVec TruncatedHopf::multiply(const SparseVec& x, const SparseVec& y) const
{
    SparseVec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            const SparseVec* p = product(a, b);
            if (!p)
                throw Error("Overflow", basis[a].symbol + " * " + basis[b].symbol + " exceeds the truncation");
            axpy(out, ca * cb, *p);
        }
    return out;
}

Tensor2 TruncatedHopf::coproduct(const SparseVec& x) const
{
    Tensor2 out;
    for (const auto& [a, c] : x)
        for (const auto& [ab, v] : comult[a])
            add_term(out, ab.first, ab.second, c * v);
    return out;
}

CycScalar TruncatedHopf::counit_of(const SparseVec& x) const
{
    CycScalar out(0);
    for (const auto& [a, c] : x)
        out += c * counit[a];
    return out;
}

SparseVec TruncatedHopf::antipode_of(const SparseVec& x) const
{
    if (!antipode)
        throw Error("NoAntipode", "antipode not solved for " + name);
    SparseVec out;
    for (const auto& [a, c] : x)
        axpy(out, c, (*antipode)[a]);
    return out;
}

CycScalar TruncatedHopf::braiding_factor(std::size_t a, std::size_t b) const
{
    if (!braided)
        return CycScalar(1);
    return braided->bichar(*basis[a].zdeg, *basis[b].zdeg);
}

Tensor2 TruncatedHopf::multiply(const Tensor2& x, const Tensor2& y) const
{
    Tensor2 out;
    for (const auto& [xa, xc] : x)
        for (const auto& [ya, yc] : y) {
            const SparseVec* l = product(xa.first, ya.first);
            const SparseVec* r = product(xa.second, ya.second);
            if (!l || !r)
                throw Error("Overflow", "tensor product exceeds the truncation");
            CycScalar f = xc * yc * braiding_factor(xa.second, ya.first);
            for (const auto& [i, ci] : *l)
                for (const auto& [j, cj] : *r)
                    add_term(out, i, j, f * ci * cj);
        }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> TruncatedHopf::product_keys() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(mult_.size());
    for (const auto& [k, v] : mult_)
        out.emplace_back(k / basis.size(), k % basis.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> TruncatedHopf::grouplikes() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].grouplike)
            out.push_back(i);
    return out;
}

std::optional<std::size_t> TruncatedHopf::find(const std::string& symbol) const
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].symbol == symbol)
            return i;
    return std::nullopt;
}

std::string TruncatedHopf::render(const SparseVec& v) const
{
    if (v.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : v) {
        std::string sym = basis[i].symbol;
        if (i == unit && sym == "1")
            sym.clear();
        out += render_term(c, sym, first);
        first = false;
    }
    return out;
}

std::string TruncatedHopf::render(const Tensor2& t) const
{
    if (t.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [ab, c] : t) {
        out += render_term(c, "(" + basis[ab.first].symbol + " (x) " + basis[ab.second].symbol + ")", first);
        first = false;
    }
    return out;
}

TruncatedHopf group_algebra(const AbelianGroup& g, int zrank)
{
    TruncatedHopf h;
    h.name = "group algebra";
    h.complete = true;
    auto els = g.elements();
    for (const auto& e : els) {
        std::string sym = g.rank() == 0 ? "1" : render_group_element(e);
        h.basis.push_back({sym, 0, std::vector<int>(static_cast<std::size_t>(zrank), 0), true});
    }
    h.unit = g.index_of(g.identity());
    std::vector<SparseVec> s;
    for (std::size_t i = 0; i < els.size(); ++i) {
        Tensor2 d;
        add_term(d, i, i, CycScalar(1));
        h.comult.push_back(d);
        h.counit.push_back(CycScalar(1));
        s.push_back(unit_vector(g.index_of(g.negate(els[i]))));
        for (std::size_t j = 0; j < els.size(); ++j)
            h.set_product(i, j, unit_vector(g.index_of(g.add(els[i], els[j]))));
    }
    h.antipode = std::move(s);
    return h;
}

std::vector<std::vector<int>> pbw_monomials(int dim, int cap)
{
    std::vector<std::vector<int>> out;
    for (int total = 0; total <= cap; ++total) {
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        // exponent vectors of the given total, lexicographically decreasing
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == dim - 1) {
                e[static_cast<std::size_t>(pos)] = left;
                out.push_back(e);
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[static_cast<std::size_t>(pos)] = k;
                rec(pos + 1, left - k);
            }
        };
        if (dim == 0) {
            if (total == 0)
                out.push_back(e);
            continue;
        }
        rec(0, total);
    }
    return out;
}

namespace {

using Pbw = std::map<std::vector<int>, CycScalar>;

void add_pbw(Pbw& p, const std::vector<int>& e, const CycScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

// Straightening in U(g) for an ordered basis x_1 < ... < x_d.
class PbwStraightener {
public:
    explicit PbwStraightener(const LieAlgebra& g) : g_(g) {}

    // x_i * e^alpha as a combination of ordered monomials
    const Pbw& left_mul(int i, const std::vector<int>& alpha)
    {
        auto key = std::make_pair(i, alpha);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        Pbw out;
        int j = 0;
        while (j < g_.dim && alpha[static_cast<std::size_t>(j)] == 0)
            ++j;
        if (j == g_.dim || i <= j) {
            auto e = alpha;
            ++e[static_cast<std::size_t>(i)];
            out.emplace(std::move(e), CycScalar(1));
        } else {
            // x_i x_j = x_j x_i + [x_i, x_j]
            auto beta = alpha;
            --beta[static_cast<std::size_t>(j)];
            Pbw t = left_mul(i, beta);
            for (const auto& [gamma, c] : t)
                for (const auto& [e, d] : left_mul(j, gamma))
                    add_pbw(out, e, c * d);
            for (int k = 0; k < g_.dim; ++k) {
                const CycScalar& c = g_.constant(i, j, k);
                if (c.is_zero())
                    continue;
                for (const auto& [e, d] : left_mul(k, beta))
                    add_pbw(out, e, c * d);
            }
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    Pbw left_mul(int i, const Pbw& p)
    {
        Pbw out;
        for (const auto& [e, c] : p)
            for (const auto& [f, d] : left_mul(i, e))
                add_pbw(out, f, c * d);
        return out;
    }

    // e^alpha * p
    Pbw multiply(const std::vector<int>& alpha, Pbw p)
    {
        for (int i = g_.dim - 1; i >= 0; --i)
            for (int k = 0; k < alpha[static_cast<std::size_t>(i)]; ++k)
                p = left_mul(i, p);
        return p;
    }

    // x_d^{a_d} ... x_1^{a_1}, the reversed product
    Pbw reversed(const std::vector<int>& alpha)
    {
        Pbw p;
        p.emplace(std::vector<int>(static_cast<std::size_t>(g_.dim), 0), CycScalar(1));
        for (int i = 0; i < g_.dim; ++i)
            for (int k = 0; k < alpha[static_cast<std::size_t>(i)]; ++k)
                p = left_mul(i, p);
        return p;
    }

private:
    const LieAlgebra& g_;
    std::map<std::pair<int, std::vector<int>>, Pbw> memo_;
};

std::string pbw_symbol(const std::vector<int>& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "u" + std::to_string(i + 1);
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

long binomial(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TruncatedHopf enveloping_truncated(const LieAction& g, int cap, int zrank)
{
    const int d = g.dim();
    TruncatedHopf h;
    h.name = "truncated enveloping algebra";
    h.cap = cap;
    h.complete = d == 0;
    auto monos = pbw_monomials(d, cap);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        index.emplace(monos[i], i);
        int deg = 0;
        for (int e : monos[i])
            deg += e;
        h.basis.push_back({pbw_symbol(monos[i]), deg, std::vector<int>(static_cast<std::size_t>(zrank), 0), deg == 0});
    }
    h.unit = 0;
    auto to_vec = [&](const Pbw& p) {
        SparseVec v;
        for (const auto& [e, c] : p)
            add_term(v, index.at(e), c);
        return v;
    };
    PbwStraightener st(g.algebra);
    for (std::size_t a = 0; a < monos.size(); ++a)
        for (std::size_t b = 0; b < monos.size(); ++b) {
            if (h.basis[a].degree + h.basis[b].degree > cap)
                continue;
            Pbw p;
            p.emplace(monos[b], CycScalar(1));
            h.set_product(a, b, to_vec(st.multiply(monos[a], std::move(p))));
        }
    std::vector<SparseVec> s;
    for (std::size_t a = 0; a < monos.size(); ++a) {
        const auto& alpha = monos[a];
        Tensor2 t;
        // sub-multisets gamma <= alpha with product binomials
        std::vector<int> gamma(alpha.size(), 0);
        std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long coeff) {
            if (pos == alpha.size()) {
                std::vector<int> rest(alpha.size());
                for (std::size_t i = 0; i < alpha.size(); ++i)
                    rest[i] = alpha[i] - gamma[i];
                add_term(t, index.at(gamma), index.at(rest), CycScalar(coeff));
                return;
            }
            for (int k = 0; k <= alpha[pos]; ++k) {
                gamma[pos] = k;
                rec(pos + 1, coeff * binomial(alpha[pos], k));
            }
            gamma[pos] = 0;
        };
        rec(0, 1);
        h.comult.push_back(std::move(t));
        h.counit.push_back(CycScalar(h.basis[a].degree == 0 ? 1 : 0));
        int deg = h.basis[a].degree;
        s.push_back(nichols::scaled(to_vec(st.reversed(alpha)), CycScalar(deg % 2 ? -1 : 1)));
    }
    h.antipode = std::move(s);
    return h;
}

namespace {

void require_same_braiding(const DiagonalBraiding& a, const DiagonalBraiding& b)
{
    if (a.theta() != b.theta())
        throw Error("RealizationMismatch", "rank differs");
    for (int i = 0; i < a.theta(); ++i)
        for (int j = 0; j < a.theta(); ++j)
            if (a(i, j) != b(i, j))
                throw Error("RealizationMismatch", "q_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                                       " differs between the algebra and the realization");
}

std::string word_symbol(const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (k ? "*x" : "x") + std::to_string(w[k] + 1);
    return s;
}

} // namespace

TruncatedHopf bosonize(const GradedQuotient& b, const YDRealization& r, int cap)
{
    require_same_braiding(b.braiding(), r.braiding);
    cap = std::min(cap, b.cap());
    const int theta = b.theta();
    const AbelianGroup& group = r.group;
    const auto els = group.elements();
    const std::size_t order = els.size();
    auto vanish = b.vanishing_degree();

    TruncatedHopf h;
    h.name = "bosonization";
    h.cap = cap;
    h.complete = vanish && *vanish - 1 <= cap;

    // basis: (degree n, standard word k, group element e)
    std::vector<std::size_t> offset;
    std::vector<std::vector<int>> word_deg;
    std::vector<int> word_len;
    std::vector<std::size_t> word_pos;
    for (int n = 0; n <= cap; ++n) {
        offset.push_back(h.basis.size());
        for (std::size_t k = 0; k < b.dim(n); ++k) {
            Word w = b.basis_word(n, k);
            auto md = multidegree(w, theta);
            for (std::size_t e = 0; e < order; ++e) {
                std::string sym = word_symbol(w);
                if (group.rank() > 0)
                    sym += "#" + render_group_element(els[e]);
                h.basis.push_back({sym, n, md, n == 0});
            }
        }
    }
    offset.push_back(h.basis.size());
    auto index = [&](int n, std::size_t k, std::size_t e) { return offset[static_cast<std::size_t>(n)] + k * order + e; };
    h.unit = index(0, 0, group.index_of(group.identity()));

    // chi_i(e) and the character and group weights of multidegrees
    auto character_value = [&](const std::vector<int>& md, std::size_t e) {
        CycScalar v(1);
        for (int i = 0; i < theta; ++i)
            if (md[static_cast<std::size_t>(i)] != 0)
                v *= r.chi[static_cast<std::size_t>(i)](els[e]).pow(md[static_cast<std::size_t>(i)]);
        return v;
    };
    auto group_weight = [&](const std::vector<int>& md) {
        GroupElement g = group.identity();
        for (int i = 0; i < theta; ++i)
            for (int k = 0; k < md[static_cast<std::size_t>(i)]; ++k)
                g = group.add(g, r.g[static_cast<std::size_t>(i)]);
        return group.index_of(g);
    };

    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q) {
            const int n = p + q;
            const bool known_zero = vanish && n >= *vanish;
            if (n > cap && !known_zero)
                continue;
            for (std::size_t u = 0; u < b.dim(p); ++u)
                for (std::size_t v = 0; v < b.dim(q); ++v) {
                    SparseVec uv = known_zero ? SparseVec{} : b.multiply(p, u, q, v);
                    auto vdeg = multidegree(b.basis_word(q, v), theta);
                    for (std::size_t a = 0; a < order; ++a) {
                        CycScalar chi = character_value(vdeg, a);
                        for (std::size_t c = 0; c < order; ++c) {
                            std::size_t ac = group.index_of(group.add(els[a], els[c]));
                            SparseVec out;
                            for (const auto& [k, x] : uv)
                                out.emplace(index(n, k, ac), x * chi);
                            h.set_product(index(p, u, a), index(q, v, c), std::move(out));
                        }
                    }
                }
        }

    for (int n = 0; n <= cap; ++n)
        for (std::size_t k = 0; k < b.dim(n); ++k) {
            std::vector<std::pair<int, std::map<std::pair<std::size_t, std::size_t>, CycScalar>>> parts;
            for (int p = 0; p <= n; ++p)
                parts.emplace_back(p, b.coproduct(n, k, p));
            for (std::size_t a = 0; a < order; ++a) {
                Tensor2 t;
                for (const auto& [p, comp] : parts)
                    for (const auto& [lr, c] : comp) {
                        auto rdeg = multidegree(b.basis_word(n - p, lr.second), theta);
                        std::size_t ga = group.index_of(group.add(els[group_weight(rdeg)], els[a]));
                        add_term(t, index(p, lr.first, ga), index(n - p, lr.second, a), c);
                    }
                h.comult.push_back(std::move(t));
                h.counit.push_back(CycScalar(n == 0 ? 1 : 0));
            }
        }
    return solve_antipode(std::move(h), cap);
}

TruncatedHopf braided_nichols_hopf(const GradedQuotient& b, int cap)
{
    cap = std::min(cap, b.cap());
    const int theta = b.theta();
    auto vanish = b.vanishing_degree();
    TruncatedHopf h;
    h.name = "braided graded quotient";
    h.cap = cap;
    h.complete = vanish && *vanish - 1 <= cap;
    h.braided = b.braiding();
    std::vector<std::size_t> offset;
    for (int n = 0; n <= cap; ++n) {
        offset.push_back(h.basis.size());
        for (std::size_t k = 0; k < b.dim(n); ++k) {
            Word w = b.basis_word(n, k);
            h.basis.push_back({word_symbol(w), n, multidegree(w, theta), n == 0});
        }
    }
    h.unit = 0;
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q) {
            const int n = p + q;
            const bool known_zero = vanish && n >= *vanish;
            if (n > cap && !known_zero)
                continue;
            for (std::size_t u = 0; u < b.dim(p); ++u)
                for (std::size_t v = 0; v < b.dim(q); ++v) {
                    SparseVec out;
                    if (!known_zero)
                        for (const auto& [k, x] : b.multiply(p, u, q, v))
                            out.emplace(offset[static_cast<std::size_t>(n)] + k, x);
                    h.set_product(offset[static_cast<std::size_t>(p)] + u, offset[static_cast<std::size_t>(q)] + v,
                                  std::move(out));
                }
        }
    for (int n = 0; n <= cap; ++n)
        for (std::size_t k = 0; k < b.dim(n); ++k) {
            Tensor2 t;
            for (int p = 0; p <= n; ++p)
                for (const auto& [lr, c] : b.coproduct(n, k, p))
                    add_term(t, offset[static_cast<std::size_t>(p)] + lr.first,
                             offset[static_cast<std::size_t>(n - p)] + lr.second, c);
            h.comult.push_back(std::move(t));
            h.counit.push_back(CycScalar(n == 0 ? 1 : 0));
        }
    return solve_antipode(std::move(h), cap);
}

namespace {

using Tensor3 = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CycScalar>;

void add_term3(Tensor3& t, std::size_t a, std::size_t b, std::size_t c, const CycScalar& v)
{
    if (v.is_zero())
        return;
    auto key = std::make_tuple(a, b, c);
    auto [it, inserted] = t.emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            t.erase(it);
    }
}

std::string render3(const TruncatedHopf& h, const Tensor3& t)
{
    if (t.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t) {
        out += render_term(c,
                           "(" + h.basis[std::get<0>(k)].symbol + " (x) " + h.basis[std::get<1>(k)].symbol + " (x) " +
                               h.basis[std::get<2>(k)].symbol + ")",
                           first);
        first = false;
    }
    return out;
}

} // namespace

AxiomReport verify_hopf(const TruncatedHopf& h, int cap)
{
    AxiomReport rep;
    const std::string kAssoc = "associativity";
    const std::string kUnit = "unit";
    const std::string kCoassoc = "coassociativity";
    const std::string kCounit = "counit";
    const std::string kDeltaMult = "Delta is an algebra map";
    const std::string kEpsMult = "epsilon is an algebra map";
    const std::string kClosure = "table closure";
    const std::string kSLeft = "antipode m(S (x) id)Delta = u epsilon";
    const std::string kSRight = "antipode m(id (x) S)Delta = u epsilon";
    for (const auto& a : {kAssoc, kUnit, kCoassoc, kCounit, kDeltaMult, kEpsMult})
        rep.declare(a);
    if (h.antipode) {
        rep.declare(kSLeft);
        rep.declare(kSRight);
    } else {
        rep.notes.push_back("antipode absent; convolution identities not checked");
    }
    int eff = cap;
    if (!h.complete && cap > h.cap) {
        eff = h.cap;
        rep.notes.push_back("cap lowered to the truncation degree " + std::to_string(h.cap));
    }
    rep.notes.push_back("checked on basis tuples with degree sum <= " + std::to_string(eff));

    const std::size_t n = h.dim();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return h.degree(a) < h.degree(b); });

    auto prod = [&](std::size_t a, std::size_t b) -> const SparseVec* {
        const SparseVec* p = h.product(a, b);
        if (!p)
            rep.fail({kClosure, h.basis[a].symbol + " * " + h.basis[b].symbol, "missing", "stored product"});
        return p;
    };

    // unit and counit of the unit
    {
        Tensor2 one;
        add_term(one, h.unit, h.unit, CycScalar(1));
        ++rep.evaluations;
        if (h.comult[h.unit] != one)
            rep.fail({kDeltaMult, "Delta(1)", h.render(h.comult[h.unit]), h.render(one)});
        if (!h.counit[h.unit].is_one())
            rep.fail({kEpsMult, "epsilon(1)", h.counit[h.unit].render(), "1"});
    }

    for (std::size_t a : order) {
        const int da = h.degree(a);
        if (da > eff)
            break;
        SparseVec ea = unit_vector(a);
        // unit
        const SparseVec* la = prod(h.unit, a);
        const SparseVec* ra = prod(a, h.unit);
        ++rep.evaluations;
        if (la && *la != ea)
            rep.fail({kUnit, "1 * " + h.basis[a].symbol, h.render(*la), h.basis[a].symbol});
        if (ra && *ra != ea)
            rep.fail({kUnit, h.basis[a].symbol + " * 1", h.render(*ra), h.basis[a].symbol});

        // coassociativity and counit
        const Tensor2& d = h.comult[a];
        Tensor3 left;
        Tensor3 right;
        SparseVec eps_left;
        SparseVec eps_right;
        for (const auto& [lr, c] : d) {
            for (const auto& [lr2, c2] : h.comult[lr.first])
                add_term3(left, lr2.first, lr2.second, lr.second, c * c2);
            for (const auto& [lr2, c2] : h.comult[lr.second])
                add_term3(right, lr.first, lr2.first, lr2.second, c * c2);
            add_term(eps_left, lr.second, c * h.counit[lr.first]);
            add_term(eps_right, lr.first, c * h.counit[lr.second]);
        }
        rep.evaluations += 2;
        if (left != right)
            rep.fail({kCoassoc, h.basis[a].symbol, render3(h, left), render3(h, right)});
        if (eps_left != ea)
            rep.fail({kCounit, "(epsilon (x) id)Delta(" + h.basis[a].symbol + ")", h.render(eps_left), h.basis[a].symbol});
        if (eps_right != ea)
            rep.fail({kCounit, "(id (x) epsilon)Delta(" + h.basis[a].symbol + ")", h.render(eps_right), h.basis[a].symbol});

        // antipode
        if (h.antipode) {
            SparseVec expect;
            add_term(expect, h.unit, h.counit[a]);
            SparseVec sl;
            SparseVec sr;
            bool ok = true;
            for (const auto& [lr, c] : d) {
                for (const auto& [k, s] : (*h.antipode)[lr.first]) {
                    const SparseVec* p = prod(k, lr.second);
                    if (!p) {
                        ok = false;
                        continue;
                    }
                    axpy(sl, c * s, *p);
                }
                for (const auto& [k, s] : (*h.antipode)[lr.second]) {
                    const SparseVec* p = prod(lr.first, k);
                    if (!p) {
                        ok = false;
                        continue;
                    }
                    axpy(sr, c * s, *p);
                }
            }
            rep.evaluations += 2;
            if (ok && sl != expect)
                rep.fail({kSLeft, h.basis[a].symbol, h.render(sl), h.render(expect)});
            if (ok && sr != expect)
                rep.fail({kSRight, h.basis[a].symbol, h.render(sr), h.render(expect)});
        }

        for (std::size_t b : order) {
            const int db = h.degree(b);
            if (da + db > eff)
                break;
            const SparseVec* ab = prod(a, b);
            if (!ab)
                continue;
            const std::string pair = h.basis[a].symbol + ", " + h.basis[b].symbol;

            // epsilon and Delta multiplicative
            ++rep.evaluations;
            CycScalar eab = h.counit_of(*ab);
            if (eab != h.counit[a] * h.counit[b])
                rep.fail({kEpsMult, pair, eab.render(), (h.counit[a] * h.counit[b]).render()});
            Tensor2 dab = h.coproduct(*ab);
            Tensor2 dadb;
            try {
                dadb = h.multiply(h.comult[a], h.comult[b]);
            } catch (const Error&) {
                rep.fail({kClosure, "Delta(" + h.basis[a].symbol + ")Delta(" + h.basis[b].symbol + ")", "missing",
                          "stored products"});
                continue;
            }
            ++rep.evaluations;
            if (dab != dadb)
                rep.fail({kDeltaMult, pair, h.render(dab), h.render(dadb)});

            // associativity
            for (std::size_t c : order) {
                const int dc = h.degree(c);
                if (da + db + dc > eff)
                    break;
                const SparseVec* bc = prod(b, c);
                if (!bc)
                    continue;
                SparseVec lhs;
                SparseVec rhs;
                bool ok = true;
                for (const auto& [k, x] : *ab) {
                    const SparseVec* p = prod(k, c);
                    if (!p) {
                        ok = false;
                        break;
                    }
                    axpy(lhs, x, *p);
                }
                for (const auto& [k, x] : *bc) {
                    const SparseVec* p = prod(a, k);
                    if (!p) {
                        ok = false;
                        break;
                    }
                    axpy(rhs, x, *p);
                }
                ++rep.evaluations;
                if (ok && lhs != rhs)
                    rep.fail({kAssoc, "(" + pair + ", " + h.basis[c].symbol + ")", h.render(lhs), h.render(rhs)});
            }
        }
    }
    return rep;
}

TruncatedHopf solve_antipode(TruncatedHopf h, int cap)
{
    const std::size_t n = h.dim();
    const int eff = h.complete ? std::max(cap, h.cap) : std::min(cap, h.cap);
    std::vector<std::optional<SparseVec>> s(n);

    for (std::size_t g : h.grouplikes())
        for (std::size_t k : h.grouplikes()) {
            const SparseVec* p = h.product(g, k);
            if (p && *p == unit_vector(h.unit)) {
                s[g] = unit_vector(k);
                break;
            }
        }
    for (std::size_t g : h.grouplikes())
        if (!s[g])
            throw Error("NoAntipode", "group-like " + h.basis[g].symbol + " has no inverse in the basis");

    auto times = [&](const SparseVec& x, std::size_t b) {
        SparseVec out;
        for (const auto& [k, c] : x) {
            const SparseVec* p = h.product(k, b);
            if (!p)
                throw Error("NoAntipode", "product " + h.basis[k].symbol + " * " + h.basis[b].symbol +
                                              " leaves the truncation");
            axpy(out, c, *p);
        }
        return out;
    };

    int max_deg = 0;
    for (const auto& t : h.basis)
        max_deg = std::max(max_deg, t.degree);
    for (int d = 0; d <= std::min(eff, max_deg); ++d) {
        std::vector<std::size_t> todo;
        for (std::size_t a = 0; a < n; ++a)
            if (h.degree(a) == d && !s[a])
                todo.push_back(a);
        // triangular pass: exactly one unknown term, of the form a (x) grouplike
        bool progress = true;
        while (progress && !todo.empty()) {
            progress = false;
            std::vector<std::size_t> rest;
            for (std::size_t a : todo) {
                std::optional<std::pair<std::size_t, CycScalar>> top;
                bool single = true;
                for (const auto& [lr, c] : h.comult[a]) {
                    if (s[lr.first])
                        continue;
                    if (lr.first != a || !h.basis[lr.second].grouplike || top) {
                        single = false;
                        break;
                    }
                    top = std::make_pair(lr.second, c);
                }
                if (!single || !top) {
                    rest.push_back(a);
                    continue;
                }
                SparseVec rhs;
                add_term(rhs, h.unit, h.counit[a]);
                for (const auto& [lr, c] : h.comult[a])
                    if (lr.first != a)
                        axpy(rhs, -c, times(*s[lr.first], lr.second));
                SparseVec inv = *s[top->first];
                SparseVec val;
                for (const auto& [k, c] : inv)
                    axpy(val, c, times(rhs, k));
                s[a] = nichols::scaled(val, top->second.inverse());
                progress = true;
            }
            todo = std::move(rest);
        }
        if (todo.empty())
            continue;

        // general linear solve for the remaining elements of this degree
        std::vector<std::size_t> support;
        for (std::size_t k = 0; k < n; ++k)
            if (h.degree(k) <= d)
                support.push_back(k);
        std::map<std::size_t, std::size_t> unknown_pos;
        for (std::size_t i = 0; i < todo.size(); ++i)
            unknown_pos.emplace(todo[i], i);
        const std::size_t cols = todo.size() * support.size();
        const std::size_t rows = todo.size() * n;
        if (rows * cols > 4'000'000)
            throw Error("NoAntipode", "degree " + std::to_string(d) + ": linear system too large");
        Matrix m(rows, cols);
        std::vector<CycScalar> rhs(rows);
        for (std::size_t i = 0; i < todo.size(); ++i) {
            const std::size_t a = todo[i];
            SparseVec known;
            add_term(known, h.unit, h.counit[a]);
            for (const auto& [lr, c] : h.comult[a]) {
                auto it = unknown_pos.find(lr.first);
                if (it == unknown_pos.end()) {
                    if (!s[lr.first])
                        throw Error("NoAntipode", "degree " + std::to_string(d) + ": " + h.basis[a].symbol +
                                                      " needs S of a higher-degree element");
                    axpy(known, -c, times(*s[lr.first], lr.second));
                    continue;
                }
                for (std::size_t sk = 0; sk < support.size(); ++sk) {
                    const SparseVec* p = h.product(support[sk], lr.second);
                    if (!p)
                        continue;
                    for (const auto& [row, x] : *p)
                        m(i * n + row, it->second * support.size() + sk) += c * x;
                }
            }
            for (const auto& [row, x] : known)
                rhs[i * n + row] = x;
        }
        auto sol = solve(m, rhs);
        if (!sol)
            throw Error("NoAntipode", "no solution in degree " + std::to_string(d));
        for (std::size_t i = 0; i < todo.size(); ++i) {
            SparseVec v;
            for (std::size_t sk = 0; sk < support.size(); ++sk)
                add_term(v, support[sk], (*sol)[i * support.size() + sk]);
            s[todo[i]] = std::move(v);
        }
    }
    std::vector<SparseVec> out(n);
    for (std::size_t a = 0; a < n; ++a)
        if (s[a])
            out[a] = std::move(*s[a]);
    h.antipode = std::move(out);
    return h;
}

std::vector<SparseVec> skew_primitive_space(const TruncatedHopf& h, std::size_t g, std::size_t t)
{
    auto check = [&](std::size_t x) {
        Tensor2 gg;
        add_term(gg, x, x, CycScalar(1));
        if (x >= h.dim() || !h.counit[x].is_one() || h.comult[x] != gg)
            throw Error("NotGrouplike", x < h.dim() ? h.basis[x].symbol : std::to_string(x));
    };
    check(g);
    check(t);
    const std::size_t n = h.dim();
    std::vector<SparseVec> cols;
    cols.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        Tensor2 d = h.comult[a];
        add_term(d, g, a, CycScalar(-1));
        add_term(d, a, t, CycScalar(-1));
        SparseVec v;
        for (const auto& [lr, c] : d)
            v.emplace(lr.first * n + lr.second, c);
        cols.push_back(std::move(v));
    }
    SparseEchelon ech;
    for (auto& k : sparse_kernel(cols))
        ech.insert(std::move(k));
    std::vector<SparseVec> out;
    for (const auto& [p, row] : ech.rows())
        out.push_back(row);
    return out;
}

} // namespace nichols
