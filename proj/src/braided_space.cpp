#include "nichols/braided_space.hpp"

#include <numeric>
#include <sstream>

namespace nichols {

DiagonalBraiding::DiagonalBraiding(std::vector<std::vector<CycScalar>> rows) : q_(std::move(rows))
{
    if (q_.empty())
        throw Error("InvalidBraiding", "theta must be at least 1");
    for (const auto& row : q_) {
        if (row.size() != q_.size())
            throw Error("InvalidBraiding", "braiding matrix must be square");
        for (const auto& x : row)
            if (x.is_zero())
                throw Error("InvalidBraiding", "braiding entries must be nonzero");
    }
}

CycScalar DiagonalBraiding::bichar(const std::vector<int>& a, const std::vector<int>& b) const
{
    CycScalar out(1);
    for (int i = 0; i < theta(); ++i) {
        if (a[static_cast<std::size_t>(i)] == 0)
            continue;
        for (int j = 0; j < theta(); ++j) {
            long e = static_cast<long>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)];
            if (e != 0)
                out *= (*this)(i, j).pow(e);
        }
    }
    return out;
}

std::size_t AbelianGroup::order() const
{
    std::size_t n = 1;
    for (int e : exponents)
        n *= static_cast<std::size_t>(e);
    return n;
}

GroupElement AbelianGroup::generator(std::size_t t) const
{
    GroupElement g = identity();
    g[t] = 1;
    return normalize(std::move(g));
}

GroupElement AbelianGroup::normalize(GroupElement g) const
{
    for (std::size_t t = 0; t < g.size(); ++t)
        g[t] = ((g[t] % exponents[t]) + exponents[t]) % exponents[t];
    return g;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const
{
    GroupElement out(a.size());
    for (std::size_t t = 0; t < a.size(); ++t)
        out[t] = (a[t] + b[t]) % exponents[t];
    return out;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const
{
    GroupElement out(a.size());
    for (std::size_t t = 0; t < a.size(); ++t)
        out[t] = (exponents[t] - a[t]) % exponents[t];
    return out;
}

std::vector<GroupElement> AbelianGroup::elements() const
{
    std::vector<GroupElement> out;
    out.reserve(order());
    GroupElement cur = identity();
    for (;;) {
        out.push_back(cur);
        std::size_t t = cur.size();
        while (t > 0) {
            --t;
            if (++cur[t] < exponents[t])
                break;
            cur[t] = 0;
            if (t == 0)
                return out;
        }
        if (cur.empty())
            return out;
    }
}

std::size_t AbelianGroup::index_of(const GroupElement& g) const
{
    std::size_t idx = 0;
    for (std::size_t t = 0; t < g.size(); ++t)
        idx = idx * static_cast<std::size_t>(exponents[t]) + static_cast<std::size_t>(g[t]);
    return idx;
}

CycScalar Character::operator()(const GroupElement& g) const
{
    long order = 1;
    for (const auto& v : values)
        order = lcm_int(order, v.order);
    long e = 0;
    for (std::size_t t = 0; t < values.size(); ++t)
        e += values[t].exponent * (order / values[t].order) * g[t];
    return root_of_unity(static_cast<int>(order), e);
}

bool operator==(const Character& a, const Character& b)
{
    if (a.values.size() != b.values.size())
        return false;
    for (std::size_t t = 0; t < a.values.size(); ++t)
        if (!(a.values[t] == b.values[t]))
            return false;
    return true;
}

bool YDRealization::same_component(int i, int j) const
{
    return g[static_cast<std::size_t>(i)] == g[static_cast<std::size_t>(j)] &&
           chi[static_cast<std::size_t>(i)] == chi[static_cast<std::size_t>(j)];
}

YDRealization realization_from_pairs(AbelianGroup group, std::vector<GroupElement> g,
                                     std::vector<Character> chi)
{
    if (g.size() != chi.size() || g.empty())
        throw Error("InvalidRealization", "need one (g_i, chi_i) pair per basis vector");
    for (auto& gi : g) {
        if (gi.size() != group.rank())
            throw Error("InvalidRealization", "group element of wrong rank");
        gi = group.normalize(gi);
    }
    for (const auto& c : chi)
        if (c.values.size() != group.rank())
            throw Error("InvalidRealization", "character of wrong rank");
    std::vector<std::vector<CycScalar>> rows(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            rows[i].push_back(chi[j](g[i]));
    DiagonalBraiding b(std::move(rows));
    return YDRealization{std::move(group), std::move(g), std::move(chi), std::move(b)};
}

YDRealization derive_realization(const DiagonalBraiding& braiding)
{
    const int theta = braiding.theta();
    long m = 1;
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j) {
            auto ord = multiplicative_order(braiding(i, j));
            if (!ord)
                throw Error("NotRootOfUnity", "q_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                                  " = " + braiding(i, j).render() + " has infinite order");
            m = lcm_int(m, *ord);
        }
    AbelianGroup group{std::vector<int>(static_cast<std::size_t>(theta), static_cast<int>(m))};
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    for (int i = 0; i < theta; ++i)
        g.push_back(group.generator(static_cast<std::size_t>(i)));
    for (int j = 0; j < theta; ++j) {
        Character c;
        for (int i = 0; i < theta; ++i) {
            auto k = discrete_log(braiding(i, j), static_cast<int>(m));
            c.values.push_back(RootOfUnity{static_cast<int>(m), *k});
        }
        chi.push_back(std::move(c));
    }
    return YDRealization{std::move(group), std::move(g), std::move(chi), braiding};
}

RealizationReport validate_realization(const YDRealization& r)
{
    RealizationReport report;
    for (int i = 0; i < r.theta(); ++i)
        for (int j = 0; j < r.theta(); ++j) {
            CycScalar lhs = r.chi[static_cast<std::size_t>(j)](r.g[static_cast<std::size_t>(i)]);
            if (lhs != r.braiding(i, j))
                report.violations.push_back({i, j, lhs, r.braiding(i, j)});
        }
    return report;
}

LieAlgebra LieAlgebra::abelian(int dim)
{
    LieAlgebra g;
    g.dim = dim;
    auto d = static_cast<std::size_t>(dim);
    g.constants.assign(d, std::vector<std::vector<CycScalar>>(d, std::vector<CycScalar>(d)));
    return g;
}

bool LieAlgebra::is_abelian() const
{
    for (const auto& a : constants)
        for (const auto& b : a)
            for (const auto& c : b)
                if (!c.is_zero())
                    return false;
    return true;
}

Matrix elementary_map(int theta, int i, int j)
{
    Matrix m(static_cast<std::size_t>(theta), static_cast<std::size_t>(theta));
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = CycScalar(1);
    return m;
}

Matrix torus_action(const std::vector<CycScalar>& h)
{
    Matrix m(h.size(), h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        m(i, i) = h[i];
    return m;
}

Matrix compose(const Matrix& d, const Matrix& e)
{
    return e * d;
}

Matrix bracket(const Matrix& d, const Matrix& e)
{
    return compose(d, e) - compose(e, d);
}

bool is_yd_morphism(const YDRealization& r, const Matrix& d)
{
    for (int i = 0; i < r.theta(); ++i)
        for (int j = 0; j < r.theta(); ++j)
            if (!d(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero() && !r.same_component(i, j))
                return false;
    return true;
}

LieAction biderivation_algebra(const YDRealization& r)
{
    std::vector<Matrix> maps;
    for (int i = 0; i < r.theta(); ++i)
        for (int j = 0; j < r.theta(); ++j)
            if (r.same_component(i, j))
                maps.push_back(elementary_map(r.theta(), i, j));
    return close_under_bracket(r, maps);
}

LieAction torus_algebra(int theta)
{
    std::vector<std::vector<CycScalar>> hs;
    for (int i = 0; i < theta; ++i) {
        std::vector<CycScalar> h(static_cast<std::size_t>(theta));
        h[static_cast<std::size_t>(i)] = CycScalar(1);
        hs.push_back(std::move(h));
    }
    return abelian_torus(hs);
}

LieAction abelian_torus(const std::vector<std::vector<CycScalar>>& hs)
{
    LieAction act{LieAlgebra::abelian(static_cast<int>(hs.size())), {}};
    for (const auto& h : hs)
        act.maps.push_back(torus_action(h));
    return act;
}

namespace {

SparseVec flatten(const Matrix& m)
{
    SparseVec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            add_term(v, i * m.cols() + j, m(i, j));
    return v;
}

} // namespace

LieAction close_under_bracket(const YDRealization& r, const std::vector<Matrix>& maps)
{
    const auto theta = static_cast<std::size_t>(r.theta());
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (maps[k].rows() != theta || maps[k].cols() != theta)
            throw Error("InvalidMap", "map " + std::to_string(k + 1) + " is not theta x theta");
        if (!is_yd_morphism(r, maps[k]))
            throw Error("NotYDMorphism", "map " + std::to_string(k + 1) + " mixes isotypic components");
    }
    SparseEchelon span;
    for (std::size_t k = 0; k < maps.size(); ++k)
        if (!span.insert(flatten(maps[k])))
            throw Error("DependentMaps", "map " + std::to_string(k + 1) + " lies in the span of the previous maps");
    const std::size_t d = maps.size();
    Matrix basis(theta * theta, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < theta; ++i)
            for (std::size_t j = 0; j < theta; ++j)
                basis(i * theta + j, k) = maps[k](i, j);
    LieAction act{LieAlgebra::abelian(static_cast<int>(d)), maps};
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Matrix br = bracket(maps[a], maps[b]);
            std::vector<CycScalar> rhs(theta * theta);
            for (std::size_t i = 0; i < theta; ++i)
                for (std::size_t j = 0; j < theta; ++j)
                    rhs[i * theta + j] = br(i, j);
            auto x = solve(basis, rhs);
            if (!x)
                throw Error("NotClosed", "[map " + std::to_string(a + 1) + ", map " + std::to_string(b + 1) +
                                             "] leaves the span");
            act.algebra.constants[a][b] = *x;
        }
    return act;
}

std::string render_group_element(const GroupElement& g)
{
    std::ostringstream os;
    os << "g(";
    for (std::size_t t = 0; t < g.size(); ++t)
        os << (t ? "," : "") << g[t];
    os << ")";
    return os.str();
}

} // namespace nichols
