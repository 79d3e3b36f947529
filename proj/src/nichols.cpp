#include "nichols/nichols.hpp"

namespace nichols {

namespace {

// Word indices of T^n grouped by multidegree, in increasing order.
std::map<std::vector<int>, std::vector<std::size_t>> multidegree_blocks(int n, int theta)
{
    std::map<std::vector<int>, std::vector<std::size_t>> blocks;
    const std::size_t dim = word_count(theta, n);
    for (std::size_t j = 0; j < dim; ++j)
        blocks[multidegree(word_at(j, n, theta), theta)].push_back(j);
    return blocks;
}

} // namespace

const GradedQuotient::Piece& GradedQuotient::piece(int n) const
{
    if (n < 0 || n > cap_)
        throw Error("BeyondCap", "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap_));
    return pieces_[static_cast<std::size_t>(n)];
}

void GradedQuotient::finish_piece(int n)
{
    Piece& p = pieces_[static_cast<std::size_t>(n)];
    p.basis.clear();
    p.position.clear();
    if (!p.full)
        for (std::size_t j = 0; j < p.ambient; ++j)
            if (!p.relations.is_pivot(j)) {
                p.position.emplace(j, p.basis.size());
                p.basis.push_back(j);
            }
    if (p.basis.empty() && !vanish_)
        vanish_ = n;
}

std::size_t GradedQuotient::dim(int n) const
{
    return piece(n).basis.size();
}

std::vector<std::size_t> GradedQuotient::dims() const
{
    std::vector<std::size_t> d;
    for (int n = 0; n <= cap_; ++n)
        d.push_back(dim(n));
    return d;
}

const std::vector<std::size_t>& GradedQuotient::basis(int n) const
{
    return piece(n).basis;
}

Word GradedQuotient::basis_word(int n, std::size_t k) const
{
    return word_at(piece(n).basis.at(k), n, theta());
}

std::optional<std::size_t> GradedQuotient::basis_position(int n, std::size_t word) const
{
    const Piece& p = piece(n);
    auto it = p.position.find(word);
    if (it == p.position.end())
        return std::nullopt;
    return it->second;
}

std::size_t GradedQuotient::relation_count(int n) const
{
    const Piece& p = piece(n);
    return p.ambient - p.basis.size();
}

std::vector<TensorElement> GradedQuotient::relation_basis(int n) const
{
    const Piece& p = piece(n);
    std::vector<TensorElement> out;
    if (p.full) {
        for (std::size_t j = 0; j < p.ambient; ++j)
            out.push_back(TensorElement::word(word_at(j, n, theta())));
        return out;
    }
    for (const auto& [pivot, row] : p.relations.rows())
        out.push_back(from_vector(row, n, theta()));
    return out;
}

bool GradedQuotient::in_ideal(int n, const SparseVec& v) const
{
    const Piece& p = piece(n);
    return p.full || p.relations.contains(v);
}

SparseVec GradedQuotient::project(int n, const SparseVec& v) const
{
    const Piece& p = piece(n);
    SparseVec out;
    if (p.full)
        return out;
    for (const auto& [j, c] : p.relations.reduce(v))
        out.emplace(p.position.at(j), c);
    return out;
}

SparseVec GradedQuotient::project_word(int n, std::size_t word) const
{
    return project(n, unit_vector(word));
}

TensorElement GradedQuotient::section(int n, const SparseVec& coords) const
{
    const Piece& p = piece(n);
    TensorElement t;
    for (const auto& [k, c] : coords)
        t.add(word_at(p.basis.at(k), n, theta()), c);
    return t;
}

SparseVec GradedQuotient::multiply(int p, std::size_t a, int q, std::size_t b) const
{
    std::size_t joined = join_index(basis(p).at(a), basis(q).at(b), q, theta());
    return project_word(p + q, joined);
}

std::map<std::pair<std::size_t, std::size_t>, CycScalar> GradedQuotient::coproduct(int n, std::size_t a, int p) const
{
    std::map<std::pair<std::size_t, std::size_t>, CycScalar> out;
    SparseVec d = shuffle_coproduct_word(basis_word(n, a), p, braiding_);
    for (const auto& [idx, c] : d) {
        auto [l, r] = split_index(idx, p, n - p, theta());
        SparseVec pl = project_word(p, l);
        if (pl.empty())
            continue;
        SparseVec pr = project_word(n - p, r);
        for (const auto& [i, ci] : pl)
            for (const auto& [j, cj] : pr) {
                CycScalar v = c * ci * cj;
                auto [it, inserted] = out.emplace(std::make_pair(i, j), v);
                if (!inserted) {
                    it->second += v;
                    if (it->second.is_zero())
                        out.erase(it);
                }
            }
    }
    return out;
}

std::vector<TensorElement> relations_in_degree(int n, const DiagonalBraiding& b)
{
    const int theta = b.theta();
    LinOp s = quantum_symmetrizer(n, b);
    SparseEchelon ech(SparseEchelon::Pivot::Largest);
    for (const auto& [deg, words] : multidegree_blocks(n, theta)) {
        std::vector<SparseVec> cols;
        for (auto j : words)
            cols.push_back(s.columns[j]);
        for (const auto& k : sparse_kernel(cols)) {
            SparseVec v;
            for (const auto& [local, c] : k)
                v.emplace(words[local], c);
            ech.insert(std::move(v));
        }
    }
    std::vector<TensorElement> out;
    for (const auto& [pivot, row] : ech.rows())
        out.push_back(from_vector(row, n, theta));
    return out;
}

GradedQuotient nichols_truncated(const DiagonalBraiding& b, int cap)
{
    if (cap < 1)
        throw Error("CapTooSmall", "cap must be at least 1");
    const int theta = b.theta();
    GradedQuotient gq(b, cap, GradedQuotient::Kind::Nichols);
    gq.pieces_.resize(static_cast<std::size_t>(cap) + 1);
    SymmetrizerCache cache(b);
    for (int n = 0; n <= cap; ++n) {
        auto& p = gq.pieces_[static_cast<std::size_t>(n)];
        p.ambient = word_count(theta, n);
        if (gq.vanish_) {
            // generated in degree 1: B_n = 0 forces B_m = 0 for m > n
            p.full = true;
        } else if (n >= 2) {
            const LinOp& s = cache.get(n);
            for (const auto& [deg, words] : multidegree_blocks(n, theta)) {
                std::vector<SparseVec> cols;
                cols.reserve(words.size());
                for (auto j : words)
                    cols.push_back(s.columns[j]);
                for (const auto& k : sparse_kernel(cols)) {
                    SparseVec v;
                    for (const auto& [local, c] : k)
                        v.emplace(words[local], c);
                    p.relations.insert(std::move(v));
                }
            }
        }
        gq.finish_piece(n);
    }
    return gq;
}

HilbertData hilbert_series(const GradedQuotient& gq)
{
    HilbertData h;
    h.dims = gq.dims();
    h.vanishing_degree = gq.vanishing_degree();
    if (h.vanishing_degree) {
        std::size_t total = 0;
        for (auto d : h.dims)
            total += d;
        h.total_dim = total;
    }
    return h;
}

GradedQuotient pre_nichols_quotient(const DiagonalBraiding& b, const std::vector<TensorElement>& gens, int cap)
{
    if (cap < 1)
        throw Error("CapTooSmall", "cap must be at least 1");
    const int theta = b.theta();
    std::vector<std::vector<SparseVec>> by_degree(static_cast<std::size_t>(cap) + 1);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const TensorElement& g = gens[k];
        if (g.is_zero())
            continue;
        if (!g.multidegree(theta))
            throw Error("NotHomogeneous", "generator " + std::to_string(k + 1) + " = " + render(g));
        const int n = *g.length();
        if (n == 0)
            throw Error("CounitNonzero", "generator " + std::to_string(k + 1) + " = " + render(g));
        if (n <= cap)
            by_degree[static_cast<std::size_t>(n)].push_back(to_vector(g, theta));
    }

    GradedQuotient gq(b, cap, GradedQuotient::Kind::PreNichols);
    gq.pieces_.resize(static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n) {
        auto& p = gq.pieces_[static_cast<std::size_t>(n)];
        p.ambient = word_count(theta, n);
        if (gq.vanish_) {
            p.full = true;
        } else {
            if (n >= 1) {
                const auto& prev = gq.pieces_[static_cast<std::size_t>(n) - 1];
                const std::size_t shift = word_count(theta, n - 1);
                for (const auto& [pivot, row] : prev.relations.rows())
                    for (int a = 0; a < theta; ++a) {
                        SparseVec left;
                        SparseVec right;
                        for (const auto& [j, c] : row) {
                            left.emplace(static_cast<std::size_t>(a) * shift + j, c);
                            right.emplace(j * static_cast<std::size_t>(theta) + static_cast<std::size_t>(a), c);
                        }
                        p.relations.insert(std::move(left));
                        p.relations.insert(std::move(right));
                    }
            }
            for (const auto& g : by_degree[static_cast<std::size_t>(n)])
                p.relations.insert(g);
        }
        gq.finish_piece(n);
    }

    // coideal check on every basis element of I_n; the outer components
    // r (x) 1 and 1 (x) r lie in I (x) T + T (x) I automatically
    for (int n = 2; n <= cap; ++n) {
        if (gq.pieces_[static_cast<std::size_t>(n)].full)
            break;
        for (const auto& r : gq.relation_basis(n)) {
            SparseVec rv = to_vector(r, theta);
            for (int p = 1; p < n; ++p) {
                std::map<std::pair<std::size_t, std::size_t>, CycScalar> acc;
                for (const auto& [w, c] : rv)
                    for (const auto& [idx, d] : shuffle_coproduct_word(word_at(w, n, theta), p, b)) {
                        auto [l, rr] = split_index(idx, p, n - p, theta);
                        SparseVec pl = gq.project_word(p, l);
                        if (pl.empty())
                            continue;
                        SparseVec pr = gq.project_word(n - p, rr);
                        for (const auto& [i, ci] : pl)
                            for (const auto& [j, cj] : pr) {
                                CycScalar v = c * d * ci * cj;
                                auto [it, inserted] = acc.emplace(std::make_pair(i, j), v);
                                if (!inserted) {
                                    it->second += v;
                                    if (it->second.is_zero())
                                        acc.erase(it);
                                }
                            }
                    }
                if (!acc.empty())
                    throw Error("NotCoideal", "degree " + std::to_string(n) + ": Delta(" + render(r) +
                                                  ") leaves I (x) T + T (x) I in component (" + std::to_string(p) +
                                                  ", " + std::to_string(n - p) + ")");
            }
        }
    }

    GradedQuotient nq = nichols_truncated(b, cap);
    for (int n = 0; n <= cap; ++n) {
        bool inside = true;
        const auto& piece = gq.pieces_[static_cast<std::size_t>(n)];
        if (piece.full) {
            inside = nq.dim(n) == 0;
        } else {
            for (const auto& [pivot, row] : piece.relations.rows())
                if (!nq.in_ideal(n, row)) {
                    inside = false;
                    break;
                }
        }
        gq.contained_.push_back(inside);
        gq.strict_.push_back(gq.relation_count(n) < nq.relation_count(n));
    }
    return gq;
}

AxiomReport stability_check(const GradedQuotient& gq, const LieAction& action)
{
    AxiomReport rep;
    const std::string axiom = "ideal stable under the Lie action";
    rep.declare(axiom);
    rep.notes.push_back("verified up to degree " + std::to_string(gq.cap()));
    const int theta = gq.theta();
    for (int n = 2; n <= gq.cap(); ++n) {
        if (gq.dim(n) == 0)
            break;
        auto rels = gq.relation_basis(n);
        if (rels.empty())
            continue;
        for (std::size_t m = 0; m < action.maps.size(); ++m) {
            LinOp d = extend_derivation(action.maps[m], n);
            for (const auto& r : rels) {
                ++rep.evaluations;
                SparseVec image = d.apply(to_vector(r, theta));
                if (!gq.in_ideal(n, image))
                    rep.fail({axiom, "map " + std::to_string(m + 1) + " on " + render(r),
                              render(from_vector(image, n, theta)), "element of I_" + std::to_string(n)});
            }
        }
    }
    return rep;
}

} // namespace nichols
