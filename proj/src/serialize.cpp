#include "nichols/serialize.hpp"

namespace nichols {

namespace {

Json vec_json(const SparseVec& v)
{
    Json out = Json::array();
    for (const auto& [k, c] : v)
        out.push_back(Json::array({k, c.render()}));
    return out;
}

SparseVec vec_from(const Json& j)
{
    SparseVec v;
    for (const auto& e : j)
        add_term(v, e.at(0).get<std::size_t>(), parse_scalar(e.at(1).get<std::string>()));
    return v;
}

} // namespace

Json to_json(const TruncatedHopf& h)
{
    Json j;
    j["version"] = kFormatVersion;
    j["kind"] = "truncated_hopf";
    j["name"] = h.name;
    j["cap"] = h.cap;
    j["complete"] = h.complete;
    j["unit"] = h.unit;
    Json basis = Json::array();
    for (const auto& t : h.basis) {
        Json e;
        e["symbol"] = t.symbol;
        e["degree"] = t.degree;
        e["zdeg"] = t.zdeg ? Json(*t.zdeg) : Json(nullptr);
        e["grouplike"] = t.grouplike;
        basis.push_back(std::move(e));
    }
    j["basis"] = std::move(basis);
    Json products = Json::array();
    for (const auto& [a, b] : h.product_keys())
        products.push_back(Json::array({a, b, vec_json(*h.product(a, b))}));
    j["products"] = std::move(products);
    Json comult = Json::array();
    for (const auto& t : h.comult) {
        Json e = Json::array();
        for (const auto& [lr, c] : t)
            e.push_back(Json::array({lr.first, lr.second, c.render()}));
        comult.push_back(std::move(e));
    }
    j["coproducts"] = std::move(comult);
    Json counit = Json::array();
    for (const auto& c : h.counit)
        counit.push_back(c.render());
    j["counit"] = std::move(counit);
    if (h.antipode) {
        Json s = Json::array();
        for (const auto& v : *h.antipode)
            s.push_back(vec_json(v));
        j["antipode"] = std::move(s);
    } else {
        j["antipode"] = nullptr;
    }
    if (h.braided) {
        Json rows = Json::array();
        for (int a = 0; a < h.braided->theta(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < h.braided->theta(); ++b)
                row.push_back((*h.braided)(a, b).render());
            rows.push_back(std::move(row));
        }
        j["braiding"] = std::move(rows);
    } else {
        j["braiding"] = nullptr;
    }
    if (h.split) {
        const ProductSplit& s = *h.split;
        Json e;
        e["left_dim"] = s.left_dim;
        e["right_dim"] = s.right_dim;
        e["lie_dim"] = s.lie_dim;
        e["left_finite"] = s.left_finite;
        Json pairs = Json::array();
        for (const auto& [a, m] : s.pairs)
            pairs.push_back(Json::array({a, m}));
        e["pairs"] = std::move(pairs);
        e["right_degrees"] = s.right_degrees;
        j["split"] = std::move(e);
    } else {
        j["split"] = nullptr;
    }
    return j;
}

TruncatedHopf hopf_from_json(const Json& j)
{
    try {
        if (j.at("version").get<int>() != kFormatVersion)
            throw Error("BadDocument", "unsupported version");
        if (j.at("kind").get<std::string>() != "truncated_hopf")
            throw Error("BadDocument", "not a truncated Hopf algebra document");
        TruncatedHopf h;
        h.name = j.at("name").get<std::string>();
        h.cap = j.at("cap").get<int>();
        h.complete = j.at("complete").get<bool>();
        h.unit = j.at("unit").get<std::size_t>();
        for (const auto& e : j.at("basis")) {
            BasisTag t;
            t.symbol = e.at("symbol").get<std::string>();
            t.degree = e.at("degree").get<int>();
            if (!e.at("zdeg").is_null())
                t.zdeg = e.at("zdeg").get<std::vector<int>>();
            t.grouplike = e.at("grouplike").get<bool>();
            h.basis.push_back(std::move(t));
        }
        if (h.unit >= h.basis.size())
            throw Error("BadDocument", "unit index out of range");
        for (const auto& e : j.at("products"))
            h.set_product(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), vec_from(e.at(2)));
        for (const auto& e : j.at("coproducts")) {
            Tensor2 t;
            for (const auto& term : e)
                add_term(t, term.at(0).get<std::size_t>(), term.at(1).get<std::size_t>(),
                         parse_scalar(term.at(2).get<std::string>()));
            h.comult.push_back(std::move(t));
        }
        for (const auto& c : j.at("counit"))
            h.counit.push_back(parse_scalar(c.get<std::string>()));
        if (!j.at("antipode").is_null()) {
            std::vector<SparseVec> s;
            for (const auto& v : j.at("antipode"))
                s.push_back(vec_from(v));
            h.antipode = std::move(s);
        }
        if (!j.at("braiding").is_null()) {
            std::vector<std::vector<CycScalar>> rows;
            for (const auto& r : j.at("braiding")) {
                std::vector<CycScalar> row;
                for (const auto& c : r)
                    row.push_back(parse_scalar(c.get<std::string>()));
                rows.push_back(std::move(row));
            }
            h.braided = DiagonalBraiding(rows);
        }
        if (!j.at("split").is_null()) {
            const Json& e = j.at("split");
            ProductSplit s;
            s.left_dim = e.at("left_dim").get<std::size_t>();
            s.right_dim = e.at("right_dim").get<std::size_t>();
            s.lie_dim = e.at("lie_dim").get<int>();
            s.left_finite = e.at("left_finite").get<bool>();
            for (const auto& p : e.at("pairs"))
                s.pairs.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
            s.right_degrees = e.at("right_degrees").get<std::vector<int>>();
            h.split = std::move(s);
        }
        if (h.comult.size() != h.dim() || h.counit.size() != h.dim() ||
            (h.antipode && h.antipode->size() != h.dim()))
            throw Error("BadDocument", "table sizes do not match the basis");
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw Error("BadDocument", e.what());
    }
}

Json to_json(const AxiomReport& r)
{
    Json j;
    j["passed"] = r.passed();
    Json axioms = Json::array();
    for (const auto& a : r.axioms) {
        auto it = r.failure_counts.find(a);
        const std::size_t n = it == r.failure_counts.end() ? 0 : it->second;
        axioms.push_back(Json{{"axiom", a}, {"status", n == 0 ? "pass" : "fail"}, {"failures", n}});
    }
    j["axioms"] = std::move(axioms);
    Json viol = Json::array();
    for (const auto& v : r.violations)
        viol.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    j["violations"] = std::move(viol);
    j["notes"] = r.notes;
    j["evaluations"] = r.evaluations;
    return j;
}

} // namespace nichols
