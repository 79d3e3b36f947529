#include "nichols/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "nichols/pairing.hpp"
#include "nichols/serialize.hpp"
#include "nichols/unrolled.hpp"

namespace nichols {

std::string dims_line(const HilbertData& h)
{
    std::string s;
    for (std::size_t n = 0; n < h.dims.size(); ++n)
        s += (n ? "," : "") + std::to_string(h.dims[n]);
    if (h.total_dim)
        s += " total=" + std::to_string(*h.total_dim);
    else
        s += " (unknown beyond cap)";
    return s;
}

namespace {

struct Model {
    DiagonalBraiding braiding;
    YDRealization realization;
    GradedQuotient quotient;
    std::optional<LieAction> lie;
    std::vector<ActionOverride> overrides;
};

GradedQuotient make_quotient(const SpecDocument& doc, const DiagonalBraiding& b, int cap)
{
    auto gens = spec_ideal(doc, b.theta());
    if (doc.has("ideal"))
        return pre_nichols_quotient(b, gens, cap);
    return nichols_truncated(b, cap);
}

Model load(const SpecDocument& doc, int cap)
{
    DiagonalBraiding b = spec_braiding(doc);
    YDRealization r = spec_realization(doc, b);
    RunParams run = spec_run(doc);
    const int ncap = run.nichols_cap.value_or(std::max(cap, 8));
    Model m{b, r, make_quotient(doc, b, ncap), spec_lie(doc, r), spec_action_overrides(doc)};
    if (!m.overrides.empty() && !m.lie)
        throw Error("MissingSection", "[action] needs a [lie] section");
    return m;
}

LieAction lie_or_zero(const Model& m)
{
    return m.lie ? *m.lie : LieAction{LieAlgebra::abelian(0), {}};
}

HopfAction action_on(const Model& m, const TruncatedHopf& boson)
{
    HopfAction act = bosonization_action(m.quotient, m.realization, boson, lie_or_zero(m));
    for (const auto& o : m.overrides) {
        if (o.lie_index < 1 || o.lie_index > act.dim())
            throw Error("BadAction", "Lie index " + std::to_string(o.lie_index) + " out of range");
        auto src = boson.find(o.source);
        if (!src)
            throw Error("UnknownSymbol", o.source);
        SparseVec v;
        for (const auto& [c, sym] : o.target) {
            auto t = boson.find(sym);
            if (!t)
                throw Error("UnknownSymbol", sym);
            add_term(v, *t, c);
        }
        act.table[static_cast<std::size_t>(o.lie_index - 1)][*src] = std::move(v);
    }
    return act;
}

// the unrolled bosonization, or the plain one without a [lie] section
TruncatedHopf main_object(const Model& m, int cap)
{
    if (!m.lie)
        return bosonize(m.quotient, m.realization, m.quotient.cap());
    if (m.overrides.empty())
        return unrolled_bosonization(m.quotient, m.realization, *m.lie, cap);
    TruncatedHopf boson = bosonize(m.quotient, m.realization, m.quotient.cap());
    return smash_with_enveloping(boson, action_on(m, boson), cap);
}

int top_degree(const TruncatedHopf& h)
{
    int top = 0;
    for (const auto& t : h.basis)
        top = std::max(top, t.degree);
    return top;
}

AxiomReport run_suite(const std::string& suite, const Model& m, const SpecDocument& doc, int cap)
{
    if (suite == "hopf")
        return verify_hopf(main_object(m, cap), cap);
    if (suite == "comodule")
        return check_comodule_hopf_via_grading(main_object(m, cap), cap);
    if (suite == "biderivation" || suite == "pointed") {
        if (!m.lie)
            throw Error("MissingSection", "suite " + suite + " needs a [lie] section");
        TruncatedHopf boson = bosonize(m.quotient, m.realization, m.quotient.cap());
        HopfAction act = action_on(m, boson);
        if (suite == "biderivation") {
            AxiomReport rep = check_module_algebra(boson, act, cap);
            rep.merge(check_biderivation(boson, act, cap));
            return rep;
        }
        if (!boson.complete)
            throw Error("HypothesisFailed", "the pointed criterion needs a finite-dimensional Nichols algebra within cap");
        std::vector<std::size_t> gens;
        const AbelianGroup& g = m.realization.group;
        for (std::size_t t = 0; t < g.rank(); ++t)
            gens.push_back(*boson.find("1#" + render_group_element(g.generator(t))));
        for (int i = 1; i <= m.braiding.theta(); ++i) {
            std::string sym = "x" + std::to_string(i);
            if (g.rank() > 0)
                sym += "#" + render_group_element(g.identity());
            gens.push_back(*boson.find(sym));
        }
        const int c = 2 * top_degree(boson);
        return pointed_criterion(boson, act, gens, c);
    }
    // pairing
    PairingTable p = nichols_pairing(m.braiding, cap);
    AxiomReport rep = verify_hopf_pairing(p, cap);
    auto weights = spec_weights(doc, m.braiding.theta());
    if (!weights) {
        if (m.lie)
            rep.notes.push_back("the pairing suite transports diagonal weights only; the [lie] maps were not used");
        return rep;
    }
    HopfAction left = grading_action(p.left, *weights);
    HopfAction right = transport_action(p, left, cap);
    rep.merge(verify_action_compatibility(p, left, right, cap));
    LemmaVerdict v = lemma_transfer_check(p, left, right, cap);
    const std::string axiom = "module Hopf verdicts agree across the pairing";
    rep.declare(axiom);
    rep.notes.push_back(std::string("left side: ") + (v.left.passed() ? "pass" : "fail") +
                        ", right side: " + (v.right.passed() ? "pass" : "fail"));
    if (!v.agree)
        rep.fail({axiom, "left vs right", v.left.summary(), v.right.summary()});
    if (!v.left.passed())
        rep.merge(v.left);
    return rep;
}

void print_report(std::ostream& out, const std::string& title, const AxiomReport& r)
{
    out << title << ": " << r.summary() << "\n";
    for (const auto& v : r.violations)
        out << "  " << v.axiom << " at " << v.witness << ": " << v.lhs << " != " << v.rhs << "\n";
    for (const auto& n : r.notes)
        out << "  note: " << n << "\n";
}

std::vector<std::size_t> filtration_counts(const TruncatedHopf& h)
{
    std::vector<std::size_t> c(static_cast<std::size_t>(top_degree(h)) + 1, 0);
    for (const auto& t : h.basis)
        ++c[static_cast<std::size_t>(t.degree)];
    return c;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int cmd_dims(const CommandOptions& o, const SpecDocument& doc, std::ostream& out)
{
    const int cap = o.cap.value_or(spec_run(doc).cap.value_or(8));
    DiagonalBraiding b = spec_braiding(doc);
    GradedQuotient gq = make_quotient(doc, b, cap);
    HilbertData h = hilbert_series(gq);
    if (o.format == "json") {
        Json j;
        j["version"] = kFormatVersion;
        j["command"] = "dims";
        j["kind"] = gq.kind() == GradedQuotient::Kind::Nichols ? "nichols" : "pre-nichols";
        j["cap"] = cap;
        j["dims"] = h.dims;
        j["vanishing_degree"] = h.vanishing_degree ? Json(*h.vanishing_degree) : Json(nullptr);
        j["total_dim"] = h.total_dim ? Json(*h.total_dim) : Json(nullptr);
        if (gq.kind() == GradedQuotient::Kind::PreNichols) {
            j["contained_in_nichols"] = gq.contained_in_nichols();
            j["strictly_smaller"] = gq.strictly_smaller();
        }
        out << j.dump(2) << "\n";
    } else {
        out << dims_line(h) << "\n";
        if (h.vanishing_degree)
            out << "certificate: degree " << *h.vanishing_degree << " vanishes, so every later degree does\n";
    }
    return 0;
}

int cmd_verify(const CommandOptions& o, const SpecDocument& doc, std::ostream& out)
{
    RunParams run = spec_run(doc);
    const int cap = o.cap.value_or(run.cap.value_or(4));
    std::vector<std::string> suites = !o.suites.empty() ? o.suites : run.suites;
    if (suites.empty())
        suites = {"hopf"};
    Model m = load(doc, cap);
    bool ok = true;
    Json j;
    j["version"] = kFormatVersion;
    j["command"] = "verify";
    j["cap"] = cap;
    Json arr = Json::array();
    std::vector<std::pair<std::string, AxiomReport>> reports;
    for (const auto& s : suites) {
        AxiomReport r = run_suite(s, m, doc, cap);
        ok = ok && r.passed();
        Json e;
        e["suite"] = s;
        e.update(to_json(r));
        arr.push_back(std::move(e));
        reports.emplace_back(s, std::move(r));
    }
    j["passed"] = ok;
    j["suites"] = std::move(arr);
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        for (const auto& [s, r] : reports)
            print_report(out, "suite " + s, r);
    return ok ? 0 : 1;
}

int cmd_unroll(const CommandOptions& o, const SpecDocument& doc, std::ostream& out)
{
    const int cap = o.cap.value_or(spec_run(doc).cap.value_or(4));
    Model m = load(doc, cap);
    TruncatedHopf h = main_object(m, cap);
    AxiomReport r = verify_hopf(h, cap);
    if (o.out) {
        std::ofstream f(*o.out);
        if (!f)
            throw Error("IOError", "cannot write " + *o.out);
        f << to_json(h).dump(1) << "\n";
    }
    if (o.format == "json") {
        Json j;
        j["version"] = kFormatVersion;
        j["command"] = "unroll";
        j["name"] = h.name;
        j["cap"] = cap;
        j["dim"] = h.dim();
        j["filtration"] = filtration_counts(h);
        j["verify"] = to_json(r);
        j["written"] = o.out ? Json(*o.out) : Json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << h.name << ": dim " << h.dim() << "\n";
        out << "filtration: " << join(filtration_counts(h)) << "\n";
        out << "verify: " << r.summary() << "\n";
        if (o.out)
            out << "written: " << *o.out << "\n";
    }
    return r.passed() ? 0 : 1;
}

int cmd_gk(const CommandOptions& o, const SpecDocument& doc, std::ostream& out)
{
    RunParams run = spec_run(doc);
    const int cap = o.cap.value_or(run.cap.value_or(10));
    {
        const int ncap = run.nichols_cap.value_or(std::max(cap, 8));
        DiagonalBraiding b = spec_braiding(doc);
        if (!hilbert_series(make_quotient(doc, b, ncap)).total_dim)
            throw Error("NotFiniteWithinCap", "the Nichols algebra does not vanish by degree " +
                                                  std::to_string(ncap) + "; raise nichols_cap");
    }
    Model m = load(doc, cap);
    TruncatedHopf boson = bosonize(m.quotient, m.realization, m.quotient.cap());
    if (!boson.complete)
        throw Error("NotFiniteWithinCap", "the Nichols algebra does not vanish by degree " +
                                              std::to_string(m.quotient.cap()) + "; raise nichols_cap");
    TruncatedHopf s = smash_with_enveloping(boson, action_on(m, boson), cap);
    GrowthReport g = gk_growth(s);
    const bool ok = g.closed_form_holds && g.degree == g.lie_dim;
    const std::string closed =
        std::to_string(g.host_dim) + " * C(n+" + std::to_string(g.lie_dim) + ", " + std::to_string(g.lie_dim) + ")";
    if (o.format == "json") {
        Json j;
        j["version"] = kFormatVersion;
        j["command"] = "gk";
        j["cap"] = cap;
        j["f"] = g.dims;
        j["degree"] = g.degree;
        j["lie_dim"] = g.lie_dim;
        j["host_dim"] = g.host_dim;
        j["closed_form"] = closed;
        j["closed_form_holds"] = g.closed_form_holds;
        j["label"] = g.label;
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t n = 0; n < g.dims.size(); ++n)
            out << "f(" << n << ") = " << g.dims[n] << "\n";
        out << "degree: " << g.degree << " (" << g.label << ")\n";
        out << "closed form: f(n) = " << closed << ": " << (g.closed_form_holds ? "holds" : "fails") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_pair(const CommandOptions& o, const SpecDocument& doc, std::ostream& out)
{
    const int cap = o.cap.value_or(spec_run(doc).cap.value_or(4));
    DiagonalBraiding b = spec_braiding(doc);
    PairingTable t = graded_dual_pairing(b, cap);
    AxiomReport rt = verify_hopf_pairing(t, cap);
    Model m = load(doc, cap);
    AxiomReport rn = run_suite("pairing", m, doc, cap);
    auto ranks = gram_ranks(t, cap);
    const bool ok = rt.passed() && rn.passed();
    if (o.format == "json") {
        Json j;
        j["version"] = kFormatVersion;
        j["command"] = "pair";
        j["cap"] = cap;
        j["passed"] = ok;
        j["tensor_ranks"] = ranks;
        j["tensor_pairing"] = to_json(rt);
        j["nichols_pairing"] = to_json(rn);
        out << j.dump(2) << "\n";
    } else {
        out << "tensor algebra ranks: " << join(ranks) << "\n";
        print_report(out, "T(V) x T(V*)", rt);
        print_report(out, "B(V) x B(V*)", rn);
    }
    return ok ? 0 : 1;
}

} // namespace

int run_command(const CommandOptions& opts, const SpecDocument& doc, std::ostream& out, std::ostream& err)
{
    try {
        if (opts.format != "json" && opts.format != "table")
            throw Error("BadOption", "format must be json or table");
        if (opts.command == "dims")
            return cmd_dims(opts, doc, out);
        if (opts.command == "verify")
            return cmd_verify(opts, doc, out);
        if (opts.command == "unroll")
            return cmd_unroll(opts, doc, out);
        if (opts.command == "gk")
            return cmd_gk(opts, doc, out);
        if (opts.command == "pair")
            return cmd_pair(opts, doc, out);
        throw Error("BadOption", "unknown command " + opts.command);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace nichols
