#include "nichols/spec_document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace nichols {

namespace {

const std::map<std::string, std::set<std::string>> kKeys = {
    {"braiding", {"row", "q"}},
    {"realization", {"group"}},
    {"lie", {"kind", "h", "map"}},
    {"action", {"set"}},
    {"ideal", {"gen"}},
    {"run", {"cap", "suite", "nichols_cap"}},
};
const std::set<std::string> kRepeatable = {"row", "h", "map", "set", "gen"};
const std::set<std::string> kSuites = {"hopf", "biderivation", "comodule", "pairing", "pointed"};

bool indexed_key(const std::string& key, const std::string& prefix)
{
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0)
        return false;
    return std::all_of(key.begin() + static_cast<long>(prefix.size()), key.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

bool key_allowed(const std::string& section, const std::string& key)
{
    if (kKeys.at(section).count(key))
        return true;
    return section == "realization" && (indexed_key(key, "g") || indexed_key(key, "chi"));
}

std::size_t skip_space(std::string_view s, std::size_t i)
{
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    return i;
}

std::string_view trim(std::string_view s)
{
    std::size_t b = skip_space(s, 0);
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

// piece of a value together with its column
struct Piece {
    std::string text;
    int column;
};

std::vector<Piece> split_commas(const SpecEntry& e)
{
    std::vector<Piece> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= e.value.size(); ++i) {
        if (i < e.value.size()) {
            char c = e.value[i];
            depth += c == '(' ? 1 : c == ')' ? -1 : 0;
            if (c != ',' || depth != 0)
                continue;
        }
        std::string_view part(e.value.data() + start, i - start);
        std::size_t lead = skip_space(part, 0);
        out.push_back({std::string(trim(part)), e.column + static_cast<int>(start + lead)});
        start = i + 1;
    }
    return out;
}

CycScalar scalar_at(const SpecEntry& e, const Piece& p)
{
    try {
        return parse_scalar(p.text);
    } catch (const ParseError& err) {
        throw ParseError(e.line, p.column + err.column() - 1, err.detail());
    } catch (const Error& err) {
        throw ParseError(e.line, p.column, err.what());
    }
}

int int_at(const SpecEntry& e, const Piece& p)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(p.text.data(), p.text.data() + p.text.size(), v);
    if (ec != std::errc() || ptr != p.text.data() + p.text.size() || p.text.empty())
        throw ParseError(e.line, p.column, "expected an integer, got '" + p.text + "'");
    return v;
}

std::vector<int> ints(const SpecEntry& e)
{
    std::vector<int> out;
    for (const auto& p : split_commas(e))
        out.push_back(int_at(e, p));
    return out;
}

std::vector<CycScalar> scalars(const SpecEntry& e)
{
    std::vector<CycScalar> out;
    for (const auto& p : split_commas(e))
        out.push_back(scalar_at(e, p));
    return out;
}

} // namespace

const std::vector<SpecEntry>& SpecDocument::entries(const std::string& section) const
{
    static const std::vector<SpecEntry> empty;
    auto it = sections.find(section);
    return it == sections.end() ? empty : it->second;
}

std::vector<SpecEntry> SpecDocument::all(const std::string& section, const std::string& key) const
{
    std::vector<SpecEntry> out;
    for (const auto& e : entries(section))
        if (e.key == key)
            out.push_back(e);
    return out;
}

std::optional<SpecEntry> SpecDocument::single(const std::string& section, const std::string& key) const
{
    for (const auto& e : entries(section))
        if (e.key == key)
            return e;
    return std::nullopt;
}

SpecDocument parse_spec(std::string_view text)
{
    SpecDocument d;
    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++line_no;
        pos = end + 1;
        const std::size_t first = skip_space(line, 0);
        if (first == line.size() || line[first] == '#' || line[first] == ';')
            continue;
        const int col = static_cast<int>(first) + 1;
        if (line[first] == '[') {
            std::string_view body = trim(line);
            if (body.back() != ']')
                throw ParseError(line_no, col, "unterminated section header");
            std::string name(trim(body.substr(1, body.size() - 2)));
            if (!kKeys.count(name))
                throw ParseError(line_no, col + 1, "unknown section [" + name + "]");
            if (d.sections.count(name))
                throw ParseError(line_no, col, "duplicate section [" + name + "]");
            d.order.push_back(name);
            d.sections[name];
            current = name;
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, col, "expected key = value");
        if (current.empty())
            throw ParseError(line_no, col, "entry outside any section");
        std::string key(trim(line.substr(0, eq)));
        if (!key_allowed(current, key))
            throw ParseError(line_no, col, "unknown key '" + key + "' in [" + current + "]");
        if (!kRepeatable.count(key) && d.single(current, key))
            throw ParseError(line_no, col, "duplicate key '" + key + "'");
        std::size_t vstart = skip_space(line, eq + 1);
        std::string value(trim(line.substr(eq + 1)));
        if (value.empty())
            throw ParseError(line_no, static_cast<int>(eq) + 2, "empty value for '" + key + "'");
        d.sections[current].push_back({key, value, line_no, static_cast<int>(vstart) + 1});
    }
    return d;
}

std::string render_spec(const SpecDocument& d)
{
    std::string out;
    for (const auto& name : d.order) {
        if (!out.empty())
            out += "\n";
        out += "[" + name + "]\n";
        for (const auto& e : d.entries(name))
            out += e.key + " = " + e.value + "\n";
    }
    return out;
}

DiagonalBraiding spec_braiding(const SpecDocument& d)
{
    if (!d.has("braiding"))
        throw Error("MissingSection", "[braiding]");
    auto rows = d.all("braiding", "row");
    auto q = d.single("braiding", "q");
    if (q && !rows.empty())
        throw ParseError(q->line, q->column, "use either q or row entries");
    if (q)
        return DiagonalBraiding({{scalars(*q).at(0)}});
    if (rows.empty())
        throw Error("MissingKey", "[braiding] needs q or row entries");
    std::vector<std::vector<CycScalar>> m;
    for (const auto& r : rows) {
        m.push_back(scalars(r));
        if (m.back().size() != rows.size())
            throw ParseError(r.line, r.column, "row has " + std::to_string(m.back().size()) + " entries, expected " +
                                                   std::to_string(rows.size()));
    }
    return DiagonalBraiding(m);
}

YDRealization spec_realization(const SpecDocument& d, const DiagonalBraiding& b)
{
    if (!d.has("realization"))
        return derive_realization(b);
    auto grp = d.single("realization", "group");
    if (!grp)
        throw Error("MissingKey", "[realization] needs group");
    AbelianGroup group{ints(*grp)};
    std::vector<GroupElement> gs;
    std::vector<Character> chis;
    for (int i = 1; i <= b.theta(); ++i) {
        auto g = d.single("realization", "g" + std::to_string(i));
        auto chi = d.single("realization", "chi" + std::to_string(i));
        if (!g || !chi)
            throw Error("MissingKey", "[realization] needs g" + std::to_string(i) + " and chi" + std::to_string(i));
        GroupElement ge = ints(*g);
        std::vector<int> ce = ints(*chi);
        if (ge.size() != group.rank())
            throw ParseError(g->line, g->column, "group element of the wrong length");
        if (ce.size() != group.rank())
            throw ParseError(chi->line, chi->column, "character of the wrong length");
        Character c;
        for (std::size_t t = 0; t < ce.size(); ++t)
            c.values.push_back(RootOfUnity{group.exponents[t], ce[t]});
        gs.push_back(group.normalize(ge));
        chis.push_back(c);
    }
    YDRealization r = realization_from_pairs(group, gs, chis);
    if (!(r.braiding == b))
        throw Error("RealizationMismatch", "chi_j(g_i) differs from q_ij");
    return r;
}

std::optional<std::vector<std::vector<CycScalar>>> spec_weights(const SpecDocument& d, int theta)
{
    if (!d.has("lie"))
        return std::nullopt;
    auto kind = d.single("lie", "kind");
    if (kind && kind->value == "torus") {
        std::vector<std::vector<CycScalar>> hs;
        for (int i = 0; i < theta; ++i) {
            std::vector<CycScalar> h(static_cast<std::size_t>(theta), CycScalar(0));
            h[static_cast<std::size_t>(i)] = CycScalar(1);
            hs.push_back(h);
        }
        return hs;
    }
    auto hs = d.all("lie", "h");
    if (hs.empty())
        return std::nullopt;
    std::vector<std::vector<CycScalar>> out;
    for (const auto& e : hs) {
        out.push_back(scalars(e));
        if (static_cast<int>(out.back().size()) != theta)
            throw ParseError(e.line, e.column, "weight needs " + std::to_string(theta) + " entries");
    }
    return out;
}

std::optional<LieAction> spec_lie(const SpecDocument& d, const YDRealization& r)
{
    if (!d.has("lie"))
        return std::nullopt;
    const int theta = r.theta();
    auto kind = d.single("lie", "kind");
    auto hs = d.all("lie", "h");
    auto maps = d.all("lie", "map");
    const int modes = (kind ? 1 : 0) + (hs.empty() ? 0 : 1) + (maps.empty() ? 0 : 1);
    if (modes != 1)
        throw Error("ParseError", "[lie] needs exactly one of kind, h or map");
    if (kind) {
        if (kind->value == "torus")
            return torus_algebra(theta);
        if (kind->value == "bd")
            return biderivation_algebra(r);
        if (kind->value == "zero")
            return LieAction{LieAlgebra::abelian(0), {}};
        throw ParseError(kind->line, kind->column, "unknown kind '" + kind->value + "'");
    }
    if (!hs.empty())
        return abelian_torus(*spec_weights(d, theta));
    std::vector<Matrix> ms;
    for (const auto& e : maps) {
        NCPoly p;
        try {
            p = parse_expression(e.value, "E");
        } catch (const ParseError& err) {
            throw ParseError(e.line, e.column + err.column() - 1, err.detail());
        }
        Matrix m(static_cast<std::size_t>(theta), static_cast<std::size_t>(theta));
        for (const auto& [mono, c] : p) {
            if (mono.size() != 1 || mono[0].index < 11 || mono[0].index > 99)
                throw ParseError(e.line, e.column, "expected a combination of E<i><j>");
            const int i = mono[0].index / 10;
            const int j = mono[0].index % 10;
            if (i < 1 || j < 1 || i > theta || j > theta)
                throw ParseError(e.line, e.column, "index out of range in E" + std::to_string(mono[0].index));
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) += c;
        }
        if (!is_yd_morphism(r, m))
            throw Error("NotInBdV", "line " + std::to_string(e.line) + ": " + e.value +
                                        " is not a Yetter-Drinfeld endomorphism");
        ms.push_back(m);
    }
    return close_under_bracket(r, ms);
}

std::vector<TensorElement> spec_ideal(const SpecDocument& d, int theta)
{
    std::vector<TensorElement> out;
    for (const auto& e : d.all("ideal", "gen")) {
        try {
            out.push_back(parse_tensor_element(e.value, theta));
        } catch (const ParseError& err) {
            throw ParseError(e.line, e.column + err.column() - 1, err.detail());
        } catch (const Error& err) {
            throw ParseError(e.line, e.column, err.what());
        }
    }
    return out;
}

std::vector<ActionOverride> spec_action_overrides(const SpecDocument& d)
{
    std::vector<ActionOverride> out;
    for (const auto& e : d.all("action", "set")) {
        ActionOverride o;
        std::size_t colon = e.value.find(':');
        std::size_t arrow = e.value.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
            throw ParseError(e.line, e.column, "expected <lie index>: <symbol> -> <combination>");
        o.lie_index = int_at(e, {std::string(trim(std::string_view(e.value).substr(0, colon))), e.column});
        o.source = std::string(trim(std::string_view(e.value).substr(colon + 1, arrow - colon - 1)));
        std::string_view target = trim(std::string_view(e.value).substr(arrow + 2));
        const int tcol = e.column + static_cast<int>(e.value.find(target.empty() ? "" : std::string(target)));
        if (target != "0") {
            // terms separated by " + " or " - " at parenthesis depth 0
            std::size_t start = 0;
            CycScalar sign(1);
            int depth = 0;
            if (!target.empty() && target[0] == '-') {
                sign = CycScalar(-1);
                start = 1;
            }
            for (std::size_t i = start; i <= target.size(); ++i) {
                bool cut = i == target.size();
                if (!cut) {
                    char c = target[i];
                    depth += c == '(' ? 1 : c == ')' ? -1 : 0;
                    cut = depth == 0 && (c == '+' || c == '-') && i > 0 && target[i - 1] == ' ';
                }
                if (!cut)
                    continue;
                std::string_view term = trim(target.substr(start, i - start));
                const int col = tcol + static_cast<int>(start);
                if (term.empty())
                    throw ParseError(e.line, col, "empty term");
                CycScalar coeff(1);
                if (term[0] == '(') {
                    std::size_t close = term.find(')');
                    int dd = 0;
                    for (std::size_t k = 0; k < term.size(); ++k) {
                        dd += term[k] == '(' ? 1 : term[k] == ')' ? -1 : 0;
                        if (dd == 0) {
                            close = k;
                            break;
                        }
                    }
                    coeff = scalar_at(e, {std::string(term.substr(1, close - 1)), col + 1});
                    term = trim(term.substr(close + 1));
                }
                o.target.emplace_back(sign * coeff, std::string(term));
                if (i < target.size())
                    sign = CycScalar(target[i] == '-' ? -1 : 1);
                start = i + 1;
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

RunParams spec_run(const SpecDocument& d)
{
    RunParams p;
    if (auto c = d.single("run", "cap"))
        p.cap = int_at(*c, {c->value, c->column});
    if (auto c = d.single("run", "nichols_cap"))
        p.nichols_cap = int_at(*c, {c->value, c->column});
    if (auto s = d.single("run", "suite"))
        for (const auto& piece : split_commas(*s)) {
            if (!kSuites.count(piece.text))
                throw ParseError(s->line, piece.column, "unknown suite '" + piece.text + "'");
            p.suites.push_back(piece.text);
        }
    return p;
}

} // namespace nichols
