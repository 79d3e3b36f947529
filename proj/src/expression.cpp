#include "nichols/expression.hpp"

#include <cctype>

namespace nichols {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("ParseError", (line > 0 ? "line " + std::to_string(line) + ", " : std::string()) +
                              "column " + std::to_string(column) + ": " + message),
      line_(line), column_(column), detail_(message)
{
}

namespace {

void add_term(NCPoly& p, const Monomial& m, const CycScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

NCPoly poly_add(NCPoly a, const NCPoly& b, bool negate)
{
    for (const auto& [m, c] : b)
        add_term(a, m, negate ? -c : c);
    return a;
}

NCPoly poly_mul(const NCPoly& a, const NCPoly& b)
{
    NCPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            add_term(out, m, ca * cb);
        }
    return out;
}

NCPoly scalar_poly(const CycScalar& c)
{
    NCPoly p;
    add_term(p, {}, c);
    return p;
}

bool is_scalar(const NCPoly& p)
{
    return p.empty() || (p.size() == 1 && p.begin()->first.empty());
}

CycScalar scalar_of(const NCPoly& p)
{
    return p.empty() ? CycScalar(0) : p.begin()->second;
}

class Parser {
public:
    Parser(std::string_view text, std::string_view kinds) : text_(text), kinds_(kinds) {}

    NCPoly parse()
    {
        NCPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(0, static_cast<int>(pos_) + 1, msg);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    long integer()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        if (pos_ - start > 9)
            fail("integer literal too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    NCPoly expr()
    {
        NCPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc = poly_add(std::move(acc), term(), false);
            else if (accept('-'))
                acc = poly_add(std::move(acc), term(), true);
            else
                return acc;
        }
    }

    NCPoly term()
    {
        NCPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = poly_mul(acc, unary());
            } else if (accept('/')) {
                std::size_t at = pos_;
                NCPoly d = unary();
                if (!is_scalar(d)) {
                    pos_ = at;
                    fail("division by a non-scalar");
                }
                CycScalar s = scalar_of(d);
                if (s.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = poly_mul(acc, scalar_poly(s.inverse()));
            } else {
                return acc;
            }
        }
    }

    NCPoly unary()
    {
        if (accept('-'))
            return poly_mul(scalar_poly(CycScalar(-1)), unary());
        if (accept('+'))
            return unary();
        return power();
    }

    NCPoly power()
    {
        NCPoly base = atom();
        if (!accept('^'))
            return base;
        bool negative = accept('-');
        long e = integer();
        if (negative) {
            if (!is_scalar(base))
                fail("negative power of a non-scalar");
            return scalar_poly(scalar_of(base).pow(-e));
        }
        if (is_scalar(base))
            return scalar_poly(scalar_of(base).pow(e));
        NCPoly out = scalar_poly(CycScalar(1));
        for (long i = 0; i < e; ++i)
            out = poly_mul(out, base);
        return out;
    }

    NCPoly atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NCPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return scalar_poly(CycScalar(integer()));
        if (c == 'z' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
            pos_ += 2;
            long m = integer();
            expect(')');
            if (m < 1)
                fail("z(m) needs m >= 1");
            return scalar_poly(root_of_unity(static_cast<int>(m), 1));
        }
        if (kinds_.find(c) != std::string_view::npos && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            long idx = integer();
            if (idx < 1)
                fail("generator index must be >= 1");
            NCPoly p;
            p.emplace(Monomial{Generator{c, static_cast<int>(idx)}}, CycScalar(1));
            return p;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::string_view kinds_;
    std::size_t pos_ = 0;
};

} // namespace

NCPoly parse_expression(std::string_view text, std::string_view kinds)
{
    return Parser(text, kinds).parse();
}

} // namespace nichols
