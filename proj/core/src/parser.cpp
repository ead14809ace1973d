#include "wlab/parser.hpp"

#include "wlab/errors.hpp"

#include <cctype>
#include <sstream>

namespace wlab {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "col " << (pos + 1) << ": " << msg;
        throw input_error(os.str());
    }
};

struct PolyParser {
    Lexer lex;
    const std::vector<std::string>& vars;
    int arity;

    PolyParser(const std::string& text, const std::vector<std::string>& v)
        : lex{text}, vars(v), arity(static_cast<int>(v.size())) {}

    Rat number() {
        lex.skip_ws();
        std::size_t start = lex.pos;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
            ++lex.pos;
        if (start == lex.pos) lex.fail("expected number");
        Int num(lex.s.substr(start, lex.pos - start));
        if (lex.pos < lex.s.size() && lex.s[lex.pos] == '/') {
            ++lex.pos;
            std::size_t dstart = lex.pos;
            while (lex.pos < lex.s.size() &&
                   std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
                ++lex.pos;
            if (dstart == lex.pos) lex.fail("expected denominator");
            Int den(lex.s.substr(dstart, lex.pos - dstart));
            if (den == 0) lex.fail("zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

    int exponent() {
        lex.skip_ws();
        std::size_t start = lex.pos;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
            ++lex.pos;
        if (start == lex.pos) lex.fail("expected exponent");
        return std::stoi(lex.s.substr(start, lex.pos - start));
    }

    Polynomial atom() {
        char c = lex.peek();
        if (c == '(') {
            ++lex.pos;
            Polynomial e = expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            ++lex.pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(arity, number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = lex.pos;
            while (lex.pos < lex.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(lex.s[lex.pos])) ||
                    lex.s[lex.pos] == '_'))
                ++lex.pos;
            std::string name = lex.s.substr(start, lex.pos - start);
            for (int i = 0; i < arity; ++i)
                if (vars[static_cast<std::size_t>(i)] == name)
                    return Polynomial::variable(arity, i);
            lex.pos = start;
            lex.fail("unknown variable '" + name + "'");
        }
        lex.fail("unexpected character");
    }

    Polynomial factor() {
        Polynomial a = atom();
        if (lex.peek() == '^') {
            ++lex.pos;
            a = a.pow(exponent());
        }
        return a;
    }

    Polynomial term() {
        Polynomial t = factor();
        for (;;) {
            char c = lex.peek();
            if (c == '*') {
                ++lex.pos;
                t = t * factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
                t = t * factor(); // implicit multiplication, e.g. "3x" or "2(t-1)"
            } else {
                return t;
            }
        }
    }

    Polynomial expr() {
        Polynomial total(arity);
        bool negative = false;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            negative = c == '-';
            ++lex.pos;
        }
        for (;;) {
            Polynomial t = term();
            total += negative ? -t : t;
            c = lex.peek();
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++lex.pos;
            } else {
                return total;
            }
        }
    }

    Polynomial run() {
        Polynomial p = expr();
        if (!lex.eof()) lex.fail("trailing input");
        return p;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    return PolyParser(text, vars).run();
}

Rat parse_rational(const std::string& text) {
    Lexer lex{text};
    bool neg = false;
    char c = lex.peek();
    if (c == '+' || c == '-') {
        neg = c == '-';
        ++lex.pos;
    }
    lex.skip_ws();
    std::size_t start = lex.pos;
    while (lex.pos < lex.s.size() &&
           (std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])) || lex.s[lex.pos] == '/'))
        ++lex.pos;
    std::string body = text.substr(start, lex.pos - start);
    if (body.empty()) lex.fail("expected rational");
    if (!lex.eof()) lex.fail("trailing input");
    auto slash = body.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(Int(body));
    } else {
        Int den(body.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator");
        r = Rat(Int(body.substr(0, slash)), den);
    }
    return neg ? Rat(-r) : r;
}

ProjPoint parse_point(const std::string& text) {
    Lexer lex{text};
    if (lex.peek() != '(') lex.fail("expected '('");
    std::size_t open = text.find('('), close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw input_error("malformed point");
    std::string body = text.substr(open + 1, close - open - 1);
    std::array<Rat, 3> c;
    std::size_t from = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t colon = body.find(':', from);
        bool last = i == 2;
        if (!last && colon == std::string::npos) throw input_error("expected ':' in point");
        std::string piece = last ? body.substr(from) : body.substr(from, colon - from);
        c[static_cast<std::size_t>(i)] = parse_rational(piece);
        from = colon + 1;
    }
    return ProjPoint::make(c[0], c[1], c[2]);
}

} // namespace wlab
