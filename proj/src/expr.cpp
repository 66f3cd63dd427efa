#include "rootlat/expr.hpp"

#include <cctype>

namespace rootlat {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    CycElem run() {
        CycElem v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool eat_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    i64 integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        i64 v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            if (v > (static_cast<i64>(9e17))) fail("integer literal too large");
            v = v * 10 + (text_[i] - '0');
        }
        return neg ? -v : v;
    }

    CycElem expr() {
        CycElem v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    CycElem term() {
        CycElem v = factor();
        for (;;) {
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }

    CycElem factor() {
        if (eat('-')) return -factor();
        return power();
    }

    CycElem power() {
        CycElem base = atom();
        if (!eat('^')) return base;
        i64 e = integer();
        if (e == 0) return CycElem(1);
        CycElem b = e < 0 ? invert(base) : base;
        i64 n = e < 0 ? -e : e;
        CycElem acc(1);
        while (n > 0) {  // binary powering
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    CycElem atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return CycElem(rat_of(integer()));
        if (eat('(')) {
            CycElem v = expr();
            expect(')');
            return v;
        }
        if (eat_word("z")) {
            expect('(');
            i64 n = integer();
            if (n < 1) fail("z(N) requires N >= 1");
            expect(')');
            return CycElem::zeta(n);
        }
        if (eat_word("cos")) {
            expect('(');
            if (!eat_word("pi")) fail("expected 'pi' in cos(...)");
            i64 k = 1;
            if (eat('*')) k = integer();
            expect('/');
            i64 m = integer();
            if (m < 1) fail("cos(pi*k/m) requires m >= 1");
            expect(')');
            // (z(2m)^k + z(2m)^-k) / 2
            CycElem s = CycElem::zeta_power(2 * m, k) + CycElem::zeta_power(2 * m, -k);
            return scale(s, Rat(1, 2));
        }
        if (eat_word("sqrt")) {
            expect('(');
            i64 n = integer();
            expect(')');
            if (n == 2) return make_zeta_plus(8);
            if (n == 5) return scale(make_zeta_plus(10), Rat(2)) - CycElem(1);
            fail("only sqrt(2) and sqrt(5) are supported");
        }
        fail("unexpected character");
    }
};

}  // namespace

CycElem parse_cyc_expr(const std::string& text) { return Parser(text).run(); }

}  // namespace rootlat
