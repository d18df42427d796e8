#include "pivlab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "pivlab/poly.hpp"

namespace pivlab {

namespace {

class Cursor {
  public:
    explicit Cursor(const std::string& text) : text_(text) {}

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void advance() { ++pos_; }

    bool at_end() { return peek() == '\0'; }

    Integer digits() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        std::string raw;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            raw += text_[pos_++];
        return Integer(raw);
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    what);
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

RatFunc parse_expr(Cursor& cur);

RatFunc parse_base(Cursor& cur) {
    const char c = cur.peek();
    if (c == 'z') {
        cur.advance();
        return RatFunc::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(cur.digits()));
    if (c == '(') {
        cur.advance();
        RatFunc inner = parse_expr(cur);
        if (!cur.eat(')')) cur.fail("expected ')'");
        return inner;
    }
    cur.fail("expected 'z', a number, or '('");
}

RatFunc parse_power(Cursor& cur) {
    RatFunc base = parse_base(cur);
    if (!cur.eat('^')) return base;
    const bool negative = cur.eat('-');
    const Integer e = cur.digits();
    if (e > 512) cur.fail("exponent too large");
    RatFunc p = pow(base, e.convert_to<unsigned>());
    if (negative) {
        if (p.is_zero()) cur.fail("zero to a negative power");
        p = RatFunc(Rational(1)) / p;
    }
    return p;
}

RatFunc parse_unary(Cursor& cur) {
    bool negative = false;
    for (;;) {
        if (cur.eat('+')) continue;
        if (cur.eat('-')) {
            negative = !negative;
            continue;
        }
        break;
    }
    RatFunc v = parse_power(cur);
    return negative ? -v : v;
}

bool starts_factor(char c) {
    return c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
}

RatFunc parse_term(Cursor& cur) {
    RatFunc v = parse_unary(cur);
    for (;;) {
        if (cur.eat('*')) {
            v = v * parse_unary(cur);
        } else if (cur.eat('/')) {
            RatFunc d = parse_unary(cur);
            if (d.is_zero()) cur.fail("division by zero");
            v = v / d;
        } else if (starts_factor(cur.peek())) {
            v = v * parse_power(cur);
        } else {
            break;
        }
    }
    return v;
}

RatFunc parse_expr(Cursor& cur) {
    RatFunc v = parse_term(cur);
    for (;;) {
        if (cur.eat('+'))
            v = v + parse_term(cur);
        else if (cur.eat('-'))
            v = v - parse_term(cur);
        else
            break;
    }
    return v;
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
    Cursor cur(text);
    RatFunc f = parse_expr(cur);
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return f;
}

std::vector<std::vector<unsigned>> parse_flag(const std::string& text) {
    std::vector<std::vector<unsigned>> levels;
    size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto fail = [&](const std::string& what) {
        throw std::invalid_argument("flag parse error at position " + std::to_string(pos) + ": " +
                                    what);
    };
    for (;;) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '[') fail("expected '['");
        ++pos;
        std::vector<unsigned> level;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            for (;;) {
                skip_ws();
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    fail("expected an index");
                unsigned long v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
                    if (v > 1000000) fail("index too large");
                    ++pos;
                }
                level.push_back(static_cast<unsigned>(v));
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ']') {
                    ++pos;
                    break;
                }
                fail("expected ',' or ']'");
            }
        }
        levels.push_back(std::move(level));
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '<') fail("expected '<'");
        ++pos;
    }
    return levels;
}

std::vector<families::HermiteSequence> parse_flag_sequences(const std::string& text) {
    std::vector<families::HermiteSequence> flag;
    for (auto& level : parse_flag(text)) {
        std::sort(level.begin(), level.end());
        flag.push_back(families::HermiteSequence{std::move(level)});
    }
    return flag;
}

}  // namespace pivlab
