#ifndef WZCERT_DETAIL_EXPR_PARSER_HPP
#define WZCERT_DETAIL_EXPR_PARSER_HPP

// Recursive-descent parser shared by the polynomial, term and potential
// grammars.  The grammar is fixed; what a literal, a name, a call, or a
// postfix '!' means is supplied by a policy:
//
//   expr    := [+|-] product { (+|-) product }
//   product := unary { (*|/) unary }
//   unary   := (+|-) unary | postfix
//   postfix := primary { "!" | (^|**) exponent }
//   primary := integer | name [ "(" expr ")" ] | "(" expr ")"
//   exponent:= [-] integer | "(" [-] integer ")"
//
// Whitespace is insignificant.  Errors carry the offending byte offset.

#include "wzcert/errors.hpp"
#include "wzcert/numeric.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace wzcert::detail {

template <class Policy>
class ExprParser {
public:
    using Value = typename Policy::Value;

    ExprParser(std::string_view text, Policy& policy) : text_(text), policy_(policy) {}

    Value parse()
    {
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("empty expression", pos_);
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            if (text_[pos_] == ')')
                throw ParseError("unbalanced ')'", pos_);
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return v;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool peek_pow()
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^')
            return true;
        return text_.substr(pos_, 2) == "**";
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c))
            throw ParseError(std::string("expected ") + what, pos_);
    }

    Value expr()
    {
        skip_ws();
        std::size_t at = pos_;
        Value v = (accept('-')) ? policy_.neg(product(), at) : (accept('+'), product());
        for (;;) {
            at = pos_;
            if (accept('+'))
                v = policy_.add(std::move(v), product(), at);
            else if (accept('-'))
                v = policy_.sub(std::move(v), product(), at);
            else
                return v;
        }
    }

    Value product()
    {
        Value v = unary();
        for (;;) {
            skip_ws();
            std::size_t at = pos_;
            if (text_.substr(pos_, 2) == "**")
                return v;  // handled as a power by postfix; cannot start a factor
            if (accept('*'))
                v = policy_.mul(std::move(v), unary(), at);
            else if (accept('/'))
                v = policy_.div(std::move(v), unary(), at);
            else
                return v;
        }
    }

    Value unary()
    {
        skip_ws();
        std::size_t at = pos_;
        if (accept('-'))
            return policy_.neg(unary(), at);
        if (accept('+'))
            return unary();
        return postfix();
    }

    Value postfix()
    {
        Value v = primary();
        for (;;) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('!')) {
                v = policy_.factorial(std::move(v), at);
            } else if (peek_pow()) {
                pos_ += text_[pos_] == '^' ? 1 : 2;
                v = policy_.pow(std::move(v), exponent(), at);
            } else {
                return v;
            }
        }
    }

    long exponent()
    {
        bool paren = accept('(');
        bool negative = accept('-');
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer exponent", at);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ - start > 6)
            throw ParseError("exponent too large", at);
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (paren)
            expect(')', "')' after exponent");
        return negative ? -e : e;
    }

    Value primary()
    {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", at);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return policy_.number(Integer(std::string(text_.substr(start, pos_ - start))), at);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (accept('(')) {
                Value arg = expr();
                if (!accept(')'))
                    throw ParseError("unbalanced '(' in call to " + name, pos_);
                return policy_.call(name, std::move(arg), at);
            }
            return policy_.name(name, at);
        }
        if (accept('(')) {
            Value v = expr();
            if (!accept(')'))
                throw ParseError("unbalanced '('", pos_);
            return v;
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string_view text_;
    Policy& policy_;
    std::size_t pos_ = 0;
};

}  // namespace wzcert::detail

#endif
