#include <prelie/coeffparse.hpp>

#include <cctype>

namespace prelie {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ParseEnv& env) : text_(text), env_(env) {}

    RatFunc parse() {
        RatFunc v = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const std::string& text_;
    const ParseEnv& env_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, static_cast<int>(pos_)); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFunc expression() {
        RatFunc v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) throw ParseError("division by zero", static_cast<int>(at));
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (eat('^')) {
            const std::size_t at = pos_;
            const bool neg = eat('-');
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected integer exponent", static_cast<int>(pos_));
            long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 64) throw ParseError("exponent too large", static_cast<int>(at));
                ++pos_;
            }
            if (neg && base.is_zero()) throw ParseError("zero to a negative power", static_cast<int>(at));
            return base.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
        }
        return base;
    }

    RatFunc atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expression();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return RatFunc(Rational(Int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            auto it = env_.find(name);
            if (it == env_.end()) throw ParseError("unknown variable '" + name + "'", static_cast<int>(at));
            return it->second;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RatFunc parse_expression(const std::string& text, const ParseEnv& env) { return Parser(text, env).parse(); }

Rational parse_rational(const std::string& text) {
    const RatFunc v = parse_expression(text, {});
    return v.as_rational();
}

UniPoly parse_parameter_poly(const std::string& text, const std::string& param) {
    ParseEnv env;
    env.emplace(param, RatFunc::variable());
    const RatFunc v = parse_expression(text, env);
    if (!v.is_polynomial()) throw ParseError("coefficient must be polynomial in '" + param + "'", 0);
    const Rational d = v.den().coeff(0);
    return d == 1 ? v.num() : v.num().scaled(Rational(1) / d);
}

}  // namespace prelie
