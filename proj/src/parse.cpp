#include "projcad/parse.hpp"

#include <cctype>
#include <string>

namespace projcad {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const VarOrder& order, int line, int column0)
        : text_(text), order_(order), line_(line), column0_(column0) {}

    Poly parse() {
        Poly p = sum();
        skip_space();
        if (pos_ < text_.size()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line_, column0_ + static_cast<int>(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly sum() {
        Poly acc = product();
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += product();
            } else if (c == '-') {
                ++pos_;
                acc -= product();
            } else {
                return acc;
            }
        }
    }

    Poly product() {
        Poly acc = unary();
        while (peek() == '*') {
            ++pos_;
            acc *= unary();
        }
        const char c = peek();
        if (c == '/') {
            fail("non-integer coefficient: division is not supported");
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
            fail("expected an operator");
        }
        return acc;
    }

    Poly unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            pos_ = start;
            fail("exponent must be a nonnegative integer literal");
        }
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) {
            pos_ = start;
            fail("exponent too large");
        }
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }

    Poly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = sum();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
                fail("non-integer coefficient");
            }
            return Poly(Integer(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            auto level = order_.level_of(name);
            if (!level) {
                pos_ = start;
                fail("undeclared variable '" + name + "'");
            }
            return Poly::var(*level);
        }
        if (c == '.') {
            fail("non-integer coefficient");
        }
        if (c == '\0') {
            fail("unexpected end of expression");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const VarOrder& order_;
    int line_;
    int column0_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Poly parse_poly(std::string_view expr, const VarOrder& order) {
    return ExprParser(expr, order, 1, 1).parse();
}

Problem parse_input(std::string_view text) {
    Problem problem;
    bool have_vars = false;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (trim(line).empty()) {
            continue;
        }
        if (!have_vars) {
            const std::size_t lead = line.find_first_not_of(" \t");
            std::string_view body = line.substr(lead);
            if (body.substr(0, 5) != "vars:") {
                throw ParseError("expected 'vars:' declaration", line_no, static_cast<int>(lead) + 1);
            }
            std::vector<std::string> names;
            std::size_t pos = lead + 5;
            while (true) {
                std::size_t comma = line.find(',', pos);
                std::string_view item = line.substr(pos, comma == std::string_view::npos ? line.size() - pos
                                                                                         : comma - pos);
                std::string_view name = trim(item);
                const int col = static_cast<int>(pos + item.find_first_not_of(" \t")) + 1;
                if (name.empty()) {
                    throw ParseError("empty variable name", line_no, static_cast<int>(pos) + 1);
                }
                if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
                    throw ParseError("invalid variable name '" + std::string(name) + "'", line_no, col);
                }
                for (char ch : name) {
                    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
                        throw ParseError("invalid variable name '" + std::string(name) + "'", line_no, col);
                    }
                }
                for (const auto& n : names) {
                    if (n == name) {
                        throw ParseError("duplicate variable '" + n + "'", line_no, col);
                    }
                }
                names.emplace_back(name);
                if (comma == std::string_view::npos) {
                    break;
                }
                pos = comma + 1;
            }
            problem.order = VarOrder(std::move(names));
            have_vars = true;
            continue;
        }
        problem.polys.push_back(ExprParser(line, problem.order, line_no, 1).parse());
    }
    if (!have_vars) {
        throw ParseError("missing 'vars:' declaration", line_no, 1);
    }
    if (problem.polys.empty()) {
        throw ParseError("no polynomials given", line_no, 1);
    }
    return problem;
}

}  // namespace projcad
