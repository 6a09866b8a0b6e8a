#include "filtq/rational.hpp"
#include "filtq/errors.hpp"

#include <cctype>

namespace filtq {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw SyntaxError("empty rational literal", 0);
    std::size_t i = 0;
    auto expect_int = [&](std::size_t start) {
        std::size_t j = start;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j])))
            throw SyntaxError("expected integer in rational literal '" + text + "'", j);
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    i = expect_int(0);
    if (i < text.size()) {
        if (text[i] != '/')
            throw SyntaxError("unexpected character in rational literal '" + text + "'", i);
        std::size_t j = expect_int(i + 1);
        if (j != text.size())
            throw SyntaxError("trailing characters in rational literal '" + text + "'", j);
    }
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw SyntaxError("malformed rational literal '" + text + "'", 0);
    q.canonicalize();
    if (q.get_den() < 0 || (text.find('/') != std::string::npos && q.get_den() == 0))
        throw SyntaxError("zero or negative denominator in '" + text + "'", 0);
    return q;
}

} // namespace filtq
