#include "fglh/rational.hpp"

#include "fglh/error.hpp"

#include <cctype>

namespace fglh {

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Rational parse_rational(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-')
        ++i;
    const std::size_t digits_begin = i;
    bool slash = false;
    bool digit_after_slash = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit_after_slash |= slash;
            continue;
        }
        if (c == '/' && !slash && i > digits_begin) {
            slash = true;
            continue;
        }
        throw Error("malformed rational '" + std::string(text) + "'");
    }
    if (i == digits_begin || (slash && !digit_after_slash))
        throw Error("malformed rational '" + std::string(text) + "'");
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw Error("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw Error("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

} // namespace fglh
