#include <hypmix/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace hypmix {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw std::invalid_argument("malformed rational '" + s + "'");
    auto slash = s.find('/');
    if (slash != std::string::npos && s.substr(slash + 1).find_first_not_of("0") == std::string::npos)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace hypmix
