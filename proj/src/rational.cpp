#include "polytc/rational.hpp"

#include <cctype>

#include "polytc/errors.hpp"

namespace polytc {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string t = strip(text);
    const std::size_t slash = t.find('/');
    std::string num = slash == std::string::npos ? t : strip(t.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : strip(t.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw input_error("not a rational literal: '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw input_error("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        out.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace polytc
