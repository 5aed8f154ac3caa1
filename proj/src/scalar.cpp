#include "eulerpoly/scalar.hpp"

#include <cctype>

namespace eulerpoly {

std::string to_string(const Scalar& s) { return s.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view t)
{
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

std::string_view trim(std::string_view t)
{
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    text = trim(text);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw PreconditionError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    BigInt zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    Scalar s(zn, zd);
    s.canonicalize();
    return s;
}

} // namespace eulerpoly
