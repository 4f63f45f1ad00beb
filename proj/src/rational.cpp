#include "invobase/rational.hpp"

#include <cctype>

#include "invobase/errors.hpp"

namespace invobase {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw InputError("malformed rational literal: '" + text + "'");
    if (slash == std::string::npos) return Rational(mpz_class(num));

    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(den))
        throw InputError("malformed rational literal: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    Rational value(mpz_class(num), d);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

} // namespace invobase
