#include "lieder/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lieder {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    if (!valid_integer(num, true) ||
        (slash != std::string_view::npos && !valid_integer(den, false))) {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }

    std::string num_str(num);
    if (num_str.front() == '+') num_str.erase(0, 1);
    Integer p(num_str, 10);
    Integer q(1);
    if (slash != std::string_view::npos) {
        q = Integer(std::string(den), 10);
        if (q == 0) {
            throw std::invalid_argument("zero denominator in rational \"" + std::string(text) +
                                        "\"");
        }
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace lieder
