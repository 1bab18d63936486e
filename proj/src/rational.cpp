#include "gptd/rational.hpp"

#include <cctype>
#include <ostream>

namespace gptd {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text)) {
            throw std::invalid_argument("Rat::parse: malformed rational '" + text + "'");
        }
        return Rat(mpq_class(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        throw std::invalid_argument("Rat::parse: malformed rational '" + text + "'");
    }
    mpq_class q(text);
    if (q.get_den() == 0) {
        throw std::invalid_argument("Rat::parse: zero denominator in '" + text + "'");
    }
    return Rat(std::move(q));
}

std::string Rat::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_.get_str(); }

}  // namespace gptd
