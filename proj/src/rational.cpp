#include "ttr/rational.hpp"

#include <cctype>

namespace ttr {

mpq_class parse_rational(const std::string& text) {
    if (text.find('.') != std::string::npos)
        throw ParameterError("decimal notation rejected; write an exact rational like 1/2");
    if (text.empty()) throw ParameterError("empty rational");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw ParameterError("malformed rational: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParameterError("malformed rational: " + text);
    if (q.get_den() == 0) throw ParameterError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace ttr
