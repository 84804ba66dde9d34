#include "wfusion/rational.hpp"

namespace wfusion {

std::optional<Rat> parse_rational(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(s))
                return std::nullopt;
            return Rat(Int(s));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            return std::nullopt;
        Int d(den);
        if (d == 0)
            return std::nullopt;
        return Rat(Int(num), d);
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace wfusion
