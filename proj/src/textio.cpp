#include "numdup/textio.hpp"

#include <charconv>
#include <stdexcept>

namespace numdup {

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty())
            throw std::invalid_argument("empty entry in integer list");
        std::int64_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw std::invalid_argument("bad integer '" + std::string(token) + "'");
        values.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (values.empty()) throw std::invalid_argument("empty integer list");
    return values;
}

std::string join_ints(const std::vector<std::int64_t>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace numdup
