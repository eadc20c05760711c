#include "hm/parse.hpp"

namespace hm {

std::vector<std::string> split_groups(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '\t' && ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    // drop empty trailing groups caused by stray separators
    while (!out.empty() && out.back().empty()) out.pop_back();
    for (const auto& g : out)
        if (g.empty()) throw ValidationError("empty group in '" + text + "'");
    return out;
}

} // namespace hm
