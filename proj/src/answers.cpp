#include "cgbench/answers.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "cgbench/errors.hpp"

namespace cgbench {

std::string trim_copy(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

std::string list_text(const std::vector<char>& nodes) {
    if (nodes.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out += ", ";
        out += nodes[i];
    }
    return out;
}

std::string set_text(const std::vector<char>& nodes) {
    std::string out = "{";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out += ", ";
        out += nodes[i];
    }
    return out + "}";
}

std::string triple_text(const Triple& t) {
    std::string out = "(";
    out += t.a;
    out += ", ";
    out += t.m;
    out += ", ";
    out += t.b;
    return out + ")";
}

std::string joined_items(const std::vector<std::string>& parts) {
    if (parts.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i];
    }
    return out;
}

std::string partition_text(const std::vector<std::vector<char>>& blocks) {
    std::vector<std::string> parts;
    for (const auto& b : blocks) parts.push_back(set_text(b));
    return joined_items(parts);
}

std::string format_note(const std::string& truth_kind) {
    if (truth_kind == "yesno")
        return "Finish your response with \"Answer: Yes\" or \"Answer: No\".";
    if (truth_kind == "number")
        return "Finish your response with \"Answer: <number>\".";
    if (truth_kind == "option")
        return "Finish your response with \"Answer: <letter of the chosen option>\".";
    if (truth_kind == "nodeset")
        return "Finish your response with \"Answer: <comma-separated nodes>\"; write \"Answer: "
               "none\" for the empty set.";
    if (truth_kind == "edgeset")
        return "Finish your response with \"Answer: <comma-separated edges, each written like "
               "A->B>\"; write \"Answer: none\" if there are none.";
    if (truth_kind == "pathset")
        return "Finish your response with \"Answer: <paths separated by semicolons, each written "
               "like A -> B -> C>\"; write \"Answer: none\" if there are none.";
    if (truth_kind == "path")
        return "Finish your response with \"Answer: <path written like A -> B -> C>\".";
    if (truth_kind == "tripleset")
        return "Finish your response with \"Answer: <triples separated by semicolons, each "
               "written like (X, Y, Z)>\"; write \"Answer: none\" if there are none.";
    if (truth_kind == "cycle")
        return "Finish your response with \"Answer: <cycle written like A -> B -> C -> A>\".";
    if (truth_kind == "ordering")
        return "Finish your response with \"Answer: <nodes in order, comma-separated>\".";
    if (truth_kind == "graph")
        return "Finish your response with \"Answer: nodes: <nodes>; directed edges: "
               "<comma-separated edges like A->B>\".";
    if (truth_kind == "partition")
        return "Finish your response with \"Answer: <node sets separated by semicolons, each "
               "written like {A, B}>\".";
    fail(Err::ConfigInvalid, "no format instruction for truth kind '" + truth_kind + "'");
}

std::optional<std::vector<char>> parse_node_list(const std::string& s) {
    std::string t = trim_copy(s);
    std::string lower = t;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t.empty() || lower == "none" || lower == "{}" || lower == "empty set")
        return std::vector<char>{};
    if (t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
    std::vector<char> out;
    std::string cur;
    auto take = [&]() -> bool {
        std::string item = trim_copy(cur);
        cur.clear();
        if (item.empty()) return true;
        if (item.size() != 1 || !std::isalpha(static_cast<unsigned char>(item[0]))) return false;
        out.push_back(item[0]);
        return true;
    };
    for (char c : t) {
        if (c == ',') {
            if (!take()) return std::nullopt;
        } else {
            cur += c;
        }
    }
    if (!take()) return std::nullopt;
    return out;
}

std::optional<std::vector<char>> parse_node_seq(const std::string& s) {
    std::vector<char> out;
    for (char c : s) {
        if (std::isupper(static_cast<unsigned char>(c)))
            out.push_back(c);
        else if (std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
    }
    if (out.empty()) return std::nullopt;
    return out;
}

std::vector<std::string> split_items(const std::string& s) {
    std::string whole = trim_copy(s);
    std::string lower = whole;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "none" || whole.empty()) return {};
    std::vector<std::string> out;
    std::string cur;
    auto push = [&]() {
        std::string item = trim_copy(cur);
        cur.clear();
        if (!item.empty()) out.push_back(item);
    };
    for (char c : whole) {
        if (c == ';')
            push();
        else
            cur += c;
    }
    push();
    return out;
}

std::optional<Triple> parse_triple(const std::string& s) {
    std::string t = trim_copy(s);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    auto parts = parse_node_list(t);
    if (!parts || parts->size() != 3) return std::nullopt;
    return Triple{(*parts)[0], (*parts)[1], (*parts)[2]};
}

std::string normalize_edge(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto two_ends = [](const std::string& u, std::size_t at, std::size_t symlen,
                       char& a, char& b) -> bool {
        if (at != 1 || u.size() != symlen + 2) return false;
        a = u.front();
        b = u.back();
        return std::isalpha(static_cast<unsigned char>(a)) &&
               std::isalpha(static_cast<unsigned char>(b));
    };
    char a = 0, b = 0;
    std::size_t at = t.find("<->");
    if (at != std::string::npos) {
        if (!two_ends(t, at, 3, a, b)) return "";
        return edge_text(std::min(a, b), std::max(a, b), EdgeCat::Bidirected);
    }
    at = t.find("->");
    if (at != std::string::npos) {
        if (!two_ends(t, at, 2, a, b)) return "";
        return edge_text(a, b, EdgeCat::Directed);
    }
    at = t.find("<-");
    if (at != std::string::npos) {
        if (!two_ends(t, at, 2, a, b)) return "";
        return edge_text(b, a, EdgeCat::Directed);
    }
    at = t.find('-');
    if (at != std::string::npos) {
        if (!two_ends(t, at, 1, a, b)) return "";
        return edge_text(std::min(a, b), std::max(a, b), EdgeCat::Undirected);
    }
    return "";
}

std::optional<long> parse_integer(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t start = i > 0 && s[i - 1] == '-' ? i - 1 : i;
            return std::strtol(s.c_str() + start, nullptr, 10);
        }
    }
    return std::nullopt;
}

}  // namespace cgbench
