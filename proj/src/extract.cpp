#include "cgbench/extract.hpp"

#include <cctype>

#include "cgbench/answers.hpp"

namespace cgbench {

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// span after the last "answer:" marker, up to the end of that line
std::optional<std::string> marker_span(const std::string& s) {
    std::optional<std::string> found;
    for (std::size_t i = 0; i + 6 <= s.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) != 'a') continue;
        if (i > 0 && is_word_char(s[i - 1])) continue;
        static const char word[] = "answer";
        std::size_t k = 0;
        while (k < 6 && i + k < s.size() &&
               std::tolower(static_cast<unsigned char>(s[i + k])) == word[k])
            ++k;
        if (k != 6) continue;
        std::size_t j = i + 6;
        if (j < s.size() && s[j] == 's') ++j;  // "answers:" reads the same
        while (j < s.size() && (s[j] == ' ' || s[j] == '\t')) ++j;
        if (j >= s.size() || s[j] != ':') continue;
        ++j;
        std::size_t eol = s.find('\n', j);
        if (eol == std::string::npos) eol = s.size();
        found = s.substr(j, eol - j);
    }
    return found;
}

std::optional<std::string> last_nonempty_line(const std::string& s) {
    std::size_t end = s.size();
    while (end > 0) {
        std::size_t start = s.rfind('\n', end - 1);
        std::size_t from = start == std::string::npos ? 0 : start + 1;
        std::string line = trim_copy(s.substr(from, end - from));
        if (!line.empty()) return line;
        if (start == std::string::npos) break;
        end = start;
    }
    return std::nullopt;
}

std::optional<std::string> yes_or_no(const std::string& span) {
    std::string word;
    for (std::size_t i = 0; i <= span.size(); ++i) {
        bool alpha = i < span.size() && std::isalpha(static_cast<unsigned char>(span[i]));
        if (alpha) {
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(span[i])));
            continue;
        }
        if (word == "yes" || word == "no") return word;
        word.clear();
    }
    return std::nullopt;
}

std::optional<std::string> option_letter(const std::string& span) {
    auto standalone = [&](std::size_t i) {
        bool left_ok = i == 0 || !is_word_char(span[i - 1]);
        bool right_ok = i + 1 >= span.size() || !is_word_char(span[i + 1]);
        return left_ok && right_ok;
    };
    for (std::size_t i = 0; i < span.size(); ++i)
        if (span[i] >= 'A' && span[i] <= 'D' && standalone(i)) return std::string(1, span[i]);
    for (std::size_t i = 0; i < span.size(); ++i)
        if (span[i] >= 'a' && span[i] <= 'd' && standalone(i))
            return std::string(1, static_cast<char>(span[i] - 'a' + 'A'));
    return std::nullopt;
}

std::optional<std::string> normalize(const std::string& span, QType q) {
    switch (q) {
        case QType::YesNo:
        case QType::Exist: return yes_or_no(span);
        case QType::HowMany: {
            auto n = parse_integer(span);
            if (!n) return std::nullopt;
            return std::to_string(*n);
        }
        case QType::ChooseSet: return option_letter(span);
        default: {
            std::string t = trim_copy(span);
            if (t.size() >= 2 && t.front() == '"' && t.back() == '"')
                t = trim_copy(t.substr(1, t.size() - 2));
            if (!t.empty() && t.back() == '.') t = trim_copy(t.substr(0, t.size() - 1));
            if (t.empty()) return std::nullopt;
            return t;
        }
    }
}

}  // namespace

std::optional<std::string> extract_answer(const std::string& response, QType qtype) {
    if (auto span = marker_span(response)) return normalize(*span, qtype);
    if (auto line = last_nonempty_line(response)) return normalize(*line, qtype);
    return std::nullopt;
}

}  // namespace cgbench
