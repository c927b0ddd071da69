#include "casekit/text.hpp"

#include <cctype>

namespace casekit {

namespace {

bool is_kept_punct(char c) { return c == '.' || c == ',' || c == ';' || c == ':'; }

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(' ');
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(' ');
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& text, const char* separators) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        bool is_sep = false;
        for (const char* p = separators; *p; ++p) {
            if (c == *p) {
                is_sep = true;
                break;
            }
        }
        if (is_sep) {
            std::string piece = trim(current);
            if (!piece.empty()) out.push_back(std::move(piece));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    std::string piece = trim(current);
    if (!piece.empty()) out.push_back(std::move(piece));
    return out;
}

}  // namespace

std::string normalize_text(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char uc : raw) {
        char c = static_cast<char>(std::tolower(uc));
        if (c == '!' || c == '?') c = '.';
        if (std::isalnum(static_cast<unsigned char>(c)) || is_kept_punct(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        } else {
            // whitespace and dropped punctuation both collapse into one space
            pending_space = true;
        }
    }
    return out;
}

std::vector<std::string> split_sentences(const std::string& text) {
    return split_on(text, ".");
}

std::vector<std::string> split_clauses(const std::string& sentence) {
    return split_on(sentence, ",;:");
}

std::vector<std::string> tokenize(const std::string& clause) {
    return split_on(clause, " ");
}

}  // namespace casekit
