#include "casekit/lexicon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "casekit/errors.hpp"
#include "casekit/hash.hpp"
#include "casekit/text.hpp"

namespace casekit {

namespace {

constexpr std::array<const char*, 7> kCategories = {
    "breast_composition", "calcification",   "asymmetry", "mass",
    "architectural_distortion", "surgical_change", "other"};

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool all_lower_trimmed(const std::string& phrase) {
    if (phrase.empty()) return false;
    if (phrase.front() == ' ' || phrase.back() == ' ') return false;
    return std::none_of(phrase.begin(), phrase.end(), [](unsigned char c) {
        return std::isupper(c) != 0;
    });
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '|')) fields.push_back(strip(field));
    return fields;
}

}  // namespace

bool is_known_category(const std::string& category) {
    return std::find(kCategories.begin(), kCategories.end(), category) != kCategories.end();
}

Lexicon Lexicon::parse(const std::string& contents, const std::string& source_name) {
    Lexicon lex;
    lex.version_hash_ = hash_hex(fnv1a64(contents));

    enum class Section { none, concepts, negation, uncertainty };
    Section section = Section::none;
    std::unordered_set<std::string> seen_ids;

    std::istringstream in(contents);
    std::string raw_line;
    std::size_t line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string line = raw_line;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        line = strip(line);
        if (line.empty()) continue;

        const std::string where = source_name + ":" + std::to_string(line_no);
        if (line == "[concepts]") {
            section = Section::concepts;
            continue;
        }
        if (line == "[negation]") {
            section = Section::negation;
            continue;
        }
        if (line == "[uncertainty]") {
            section = Section::uncertainty;
            continue;
        }
        if (line.front() == '[') throw DataError(where + ": unknown section " + line);

        switch (section) {
            case Section::none:
                throw DataError(where + ": content before any section header");
            case Section::concepts: {
                auto fields = split_fields(line);
                if (fields.size() < 3)
                    throw DataError(where + ": expected concept_id | category | pattern ...");
                ConceptEntry entry;
                entry.id = fields[0];
                entry.category = fields[1];
                if (!seen_ids.insert(entry.id).second)
                    throw DataError(where + ": duplicate concept id " + entry.id);
                if (!is_known_category(entry.category))
                    throw DataError(where + ": unknown category " + entry.category);
                for (std::size_t i = 2; i < fields.size(); ++i) {
                    if (!all_lower_trimmed(fields[i]))
                        throw DataError(where + ": pattern must be lowercase and trimmed: '" +
                                        fields[i] + "'");
                    entry.patterns.push_back(tokenize(fields[i]));
                }
                lex.concepts_.push_back(std::move(entry));
                break;
            }
            case Section::negation:
            case Section::uncertainty: {
                if (!all_lower_trimmed(line))
                    throw DataError(where + ": cue must be lowercase and trimmed: '" + line + "'");
                auto& cues =
                    section == Section::negation ? lex.negation_cues_ : lex.uncertainty_cues_;
                cues.push_back(tokenize(line));
                break;
            }
        }
    }

    if (lex.concepts_.empty()) throw DataError(source_name + ": lexicon declares no concepts");

    for (std::size_t ci = 0; ci < lex.concepts_.size(); ++ci) {
        for (const auto& pattern : lex.concepts_[ci].patterns) {
            lex.ranked_patterns_.push_back({pattern, ci});
        }
    }
    std::sort(lex.ranked_patterns_.begin(), lex.ranked_patterns_.end(),
              [](const RankedPattern& a, const RankedPattern& b) {
                  if (a.tokens.size() != b.tokens.size()) return a.tokens.size() > b.tokens.size();
                  return a.tokens < b.tokens;
              });
    return lex;
}

Lexicon Lexicon::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open lexicon file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::optional<std::size_t> Lexicon::concept_index(const std::string& concept_id) const {
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        if (concepts_[i].id == concept_id) return i;
    }
    return std::nullopt;
}

std::vector<std::string> Lexicon::concepts_in_category(const std::string& category) const {
    std::vector<std::string> out;
    for (const auto& entry : concepts_) {
        if (entry.category == category) out.push_back(entry.id);
    }
    return out;
}

}  // namespace casekit
