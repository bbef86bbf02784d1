#include "ietlab/words.hpp"

#include <cctype>
#include <sstream>

namespace ietlab {

namespace {

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Word Word::parse(const std::string& text) {
    Word out;
    std::size_t i = 0;
    int col = 1;
    auto skip_ws = [&]() {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i, ++col;
    };
    skip_ws();
    while (i < text.size()) {
        if (!is_name_start(text[i]))
            throw ParseError(std::string("expected generator name, got '") + text[i] + "'", 1, col);
        std::string name;
        while (i < text.size() && is_name_char(text[i])) name += text[i++], ++col;
        long exponent = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i, ++col;
            skip_ws();
            bool negative = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                negative = text[i] == '-';
                ++i, ++col;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected integer exponent after '^'", 1, col);
            exponent = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exponent = exponent * 10 + (text[i] - '0');
                ++i, ++col;
            }
            if (negative) exponent = -exponent;
        }
        out.append(name, exponent);
        skip_ws();
    }
    return out;
}

long Word::length() const {
    long total = 0;
    for (const auto& [name, exp] : syllables_) total += exp < 0 ? -exp : exp;
    return total;
}

Word& Word::append(const std::string& name, long exponent) {
    if (exponent == 0) return *this;
    if (!syllables_.empty() && syllables_.back().first == name) {
        syllables_.back().second += exponent;
        if (syllables_.back().second == 0) syllables_.pop_back();
        return *this;
    }
    syllables_.emplace_back(name, exponent);
    return *this;
}

Word Word::concat(const Word& o) const {
    Word out = *this;
    for (const auto& [name, exp] : o.syllables_) out.append(name, exp);
    return out;
}

Word Word::inverse() const {
    Word out;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) out.append(it->first, -it->second);
    return out;
}

std::string Word::str() const {
    if (syllables_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < syllables_.size(); ++i) {
        if (i) out << " ";
        out << syllables_[i].first;
        if (syllables_[i].second != 1) out << "^" << syllables_[i].second;
    }
    return out.str();
}

void GeneratorSet::add_generator(const std::string& name, Iet value) {
    if (name.empty() || !is_name_start(name[0]))
        throw InputError("generator name must start with a letter or '_'");
    for (char c : name)
        if (!is_name_char(c)) throw InputError("invalid generator name '" + name + "'");
    if (find(name)) throw InputError("duplicate generator name '" + name + "'");
    if (!field_) field_ = value.field();
    if (value.field() != field_) throw FieldError("mixed fields");
    generators_.emplace_back(name, std::move(value));
}

void GeneratorSet::add_relator(Word relator) {
    for (const auto& [name, exp] : relator.syllables())
        if (!find(name)) throw InputError("relator uses undeclared generator '" + name + "'");
    relators_.push_back(std::move(relator));
}

const Iet* GeneratorSet::find(const std::string& name) const {
    for (const auto& [gen_name, value] : generators_)
        if (gen_name == name) return &value;
    return nullptr;
}

std::vector<std::string> GeneratorSet::names() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (const auto& [name, value] : generators_) out.push_back(name);
    return out;
}

}  // namespace ietlab
