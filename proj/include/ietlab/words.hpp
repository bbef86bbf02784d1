#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ietlab/iet.hpp"

namespace ietlab {

/// A freely reduced word over named generators: a sequence of
/// (name, nonzero exponent) syllables with no adjacent equal names.
/// The empty word is the identity.
class Word {
public:
    Word() = default;
    static Word parse(const std::string& text);

    const std::vector<std::pair<std::string, long>>& syllables() const { return syllables_; }
    bool empty() const { return syllables_.empty(); }
    /// Sum of |exponent| over the syllables.
    long length() const;

    Word& append(const std::string& name, long exponent);  // free reduction applied
    Word concat(const Word& o) const;
    Word inverse() const;

    bool operator==(const Word& o) const { return syllables_ == o.syllables_; }
    std::string str() const;

private:
    std::vector<std::pair<std::string, long>> syllables_;
};

/// Named generator IETs over one field, with an optional presentation
/// (relator words). Generator order is preserved for deterministic
/// enumeration.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(FieldPtr field) : field_(std::move(field)) {}

    const FieldPtr& field() const { return field_; }
    void set_field(FieldPtr field) { field_ = std::move(field); }

    void add_generator(const std::string& name, Iet value);
    void add_relator(Word relator);  // names must be declared

    const std::vector<std::pair<std::string, Iet>>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }
    bool has_presentation() const { return !relators_.empty(); }
    const Iet* find(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    FieldPtr field_;
    std::vector<std::pair<std::string, Iet>> generators_;
    std::vector<Word> relators_;
};

}  // namespace ietlab
