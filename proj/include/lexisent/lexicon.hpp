#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexisent {

/// Closed set of NRC labels, in canonical enumeration order.
enum class SentimentCategory : std::uint8_t {
    positive,
    negative,
    anger,
    fear,
    anticipation,
    trust,
    surprise,
    sadness,
    joy,
    disgust,
};

inline constexpr std::size_t kCategoryCount = 10;

inline constexpr std::array<SentimentCategory, kCategoryCount> kAllCategories = {
    SentimentCategory::positive,     SentimentCategory::negative, SentimentCategory::anger,
    SentimentCategory::fear,         SentimentCategory::anticipation,
    SentimentCategory::trust,        SentimentCategory::surprise, SentimentCategory::sadness,
    SentimentCategory::joy,          SentimentCategory::disgust,
};

std::string_view to_string(SentimentCategory c);
std::optional<SentimentCategory> parse_category(std::string_view label);

/// Orders categories by label text, the order used to break ties in sorted tables.
bool label_less(SentimentCategory a, SentimentCategory b);

enum class Polarity : std::uint8_t { positive, negative };

std::string_view to_string(Polarity p);
std::optional<Polarity> parse_polarity(std::string_view label);

/// Small value set of categories; iterates in enumeration order.
class CategorySet {
  public:
    constexpr CategorySet() = default;

    void insert(SentimentCategory c) { bits_ |= bit(c); }
    bool contains(SentimentCategory c) const { return (bits_ & bit(c)) != 0; }
    bool empty() const { return bits_ == 0; }
    std::size_t size() const;
    std::vector<SentimentCategory> to_vector() const;

    friend bool operator==(CategorySet, CategorySet) = default;

  private:
    static constexpr std::uint16_t bit(SentimentCategory c) {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(c));
    }
    std::uint16_t bits_ = 0;
};

class NrcLexicon {
  public:
    NrcLexicon() = default;
    explicit NrcLexicon(std::map<std::string, CategorySet> entries);

    /// Absent words yield an empty set.
    CategorySet lookup(std::string_view word) const;
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, CategorySet, std::less<>>& entries() const noexcept {
        return entries_;
    }

    /// Flag=1 rows, one per (word, category), sorted by word then enumeration order.
    std::string to_tsv() const;

  private:
    std::map<std::string, CategorySet, std::less<>> entries_;
};

class BingLexicon {
  public:
    BingLexicon() = default;
    explicit BingLexicon(std::map<std::string, Polarity> entries);

    std::optional<Polarity> lookup(std::string_view word) const;
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, Polarity, std::less<>>& entries() const noexcept {
        return entries_;
    }

    std::string to_tsv() const;

  private:
    std::map<std::string, Polarity, std::less<>> entries_;
};

/// Rows `word<TAB>category<TAB>flag`; only flag=1 rows are kept.
NrcLexicon parse_nrc(std::string_view text, const std::string& source_name = "<memory>");
NrcLexicon load_nrc(const std::filesystem::path& path);

/// Rows `word<TAB>polarity`; an optional `word<TAB>sentiment` header is skipped.
BingLexicon parse_bing(std::string_view text, const std::string& source_name = "<memory>");
BingLexicon load_bing(const std::filesystem::path& path);

}  // namespace lexisent
