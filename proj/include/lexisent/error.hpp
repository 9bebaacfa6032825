#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexisent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class FileNotFound : public Error {
  public:
    explicit FileNotFound(const std::string& path)
        : Error("file not found: " + path), path_(path) {}
    const std::string& path() const noexcept { return path_; }

  private:
    std::string path_;
};

/// Invalid UTF-8; `offset` is the byte offset of the first bad sequence.
class EncodingError : public Error {
  public:
    EncodingError(const std::string& source, std::size_t offset)
        : Error(source + ": invalid UTF-8 at byte offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

/// Row-level lexicon errors carry the 1-based line number of the offending row.
class LexiconError : public Error {
  public:
    LexiconError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class MalformedRow : public LexiconError {
  public:
    MalformedRow(const std::string& source, std::size_t line, const std::string& detail)
        : LexiconError(source + ":" + std::to_string(line) + ": malformed row (" + detail + ")",
                       line) {}
};

class UnknownCategory : public LexiconError {
  public:
    UnknownCategory(const std::string& source, std::size_t line, const std::string& label)
        : LexiconError(source + ":" + std::to_string(line) + ": unknown sentiment category '" +
                           label + "'",
                       line) {}
};

class UnknownPolarity : public LexiconError {
  public:
    UnknownPolarity(const std::string& source, std::size_t line, const std::string& label)
        : LexiconError(source + ":" + std::to_string(line) + ": unknown polarity '" + label + "'",
                       line) {}
};

class ConflictingEntry : public LexiconError {
  public:
    ConflictingEntry(const std::string& source, const std::string& word, std::size_t first_line,
                     std::size_t second_line)
        : LexiconError(source + ": conflicting polarity for '" + word + "' on lines " +
                           std::to_string(first_line) + " and " + std::to_string(second_line),
                       second_line),
          first_line_(first_line) {}
    std::size_t first_line() const noexcept { return first_line_; }
    std::size_t second_line() const noexcept { return line(); }

  private:
    std::size_t first_line_;
};

class EmptyLexicon : public Error {
  public:
    explicit EmptyLexicon(const std::string& source)
        : Error(source + ": lexicon contains no associations") {}
};

class InsufficientData : public Error {
  public:
    using Error::Error;
};

class DegenerateNeighborhood : public Error {
  public:
    using Error::Error;
};

class EmptySeries : public Error {
  public:
    using Error::Error;
};

/// A dashboard panel failed to render; `panel` is 1-based in reading order.
class DashboardPanelError : public Error {
  public:
    DashboardPanelError(std::size_t panel, const std::string& cause)
        : Error("dashboard panel " + std::to_string(panel) + ": " + cause), panel_(panel) {}
    std::size_t panel() const noexcept { return panel_; }

  private:
    std::size_t panel_;
};

}  // namespace lexisent
