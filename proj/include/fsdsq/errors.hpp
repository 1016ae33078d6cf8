#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fsdsq {

/// Invalid input: malformed word text, violated precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical finding: some claimed structural property failed on a
/// concrete word. Carries the property name and the offending word so that
/// callers can report it as a counterexample rather than a crash.
class Finding : public std::runtime_error {
 public:
  Finding(std::string property, std::string word, const std::string& detail)
      : std::runtime_error(property + " on '" + word + "': " + detail),
        property_(std::move(property)),
        word_(std::move(word)),
        detail_(detail) {}

  const std::string& property() const noexcept { return property_; }
  const std::string& word() const noexcept { return word_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string property_;
  std::string word_;
  std::string detail_;
};

}  // namespace fsdsq
